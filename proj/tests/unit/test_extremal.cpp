#include <doctest.h>

#include "kleinc/canon.hpp"
#include "kleinc/classify.hpp"
#include "kleinc/enumerators.hpp"
#include "kleinc/extremal.hpp"
#include "kleinc/search.hpp"
#include "kleinc/standard.hpp"
#include "oracle.hpp"

using namespace kleinc;

namespace {

using Series = std::vector<Rational>;

Series mul(const Series& x, const Series& y, std::size_t order) {
  Series r(order, Rational(0));
  for (std::size_t i = 0; i < x.size() && i < order; ++i)
    for (std::size_t j = 0; j < y.size() && i + j < order; ++j) r[i + j] += x[i] * y[j];
  return r;
}

// h(s(t)) for a power series h and a series s without constant term.
Series compose(const Series& h, const Series& s, std::size_t order) {
  Series r(order, Rational(0));
  for (std::size_t i = h.size(); i-- > 0;) {
    r = mul(r, s, order);
    r[0] += h[i];
  }
  return r;
}

// b_k for k < order: expand (1+v)^(-n) in phi = v(1-v)/(1+v)^2 by reverting the
// series, v = phi * (1+v)^2 / (1-v), through fixed-point iteration.
Series burmann_oracle(int n, std::size_t order) {
  Series h(order, Rational(0));  // (1+v)^2/(1-v) = (1 + 2v + v^2) * sum v^i
  for (std::size_t i = 0; i < order; ++i) h[i] = i == 0 ? 1 : (i == 1 ? 3 : 4);
  Series v(order, Rational(0));
  for (std::size_t it = 0; it < order; ++it) {
    Series next = compose(h, v, order);
    v.assign(order, Rational(0));
    for (std::size_t i = 0; i + 1 < order; ++i) v[i + 1] = next[i];
  }
  // (1+x)^(-n) = sum binom(-n, i) x^i
  Series p(order, Rational(0));
  Rational c = 1;
  for (std::size_t i = 0; i < order; ++i) {
    p[i] = c;
    c = c * Rational(-n - static_cast<int>(i)) / Rational(static_cast<int>(i) + 1);
  }
  return compose(p, v, order);
}

}  // namespace

TEST_SUITE("extremal") {
  TEST_CASE("distance bounds") {
    CHECK(dmax_bound(6, false) == 4);
    CHECK(dmax_bound(12, true) == 6);
    CHECK(dmax_bound(1, false) == 1);
  }

  TEST_CASE("extremal enumerators") {
    CHECK(to_integer(extremal_we(5, false).A) == IntPoly(5, {1, 0, 0, 10, 15, 6}));
    const ExtremalSolve s4 = extremal_we(4, false);
    CHECK(to_integer(s4.A) == IntPoly(4, {1, 0, 0, 12, 3}));
    CHECK(s4.a == std::vector<Rational>{1, -4, -2});
    // expand the solved coefficients in the Gleason basis as a cross-check
    RatPoly back(4);
    for (int i = 0; i <= 2; ++i) back += odd_gleason_basis(4, i) * s4.a[static_cast<std::size_t>(i)];
    CHECK(back == s4.A);
    const ExtremalSolve s12 = extremal_we(12, true);
    CHECK(to_integer(s12.A) == IntPoly(12, {1, 0, 0, 0, 0, 0, 396, 0, 1485, 0, 1980, 0, 234}));
    CHECK(to_integer(extremal_we(6, true).A) == hamming_we(hexacode()));
    for (int n = 1; n <= 30; ++n) {
      const ExtremalSolve s = extremal_we(n, false);
      CHECK(s.A[0] == 1);
      for (int i = 1; i <= n / 2; ++i) CHECK(s.A[i] == 0);
      if (n <= 6) CHECK(s.A[n / 2 + 1] > 0);
    }
  }

  TEST_CASE("Burmann coefficients against series reversal") {
    for (int n = 1; n <= 20; ++n) {
      const int m = n / 2;
      const Series b = burmann_oracle(n, static_cast<std::size_t>(m) + 3);
      const ExtremalSolve s = extremal_we(n, false);
      for (int k = 0; k <= m + 2; ++k) CHECK(burmann_bk(n, k) == b[static_cast<std::size_t>(k)]);
      for (int k = 0; k <= m; ++k) CHECK(s.a[static_cast<std::size_t>(k)] == b[static_cast<std::size_t>(k)]);
    }
    CHECK(burmann_bk(7, 0) == 1);
  }

  TEST_CASE("leading extremal coefficients in terms of b_k") {
    for (int n = 1; n <= 40; ++n) {
      const int m = n / 2;
      const ExtremalSolve s = extremal_we(n, false);
      if (m + 1 <= n) CHECK(s.A[m + 1] == -burmann_bk(n, m + 1));
      // the next one picks up a correction from expanding (1+v)^n phi^(m+1)
      if (m + 2 <= n) CHECK(s.A[m + 2] == -burmann_bk(n, m + 2) + Rational(3 * (m + 1) - n) * burmann_bk(n, m + 1));
    }
  }

  TEST_CASE("nonexistence certificates") {
    for (int n = 1; n <= 6; ++n) CHECK_FALSE(nonexistence_certificate(n, false).has_value());
    const Rational leading[] = {Rational(7, 4), Rational(-13, 8), Rational(-9, 4), Rational(23, 8), Rational(33, 8)};
    for (int n = 7; n <= 11; ++n) {
      const auto c = nonexistence_certificate(n, false);
      REQUIRE(c.has_value());
      CHECK(c->kind != CertKind::ANegative);
      CHECK(c->leading == leading[n - 7]);
      CHECK((c->coefficient < 0 || denominator(c->coefficient) != 1));
      // the certificate coefficient really sits in the hypothetical shadow
      const ExtremalSolve s = extremal_we(n, false);
      const RationalWE sh = shadow_we(s.A, Rational(BigInt(1) << n));
      CHECK(sh[c->index] == c->coefficient);
    }
    for (int n = 12; n <= 40; ++n) {
      const auto c = nonexistence_certificate(n, false);
      REQUIRE(c.has_value());
      CHECK(c->kind == CertKind::ANegative);
      CHECK(c->index == n / 2 + 2);
      CHECK(c->coefficient < 0);
      CHECK(extremal_we(n, false).A[n / 2 + 2] == c->coefficient);
    }
    CHECK_FALSE(nonexistence_certificate(12, true).has_value());
  }

  TEST_CASE("shadow theorems on small codes") {
    const KCode g3 = direct_sum(gamma1(), direct_sum(gamma1(), gamma1()));
    const ShadowReport r = shadow_extremal_check(g3);
    CHECK(r.h == 3);
    CHECK(r.h_equals_n);
    CHECK(r.is_gamma_power);
    const ShadowReport e = shadow_extremal_check(epsilon2());
    CHECK(e.a1_zero);
    CHECK(e.a2 == 3);
    CHECK(e.meets_weight2_bound);
    CHECK(e.h == 0);
    CHECK(e.shadow_count_n_minus_2 == 1);
    const ShadowReport c5 = shadow_extremal_check(shorter_hexacode());
    CHECK(c5.meets_weight2_bound);
    CHECK(c5.h == 3);
    CHECK(c5.shadow_count_n_minus_2 == 20);
  }

  TEST_CASE("extremal classified codes") {
    int count = 0;
    for (int n = 1; n <= 6; ++n)
      for (const auto& r : classify(n, false).classes) {
        CHECK(min_weight(r.rep) <= dmax_bound(n, false));
        count += is_extremal(r.rep);
      }
    CHECK(count == 5);
    CHECK(is_extremal(hexacode()));
    CHECK(is_extremal(shorter_hexacode()));
    CHECK(is_extremal(delta_plus(3)));
  }

  TEST_CASE("backtracking search") {
    const SearchResult s6 = search(6, true, 4);
    REQUIRE(s6.status == SearchStatus::Found);
    CHECK(equivalent(*s6.code, hexacode()).has_value());
    CHECK(search(4, false, 3).status == SearchStatus::ProvenAbsent);
    CHECK(search(7, false, 5).status == SearchStatus::ProvenAbsent);
    // (9, odd, 5) has no quick refutation, so the sweep stops at 8 with a cap.
    SearchOptions capped;
    capped.budget_seconds = 30;
    for (int n = 1; n <= 8; ++n)
      for (bool even : {false, true}) {
        if (even && n % 2 != 0) continue;
        for (int d = 1; d <= dmax_bound(n, even); ++d) {
          const SearchResult r = search(n, even, d, capped);
          if (r.status != SearchStatus::Found) continue;
          CHECK(is_self_dual(*r.code));
          CHECK(min_weight(*r.code) >= d);
          if (even) CHECK(is_even(*r.code));
        }
      }
    SearchOptions one, two;
    two.jobs = 2;
    const SearchResult a = search(12, true, 6, one), b = search(12, true, 6, two);
    REQUIRE(a.code.has_value());
    REQUIRE(b.code.has_value());
    CHECK(*a.code == *b.code);
    CHECK(to_rational(hamming_we(*a.code)) == extremal_we(12, true).A);
    SearchOptions tiny;
    tiny.node_limit = 1;
    CHECK(search(10, true, 6, tiny).status == SearchStatus::BudgetExhausted);
  }
}
