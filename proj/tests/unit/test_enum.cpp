#include <doctest.h>

#include <random>

#include "kleinc/classify.hpp"
#include "kleinc/enumerators.hpp"
#include "kleinc/standard.hpp"
#include "oracle.hpp"

using namespace kleinc;

namespace {

std::vector<long long> as_ll(const WeightEnum& w) {
  std::vector<long long> v;
  for (int i = 0; i <= w.n; ++i) v.push_back(static_cast<long long>(w[i]));
  return v;
}

RatPoly rp(std::vector<Rational> c) {
  const int n = static_cast<int>(c.size()) - 1;
  return RatPoly(n, std::move(c));
}

// Oracle complete enumerator: counts of 0, a, b, c per word.
std::map<std::array<int, 4>, BigInt> brute_cwe(const oracle::CodeSet& c) {
  std::map<std::array<int, 4>, BigInt> m;
  for (const auto& w : c) {
    std::array<int, 4> k{};
    for (char s : w) ++k[static_cast<std::size_t>(oracle::idx(s))];
    m[k] += 1;
  }
  return m;
}

}  // namespace

TEST_SUITE("enum") {
  TEST_CASE("hamming enumerators of named codes") {
    CHECK(as_ll(hamming_we(hexacode())) == std::vector<long long>{1, 0, 0, 0, 45, 0, 18});
    CHECK(as_ll(hamming_we(epsilon2())) == std::vector<long long>{1, 0, 3});
    CHECK(as_ll(hamming_we(gamma1())) == std::vector<long long>{1, 1});
  }

  TEST_CASE("enumerators agree with brute force on random codes") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
      const int n = 1 + static_cast<int>(rng() % 6);
      const KCode c = oracle::random_code(n, static_cast<int>(rng() % (2 * n + 1)), rng);
      const auto set = oracle::span(c);
      CHECK(as_ll(hamming_we(c)) == oracle::we(set, n));
      const CompleteWE cw = complete_we(c);
      CHECK(cw.terms == brute_cwe(set));
      CHECK(collapse(cw) == hamming_we(c));
      CHECK(collapse(swe(c)) == hamming_we(c));
      CHECK(symmetrize(cw) == swe(c));
    }
  }

  TEST_CASE("complete and symmetrized examples") {
    const CompleteWE e = complete_we(epsilon2());
    CHECK(e.terms.size() == 4);
    CHECK(e.terms.at({2, 0, 0, 0}) == 1);
    CHECK(e.terms.at({0, 2, 0, 0}) == 1);
    CHECK(e.terms.at({0, 0, 2, 0}) == 1);
    CHECK(e.terms.at({0, 0, 0, 2}) == 1);
    const CompleteWE g = complete_we(gamma1());
    CHECK(g.terms.size() == 2);
    CHECK(g.terms.at({0, 1, 0, 0}) == 1);
    const SymWE s = swe(epsilon2());
    CHECK(s.terms.at({2, 0, 0}) == 1);
    CHECK(s.terms.at({0, 2, 0}) == 1);
    CHECK(s.terms.at({0, 0, 2}) == 2);
    const SymWE s1 = swe(gamma1());
    CHECK(s1.terms.at({1, 0, 0}) == 1);
    CHECK(s1.terms.at({0, 1, 0}) == 1);
  }

  TEST_CASE("MacWilliams transforms") {
    CHECK(macwilliams(hamming_we(epsilon2()), 4) == hamming_we(epsilon2()));
    CHECK(macwilliams(hamming_we(gamma1()), 2) == hamming_we(gamma1()));
    CHECK(macwilliams(hamming_we(delta(3)), 4) == hamming_we(dual(delta(3))));
    CHECK(macwilliams_complete(complete_we(epsilon2()), 4) == complete_we(epsilon2()));
    const CompleteWE k1 = macwilliams_complete(complete_we(KCode(1)), 1);
    CHECK(k1.terms.size() == 4);
    for (const auto& [k, v] : k1.terms) CHECK(v == 1);
    // a vector that is not the enumerator of any code
    CHECK_THROWS(macwilliams(IntPoly(1, {1, 2}), 3));
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
      const int n = 1 + static_cast<int>(rng() % 5);
      const KCode c = oracle::random_code(n, static_cast<int>(rng() % (2 * n + 1)), rng);
      const BigInt size = BigInt(1) << c.dim2();
      const KCode d = dual(c);
      CHECK(macwilliams(hamming_we(c), size) == hamming_we(d));
      CHECK(macwilliams_complete(complete_we(c), size) == complete_we(d));
      CHECK(macwilliams(macwilliams(hamming_we(c), size), BigInt(1) << d.dim2()) == hamming_we(c));
    }
  }

  TEST_CASE("character sum identity behind MacWilliams") {
    // (1/|C|) sum_{x in C} g(x) = sum_{y in C-perp} f(y), g the transform of f = [y = y0]
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
      const int n = 1 + static_cast<int>(rng() % 4);
      const KCode c = oracle::random_code(n, static_cast<int>(rng() % (2 * n + 1)), rng);
      const auto cs = oracle::span(c);
      const auto ds = oracle::dual(cs, n);
      const oracle::Word y0 = oracle::random_word(n, rng).str();
      long long sum = 0;
      for (const auto& x : cs) sum += oracle::inner(x, y0) ? -1 : 1;
      const long long expect = ds.count(y0) ? static_cast<long long>(cs.size()) : 0;
      CHECK(sum == expect);
    }
  }

  TEST_CASE("Gleason decompositions") {
    const auto g1 = gleason_odd(hamming_we(gamma1()));
    REQUIRE(g1.size() == 1);
    CHECK(g1[0] == 1);
    const auto e2 = gleason_odd(hamming_we(epsilon2()));
    REQUIRE(e2.size() == 2);
    CHECK(e2[0] == 1);
    CHECK(e2[1] == -2);
    const auto h = gleason_even(hamming_we(hexacode()));
    REQUIRE(h.size() == 2);
    CHECK(h[0] == 1);
    CHECK(h[1] == -9);
    CHECK(gleason_even(hamming_we(epsilon2())) == std::vector<Rational>{1});
    // n = 4 has the single basis element (u^2+3v^2)^2
    CHECK(as_ll(to_integer(even_gleason_basis(4, 0))) == std::vector<long long>{1, 0, 6, 0, 9});
    // the basis elements expand as stated
    CHECK(odd_gleason_basis(2, 1) == rp({0, 1, -1}));
    CHECK_THROWS(gleason_odd(IntPoly(2, {1, 0, 0})));
  }

  TEST_CASE("Gleason residual vanishes exactly on self-dual enumerators") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 100; ++t) {
      const int n = 2 + static_cast<int>(rng() % 5);
      KCode c = oracle::random_self_dual(n, rng);
      // drop to a self-orthogonal subcode half the time; its dual is then not self-dual
      const bool shrink = (rng() & 1u) != 0;
      if (shrink) {
        std::vector<KWord> rows(c.basis().begin(), c.basis().end() - 1);
        c = KCode::span(n, rows);
      }
      const KCode d = dual(c);
      bool accepted = true;
      try {
        gleason_odd(hamming_we(d));
      } catch (const std::exception&) {
        accepted = false;
      }
      if (!shrink) CHECK(accepted);
      // |d| = 2^(n+1) differs from 4^(n/2), so it cannot satisfy the invariance
      if (shrink) CHECK_FALSE(accepted);
    }
  }

  TEST_CASE("shadows") {
    const ShadowSet s1 = shadow(gamma1());
    std::set<std::string> words;
    s1.for_each_shadow_word([&](const KWord& w) { words.insert(w.str()); });
    CHECK(words == std::set<std::string>{"b", "c"});
    CHECK(as_ll(shadow(direct_sum(gamma1(), gamma1())).weight_enumerator()) == std::vector<long long>{0, 0, 4});
    std::set<std::string> hw;
    shadow(hexacode()).for_each_shadow_word([&](const KWord& w) { hw.insert(w.str()); });
    CHECK(hw.size() == 64);
    CHECK(oracle::span(hexacode()) == oracle::CodeSet(hw.begin(), hw.end()));
    CHECK(shadow_we(hamming_we(gamma1()), 2) == rp({0, 2}));
  }

  TEST_CASE("shadow formula matches enumeration on random self-dual codes") {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 60; ++t) {
      const int n = 1 + static_cast<int>(rng() % 7);
      const KCode c = oracle::random_self_dual(n, rng);
      const ShadowSet s = shadow(c);
      // oracle: C0 = even words, shadow = C0-perp minus C, or C when C is even
      oracle::CodeSet cs = oracle::span(c), c0;
      for (const auto& w : cs)
        if (oracle::weight(w) % 2 == 0) c0.insert(w);
      oracle::CodeSet expect;
      if (c0.size() == cs.size()) {
        expect = cs;
      } else {
        for (const auto& w : oracle::dual(c0, n))
          if (!cs.count(w)) expect.insert(w);
      }
      oracle::CodeSet got;
      s.for_each_shadow_word([&](const KWord& w) { got.insert(w.str()); });
      CHECK(got == expect);
      const RationalWE f = shadow_we(hamming_we(c), BigInt(1) << c.dim2());
      CHECK(f == to_rational(s.weight_enumerator()));
    }
  }

  TEST_CASE("shadow enumerators of classified codes are nonnegative integers") {
    for (int n = 1; n <= 5; ++n) {
      const Classification cl = classify(n, false);
      for (const auto& r : cl.classes) {
        const RationalWE f = shadow_we(r.we, BigInt(1) << n);
        for (int i = 0; i <= n; ++i) {
          CHECK(denominator(f[i]) == 1);
          CHECK(f[i] >= 0);
        }
        CHECK(to_integer(f) == shadow(r.rep).weight_enumerator());
        for (const auto& a : gleason_odd(r.we)) CHECK(denominator(a) == 1);
        if (r.even)
          for (const auto& a : gleason_even(r.we)) CHECK(denominator(a) == 1);
      }
    }
  }
}
