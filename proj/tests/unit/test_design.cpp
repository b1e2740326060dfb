#include <doctest.h>

#include <random>

#include "kleinc/design.hpp"
#include "kleinc/standard.hpp"
#include "kleinc/sym.hpp"
#include "oracle.hpp"

using namespace kleinc;

namespace {
// mu by direct count over all weight-t words, independent of check_design
std::set<long long> cover_counts(const DesignSlice& s, int t) {
  std::set<long long> counts;
  for (const auto& x : oracle::all_words(s.n)) {
    if (oracle::weight(x) != t) continue;
    long long c = 0;
    for (const auto& y : s.Y) {
      const auto ys = y.str();
      bool ok = true;
      for (std::size_t i = 0; i < x.size(); ++i) ok = ok && (x[i] == '0' || x[i] == ys[i]);
      c += ok;
    }
    counts.insert(c);
  }
  return counts;
}
}  // namespace

TEST_SUITE("design") {
  TEST_CASE("covering relation") {
    CHECK(covers(KWord::parse("a0"), KWord::parse("ab")));
    CHECK_FALSE(covers(KWord::parse("a0"), KWord::parse("b0")));
    CHECK(covers(KWord(3), KWord::parse("abc")));
    CHECK(covers(KWord(3), KWord(3)));
  }

  TEST_CASE("slices reject bad input") {
    CHECK_THROWS(make_slice(3, 2, {KWord::parse("aab")}));
    CHECK_THROWS(make_slice(3, 2, {KWord::parse("aa0"), KWord::parse("aa0")}));
    CHECK(make_slice(3, 2, {KWord::parse("aa0"), KWord::parse("0bb")}).Y.size() == 2);
  }

  TEST_CASE("design examples") {
    const DesignReport e = check_design(slice(epsilon2(), 2), 1);
    CHECK(e.is_design);
    CHECK(e.mu == BigInt(1));
    const DesignSlice h4 = slice(hexacode(), 4), h6 = slice(hexacode(), 6);
    CHECK(h4.Y.size() == 45);
    CHECK(h6.Y.size() == 18);
    for (const auto* s : {&h4, &h6}) {
      const DesignReport r = check_design(*s, 2);
      CHECK(r.is_design);
      CHECK(r.mu == BigInt(2));
      CHECK(r.xt_size == 135);
      CHECK(cover_counts(*s, 2) == std::set<long long>{2});
      CHECK(BigInt(s->Y.size()) * binomial(s->k, 2) == *r.mu * r.xt_size);
      CHECK(BigInt(s->Y.size()) >= fisher_bound(6, s->k));
    }
    // hexacode slices are not 3-designs
    const DesignReport r3 = check_design(h4, 3);
    CHECK_FALSE(r3.is_design);
    REQUIRE(r3.offending.has_value());
    CHECK(r3.offending->weight() == 3);
  }

  TEST_CASE("check_design agrees with direct counting") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 30; ++t) {
      const int n = 3 + static_cast<int>(rng() % 3);
      const KCode c = oracle::random_code(n, 2 + static_cast<int>(rng() % 4), rng);
      const int w = 1 + static_cast<int>(rng() % n);
      const DesignSlice s = slice(c, w);
      for (int tt = 0; tt <= std::min(2, w); ++tt) {
        const DesignReport r = check_design(s, tt);
        const auto counts = cover_counts(s, tt);
        CHECK(r.is_design == (counts.size() == 1));
        if (r.is_design) CHECK(*r.mu == *counts.begin());
      }
    }
  }

  TEST_CASE("single weight-2 orbit forces 2-designs") {
    CHECK(orbits(hexacode(), 2).orbits.size() == 1);
    for (int w : {4, 6}) CHECK(check_design(slice(hexacode(), w), 2).is_design);
  }

  TEST_CASE("Fisher bounds") {
    CHECK(fisher_bound(6, 4) == 18);
    CHECK(fisher_bound(6, 6) == 13);
    CHECK_THROWS(fisher_bound(6, 1));
    // |Y| = 9 mu at (6,6): the least multiple of 9 that is at least 13
    CHECK(fisher_divisibility_minimum(6, 6) == 18);
    CHECK(fisher_divisibility_minimum(6, 4) == 45);
    for (int n = 2; n <= 12; ++n)
      for (int k = 2; k <= n; ++k) {
        const BigInt m = fisher_divisibility_minimum(n, k);
        CHECK(m >= fisher_bound(n, k));
        CHECK((m * binomial(k, 2)) % (binomial(n, 2) * 9) == 0);
      }
  }

  TEST_CASE("Johnson relations") {
    CHECK(johnson_relation(KWord::parse("aa0000"), KWord::parse("ab0000")) == std::pair<int, int>{1, 2});
    const KWord x = KWord::parse("abc0");
    CHECK(johnson_relation(x, x) == std::pair<int, int>{3, 3});
    std::mt19937_64 rng(42);
    int done = 0;
    while (done < 100) {
      const KWord a = oracle::random_word(8, rng), b = oracle::random_word(8, rng);
      if (a.weight() != b.weight()) continue;
      ++done;
      const auto [r, s] = johnson_relation(a, b);
      CHECK(johnson_relation(b, a) == std::pair<int, int>{r, s});
      CHECK(r <= s);
      CHECK(s <= a.weight());
    }
  }
}
