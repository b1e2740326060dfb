#include <doctest.h>

#include <random>

#include "kleinc/canon.hpp"
#include "kleinc/enumerators.hpp"
#include "kleinc/standard.hpp"
#include "kleinc/sym.hpp"
#include "oracle.hpp"

using namespace kleinc;

TEST_SUITE("sym") {
  TEST_CASE("action is a group action preserving weight and inner product") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 100; ++t) {
      const int n = 1 + static_cast<int>(rng() % 8);
      const GroupElement g = random_group_element(n, rng), h = random_group_element(n, rng);
      const KWord x = oracle::random_word(n, rng), y = oracle::random_word(n, rng);
      CHECK((g * h).apply(x) == g.apply(h.apply(x)));
      CHECK(g.apply(x).str() == oracle::apply(g, x.str()));
      CHECK(g.apply(x).weight() == x.weight());
      CHECK(inner(g.apply(x), g.apply(y)) == inner(x, y));
      CHECK(g.inverse().apply(g.apply(x)) == x);
      CHECK(GroupElement::parse(g.str()) == g);
      const KCode c = oracle::random_code(n, static_cast<int>(rng() % (2 * n + 1)), rng);
      CHECK(hamming_we(g.apply(c)) == hamming_we(c));
    }
    CHECK(GroupElement::identity(3).apply(hexacode().basis()[0].sub(0, 3)) == hexacode().basis()[0].sub(0, 3));
  }

  TEST_CASE("relabelling b and c at position 2 maps {00,aa,bc,cb} to epsilon2") {
    const KCode c = KCode::span({KWord::parse("aa"), KWord::parse("bc")});
    const GroupElement g = GroupElement::parse("sigma=[0,1]; tau=[abc,acb]");
    CHECK(g.apply(c) == epsilon2());
  }

  TEST_CASE("automorphism group orders") {
    CHECK(aut(gamma1()).order == 2);
    CHECK(aut(epsilon2()).order == 12);
    CHECK(aut(hexacode()).order == 2160);
    for (const auto& g : aut(hexacode()).generators) CHECK(g.apply(hexacode()) == hexacode());
  }

  TEST_CASE("canonical forms are class invariants") {
    std::mt19937_64 rng(22);
    const KCode ce = canonical(epsilon2());
    CHECK(canonical(ce) == ce);
    for (int t = 0; t < 50; ++t) CHECK(canonical(random_group_element(2, rng).apply(epsilon2())) == ce);
    CHECK(canonical(direct_sum(gamma1(), gamma1())) != ce);
    CHECK_FALSE(equivalent(epsilon2(), direct_sum(gamma1(), gamma1())).has_value());
    for (int t = 0; t < 30; ++t) {
      const int n = 2 + static_cast<int>(rng() % 6);
      const KCode c = oracle::random_code(n, static_cast<int>(rng() % (2 * n + 1)), rng);
      const GroupElement g = random_group_element(n, rng);
      const KCode d = g.apply(c);
      CHECK(canonical(d) == canonical(c));
      const auto w = equivalent(c, d);
      REQUIRE(w.has_value());
      CHECK(w->apply(c) == d);
    }
  }

  TEST_CASE("brute-force group sweep agrees for n <= 3") {
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 3; ++n) {
      for (int t = 0; t < 12; ++t) {
        const KCode c = oracle::random_code(n, static_cast<int>(rng() % (2 * n + 1)), rng);
        const KCode d = oracle::random_code(n, c.dim2(), rng);
        const auto cs = oracle::span(c), ds = oracle::span(d);
        long long stab = 0;
        bool equiv = false;
        for_each_group_element(n, [&](const GroupElement& g) {
          const auto img = oracle::apply(g, cs);
          stab += img == cs;
          equiv = equiv || img == ds;
        });
        CHECK(aut(c).order == stab);
        CHECK(equivalent(c, d).has_value() == equiv);
        CHECK((canonical(c) == canonical(d)) == equiv);
      }
    }
  }

  TEST_CASE("hexacode orbits") {
    const OrbitTable w2 = orbits(hexacode(), 2);
    REQUIRE(w2.orbits.size() == 1);
    CHECK(w2.orbits[0].size == 135);
    const OrbitTable all = orbits(hexacode());
    CHECK(all.orbits.size() == 17);
    std::multiset<std::uint64_t> sizes, expect{1, 18, 135, 180, 360, 45, 360, 540, 270, 270, 108, 1080, 18, 216, 45, 270, 180};
    std::uint64_t total = 0;
    for (const auto& o : all.orbits) {
      sizes.insert(o.size);
      total += o.size;
      CHECK(2160 % o.size == 0);
    }
    CHECK(sizes == expect);
    CHECK(total == 4096);
  }

  TEST_CASE("orbit distances by direct enumeration") {
    const auto words = oracle::span(hexacode());
    for (const auto& o : orbits(hexacode()).orbits) {
      int best = 99;
      std::uint64_t count = 0;
      for (const auto& c : words) {
        const int d = oracle::weight(oracle::add(c, o.rep.str()));
        if (d < best) {
          best = d;
          count = 0;
        }
        count += d == best;
      }
      CHECK(o.distance == best);
      CHECK(o.nearest == count);
    }
  }

  TEST_CASE("covering radius") {
    const CoveringResult r = covering_radius(hexacode());
    CHECK(r.radius == 2);
    CHECK(r.count_by_weight == std::vector<std::uint64_t>{1, 18, 45});
    CHECK(covering_radius(KCode::full(3)).radius == 0);
    CHECK(covering_radius(gamma1()).radius == 1);
    // brute force on a few small codes
    std::mt19937_64 rng(24);
    for (int t = 0; t < 20; ++t) {
      const int n = 1 + static_cast<int>(rng() % 4);
      const KCode c = oracle::random_code(n, 1 + static_cast<int>(rng() % (2 * n)), rng);
      const auto cs = oracle::span(c);
      int radius = 0;
      for (const auto& y : oracle::all_words(n)) {
        int d = 99;
        for (const auto& x : cs) d = std::min(d, oracle::weight(oracle::add(x, y)));
        radius = std::max(radius, d);
      }
      CHECK(covering_radius(c).radius == radius);
    }
  }

  TEST_CASE("deep holes of the hexacode come in trios") {
    const DeepHoleStats dh = deep_holes(hexacode());
    CHECK(dh.radius == 2);
    CHECK(dh.words == 135);
    CHECK(dh.cosets == 45);
    CHECK(dh.group_sizes == std::map<std::uint64_t, std::uint64_t>{{3, 45}});
  }

  TEST_CASE("point orbits") {
    const auto a = aut(hexacode());
    CHECK(point_orbits(6, a.generators) == std::vector<int>(18, 0));
  }
}
