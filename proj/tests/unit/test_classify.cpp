#include <doctest.h>

#include <random>

#include "kleinc/canon.hpp"
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
BigInt group_order(int n) { return factorial(n) * boost::multiprecision::pow(BigInt(6), static_cast<unsigned>(n)); }
}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("mass formula") {
    CHECK(mass(2, false) == 15);
    CHECK(mass(2, true) == 6);
    CHECK(mass(4, true) == 270);
    for (int n = 1; n <= 40; ++n) {
      CHECK(mass(n, false) == oracle::mass_product(n, false));
      if (n % 2 == 0) CHECK(mass(n, true) == oracle::mass_product(n, true));
    }
  }

  TEST_CASE("average enumerator closed forms") {
    CHECK(average_we(2, false) == RatPoly(2, {15, 18, 27}));
    CHECK(average_we(2, true) == to_rational(hamming_we(epsilon2())) * Rational(6));
  }

  TEST_CASE("small classifications with audits") {
    const int odd_counts[] = {1, 2, 3, 6, 11};
    for (int n = 1; n <= 5; ++n) {
      const Classification cl = classify(n, false);
      CHECK(cl.classes.size() == static_cast<std::size_t>(odd_counts[n - 1]));
      CHECK(cl.audit_ok());
      RatPoly sum(n);
      for (const auto& r : cl.classes) {
        CHECK(is_self_dual(r.rep));
        CHECK(group_order(n) % r.aut_order == 0);
        CHECK(r.we == hamming_we(r.rep));
        CHECK(r.even == is_even(r.rep));
        sum += to_rational(r.we) * Rational(group_order(n) / r.aut_order);
      }
      CHECK(sum == average_we(n, false));
    }
    const Classification e6 = classify(6, true);
    CHECK(e6.classes.size() == 6);
    CHECK(e6.audit_ok());
    int hexacode_like = 0;
    for (const auto& r : e6.classes) hexacode_like += as_ll(r.we) == std::vector<long long>{1, 0, 0, 0, 45, 0, 18};
    CHECK(hexacode_like == 1);
  }

  TEST_CASE("brute-force enumeration of every self-dual code") {
    for (int n = 1; n <= 4; ++n) {
      for (bool even : {false, true}) {
        if (even && n % 2 != 0) continue;
        if (!even && n > 3) continue;
        const auto codes = oracle::all_self_dual(n, even);
        CHECK(codes.size() == mass(n, even));
        const Classification cl = classify(n, even);
        std::map<int, std::size_t> per_class;
        for (const auto& cs : codes) {
          std::vector<KWord> words;
          for (const auto& w : cs) words.push_back(KWord::parse(w));
          const int idx = cl.find(KCode::span(n, words));
          REQUIRE(idx >= 0);
          ++per_class[idx];
        }
        REQUIRE(per_class.size() == cl.classes.size());
        for (const auto& [idx, count] : per_class)
          CHECK(BigInt(count) == group_order(n) / cl.classes[static_cast<std::size_t>(idx)].aut_order);
      }
    }
  }

  TEST_CASE("skeletons") {
    CHECK(skeleton(direct_sum(epsilon2(), epsilon2())).epsilon2 == 2);
    CHECK(skeleton(hexacode()).empty());
    CHECK(skeleton(direct_sum(gamma1(), delta_plus(3))).gamma1 == 1);
    const Skeleton s = skeleton(delta_plus(4));
    CHECK(s.delta.at(4) == 1);
  }

  TEST_CASE("children and the parent construction") {
    const auto ce = children(epsilon2());
    REQUIRE(ce.size() == 1);
    CHECK(equivalent(ce[0].child, gamma1()).has_value());
    const auto ch = children(hexacode());
    REQUIRE(ch.size() == 1);
    CHECK(equivalent(ch[0].child, shorter_hexacode()).has_value());
    for (int n = 2; n <= 6; n += 2) {
      const Classification cl = classify(n, true);
      for (const auto& r : cl.classes)
        for (const auto& c : children(r.rep)) {
          CHECK(is_self_dual(c.child));
          CHECK(equivalent(parent(c.child, 1), r.rep).has_value());
        }
    }
  }

  TEST_CASE("neighbours") {
    const auto [d2, d3] = neighbors(direct_sum(gamma1(), gamma1()));
    CHECK(equivalent(d2, epsilon2()).has_value());
    CHECK(equivalent(d3, epsilon2()).has_value());
    const auto [o2, o3] = neighbors(odd_hexacode());
    CHECK((equivalent(o2, hexacode()).has_value() || equivalent(o3, hexacode()).has_value()));
    std::mt19937_64 rng(31);
    int tested = 0;
    while (tested < 50) {
      const int n = 2 + 2 * static_cast<int>(rng() % 3);
      const KCode d = oracle::random_self_dual(n, rng);
      if (is_even(d)) continue;
      ++tested;
      const auto [x, y] = neighbors(d);
      CHECK(is_self_dual(x));
      CHECK(is_self_dual(y));
      CHECK(is_even(x));
      CHECK(is_even(y));
    }
  }

  TEST_CASE("neighbourhood graphs are connected with one edge object per odd class") {
    for (int n : {2, 4, 6}) {
      const Classification all = classify(n, false);
      const NeighGraph g = neighborhood_graph(all);
      std::size_t odd = 0;
      for (const auto& r : all.classes) odd += !r.even;
      CHECK(g.edges.size() == odd);
      CHECK(g.connected());
    }
    const NeighGraph g2 = neighborhood_graph(classify(2, false));
    CHECK(g2.vertices.size() == 1);
    CHECK(g2.loop_count() == 1);
  }
}
