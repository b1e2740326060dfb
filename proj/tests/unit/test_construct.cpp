#include <doctest.h>

#include "kleinc/binary.hpp"
#include "kleinc/classify.hpp"
#include "kleinc/construct.hpp"
#include "kleinc/enumerators.hpp"
#include "kleinc/standard.hpp"
#include "oracle.hpp"

using namespace kleinc;

namespace {

std::set<std::string> words_of(const BinaryCode& b) {
  std::set<std::string> s;
  b.for_each_codeword([&](const BinWord& w) { s.insert(w.str()); });
  return s;
}

// Independent binary checks straight from the codeword list.
bool bin_self_dual(const BinaryCode& b) {
  if (2 * b.dim() != b.length()) return false;
  for (const auto& x : b.basis())
    for (const auto& y : b.basis()) {
      int s = 0;
      for (int i = 0; i < b.length(); ++i) s ^= x.get(i) & y.get(i);
      if (s) return false;
    }
  return true;
}

bool bin_doubly_even(const BinaryCode& b) {
  bool ok = true;
  b.for_each_codeword([&](const BinWord& w) { ok = ok && w.weight() % 4 == 0; });
  return ok;
}

using Terms = std::map<std::array<int, 3>, BigInt>;

}  // namespace

TEST_SUITE("construct") {
  TEST_CASE("hat substitution") {
    CHECK(hat(KWord::parse("a")).str() == "1100");
    CHECK(hat(KWord::parse("bc")).str() == "10100110");
    for (char x : std::string("0abc"))
      for (char y : std::string("0abc")) {
        const KWord kx = KWord::parse(std::string(1, x)), ky = KWord::parse(std::string(1, y));
        CHECK(hat(kx + ky) == (hat(kx) ^ hat(ky)));
      }
  }

  TEST_CASE("construction A on small codes") {
    CHECK(words_of(rho_a(gamma1())) == std::set<std::string>{"0000", "1100", "0011", "1111"});
    const BinaryCode e8 = rho_a(epsilon2());
    CHECK(e8.length() == 8);
    CHECK(e8.dim() == 4);
    CHECK(binary_min_weight(e8) == 4);
    CHECK(bin_self_dual(e8));
    CHECK(bin_doubly_even(e8));
    const BinaryCode h = rho_a(hexacode());
    CHECK(h.length() == 24);
    CHECK(binary_min_weight(h) == 4);
    CHECK(bin_self_dual(h));
    CHECK(bin_doubly_even(h));
  }

  TEST_CASE("construction B requires even length") {
    CHECK_THROWS(rho_b(gamma1()));
    const BinaryCode e = rho_b(normalize_for_b(epsilon2(), BTarget::Codeword).code);
    CHECK(e.length() == 8);
    CHECK(e.dim() == 4);
    CHECK(bin_self_dual(e));
  }

  TEST_CASE("Golay code from the hexacode") {
    const BinaryCode g = rho_b(normalize_for_b(hexacode(), BTarget::Codeword).code);
    CHECK(g.length() == 24);
    CHECK(g.dim() == 12);
    CHECK(binary_min_weight(g) == 8);
    CHECK(bin_self_dual(g));
    CHECK(bin_doubly_even(g));
    const IntPoly w = binary_we(g);
    CHECK(w[8] == 759);
    CHECK(w == predicted_we(hamming_we(hexacode()), Construction::B));
  }

  TEST_CASE("weight enumerator identities on the classified corpus") {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& r : classify(n, false).classes) {
        const BinaryCode a = rho_a(r.rep);
        CHECK(binary_we(a) == predicted_we(r.we, Construction::A));
        CHECK(bin_self_dual(a));
        CHECK(is_self_dual(a));
        CHECK(bin_doubly_even(a) == r.even);
        CHECK(binary_min_weight(a) >= std::min(4, 2 * min_weight(r.rep)));
        CHECK(bin_smwe(a, marking_intervals(Marking::standard(n))) == predicted_smwe(swe(r.rep), Construction::A));
        if (n % 2 != 0) continue;
        const BinaryCode bc = rho_b(normalize_for_b(r.rep, BTarget::Codeword).code);
        CHECK(bin_self_dual(bc));
        if (r.even) CHECK(bin_doubly_even(bc));
        const KCode s = normalize_for_b(r.rep, BTarget::Shadow).code;
        const BinaryCode bs = rho_b(s);
        CHECK(binary_we(bs) == predicted_we(hamming_we(s), Construction::B));
        CHECK(bin_smwe(bs, marking_intervals(Marking::standard(n))) == predicted_smwe(swe(s), Construction::B));
      }
    }
  }

  TEST_CASE("markings") {
    using P = std::vector<std::pair<int, int>>;
    CHECK(marking_intervals(Marking::parse("a")) == P{{1, 2}, {3, 4}});
    CHECK(marking_intervals(Marking::parse("b")) == P{{1, 3}, {2, 4}});
    CHECK(marking_intervals(Marking::parse("c")) == P{{1, 4}, {3, 2}});
    CHECK_THROWS(Marking::parse("a0"));
  }

  TEST_CASE("marked enumerators") {
    const MarkedSmwe g = bin_smwe(rho_a(gamma1()), marking_intervals(Marking::parse("a")));
    CHECK(g.terms == Terms{{{2, 0, 0}, 1}, {{1, 1, 0}, 2}, {{0, 2, 0}, 1}});
    CHECK(predicted_smwe(swe(gamma1()), Construction::A).terms == g.terms);
    CHECK(predicted_smwe(swe(epsilon2()), Construction::A).terms ==
          Terms{{{4, 0, 0}, 1}, {{2, 2, 0}, 6}, {{0, 4, 0}, 1}, {{0, 0, 4}, 8}});
    const MarkedSmwe h = bin_smwe(rho_a(hexacode()), marking_intervals(Marking::standard(6)));
    CHECK(h.terms.at({12, 0, 0}) == 1);
    const KCode hb = normalize_for_b(hexacode(), BTarget::Shadow).code;
    CHECK(bin_smwe(rho_b(hb), marking_intervals(Marking::standard(6))) == predicted_smwe(swe(hb), Construction::B));
  }

  TEST_CASE("symmetrized enumerators of even codes lie in the invariant ring") {
    for (int n = 2; n <= 6; n += 2)
      for (const auto& r : classify(n, false).classes)
        CHECK(swe_ring_coordinates(swe(r.rep)).has_value() == r.even);
  }

  TEST_CASE("binary code helpers") {
    const BinaryCode b = parse_binary_code("# length 4\n1100\n0011\n");
    CHECK(b.dim() == 2);
    CHECK(parse_binary_code(format_binary_code(b)) == b);
    CHECK(binary_dual(b) == b);
    CHECK(is_even(b));
    CHECK_FALSE(is_doubly_even(b));
  }
}
