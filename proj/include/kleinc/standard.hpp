#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kleinc/code.hpp"

namespace kleinc {

/// The named codes:
///   gamma1           {0, a}
///   epsilon2         {00, aa, bb, cc}
///   delta <n>        words of {0,a}^n with an even number of a's
///   delta+ <n>       delta_n together with the coset delta_n + b^n
///   hexacode         the [6,3,4] code C6
///   shorter-hexacode C5, the child of C6 at its last position for glue a
///   odd-hexacode     O6, the non-even self-dual [6,3] code with A1 = A2 = 0
///   hamming <m>      H_m via the F4 identification a=1, b=w, c=w^2
///   ext-hamming <m>  H_m with an overall F4 parity position appended
///   extremal12       an even self-dual [12,6,6] code
/// Throws std::invalid_argument for unknown names or bad parameters.
KCode standard_code(std::string_view name, int param = 0);

/// Names accepted by standard_code (for help text).
std::vector<std::string> standard_code_names();

KCode gamma1();
KCode epsilon2();
KCode delta(int n);
KCode delta_plus(int n);
KCode hexacode();
KCode shorter_hexacode();
KCode odd_hexacode();
KCode hamming(int m);
KCode extended_hamming(int m);
KCode extremal12();

/// The six hexacode generators as listed in the literature.
std::vector<KWord> hexacode_generators();

}  // namespace kleinc
