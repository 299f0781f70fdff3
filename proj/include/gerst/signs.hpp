#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gerst {

// Sign of rearranging graded symbols s_0,...,s_{n-1} (degrees[i] = degree of
// s_i) into the order s_{arrangement[0]}, s_{arrangement[1]}, ...:
// the product of (-1)^{degrees[i]*degrees[j]} over pairs placed out of their
// original relative order. `arrangement` must be a permutation of 0..n-1.
int koszul_sign(std::span<const int> degrees, std::span<const int> arrangement);

// Exponent version of the above (0 or 1), for composing with other signs.
int koszul_exponent(std::span<const int> degrees, std::span<const int> arrangement);

// The sign exponent picked up by moving every vertical bar of
// [a_1|...|a_p] to the front, a bar carrying degree one:
// (p-1)|a_1| + (p-2)|a_2| + ... + |a_{p-1}|.
//
// Two implementations on purpose. The closed form evaluates the polynomial;
// the first-principles form lays the word out as an explicit symbol list
// (element, bar, element, ..., bar, element) and asks koszul_exponent for
// the bar-fronting rearrangement. Identity engines compute every sign both
// ways and abort on disagreement.
long barmove_exponent_closed(std::span<const int> degrees);
long barmove_exponent_bars(std::span<const int> degrees);

// Runtime cross-check of the two sign paths. Any mismatch is a hard failure:
// it throws and is additionally counted so test suites can report totals.
class SignAudit {
 public:
  static void check(long closed_exponent, long bars_exponent, const char* site);
  static std::uint64_t checks_performed();
  static std::uint64_t mismatches();
  static void reset();
};

// arrangement[r] = perm[r] for the word built of consecutive blocks:
// reorders [B_1 ... B_r | C_1 ... C_r] into [B_1 C_1 B_2 C_2 ...].
// Block i of the B-row has size bsizes[i], similarly csizes. Returned as
// symbol indices into the concatenation (B-blocks first, then C-blocks).
std::vector<int> interleave_arrangement(std::span<const std::size_t> bsizes,
                                        std::span<const std::size_t> csizes);

}  // namespace gerst
