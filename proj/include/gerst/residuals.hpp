#pragma once

#include <span>
#include <vector>

#include "gerst/realization.hpp"

namespace gerst {

// Exact evaluations of the three B-infinity identity families. Each returns
// LHS - RHS on the given inputs (the A-infinity family is already a
// one-sided sum); a valid realization makes every residual the zero cochain.
// Every term's sign is computed twice, by the closed formula and by moving
// bars through the word from first principles; SignAudit aborts on mismatch.

// A-infinity family, n >= 1:
//   sum_{i+j=n+1} sum_{k=0}^{n-j} (-1)^eps M_i(a_1,...,a_k, M_j(a_{k+1},...,a_{k+j}),...,a_n)
// with eps = (i+1)j + (j+1)k + sum_{m<=k}(i-m+1)|a_m| + sum_{m=k+1}^{n-1}(n-m)|a_m|.
Cochain a_infty_residual(int n, std::span<const Cochain> inputs, const Realization& r);

// Associativity of the coalgebra product: inputs split as
// (a_1..a_k; b_1..b_l; c_1..c_m). Signs are the reordering signs of the
// interleaved blocks in the shifted grading.
Cochain assoc_residual(int k, int l, int m, std::span<const Cochain> inputs,
                       const Realization& r);

// Leibniz rule for the coderivation over the product: inputs split as
// (a_1..a_k; b_1..b_l).
Cochain leibniz_residual(int k, int l, std::span<const Cochain> inputs, const Realization& r);

// All ways to write `total` as an ordered sum of `parts` nonnegative ints.
std::vector<std::vector<int>> compositions(int total, int parts);

}  // namespace gerst
