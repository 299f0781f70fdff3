#pragma once

#include <memory>
#include <span>

#include "gerst/cochain.hpp"

namespace gerst {

// Generator of the B-infinity operad: M_k (k >= 1) of degree 2-k, or
// M_{k,l} (k,l >= 0) of degree 1-k-l.
struct BGenerator {
  enum class Kind { Mk, Mkl };
  Kind kind;
  int k = 0;
  int l = 0;

  int degree() const { return kind == Kind::Mk ? 2 - k : 1 - k - l; }
  static BGenerator mk(int k) { return {Kind::Mk, k, 0}; }
  static BGenerator mkl(int k, int l) { return {Kind::Mkl, k, l}; }
};

// Assignment of multilinear operations on cochains to the B-infinity
// generators, in the round-bracket convention (no bar bookkeeping inside;
// the identity engines own all Koszul signs).
class Realization {
 public:
  explicit Realization(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
  virtual ~Realization() = default;

  const AlgebraPtr& algebra() const { return algebra_; }

  // M_k(a_1,...,a_k). The result has degree sum|a_i| + 2 - k; callers must
  // not ask when that is negative.
  virtual Cochain mk(int k, std::span<const Cochain> args) const = 0;

  // M_{k,l}(a_1,...,a_k; b_1,...,b_l), degree sum + 1 - k - l.
  virtual Cochain mkl(int k, int l, std::span<const Cochain> a,
                      std::span<const Cochain> b) const = 0;

  // Structural zeroes, used to prune terms without building tensors.
  virtual bool mk_vanishes(int k) const = 0;
  virtual bool mkl_vanishes(int k, int l) const = 0;

  static int mk_degree(int k) { return 2 - k; }
  static int mkl_degree(int k, int l) { return 1 - k - l; }
};

using RealizationPtr = std::shared_ptr<const Realization>;

// The Hochschild assignment:
//   M_1 = d, M_2 = cup, M_k = 0 (k > 2 and k = 0),
//   M_{1,l}(x; y_1..y_l) = {x}{y_1,...,y_l}, M_{0,1} = M_{1,0} = id,
//   M_{k,l} = 0 for k > 1, M_{0,l} = 0 for l != 1.
RealizationPtr hochschild_realization(AlgebraPtr algebra);

// Same assignment except that M_2 multiplies values through a deliberately
// non-associative table (a corrupted copy of the algebra's own). Used by
// mutation tests: the A-infinity residual at n = 3 must become nonzero.
RealizationPtr mutated_product_realization(AlgebraPtr algebra);

}  // namespace gerst
