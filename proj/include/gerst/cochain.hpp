#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gerst/algebra.hpp"
#include "gerst/linalg.hpp"

namespace gerst {

// Hochschild cochain x in C^n(A,A): a multilinear map A^n -> A stored as its
// coefficient tensor on the monomial basis,
//   x(e_{i_1},...,e_{i_n}) = sum_k c[i_1...i_n; k] e_k.
// Degree 0 cochains are elements of A. Immutable after construction.
class Cochain {
 public:
  Cochain(AlgebraPtr algebra, int degree, std::vector<Rat> coeffs);

  static Cochain zero(AlgebraPtr algebra, int degree);
  static Cochain from_element(const AlgebraElement& e);
  // The monomial basis cochain with a single coefficient 1 at flat index i.
  static Cochain basis(AlgebraPtr algebra, int degree, std::size_t i);

  const AlgebraPtr& algebra() const { return algebra_; }
  int degree() const { return degree_; }
  std::size_t arg_count() const { return args_; }       // m^degree
  std::size_t coeff_count() const { return coeffs_.size(); }

  // Value on a basis tuple, as a coefficient span of length dim.
  const Rat* value(std::size_t flat_args) const {
    return &coeffs_[flat_args * algebra_->dim()];
  }
  Rat* value(std::size_t flat_args) { return &coeffs_[flat_args * algebra_->dim()]; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  AlgebraElement as_element() const;  // degree 0 only

  friend bool operator==(const Cochain& a, const Cochain& b);

 private:
  AlgebraPtr algebra_;
  int degree_;
  std::size_t args_;
  std::vector<Rat> coeffs_;
};

Cochain operator+(const Cochain& x, const Cochain& y);
Cochain operator-(const Cochain& x, const Cochain& y);
Cochain operator-(const Cochain& x);
Cochain operator*(const Rat& r, const Cochain& x);

// Hochschild differential:
//   (dx)(a_1,...,a_{n+1}) = a_1 x(a_2,...,a_{n+1})
//     + sum_{i=1}^n (-1)^i x(a_1,...,a_i a_{i+1},...,a_{n+1})
//     - (-1)^n x(a_1,...,a_n) a_{n+1}.
Cochain differential(const Cochain& x);

// Cup product (x·y)(a_1,...,a_{k+l}) = x(a_1,...,a_k) y(a_{k+1},...,a_{k+l}).
Cochain cup(const Cochain& x, const Cochain& y);

// Brace operation {x}{y_1,...,y_n}: the signed sum over all order-preserving
// substitutions of the y_p into argument slots of x, with
// epsilon = sum_p (|y_p|-1) i_p, i_p the number of outer arguments in front
// of the slot receiving y_p. Empty substitution range gives the zero cochain.
// The result is homogeneous of degree |x| + sum|y_p| - n; when that is
// negative the (necessarily zero) result is reported in degree 0.
Cochain braces(const Cochain& x, std::span<const Cochain> args);

// x o y = {x}{y} and [x,y] = x o y - (-1)^{(|x|-1)(|y|-1)} y o x.
Cochain circle(const Cochain& x, const Cochain& y);
Cochain bracket(const Cochain& x, const Cochain& y);

// Deterministic random cochain with integer coefficients in [-3,3],
// generated by SplitMix64 (see prng.hpp).
Cochain random_cochain(const AlgebraPtr& algebra, int degree, std::uint64_t seed);

// The complex C^0 -> ... -> C^{max_degree+1} with matrices assembled by
// applying `differential` to every monomial basis cochain.
FiniteComplex hochschild_complex(const AlgebraPtr& algebra, int max_degree);

// Hochschild cohomology dimensions in degrees 0..max_degree.
std::vector<std::size_t> cohomology_dims(const AlgebraPtr& algebra, int max_degree);

}  // namespace gerst
