#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gerst/rational.hpp"

namespace gerst {

// Dense matrix over Q, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  bool is_zero() const;

  static RationalMatrix identity(std::size_t n);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> entries_;
};

// Exact rank over Q. Rows are cleared of denominators, then reduced by
// fraction-free (Bareiss) elimination over the integers, so intermediate
// entries stay minors of the scaled matrix.
std::size_t rank(const RationalMatrix& m);

// Cochain complex concentrated in a finite range of degrees, with
// differentials of degree +1: d[k] maps the space in degree lo+k to the
// space in degree lo+k+1.
struct FiniteComplex {
  int lowest_degree = 0;
  std::vector<std::size_t> dims;            // dims[k] = dim of degree lo+k
  std::vector<RationalMatrix> differentials;  // differentials.size() == dims.size()-1

  int highest_degree() const { return lowest_degree + static_cast<int>(dims.size()) - 1; }
};

// Shape mismatch or d∘d != 0; `degree` names the offending differential.
struct ComplexDefect {
  int degree;
  std::string message;
};

// Checks shapes and that consecutive differentials compose to zero.
std::optional<ComplexDefect> validate(const FiniteComplex& c);

// dim ker(d_n) - rank(d_{n-1}) for every degree in the range; missing
// differentials at the ends count as zero maps. Throws std::invalid_argument
// when validate() reports a defect.
std::vector<std::size_t> homology_dims(const FiniteComplex& c);

}  // namespace gerst
