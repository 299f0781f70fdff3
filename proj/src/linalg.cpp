#include "gerst/linalg.hpp"

#include <stdexcept>

namespace gerst {

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (is_zero(a)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rat& b = rhs(k, j);
        if (is_zero(b)) continue;
        out(i, j) += a * b;
      }
    }
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!gerst::is_zero(e)) return false;
  return true;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::size_t rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row; row scaling does not change the rank.
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      BigInt den = m(i, j).get_den();
      BigInt g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      lcm = lcm / g * den;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      Rat scaled = m(i, j) * Rat(lcm);
      a[i][j] = scaled.get_num();
    }
  }

  // Bareiss fraction-free elimination.
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::optional<ComplexDefect> validate(const FiniteComplex& c) {
  if (c.dims.empty()) return ComplexDefect{c.lowest_degree, "complex has no degrees"};
  if (c.differentials.size() + 1 != c.dims.size())
    return ComplexDefect{c.lowest_degree, "differential count does not match degree range"};
  for (std::size_t k = 0; k < c.differentials.size(); ++k) {
    const auto& d = c.differentials[k];
    if (d.rows() != c.dims[k + 1] || d.cols() != c.dims[k])
      return ComplexDefect{c.lowest_degree + static_cast<int>(k),
                           "differential shape does not match adjacent space dimensions"};
  }
  for (std::size_t k = 0; k + 1 < c.differentials.size(); ++k) {
    if (!(c.differentials[k + 1] * c.differentials[k]).is_zero())
      return ComplexDefect{c.lowest_degree + static_cast<int>(k),
                           "d∘d is nonzero starting at this degree"};
  }
  return std::nullopt;
}

std::vector<std::size_t> homology_dims(const FiniteComplex& c) {
  if (auto defect = validate(c))
    throw std::invalid_argument("invalid complex at degree " + std::to_string(defect->degree) +
                                ": " + defect->message);
  std::vector<std::size_t> ranks(c.differentials.size());
  for (std::size_t k = 0; k < c.differentials.size(); ++k) ranks[k] = rank(c.differentials[k]);
  std::vector<std::size_t> h(c.dims.size());
  for (std::size_t k = 0; k < c.dims.size(); ++k) {
    const std::size_t out_rank = (k < ranks.size()) ? ranks[k] : 0;
    const std::size_t in_rank = (k > 0) ? ranks[k - 1] : 0;
    h[k] = c.dims[k] - out_rank - in_rank;  // dim ker d_n - rank d_{n-1}
  }
  return h;
}

}  // namespace gerst
