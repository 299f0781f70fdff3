#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gerst/rational.hpp"

namespace gerst {

struct AlgebraDefect {
  std::string kind;             // "associativity" | "unit axiom" | "shape"
  std::array<int, 3> triple{};  // 1-based basis indices for associativity failures
  std::string message;
};

// Finite-dimensional associative unital algebra over Q, given by structure
// constants c[i][j][k] with e_i e_j = sum_k c[i][j][k] e_k.
class Algebra {
 public:
  Algebra(std::size_t dim, std::vector<std::string> labels, std::vector<Rat> table,
          std::vector<Rat> unit, std::string name = "");

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Rat>& unit() const { return unit_; }

  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim_ + j) * dim_ + k];
  }

  // Product of basis elements as a coefficient span (length dim()).
  const Rat* basis_product(std::size_t i, std::size_t j) const {
    return &table_[(i * dim_ + j) * dim_];
  }

  // Confirms associativity and the two-sided unit axiom, or reports the
  // first violated instance. Never throws.
  std::optional<AlgebraDefect> validate() const;

 private:
  std::size_t dim_;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Rat> table_;  // (i*dim + j)*dim + k
  std::vector<Rat> unit_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr algebra, std::vector<Rat> coeffs);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  AlgebraPtr algebra_;
  std::vector<Rat> coeffs_;
};

AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement operator-(const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v);

// Y ↦ x·y coefficients into `out` (length dim), given coefficient vectors.
void multiply_into(const Algebra& a, const Rat* u, const Rat* v, Rat* out);

// Built-in algebras: ground_field, dual_numbers, mat2, group_z2, trunc_poly3.
// Throws std::invalid_argument for unknown names.
AlgebraPtr builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

// Parses the JSON description
//   { "dim": m, "labels": [...], "unit": ["p/q", ...], "table": [[[ "p/q" ]]] }
// and validates the result. Parse problems throw AlgebraParseError;
// validation failures throw AlgebraValidationError.
struct AlgebraParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AlgebraValidationError : std::runtime_error {
  AlgebraValidationError(AlgebraDefect d, const std::string& what)
      : std::runtime_error(what), defect(std::move(d)) {}
  AlgebraDefect defect;
};
AlgebraPtr algebra_from_json_text(const std::string& text);

}  // namespace gerst
