#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "gerst/realization.hpp"

namespace gerst {

// Word [a_1|...|a_p] of cochains in the tensor coalgebra on the shifted
// complex; the empty word is the coalgebra unit.
struct TensorWord {
  std::vector<Cochain> letters;

  int length() const { return static_cast<int>(letters.size()); }
  // |[a_1|...|a_p]| = |a_1| + ... + |a_p| - p
  int shifted_degree() const {
    int d = 0;
    for (const auto& a : letters) d += a.degree() - 1;
    return d;
  }
};

// Element of the tensor coalgebra with every letter expanded in the monomial
// cochain basis, so that linear cancellation between words is exact. Words
// longer than the cap are rejected rather than truncated: the coderivation
// and the product never lengthen words, and the cap assertion enforces that.
class TensorElement {
 public:
  // key layout: p, then (degree, flat basis index) per letter
  using Key = std::vector<std::uint32_t>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  using Terms = std::unordered_map<Key, Rat, KeyHash>;

  TensorElement(AlgebraPtr algebra, int max_length);

  static TensorElement from_word(AlgebraPtr algebra, const TensorWord& w, int max_length);
  static TensorElement unit(AlgebraPtr algebra, int max_length);  // the empty word [ ]

  const AlgebraPtr& algebra() const { return algebra_; }
  int max_length() const { return max_length_; }
  const Terms& terms() const { return terms_; }

  void add_term(const Key& key, const Rat& coeff);
  bool is_zero() const;
  std::size_t term_count() const { return terms_.size(); }

  TensorElement operator+(const TensorElement& rhs) const;
  TensorElement operator-(const TensorElement& rhs) const;

  // Letter degrees of a key, and basis indices.
  static int key_length(const Key& k) { return static_cast<int>(k[0]); }

  // The length-1 component, collected per cochain degree.
  std::map<int, Cochain> projection() const;

  friend bool operator==(const TensorElement& a, const TensorElement& b);

 private:
  AlgebraPtr algebra_;
  int max_length_;
  Terms terms_;
};

// The coderivation of the tensor coalgebra extending sum_k M_k: replaces each
// consecutive block [a_{u+1}|...|a_{u+j}] by the square-bracket value
// M_j[...], with the Koszul sign of carrying the degree-1 operator past the
// first u shifted letters. Annihilates the unit [ ].
TensorElement coderivation_D(const Realization& r, const TensorElement& w);

// The coalgebra-map product determined by sum_{k,l} M_{k,l} via cofreeness:
// both factors split into consecutive blocks, block pairs map through
// M_{k_i,l_i}, and the interleaving carries the TV[1] reordering sign.
// The empty word is a two-sided unit.
TensorElement product_M(const Realization& r, const TensorElement& u, const TensorElement& v);

struct OracleCheck {
  std::string id;
  std::string params;
  bool pass;
  std::string detail;  // counterexample payload when failing
};

struct OracleReport {
  std::vector<OracleCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Runs the DG-bialgebra checks on seeded random tensor words of total length
// <= max_length: D^2 = 0, associativity of M, the Leibniz rule for D over M,
// the unit axioms, projection agreement with the generators, and agreement
// of the projected defects with the closed-form identity engines.
OracleReport oracle_residuals(const RealizationPtr& r, int trials, std::uint64_t seed,
                              int max_length);

}  // namespace gerst
