#include "gerst/realization.hpp"

#include <stdexcept>

namespace gerst {

namespace {

int sum_degrees(std::span<const Cochain> xs) {
  int d = 0;
  for (const auto& x : xs) d += x.degree();
  return d;
}

class HochschildRealization : public Realization {
 public:
  using Realization::Realization;

  Cochain mk(int k, std::span<const Cochain> args) const override {
    if (static_cast<int>(args.size()) != k)
      throw std::invalid_argument("M_k applied to wrong number of arguments");
    if (k == 1) return differential(args[0]);
    if (k == 2) return cup(args[0], args[1]);
    return Cochain::zero(algebra(), std::max(sum_degrees(args) + mk_degree(k), 0));
  }

  Cochain mkl(int k, int l, std::span<const Cochain> a,
              std::span<const Cochain> b) const override {
    if (static_cast<int>(a.size()) != k || static_cast<int>(b.size()) != l)
      throw std::invalid_argument("M_{k,l} applied to wrong number of arguments");
    if (k == 1 && l == 0) return a[0];
    if (k == 0 && l == 1) return b[0];
    if (k == 1) return braces(a[0], b);
    const int deg = sum_degrees(a) + sum_degrees(b) + mkl_degree(k, l);
    return Cochain::zero(algebra(), std::max(deg, 0));
  }

  bool mk_vanishes(int k) const override { return k == 0 || k > 2; }
  bool mkl_vanishes(int k, int l) const override {
    if (k == 1) return false;               // braces (l = 0 is the identity)
    if (k == 0) return l != 1;              // only the unit survives
    return true;                            // k > 1
  }
};

// Cup product with the values multiplied through an arbitrary bilinear table.
Cochain cup_with_table(const Cochain& x, const Cochain& y, const std::vector<Rat>& table) {
  const auto& A = *x.algebra();
  const std::size_t m = A.dim();
  Cochain out = Cochain::zero(x.algebra(), x.degree() + y.degree());
  for (std::size_t fx = 0; fx < x.arg_count(); ++fx) {
    const Rat* xv = x.value(fx);
    for (std::size_t fy = 0; fy < y.arg_count(); ++fy) {
      const Rat* yv = y.value(fy);
      Rat* dst = out.value(fx * y.arg_count() + fy);
      for (std::size_t i = 0; i < m; ++i) {
        if (is_zero(xv[i])) continue;
        for (std::size_t j = 0; j < m; ++j) {
          if (is_zero(yv[j])) continue;
          const Rat uv = xv[i] * yv[j];
          const Rat* row = &table[(i * m + j) * m];
          for (std::size_t k = 0; k < m; ++k)
            if (!is_zero(row[k])) dst[k] += uv * row[k];
        }
      }
    }
  }
  return out;
}

class MutatedProductRealization final : public HochschildRealization {
 public:
  explicit MutatedProductRealization(AlgebraPtr algebra)
      : HochschildRealization(algebra), table_(build_table(*algebra)) {}

  Cochain mk(int k, std::span<const Cochain> args) const override {
    if (k == 2) return cup_with_table(args[0], args[1], table_);
    return HochschildRealization::mk(k, args);
  }

 private:
  // Corrupt the product so that some triple fails associativity. Sending
  // e_m * e_1 to e_1 (instead of e_m) breaks (e_m e_1) e_m = e_m (e_1 e_m)
  // for every builtin with dim >= 2.
  static std::vector<Rat> build_table(const Algebra& a) {
    const std::size_t m = a.dim();
    std::vector<Rat> t(m * m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) t[(i * m + j) * m + k] = a.c(i, j, k);
    if (m < 2)
      throw std::invalid_argument("mutated product needs dim >= 2; dim-1 bilinear maps are associative");
    const std::size_t last = m - 1;
    for (std::size_t k = 0; k < m; ++k) t[(last * m + 0) * m + k] = 0;
    t[(last * m + 0) * m + 0] = 1;
    return t;
  }

  std::vector<Rat> table_;
};

}  // namespace

RealizationPtr hochschild_realization(AlgebraPtr algebra) {
  return std::make_shared<HochschildRealization>(std::move(algebra));
}

RealizationPtr mutated_product_realization(AlgebraPtr algebra) {
  return std::make_shared<MutatedProductRealization>(std::move(algebra));
}

}  // namespace gerst
