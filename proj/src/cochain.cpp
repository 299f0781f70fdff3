#include "gerst/cochain.hpp"

#include <algorithm>
#include <stdexcept>

#include "gerst/prng.hpp"

namespace gerst {

namespace {

std::size_t pow_sz(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void require_same_algebra(const Cochain& x, const Cochain& y) {
  if (x.algebra() != y.algebra())
    throw std::invalid_argument("cochains belong to different algebras");
}

}  // namespace

Cochain::Cochain(AlgebraPtr algebra, int degree, std::vector<Rat> coeffs)
    : algebra_(std::move(algebra)), degree_(degree) {
  if (degree_ < 0) throw std::invalid_argument("cochain degree must be nonnegative");
  args_ = pow_sz(algebra_->dim(), degree_);
  if (coeffs.size() != args_ * algebra_->dim())
    throw std::invalid_argument("cochain tensor has wrong shape");
  coeffs_ = std::move(coeffs);
}

Cochain Cochain::zero(AlgebraPtr algebra, int degree) {
  const std::size_t m = algebra->dim();
  return Cochain(std::move(algebra), degree, std::vector<Rat>(pow_sz(m, degree) * m, Rat(0)));
}

Cochain Cochain::from_element(const AlgebraElement& e) {
  return Cochain(e.algebra(), 0, e.coeffs());
}

Cochain Cochain::basis(AlgebraPtr algebra, int degree, std::size_t i) {
  Cochain x = zero(std::move(algebra), degree);
  x.coeffs_[i] = 1;
  return x;
}

bool Cochain::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& r) { return gerst::is_zero(r); });
}

AlgebraElement Cochain::as_element() const {
  if (degree_ != 0) throw std::logic_error("only degree-0 cochains are algebra elements");
  return AlgebraElement(algebra_, coeffs_);
}

bool operator==(const Cochain& a, const Cochain& b) {
  return a.algebra_ == b.algebra_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

Cochain operator+(const Cochain& x, const Cochain& y) {
  require_same_algebra(x, y);
  if (x.degree() != y.degree()) throw std::invalid_argument("cochain degrees differ in sum");
  std::vector<Rat> out(x.coeffs());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y.coeffs()[i];
  return Cochain(x.algebra(), x.degree(), std::move(out));
}

Cochain operator-(const Cochain& x, const Cochain& y) {
  require_same_algebra(x, y);
  if (x.degree() != y.degree()) throw std::invalid_argument("cochain degrees differ in difference");
  std::vector<Rat> out(x.coeffs());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= y.coeffs()[i];
  return Cochain(x.algebra(), x.degree(), std::move(out));
}

Cochain operator-(const Cochain& x) { return Rat(-1) * x; }

Cochain operator*(const Rat& r, const Cochain& x) {
  std::vector<Rat> out(x.coeffs());
  for (auto& c : out) c *= r;
  return Cochain(x.algebra(), x.degree(), std::move(out));
}

Cochain differential(const Cochain& x) {
  const auto& A = *x.algebra();
  const std::size_t m = A.dim();
  const int n = x.degree();
  Cochain out = Cochain::zero(x.algebra(), n + 1);

  std::vector<std::size_t> tuple(n + 1, 0);
  std::vector<Rat> tmp(m);
  const std::size_t total = out.arg_count();
  for (std::size_t flat = 0; flat < total; ++flat) {
    // Decode flat index, first argument most significant.
    std::size_t rest = flat;
    for (int t = n; t >= 0; --t) {
      tuple[t] = rest % m;
      rest /= m;
    }
    Rat* dst = out.value(flat);

    // a_1 * x(a_2,...,a_{n+1})
    {
      std::size_t sub = 0;
      for (int t = 1; t <= n; ++t) sub = sub * m + tuple[t];
      const Rat* xv = x.value(sub);
      const std::size_t i = tuple[0];
      for (std::size_t p = 0; p < m; ++p) {
        if (is_zero(xv[p])) continue;
        const Rat* row = A.basis_product(i, p);
        for (std::size_t k = 0; k < m; ++k)
          if (!is_zero(row[k])) dst[k] += xv[p] * row[k];
      }
    }

    // sum_i (-1)^i x(a_1,...,a_i a_{i+1},...,a_{n+1})
    for (int j = 1; j <= n; ++j) {
      const Rat* prod = A.basis_product(tuple[j - 1], tuple[j]);
      const bool neg = (j % 2) != 0;
      for (std::size_t p = 0; p < m; ++p) {
        if (is_zero(prod[p])) continue;
        std::size_t sub = 0;
        for (int t = 0; t < j - 1; ++t) sub = sub * m + tuple[t];
        sub = sub * m + p;
        for (int t = j + 1; t <= n; ++t) sub = sub * m + tuple[t];
        const Rat* xv = x.value(sub);
        for (std::size_t k = 0; k < m; ++k) {
          if (is_zero(xv[k])) continue;
          if (neg)
            dst[k] -= prod[p] * xv[k];
          else
            dst[k] += prod[p] * xv[k];
        }
      }
    }

    // -(-1)^n x(a_1,...,a_n) a_{n+1}
    {
      std::size_t sub = 0;
      for (int t = 0; t < n; ++t) sub = sub * m + tuple[t];
      const Rat* xv = x.value(sub);
      const std::size_t j = tuple[n];
      const bool neg = (n % 2) == 0;  // -(-1)^n
      for (std::size_t p = 0; p < m; ++p) {
        if (is_zero(xv[p])) continue;
        const Rat* row = A.basis_product(p, j);
        for (std::size_t k = 0; k < m; ++k) {
          if (is_zero(row[k])) continue;
          if (neg)
            dst[k] -= xv[p] * row[k];
          else
            dst[k] += xv[p] * row[k];
        }
      }
    }
  }
  return out;
}

Cochain cup(const Cochain& x, const Cochain& y) {
  require_same_algebra(x, y);
  const auto& A = *x.algebra();
  const std::size_t m = A.dim();
  Cochain out = Cochain::zero(x.algebra(), x.degree() + y.degree());
  std::vector<Rat> prod(m);
  for (std::size_t fx = 0; fx < x.arg_count(); ++fx) {
    const Rat* xv = x.value(fx);
    bool xnz = false;
    for (std::size_t k = 0; k < m; ++k) xnz |= !is_zero(xv[k]);
    if (!xnz) continue;
    for (std::size_t fy = 0; fy < y.arg_count(); ++fy) {
      const Rat* yv = y.value(fy);
      multiply_into(A, xv, yv, prod.data());
      Rat* dst = out.value(fx * y.arg_count() + fy);
      for (std::size_t k = 0; k < m; ++k)
        if (!is_zero(prod[k])) dst[k] += prod[k];
    }
  }
  return out;
}

Cochain braces(const Cochain& x, std::span<const Cochain> args) {
  const auto& A = x.algebra();
  const std::size_t m = A->dim();
  const int N = x.degree();
  const int n = static_cast<int>(args.size());
  for (const auto& y : args)
    if (y.algebra() != A) throw std::invalid_argument("brace arguments over different algebras");

  int target = N - n;
  for (const auto& y : args) target += y.degree();
  if (n > N || target < 0) return Cochain::zero(A, std::max(target, 0));

  Cochain out = Cochain::zero(A, target);

  // Substitution slots 1 <= s_1 < ... < s_n <= N, stored 0-based.
  std::vector<int> slots(n);
  for (int p = 0; p < n; ++p) slots[p] = p;

  std::vector<std::size_t> xu(N, 0);
  std::vector<std::vector<std::size_t>> chunk(n);
  for (int p = 0; p < n; ++p) chunk[p].assign(args[p].degree(), 0);

  const std::size_t xargs = x.arg_count();
  while (true) {
    // epsilon = sum_p (|y_p|-1) i_p with i_p outer arguments before slot s_p.
    long eps = 0;
    {
      int consumed = 0;  // outer arguments consumed by earlier substitutions
      for (int p = 0; p < n; ++p) {
        const int i_p = slots[p] - p + consumed;
        eps += static_cast<long>(args[p].degree() - 1) * i_p;
        consumed += args[p].degree();
      }
    }
    const bool negative = (((eps % 2) + 2) % 2) != 0;

    for (std::size_t fx = 0; fx < xargs; ++fx) {
      const Rat* xv = x.value(fx);
      bool xnz = false;
      for (std::size_t k = 0; k < m; ++k) xnz |= !is_zero(xv[k]);
      if (!xnz) continue;
      std::size_t rest = fx;
      for (int t = N - 1; t >= 0; --t) {
        xu[t] = rest % m;
        rest /= m;
      }

      // Loop over all inner argument tuples of every substituted cochain.
      bool chunks_done = false;
      for (int p = 0; p < n; ++p) std::fill(chunk[p].begin(), chunk[p].end(), 0);
      while (!chunks_done) {
        Rat factor(1);
        bool zero = false;
        for (int p = 0; p < n && !zero; ++p) {
          std::size_t cf = 0;
          for (std::size_t t = 0; t < chunk[p].size(); ++t) cf = cf * m + chunk[p][t];
          const Rat& v = args[p].value(cf)[xu[slots[p]]];
          if (is_zero(v))
            zero = true;
          else
            factor *= v;
        }
        if (!zero) {
          // Assemble the outer argument tuple: free slots pass through,
          // substituted slots expand into the inner chunks.
          std::size_t of = 0;
          int p = 0;
          for (int s = 0; s < N; ++s) {
            if (p < n && s == slots[p]) {
              for (std::size_t t = 0; t < chunk[p].size(); ++t) of = of * m + chunk[p][t];
              ++p;
            } else {
              of = of * m + xu[s];
            }
          }
          Rat* dst = out.value(of);
          for (std::size_t k = 0; k < m; ++k) {
            if (is_zero(xv[k])) continue;
            if (negative)
              dst[k] -= factor * xv[k];
            else
              dst[k] += factor * xv[k];
          }
        }
        // Advance the chunk odometer.
        chunks_done = true;
        for (int p = n - 1; p >= 0 && chunks_done; --p) {
          for (int t = static_cast<int>(chunk[p].size()) - 1; t >= 0; --t) {
            if (++chunk[p][t] < m) {
              chunks_done = false;
              break;
            }
            chunk[p][t] = 0;
          }
        }
        if (n == 0) break;
        bool all_empty = true;
        for (int p = 0; p < n; ++p) all_empty &= chunk[p].empty();
        if (all_empty) break;
      }
    }

    // Next slot pattern.
    int p = n - 1;
    while (p >= 0 && slots[p] == N - n + p) --p;
    if (p < 0) break;
    ++slots[p];
    for (int q = p + 1; q < n; ++q) slots[q] = slots[q - 1] + 1;
  }
  return out;
}

Cochain circle(const Cochain& x, const Cochain& y) {
  const Cochain ys[1] = {y};
  return braces(x, ys);
}

Cochain bracket(const Cochain& x, const Cochain& y) {
  const long e = static_cast<long>(x.degree() - 1) * (y.degree() - 1);
  Cochain yx = circle(y, x);
  if (((e % 2) + 2) % 2 == 0) return circle(x, y) - yx;
  return circle(x, y) + yx;
}

Cochain random_cochain(const AlgebraPtr& algebra, int degree, std::uint64_t seed) {
  SplitMix64 rng = seeded_stream(seed, static_cast<std::uint64_t>(degree) * 0x100003ULL +
                                           algebra->dim());
  Cochain out = Cochain::zero(algebra, degree);
  const std::size_t total = out.coeff_count();
  for (std::size_t i = 0; i < total; ++i) {
    const long v = static_cast<long>(rng.next_in(-3, 3));
    if (v != 0) out.value(i / algebra->dim())[i % algebra->dim()] = v;
  }
  return out;
}

FiniteComplex hochschild_complex(const AlgebraPtr& algebra, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
  const std::size_t m = algebra->dim();
  FiniteComplex c;
  c.lowest_degree = 0;
  for (int n = 0; n <= max_degree + 1; ++n) c.dims.push_back(pow_sz(m, n) * m);
  for (int n = 0; n <= max_degree; ++n) {
    RationalMatrix d(c.dims[n + 1], c.dims[n]);
    for (std::size_t col = 0; col < c.dims[n]; ++col) {
      const Cochain dx = differential(Cochain::basis(algebra, n, col));
      for (std::size_t row = 0; row < c.dims[n + 1]; ++row) {
        const Rat& v = dx.coeffs()[row];
        if (!is_zero(v)) d(row, col) = v;
      }
    }
    c.differentials.push_back(std::move(d));
  }
  return c;
}

std::vector<std::size_t> cohomology_dims(const AlgebraPtr& algebra, int max_degree) {
  const auto h = homology_dims(hochschild_complex(algebra, max_degree));
  return std::vector<std::size_t>(h.begin(), h.begin() + max_degree + 1);
}

}  // namespace gerst
