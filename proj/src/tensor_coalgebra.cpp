#include "gerst/tensor_coalgebra.hpp"

#include <sstream>
#include <stdexcept>

#include "gerst/prng.hpp"
#include "gerst/residuals.hpp"
#include "gerst/signs.hpp"

namespace gerst {

std::size_t TensorElement::KeyHash::operator()(const Key& k) const {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : k) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

TensorElement::TensorElement(AlgebraPtr algebra, int max_length)
    : algebra_(std::move(algebra)), max_length_(max_length) {
  if (max_length_ < 0) throw std::invalid_argument("tensor length cap must be nonnegative");
}

TensorElement TensorElement::unit(AlgebraPtr algebra, int max_length) {
  TensorElement e(std::move(algebra), max_length);
  e.add_term(Key{0}, Rat(1));
  return e;
}

TensorElement TensorElement::from_word(AlgebraPtr algebra, const TensorWord& w, int max_length) {
  TensorElement e(algebra, max_length);
  const int p = w.length();
  if (p > max_length) throw std::invalid_argument("word exceeds the tensor length cap");
  for (const auto& letter : w.letters)
    if (letter.algebra() != algebra)
      throw std::invalid_argument("word letters over a different algebra");

  // Outer product over nonzero basis coefficients of every letter.
  std::vector<std::vector<std::pair<std::uint32_t, Rat>>> nz(p);
  for (int s = 0; s < p; ++s) {
    const auto& c = w.letters[s].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!is_zero(c[i])) nz[s].push_back({static_cast<std::uint32_t>(i), c[i]});
    if (nz[s].empty()) return e;  // a zero letter kills the word
  }
  std::vector<std::size_t> pick(p, 0);
  while (true) {
    Key key;
    key.reserve(1 + 2 * p);
    key.push_back(static_cast<std::uint32_t>(p));
    Rat coeff(1);
    for (int s = 0; s < p; ++s) {
      key.push_back(static_cast<std::uint32_t>(w.letters[s].degree()));
      key.push_back(nz[s][pick[s]].first);
      coeff *= nz[s][pick[s]].second;
    }
    e.add_term(key, coeff);
    int s = p - 1;
    while (s >= 0 && ++pick[s] == nz[s].size()) pick[s--] = 0;
    if (s < 0) break;
  }
  return e;
}

void TensorElement::add_term(const Key& key, const Rat& coeff) {
  if (is_zero(coeff)) return;
  if (key_length(key) > max_length_)
    throw std::logic_error("tensor word grew past the length cap");
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

bool TensorElement::is_zero() const { return terms_.empty(); }

TensorElement TensorElement::operator+(const TensorElement& rhs) const {
  TensorElement out(*this);
  for (const auto& [k, c] : rhs.terms_) out.add_term(k, c);
  return out;
}

TensorElement TensorElement::operator-(const TensorElement& rhs) const {
  TensorElement out(*this);
  for (const auto& [k, c] : rhs.terms_) out.add_term(k, -c);
  return out;
}

bool operator==(const TensorElement& a, const TensorElement& b) { return (a - b).is_zero(); }

std::map<int, Cochain> TensorElement::projection() const {
  std::map<int, Cochain> out;
  for (const auto& [key, coeff] : terms_) {
    if (key_length(key) != 1) continue;
    const int deg = static_cast<int>(key[1]);
    auto it = out.find(deg);
    if (it == out.end()) it = out.emplace(deg, Cochain::zero(algebra_, deg)).first;
    const std::size_t flat = key[2];
    it->second.value(flat / algebra_->dim())[flat % algebra_->dim()] += coeff;
  }
  // Drop components that cancelled to zero.
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

namespace {

Cochain basis_letter(const AlgebraPtr& a, std::uint32_t degree, std::uint32_t index) {
  return Cochain::basis(a, static_cast<int>(degree), index);
}

}  // namespace

TensorElement coderivation_D(const Realization& r, const TensorElement& w) {
  TensorElement out(w.algebra(), w.max_length());
  const auto& A = w.algebra();
  for (const auto& [key, coeff] : w.terms()) {
    const int p = TensorElement::key_length(key);
    // D annihilates the unit [ ].
    for (int u = 0; u < p; ++u) {
      long sigma = 0;
      for (int s = 0; s < u; ++s) sigma += static_cast<long>(key[1 + 2 * s]) - 1;
      for (int j = 1; u + j <= p; ++j) {
        if (r.mk_vanishes(j)) continue;
        std::vector<int> block_degs(j);
        int fd = Realization::mk_degree(j);
        for (int t = 0; t < j; ++t) {
          block_degs[t] = static_cast<int>(key[1 + 2 * (u + t)]);
          fd += block_degs[t];
        }
        if (fd < 0) continue;
        std::vector<Cochain> block;
        block.reserve(j);
        for (int t = 0; t < j; ++t)
          block.push_back(basis_letter(A, key[1 + 2 * (u + t)], key[2 + 2 * (u + t)]));
        const Cochain v = r.mk(j, block);
        if (v.is_zero()) continue;
        const long barmove = barmove_exponent_closed(block_degs);
        const bool neg = (((sigma + barmove) % 2) + 2) % 2 != 0;

        for (std::size_t i = 0; i < v.coeff_count(); ++i) {
          const Rat& c = v.coeffs()[i];
          if (is_zero(c)) continue;
          TensorElement::Key nk;
          nk.reserve(1 + 2 * (p - j + 1));
          nk.push_back(static_cast<std::uint32_t>(p - j + 1));
          for (int s = 0; s < u; ++s) {
            nk.push_back(key[1 + 2 * s]);
            nk.push_back(key[2 + 2 * s]);
          }
          nk.push_back(static_cast<std::uint32_t>(fd));
          nk.push_back(static_cast<std::uint32_t>(i));
          for (int s = u + j; s < p; ++s) {
            nk.push_back(key[1 + 2 * s]);
            nk.push_back(key[2 + 2 * s]);
          }
          out.add_term(nk, neg ? Rat(-coeff * c) : Rat(coeff * c));
        }
      }
    }
  }
  return out;
}

TensorElement product_M(const Realization& r, const TensorElement& u, const TensorElement& v) {
  if (u.algebra() != v.algebra())
    throw std::invalid_argument("product of tensor elements over different algebras");
  TensorElement out(u.algebra(), std::max(u.max_length(), v.max_length()));
  const auto& A = u.algebra();

  for (const auto& [ku, cu] : u.terms()) {
    const int pu = TensorElement::key_length(ku);
    for (const auto& [kv, cv] : v.terms()) {
      const int pv = TensorElement::key_length(kv);
      if (pu == 0 && pv == 0) {
        out.add_term(TensorElement::Key{0}, cu * cv);
        continue;
      }
      for (int n = 1; n <= pu + pv; ++n) {
        for (const auto& kp : compositions(pu, n)) {
          for (const auto& lp : compositions(pv, n)) {
            bool degenerate = false;
            for (int i = 0; i < n; ++i) degenerate |= (kp[i] == 0 && lp[i] == 0);
            if (degenerate) continue;

            // Interleave sign in the shifted grading.
            std::vector<int> degs;
            degs.reserve(pu + pv);
            for (int s = 0; s < pu; ++s) degs.push_back(static_cast<int>(ku[1 + 2 * s]) - 1);
            for (int s = 0; s < pv; ++s) degs.push_back(static_cast<int>(kv[1 + 2 * s]) - 1);
            std::vector<std::size_t> bsz(kp.begin(), kp.end()), csz(lp.begin(), lp.end());
            const auto arrangement = interleave_arrangement(bsz, csz);
            const int sign_exp = koszul_exponent(degs, arrangement);

            // Letter values and their formal degrees.
            bool dead = false;
            std::vector<Cochain> vals;
            std::vector<int> fds;
            std::size_t upos = 0, vpos = 0;
            for (int i = 0; i < n && !dead; ++i) {
              if (r.mkl_vanishes(kp[i], lp[i])) {
                dead = true;
                break;
              }
              int fd = Realization::mkl_degree(kp[i], lp[i]);
              std::vector<Cochain> ablock, bblock;
              for (int t = 0; t < kp[i]; ++t) {
                ablock.push_back(basis_letter(A, ku[1 + 2 * (upos + t)], ku[2 + 2 * (upos + t)]));
                fd += static_cast<int>(ku[1 + 2 * (upos + t)]);
              }
              for (int t = 0; t < lp[i]; ++t) {
                bblock.push_back(basis_letter(A, kv[1 + 2 * (vpos + t)], kv[2 + 2 * (vpos + t)]));
                fd += static_cast<int>(kv[1 + 2 * (vpos + t)]);
              }
              if (fd < 0) {
                dead = true;
                break;
              }
              Cochain val = r.mkl(kp[i], lp[i], ablock, bblock);
              if (val.is_zero()) {
                dead = true;
                break;
              }
              vals.push_back(std::move(val));
              fds.push_back(fd);
              upos += kp[i];
              vpos += lp[i];
            }
            if (dead) continue;

            // Expand the letter values multilinearly.
            std::vector<std::vector<std::pair<std::uint32_t, Rat>>> nz(n);
            for (int i = 0; i < n; ++i) {
              const auto& c = vals[i].coeffs();
              for (std::size_t t = 0; t < c.size(); ++t)
                if (!is_zero(c[t])) nz[i].push_back({static_cast<std::uint32_t>(t), c[t]});
            }
            std::vector<std::size_t> pick(n, 0);
            const Rat base = ((sign_exp % 2) != 0) ? Rat(-cu * cv) : Rat(cu * cv);
            while (true) {
              TensorElement::Key nk;
              nk.reserve(1 + 2 * n);
              nk.push_back(static_cast<std::uint32_t>(n));
              Rat coeff = base;
              for (int i = 0; i < n; ++i) {
                nk.push_back(static_cast<std::uint32_t>(fds[i]));
                nk.push_back(nz[i][pick[i]].first);
                coeff *= nz[i][pick[i]].second;
              }
              out.add_term(nk, coeff);
              int i = n - 1;
              while (i >= 0 && ++pick[i] == nz[i].size()) pick[i--] = 0;
              if (i < 0) break;
            }
          }
        }
      }
    }
  }
  return out;
}

namespace {

TensorWord random_word(const AlgebraPtr& a, int length, SplitMix64& rng) {
  TensorWord w;
  for (int i = 0; i < length; ++i) {
    // Long words stay in low degrees so basis expansions stay small.
    const int max_deg = (length >= 4) ? 1 : 2;
    const int deg = static_cast<int>(rng.next_in(0, max_deg));
    w.letters.push_back(random_cochain(a, deg, rng.next()));
  }
  return w;
}

std::string describe_word(const TensorWord& w) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < w.length(); ++i) os << (i ? "|" : "") << "deg" << w.letters[i].degree();
  os << "]";
  return os.str();
}

Cochain projection_component(const TensorElement& e, const AlgebraPtr& a, int degree) {
  auto pr = e.projection();
  auto it = pr.find(degree);
  if (it != pr.end()) return it->second;
  return Cochain::zero(a, std::max(degree, 0));
}

bool projection_is_zero(const TensorElement& e) {
  return e.projection().empty();
}

}  // namespace

OracleReport oracle_residuals(const RealizationPtr& r, int trials, std::uint64_t seed,
                              int max_length) {
  if (max_length < 2) throw std::invalid_argument("oracle needs max_length >= 2");
  OracleReport report;
  const auto& A = r->algebra();

  auto record = [&](const std::string& id, const std::string& params, bool pass,
                    const std::string& detail) {
    report.checks.push_back({id, params, pass, pass ? "" : detail});
  };

  for (int trial = 0; trial < trials; ++trial) {
    SplitMix64 rng = seeded_stream(seed, 7000 + trial);
    const int p = static_cast<int>(rng.next_in(0, max_length));
    const TensorWord word = random_word(A, p, rng);
    const TensorElement w = TensorElement::from_word(A, word, max_length);
    std::ostringstream params;
    params << "trial=" << trial << " word=" << describe_word(word);

    // D^2 = 0
    const TensorElement dw = coderivation_D(*r, w);
    const TensorElement ddw = coderivation_D(*r, dw);
    record("oracle.d_squared", params.str(), ddw.is_zero(),
           "D^2 has " + std::to_string(ddw.term_count()) + " surviving terms");

    // Unit axioms: M([]⊗w) = w = M(w⊗[]), D[] = 0.
    const TensorElement unit = TensorElement::unit(A, max_length);
    record("oracle.unit_left", params.str(), product_M(*r, unit, w) == w,
           "[]⊗w does not reproduce w");
    record("oracle.unit_right", params.str(), product_M(*r, w, unit) == w,
           "w⊗[] does not reproduce w");
    record("oracle.d_annihilates_unit", params.str(),
           coderivation_D(*r, unit).is_zero(), "D[] != 0");

    // Split w for the Leibniz and associativity checks.
    const int cut = static_cast<int>(rng.next_in(0, p));
    TensorWord uw, vw;
    uw.letters.assign(word.letters.begin(), word.letters.begin() + cut);
    vw.letters.assign(word.letters.begin() + cut, word.letters.end());
    const TensorElement u = TensorElement::from_word(A, uw, max_length);
    const TensorElement v = TensorElement::from_word(A, vw, max_length);

    // Leibniz: D(M(u⊗v)) = M(Du⊗v) + (-1)^{û} M(u⊗Dv).
    {
      const TensorElement lhs = coderivation_D(*r, product_M(*r, u, v));
      TensorElement rhs = product_M(*r, coderivation_D(*r, u), v);
      const TensorElement udv = product_M(*r, u, coderivation_D(*r, v));
      const bool flip = ((uw.shifted_degree() % 2) + 2) % 2 != 0;
      TensorElement defect = lhs - rhs;
      if (flip)
        defect = defect + udv;
      else
        defect = defect - udv;
      record("oracle.leibniz", params.str() + " cut=" + std::to_string(cut), defect.is_zero(),
             "coderivation fails the Leibniz rule");

      // Projected defect agrees with the closed-form engine.
      const int k = uw.length(), l = vw.length();
      std::vector<Cochain> inputs(uw.letters);
      inputs.insert(inputs.end(), vw.letters.begin(), vw.letters.end());
      const Cochain engine = leibniz_residual(k, l, inputs, *r);
      const Cochain projected = projection_component(defect, A, engine.degree());
      record("oracle.leibniz_matches_engine", params.str(), projected == engine,
             "projected Leibniz defect differs from the identity engine");
    }

    // Associativity: M(u⊗M(v⊗z)) = M(M(u⊗v)⊗z).
    {
      SplitMix64 zrng = seeded_stream(seed, 9000 + trial);
      const int pz = static_cast<int>(zrng.next_in(0, std::max(0, max_length - p)));
      const TensorWord zword = random_word(A, pz, zrng);
      const TensorElement z = TensorElement::from_word(A, zword, max_length);
      const TensorElement left = product_M(*r, u, product_M(*r, v, z));
      const TensorElement right = product_M(*r, product_M(*r, u, v), z);
      const TensorElement defect = left - right;
      record("oracle.assoc", params.str() + " z=" + describe_word(zword), defect.is_zero(),
             "product of the coalgebra is not associative");

      std::vector<Cochain> inputs(uw.letters);
      inputs.insert(inputs.end(), vw.letters.begin(), vw.letters.end());
      inputs.insert(inputs.end(), zword.letters.begin(), zword.letters.end());
      const Cochain engine =
          assoc_residual(uw.length(), vw.length(), zword.length(), inputs, *r);
      const Cochain projected = projection_component(defect, A, engine.degree());
      record("oracle.assoc_matches_engine", params.str(), projected == engine,
             "projected associativity defect differs from the identity engine");
    }

    // Projection agreement: pr∘D and pr∘M restrict to the generators.
    if (p >= 1) {
      std::vector<int> degs;
      int fd = Realization::mk_degree(p);
      for (const auto& letter : word.letters) {
        degs.push_back(letter.degree());
        fd += letter.degree();
      }
      bool pass;
      if (fd < 0) {
        // No full collapse exists, so D(w) must have no length-1 component.
        pass = projection_is_zero(dw);
      } else {
        Cochain expect = Cochain::zero(A, fd);
        if (!r->mk_vanishes(p)) {
          expect = r->mk(p, word.letters);
          if ((barmove_exponent_closed(degs) % 2) != 0) expect = -expect;
        }
        pass = projection_component(dw, A, fd) == expect;
      }
      record("oracle.projection_D", params.str(), pass,
             "pr∘D does not restrict to the square-bracket M_p");
    }

    // pr(D^2) agrees with the A-infinity engine.
    if (p >= 1) {
      const Cochain engine = a_infty_residual(p, word.letters, *r);
      const Cochain projected = projection_component(ddw, A, engine.degree());
      record("oracle.d_squared_matches_engine", params.str(), projected == engine,
             "projected D^2 differs from the A-infinity engine");
    }
  }
  return report;
}

}  // namespace gerst
