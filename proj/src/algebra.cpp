#include "gerst/algebra.hpp"

#include <json.hpp>

#include <sstream>

namespace gerst {

Algebra::Algebra(std::size_t dim, std::vector<std::string> labels, std::vector<Rat> table,
                 std::vector<Rat> unit, std::string name)
    : dim_(dim),
      name_(std::move(name)),
      labels_(std::move(labels)),
      table_(std::move(table)),
      unit_(std::move(unit)) {
  if (dim_ == 0) throw std::invalid_argument("algebra dimension must be at least 1");
  if (labels_.size() != dim_) throw std::invalid_argument("label count does not match dim");
  if (table_.size() != dim_ * dim_ * dim_)
    throw std::invalid_argument("structure constant table has wrong size");
  if (unit_.size() != dim_) throw std::invalid_argument("unit vector has wrong length");
}

std::optional<AlgebraDefect> Algebra::validate() const {
  const std::size_t m = dim_;
  // (e_i e_j) e_k = e_i (e_j e_k), compared coefficientwise.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t q = 0; q < m; ++q) {
          Rat lhs(0), rhs(0);
          for (std::size_t p = 0; p < m; ++p) {
            lhs += c(i, j, p) * c(p, k, q);
            rhs += c(j, k, p) * c(i, p, q);
          }
          if (lhs != rhs) {
            std::ostringstream msg;
            msg << "associativity fails at (e_" << i + 1 << " e_" << j + 1 << ") e_" << k + 1;
            return AlgebraDefect{"associativity",
                                 {int(i) + 1, int(j) + 1, int(k) + 1},
                                 msg.str()};
          }
        }
      }
  // 1·e_i = e_i·1 = e_i.
  bool unit_nonzero = false;
  for (const auto& u : unit_) unit_nonzero |= !is_zero(u);
  if (!unit_nonzero)
    return AlgebraDefect{"unit axiom", {0, 0, 0}, "unit axiom fails: unit vector is zero"};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      Rat left(0), right(0);
      for (std::size_t p = 0; p < m; ++p) {
        left += unit_[p] * c(p, i, k);
        right += unit_[p] * c(i, p, k);
      }
      const Rat expect = (i == k) ? Rat(1) : Rat(0);
      if (left != expect || right != expect)
        return AlgebraDefect{"unit axiom",
                             {int(i) + 1, 0, 0},
                             "unit axiom fails on basis element e_" + std::to_string(i + 1)};
    }
  }
  return std::nullopt;
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, std::vector<Rat> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != algebra_->dim())
    throw std::invalid_argument("element coefficient count does not match algebra dimension");
}

bool AlgebraElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!gerst::is_zero(c)) return false;
  return true;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
}

static void require_same_algebra(const AlgebraElement& u, const AlgebraElement& v) {
  if (u.algebra() != v.algebra())
    throw std::invalid_argument("elements belong to different algebras");
}

AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v) {
  require_same_algebra(u, v);
  std::vector<Rat> out(u.coeffs());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += v.coeffs()[i];
  return AlgebraElement(u.algebra(), std::move(out));
}

AlgebraElement operator-(const AlgebraElement& u, const AlgebraElement& v) {
  require_same_algebra(u, v);
  std::vector<Rat> out(u.coeffs());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= v.coeffs()[i];
  return AlgebraElement(u.algebra(), std::move(out));
}

void multiply_into(const Algebra& a, const Rat* u, const Rat* v, Rat* out) {
  const std::size_t m = a.dim();
  for (std::size_t k = 0; k < m; ++k) out[k] = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (is_zero(v[j])) continue;
      const Rat uv = u[i] * v[j];
      const Rat* row = a.basis_product(i, j);
      for (std::size_t k = 0; k < m; ++k) {
        if (!is_zero(row[k])) out[k] += uv * row[k];
      }
    }
  }
}

AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) {
  require_same_algebra(u, v);
  std::vector<Rat> out(u.algebra()->dim(), Rat(0));
  multiply_into(*u.algebra(), u.coeffs().data(), v.coeffs().data(), out.data());
  return AlgebraElement(u.algebra(), std::move(out));
}

namespace {

AlgebraPtr make_algebra(std::size_t dim, std::vector<std::string> labels,
                        const std::vector<std::vector<std::vector<int>>>& table,
                        std::vector<int> unit, std::string name) {
  std::vector<Rat> t(dim * dim * dim, Rat(0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) t[(i * dim + j) * dim + k] = table[i][j][k];
  std::vector<Rat> u(dim);
  for (std::size_t i = 0; i < dim; ++i) u[i] = unit[i];
  return std::make_shared<Algebra>(dim, std::move(labels), std::move(t), std::move(u),
                                   std::move(name));
}

}  // namespace

AlgebraPtr builtin(const std::string& name) {
  if (name == "ground_field") {
    return make_algebra(1, {"1"}, {{{1}}}, {1}, name);
  }
  if (name == "dual_numbers") {
    // Q[eps]/(eps^2)
    return make_algebra(2, {"1", "eps"},
                        {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, {1, 0}, name);
  }
  if (name == "mat2") {
    // 2x2 matrix units e11, e12, e21, e22; e_ab e_cd = delta_bc e_ad.
    const std::size_t m = 4;
    std::vector<std::vector<std::vector<int>>> t(
        m, std::vector<std::vector<int>>(m, std::vector<int>(m, 0)));
    auto idx = [](int a, int b) { return (a - 1) * 2 + (b - 1); };
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        for (int c = 1; c <= 2; ++c)
          for (int d = 1; d <= 2; ++d)
            if (b == c) t[idx(a, b)][idx(c, d)][idx(a, d)] = 1;
    return make_algebra(m, {"e11", "e12", "e21", "e22"}, t, {1, 0, 0, 1}, name);
  }
  if (name == "group_z2") {
    // Q[Z/2], g^2 = 1
    return make_algebra(2, {"1", "g"},
                        {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}, {1, 0}, name);
  }
  if (name == "trunc_poly3") {
    // Q[x]/(x^3)
    return make_algebra(3, {"1", "x", "x^2"},
                        {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                         {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}},
                         {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}},
                        {1, 0, 0}, name);
  }
  throw std::invalid_argument("unknown builtin algebra: '" + name + "'");
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"ground_field", "dual_numbers", "mat2",
                                                 "group_z2", "trunc_poly3"};
  return names;
}

AlgebraPtr algebra_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw AlgebraParseError("algebra description must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    throw AlgebraParseError("missing or invalid 'dim'");
  const std::size_t m = j["dim"].get<std::size_t>();
  if (m == 0) throw AlgebraParseError("'dim' must be at least 1");

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != m)
      throw AlgebraParseError("'labels' must be an array of dim strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw AlgebraParseError("'labels' must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < m; ++i) labels.push_back("e" + std::to_string(i + 1));
  }

  auto parse_entry = [](const nlohmann::json& v, const char* where) -> Rat {
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
      if (auto r = try_parse_rational(v.get<std::string>())) return *r;
      throw AlgebraParseError(std::string("invalid rational in ") + where + ": '" +
                              v.get<std::string>() + "'");
    }
    throw AlgebraParseError(std::string("entries of ") + where +
                            " must be integers or \"p/q\" strings");
  };

  if (!j.contains("unit") || !j["unit"].is_array() || j["unit"].size() != m)
    throw AlgebraParseError("missing or invalid 'unit' (array of dim rationals)");
  std::vector<Rat> unit;
  for (const auto& v : j["unit"]) unit.push_back(parse_entry(v, "'unit'"));

  if (!j.contains("table") || !j["table"].is_array() || j["table"].size() != m)
    throw AlgebraParseError("missing or invalid 'table' (dim x dim x dim array)");
  std::vector<Rat> table(m * m * m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    const auto& plane = j["table"][i];
    if (!plane.is_array() || plane.size() != m)
      throw AlgebraParseError("'table' must be a dim x dim x dim array");
    for (std::size_t jj = 0; jj < m; ++jj) {
      const auto& row = plane[jj];
      if (!row.is_array() || row.size() != m)
        throw AlgebraParseError("'table' must be a dim x dim x dim array");
      for (std::size_t k = 0; k < m; ++k)
        table[(i * m + jj) * m + k] = parse_entry(row[k], "'table'");
    }
  }

  auto a = std::make_shared<Algebra>(m, std::move(labels), std::move(table), std::move(unit),
                                     j.value("name", std::string()));
  if (auto defect = a->validate())
    throw AlgebraValidationError(*defect, "algebra fails validation: " + defect->message);
  return a;
}

}  // namespace gerst
