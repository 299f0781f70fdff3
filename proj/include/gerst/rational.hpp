#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace gerst {

// Exact rational scalar. Everything in this project computes over Q;
// floating point does not appear anywhere. GMP keeps values in lowest
// terms with a positive denominator, which is exactly the normal form
// we rely on when comparing residuals against literal zero.
using Rat = mpq_class;
using BigInt = mpz_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// Parses "p" or "p/q" with an optional leading sign. Whitespace is not
// accepted; the denominator must be nonzero.
inline std::optional<Rat> try_parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto digits_ok = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!digits_ok(s)) return std::nullopt;
    return Rat(BigInt(s));
  }
  const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den)) return std::nullopt;
  BigInt d(den);
  if (d == 0) return std::nullopt;
  Rat r(BigInt(num), d);
  r.canonicalize();
  return r;
}

inline Rat parse_rational(const std::string& s) {
  auto r = try_parse_rational(s);
  if (!r) throw std::invalid_argument("not a rational: '" + s + "'");
  return *r;
}

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string format_rational(const Rat& r) { return r.get_str(); }

}  // namespace gerst
