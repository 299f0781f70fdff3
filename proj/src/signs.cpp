#include "gerst/signs.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>

namespace gerst {

int koszul_exponent(std::span<const int> degrees, std::span<const int> arrangement) {
  if (degrees.size() != arrangement.size())
    throw std::invalid_argument("koszul_sign: degree list and permutation sizes differ");
  std::vector<char> seen(degrees.size(), 0);
  for (int v : arrangement) {
    if (v < 0 || static_cast<std::size_t>(v) >= degrees.size() || seen[v])
      throw std::invalid_argument("koszul_sign: not a permutation");
    seen[v] = 1;
  }
  long exp = 0;
  // Pairs placed out of original order contribute deg_i * deg_j.
  for (std::size_t r = 0; r < arrangement.size(); ++r)
    for (std::size_t s = r + 1; s < arrangement.size(); ++s)
      if (arrangement[r] > arrangement[s])
        exp += static_cast<long>(degrees[arrangement[r]]) * degrees[arrangement[s]];
  return static_cast<int>(((exp % 2) + 2) % 2);
}

int koszul_sign(std::span<const int> degrees, std::span<const int> arrangement) {
  return koszul_exponent(degrees, arrangement) ? -1 : 1;
}

long barmove_exponent_closed(std::span<const int> degrees) {
  const long p = static_cast<long>(degrees.size());
  long exp = 0;
  for (long i = 0; i < p; ++i) exp += (p - 1 - i) * degrees[i];
  return exp;
}

long barmove_exponent_bars(std::span<const int> degrees) {
  const std::size_t p = degrees.size();
  if (p <= 1) return 0;
  // Symbols: a_1, |, a_2, |, ..., |, a_p  (2p-1 symbols, bars at odd indices).
  std::vector<int> degs(2 * p - 1);
  for (std::size_t i = 0; i < p; ++i) degs[2 * i] = degrees[i];
  for (std::size_t i = 0; i + 1 < p; ++i) degs[2 * i + 1] = 1;
  std::vector<int> arrangement;
  arrangement.reserve(2 * p - 1);
  for (std::size_t i = 0; i + 1 < p; ++i) arrangement.push_back(static_cast<int>(2 * i + 1));
  for (std::size_t i = 0; i < p; ++i) arrangement.push_back(static_cast<int>(2 * i));
  return koszul_exponent(degs, arrangement);
}

namespace {
std::atomic<std::uint64_t> g_checks{0};
std::atomic<std::uint64_t> g_mismatches{0};
}  // namespace

void SignAudit::check(long closed_exponent, long bars_exponent, const char* site) {
  g_checks.fetch_add(1, std::memory_order_relaxed);
  const long a = ((closed_exponent % 2) + 2) % 2;
  const long b = ((bars_exponent % 2) + 2) % 2;
  if (a != b) {
    g_mismatches.fetch_add(1, std::memory_order_relaxed);
    std::ostringstream msg;
    msg << "sign paths disagree at " << site << ": closed form gives (-1)^" << a
        << ", bar moving gives (-1)^" << b;
    throw std::logic_error(msg.str());
  }
}

std::uint64_t SignAudit::checks_performed() { return g_checks.load(); }
std::uint64_t SignAudit::mismatches() { return g_mismatches.load(); }
void SignAudit::reset() {
  g_checks = 0;
  g_mismatches = 0;
}

std::vector<int> interleave_arrangement(std::span<const std::size_t> bsizes,
                                        std::span<const std::size_t> csizes) {
  if (bsizes.size() != csizes.size())
    throw std::invalid_argument("interleave: block count mismatch");
  std::size_t btotal = 0, ctotal = 0;
  for (auto s : bsizes) btotal += s;
  for (auto s : csizes) ctotal += s;
  std::vector<int> arrangement;
  arrangement.reserve(btotal + ctotal);
  std::size_t bpos = 0, cpos = 0;
  for (std::size_t i = 0; i < bsizes.size(); ++i) {
    for (std::size_t t = 0; t < bsizes[i]; ++t) arrangement.push_back(static_cast<int>(bpos++));
    for (std::size_t t = 0; t < csizes[i]; ++t)
      arrangement.push_back(static_cast<int>(btotal + cpos++));
  }
  return arrangement;
}

}  // namespace gerst
