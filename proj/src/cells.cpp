#include "gerst/cells.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gerst {

FoxNeuwirthCell::FoxNeuwirthCell(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  int n = 0;
  for (const auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("cell blocks must be nonempty");
    n += static_cast<int>(b.size());
  }
  if (n < 2) throw std::invalid_argument("cells need at least two labels");
  std::vector<char> seen(n + 1, 0);
  for (const auto& b : blocks_)
    for (int a : b) {
      if (a < 1 || a > n || seen[a])
        throw std::invalid_argument("cell labels must form exactly {1,...,n}");
      seen[a] = 1;
    }
  n_ = n;
}

FoxNeuwirthCell FoxNeuwirthCell::standard(const std::vector<int>& shape) {
  std::vector<std::vector<int>> blocks;
  int next = 1;
  for (int size : shape) {
    std::vector<int> b(size);
    std::iota(b.begin(), b.end(), next);
    next += size;
    blocks.push_back(std::move(b));
  }
  return FoxNeuwirthCell(std::move(blocks));
}

std::vector<int> FoxNeuwirthCell::shape() const {
  std::vector<int> s;
  for (const auto& b : blocks_) s.push_back(static_cast<int>(b.size()));
  return s;
}

int FoxNeuwirthCell::stratum_class() const {
  const int b = block_count();
  return b >= 3 ? 3 : b;
}

std::vector<int> FoxNeuwirthCell::word() const {
  std::vector<int> w;
  w.reserve(n_);
  for (const auto& b : blocks_) w.insert(w.end(), b.begin(), b.end());
  return w;
}

FoxNeuwirthCell FoxNeuwirthCell::relabel(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("relabeling permutation has wrong size");
  auto blocks = blocks_;
  for (auto& b : blocks)
    for (auto& a : b) a = perm[a - 1];
  return FoxNeuwirthCell(std::move(blocks));
}

std::vector<int> FoxNeuwirthCell::relabeling_from_standard() const { return word(); }

std::string FoxNeuwirthCell::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << '|';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) os << ',';
      os << blocks_[i][j];
    }
  }
  return os.str();
}

FoxNeuwirthCell FoxNeuwirthCell::parse(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> current;
  std::string token;
  auto flush_token = [&]() {
    if (token.empty()) throw std::invalid_argument("bad cell literal: '" + text + "'");
    current.push_back(std::stoi(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      token.push_back(ch);
    } else if (ch == ',') {
      flush_token();
    } else if (ch == '|') {
      flush_token();
      blocks.push_back(std::move(current));
      current.clear();
    } else if (ch != ' ') {
      throw std::invalid_argument("bad cell literal: '" + text + "'");
    }
  }
  flush_token();
  blocks.push_back(std::move(current));
  return FoxNeuwirthCell(std::move(blocks));
}

namespace {

// Ordered set partitions of word positions: distribute the sorted labels of
// each permutation into `blocks` nonempty consecutive groups.
void split_word(const std::vector<int>& word, int blocks,
                std::vector<FoxNeuwirthCell>& out) {
  const int n = static_cast<int>(word.size());
  // Choose cut points 0 < c_1 < ... < c_{blocks-1} < n.
  std::vector<int> cuts(blocks - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  if (blocks == 1) {
    out.emplace_back(std::vector<std::vector<int>>{word});
    return;
  }
  while (true) {
    std::vector<std::vector<int>> bs;
    int prev = 0;
    for (int c : cuts) {
      bs.emplace_back(word.begin() + prev, word.begin() + c);
      prev = c;
    }
    bs.emplace_back(word.begin() + prev, word.end());
    out.emplace_back(std::move(bs));

    int i = blocks - 2;
    while (i >= 0 && cuts[i] == n - (blocks - 1 - i)) --i;
    if (i < 0) break;
    ++cuts[i];
    for (int j = i + 1; j < blocks - 1; ++j) cuts[j] = cuts[j - 1] + 1;
  }
}

}  // namespace

std::vector<FoxNeuwirthCell> enumerate_cells_with_blocks(int n, int blocks) {
  if (n < 2) throw std::invalid_argument("cells need arity at least 2");
  if (blocks < 1 || blocks > n) throw std::invalid_argument("impossible block count");
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  std::vector<FoxNeuwirthCell> out;
  do {
    split_word(word, blocks, out);
  } while (std::next_permutation(word.begin(), word.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FoxNeuwirthCell> enumerate_cells(int n, int stratum_class) {
  if (stratum_class != 1 && stratum_class != 2)
    throw std::invalid_argument(
        "enumerate_cells supports stratum classes 1 and 2; class 3 is an unbounded family");
  return enumerate_cells_with_blocks(n, stratum_class);
}

}  // namespace gerst
