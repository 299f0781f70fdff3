#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gerst {

// Ordered partition of {1,...,n} into ordered nonempty blocks: the cell
// {3}{2,1} groups point 3 on the first vertical line and points 2 above 1
// on the second. Literal syntax: blocks separated by '|', labels by ',',
// so {3}{2,1} prints as "3|2,1".
class FoxNeuwirthCell {
 public:
  explicit FoxNeuwirthCell(std::vector<std::vector<int>> blocks);

  // The standard cell with blocks (1..k_1)(k_1+1..)... for the given shape.
  static FoxNeuwirthCell standard(const std::vector<int>& shape);

  int arity() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::vector<int> shape() const;

  // Stratum class: 1 for one block, 2 for two, 3 for three or more.
  int stratum_class() const;

  // Cell dimension n + b - 3 (n points on b vertical lines, modulo
  // translations and dilations). Defined for n >= 2.
  int dimension() const { return n_ + block_count() - 3; }
  // Cohomological degree after the grading flip.
  int degree() const { return -dimension(); }
  // Degree as an operator on the shifted complex: degree() + arity() - 1,
  // which collapses to 2 - block_count().
  int shifted_degree() const { return 2 - block_count(); }

  // Labels read block by block; the standard cell reads 1,2,...,n.
  std::vector<int> word() const;

  // Replace every label a by perm[a-1] (perm is a bijection on 1..n).
  FoxNeuwirthCell relabel(const std::vector<int>& perm) const;
  // The permutation carrying the standard cell of this shape to this cell.
  std::vector<int> relabeling_from_standard() const;

  std::string str() const;
  static FoxNeuwirthCell parse(const std::string& text);

  auto operator<=>(const FoxNeuwirthCell&) const = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

// All Fox-Neuwirth cells of the given arity with the given number of blocks.
std::vector<FoxNeuwirthCell> enumerate_cells_with_blocks(int n, int blocks);

// The spec'd strata families: i = 1 gives the n! one-block cells, i = 2 the
// n!(n-1) two-block cells. Other i are rejected.
std::vector<FoxNeuwirthCell> enumerate_cells(int n, int stratum_class);

}  // namespace gerst
