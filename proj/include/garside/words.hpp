#pragma once

// Reduced words over the generating set t_0..t_{e-1}, s_3..s_n, the length
// function, and the left/right descent predicates.

#include <cstddef>
#include <vector>

#include "garside/core.hpp"

namespace garside {

/// Reduced expression by direct column elimination: for each row i = n..2 the
/// nonzero entry is walked to the diagonal by right multiplication on a scratch
/// copy. Evaluating the result gives back w.
Word reduced_expression(const GroupElement& w);

/// One step of the block recursion. `columns`/`exponents` describe the i x i
/// block w_i (1-based columns); `column` and `exponent` locate row i's entry.
struct Block {
  int row = 0;
  std::vector<int> columns;
  std::vector<int> exponents;
  int column = 0;
  int exponent = 0;
  Word word;
};

struct BlockDecomposition {
  std::vector<Block> blocks;  // row n first, row 2 last

  /// RE_2 RE_3 ... RE_n.
  Word concatenated() const;
};

/// Same word as reduced_expression, built from the closed-form per-row table.
BlockDecomposition reduced_expression_blockwise(const GroupElement& w);

/// Length over the full generating set. Does not allocate words.
int length(const GroupElement& w);

/// True iff length(x*w) == length(w) - 1, decided from (sigma, eps) alone.
bool length_decreases(const Generator& x, const GroupElement& w);

/// True iff length(w*x) == length(w) - 1.
bool right_length_decreases(const Generator& x, const GroupElement& w);

/// Elements attaining the maximum length, in enumeration order.
std::vector<GroupElement> maximal_length_elements(const GroupParams& params,
                                                  std::size_t cap = default_group_cap());

/// Every reduced word for w. Throws CapExceeded past `cap` words.
std::vector<Word> all_reduced_expressions(const GroupElement& w, std::size_t cap = 100000);

/// Breadth-first distances from the identity in the Cayley graph, indexed by
/// group_rank. Independent of every other function in this header.
std::vector<int> cayley_distances(const GroupParams& params,
                                  std::size_t cap = default_group_cap());

}  // namespace garside
