#include "garside/words.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace garside {

namespace {

// s_2 stands for t_0 throughout the elimination.
Generator s_or_t0(int j) { return j == 2 ? Generator::t(0) : Generator::s(j); }

int find_column(const GroupElement& w, int row) { return w.column(row); }

}  // namespace

Word reduced_expression(const GroupElement& w) {
  const GroupParams p = w.params();
  GroupElement scratch = w;
  std::vector<Word> pieces;  // row n first
  for (int i = p.n; i >= 2; --i) {
    int c = find_column(scratch, i);
    const int k = scratch.exponent(i);
    Word piece;
    if (k != 0) {
      for (int j = c; j >= 2; --j) {
        scratch = scratch * generator_matrix(s_or_t0(j), p);
        piece.push_back(s_or_t0(j));
      }
      scratch = scratch * generator_matrix(Generator::t(k), p);
      piece.push_back(Generator::t(k));
      c = 2;
    }
    for (int j = c + 1; j <= i; ++j) {
      scratch = scratch * generator_matrix(s_or_t0(j), p);
      piece.push_back(s_or_t0(j));
    }
    std::reverse(piece.begin(), piece.end());
    pieces.push_back(std::move(piece));
  }
  if (!scratch.is_identity()) throw TheoremViolation("reduced_expression: elimination did not reach the identity");
  Word out;
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return out;
}

Word BlockDecomposition::concatenated() const {
  Word out;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) out.insert(out.end(), it->word.begin(), it->word.end());
  return out;
}

namespace {

Word row_word(int i, int c, int k) {
  Word out;
  if (k != 0) {
    for (int j = i; j >= 3; --j) out.push_back(Generator::s(j));
    out.push_back(Generator::t(k));
    if (c >= 2) out.push_back(Generator::t(0));
    for (int j = 3; j <= c; ++j) out.push_back(Generator::s(j));
  } else {
    for (int j = i; j >= c + 1; --j) out.push_back(s_or_t0(j));
  }
  return out;
}

int row_length(int i, int c, int k) {
  if (k == 0) return i - c;
  if (c >= 3) return i + c - 2;
  return c == 2 ? i : i - 1;
}

// Walks the block recursion, calling visit(i, c, k) for i = n..2.
template <class Visit>
void walk_blocks(const GroupElement& w, Visit&& visit) {
  const int e = w.e();
  std::vector<int> cols = w.perm_vector();
  std::vector<int> exps = w.exps_vector();
  for (int i = w.n(); i >= 2; --i) {
    const int c = cols[i - 1];
    const int k = exps[i - 1];
    visit(i, c, k, cols, exps);
    cols.pop_back();
    exps.pop_back();
    for (auto& col : cols)
      if (col > c) --col;
    for (std::size_t r = 0; r < cols.size(); ++r)
      if (cols[r] == 1) exps[r] = (exps[r] + k) % e;
  }
}

}  // namespace

BlockDecomposition reduced_expression_blockwise(const GroupElement& w) {
  BlockDecomposition out;
  walk_blocks(w, [&](int i, int c, int k, const std::vector<int>& cols, const std::vector<int>& exps) {
    out.blocks.push_back(Block{i, cols, exps, c, k, row_word(i, c, k)});
  });
  return out;
}

int length(const GroupElement& w) {
  int total = 0;
  walk_blocks(w, [&](int i, int c, int k, const auto&, const auto&) { total += row_length(i, c, k); });
  return total;
}

bool length_decreases(const Generator& x, const GroupElement& w) {
  x.validate(w.params());
  if (x.is_s()) {
    const int i = x.index;
    if (w.column(i - 1) < w.column(i)) return w.exponent(i) != 0;
    return w.exponent(i - 1) == 0;
  }
  if (w.column(1) < w.column(2)) return w.exponent(2) != 0;
  return w.exponent(1) == (w.e() - x.index) % w.e();
}

bool right_length_decreases(const Generator& x, const GroupElement& w) {
  return length_decreases(x, inverse(w));
}

std::vector<GroupElement> maximal_length_elements(const GroupParams& params, std::size_t cap) {
  std::vector<GroupElement> out;
  int best = -1;
  for (const auto& w : enumerate_group(params, cap)) {
    const int l = length(w);
    if (l > best) {
      best = l;
      out.clear();
    }
    if (l == best) out.push_back(w);
  }
  return out;
}

std::vector<Word> all_reduced_expressions(const GroupElement& w, std::size_t cap) {
  const GroupParams p = w.params();
  const auto gens = generators(p);
  std::vector<Word> out;
  Word prefix;
  std::function<void(const GroupElement&)> descend = [&](const GroupElement& cur) {
    if (cur.is_identity()) {
      if (out.size() >= cap) throw CapExceeded("all_reduced_expressions: too many words", out.size() + 1, cap);
      out.push_back(prefix);
      return;
    }
    for (const auto& x : gens) {
      if (!length_decreases(x, cur)) continue;
      prefix.push_back(x);
      descend(generator_matrix(x, p) * cur);
      prefix.pop_back();
    }
  };
  descend(w);
  return out;
}

std::vector<int> cayley_distances(const GroupParams& params, std::size_t cap) {
  params.validate();
  const std::size_t order = group_order(params);
  if (order > cap) throw CapExceeded("cayley_distances: group too large", order, cap);
  std::vector<GroupElement> gens;
  for (const auto& g : generators(params)) gens.push_back(generator_matrix(g, params));
  std::vector<int> dist(order, -1);
  std::deque<GroupElement> queue;
  const auto id = GroupElement::identity(params);
  dist[group_rank(id)] = 0;
  queue.push_back(id);
  while (!queue.empty()) {
    const GroupElement cur = queue.front();
    queue.pop_front();
    const int d = dist[group_rank(cur)];
    for (const auto& g : gens) {
      GroupElement next = cur * g;
      auto& slot = dist[group_rank(next)];
      if (slot < 0) {
        slot = d + 1;
        queue.push_back(std::move(next));
      }
    }
  }
  return dist;
}

}  // namespace garside
