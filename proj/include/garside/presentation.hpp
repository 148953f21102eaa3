#pragma once

// Positive presentations of the interval monoids and the comparison with the
// classical monoid (the case k = 1).

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "garside/core.hpp"

namespace garside {

struct Relation {
  enum class Kind { Braid, Commute, DualCycle };
  Kind kind;
  Word lhs;
  Word rhs;
};

struct Presentation {
  GroupParams params;
  int k = 1;
  std::vector<Generator> generators;
  std::vector<Relation> relations;

  std::string to_string() const;
};

/// s-braid and s-commutation relations, s_3 t_i s_3 = t_i s_3 t_i, s_j t_i =
/// t_i s_j (j >= 4), and t_i t_{i-k} = t_0 t_{-k} for i = 1..e-1.
Presentation emit_presentation(const GroupParams& params, int k);

/// Graphviz drawing: t's on a circle joined by dashed edges {i, i-k}, s's in a
/// row, solid edges for braid relations.
std::string presentation_dot(const Presentation& presentation);

/// Connected components of the graph on Z/e with edges {i, i-k}.
int t_cycle_components(int e, int k);

using GeneratorMap = std::map<Generator, Generator>;

/// True iff `lhs` can be rewritten into `rhs` with the relations in either
/// direction, exploring at most `cap` words.
bool positively_equivalent(const Presentation& presentation, const Word& lhs, const Word& rhs,
                           std::size_t cap = 100000);

/// Every relation of `source` is sent by `map` to a pair of words equivalent in
/// `target`.
bool preserves_relations(const GeneratorMap& map, const Presentation& source, const Presentation& target);

struct CpComparison {
  bool isomorphic = false;
  GeneratorMap witness;          // t_i -> t_{(i+1)k}, s_j -> s_j
  bool surjective = false;       // witness is a bijection on generators
  bool relations_preserved = false;
  bool inverse_preserves = false;  // only meaningful when surjective
};

/// Compares the k-interval presentation with the classical one (k = 1) on n
/// strands (default 3; the t-relations do not depend on n).
CpComparison is_isomorphic_to_CP(int e, int k, int n = 3);

struct MatsumotoResult {
  bool ok = false;
  std::size_t reduced_words = 0;
  std::size_t class_size = 0;
};

/// All reduced words of w lie in one class under rewriting with the relations.
/// Throws CapExceeded past `cap` words.
MatsumotoResult matsumoto_check(const Presentation& presentation, const GroupElement& w,
                                std::size_t cap = 100000);

}  // namespace garside
