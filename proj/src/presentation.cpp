#include "garside/presentation.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "garside/words.hpp"

namespace garside {

namespace {

int mod(int a, int e) { return ((a % e) + e) % e; }

// Breadth-first closure of `start` under the relations; stops early when
// `target` is reached.
std::set<Word> rewrite_class(const Presentation& pres, const Word& start, std::size_t cap,
                             const Word* target = nullptr) {
  std::set<Word> seen{start};
  std::deque<Word> queue{start};
  auto try_side = [&](const Word& cur, const Word& from, const Word& to) -> bool {
    if (from.size() > cur.size()) return false;
    for (std::size_t pos = 0; pos + from.size() <= cur.size(); ++pos) {
      if (!std::equal(from.begin(), from.end(), cur.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
      Word next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(pos));
      next.insert(next.end(), to.begin(), to.end());
      next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(pos + from.size()), cur.end());
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw CapExceeded("rewriting class too large", seen.size(), cap);
        if (target && next == *target) return true;
        queue.push_back(std::move(next));
      }
    }
    return false;
  };
  if (target && start == *target) return seen;
  while (!queue.empty()) {
    const Word cur = queue.front();
    queue.pop_front();
    for (const auto& rel : pres.relations)
      if (try_side(cur, rel.lhs, rel.rhs) || try_side(cur, rel.rhs, rel.lhs)) return seen;
  }
  return seen;
}

}  // namespace

Presentation emit_presentation(const GroupParams& params, int k) {
  validate_interval_params(params, k);
  const int e = params.e;
  const int n = params.n;
  Presentation p;
  p.params = params;
  p.k = k;
  p.generators = generators(params);
  auto S = [](int j) { return Generator::s(j); };
  auto T = [&](int i) { return Generator::t(mod(i, e)); };
  for (int a = 3; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (b == a + 1)
        p.relations.push_back({Relation::Kind::Braid, {S(a), S(b), S(a)}, {S(b), S(a), S(b)}});
      else
        p.relations.push_back({Relation::Kind::Commute, {S(a), S(b)}, {S(b), S(a)}});
    }
  if (n >= 3)
    for (int i = 0; i < e; ++i)
      p.relations.push_back({Relation::Kind::Braid, {S(3), T(i), S(3)}, {T(i), S(3), T(i)}});
  for (int j = 4; j <= n; ++j)
    for (int i = 0; i < e; ++i) p.relations.push_back({Relation::Kind::Commute, {S(j), T(i)}, {T(i), S(j)}});
  for (int i = 1; i < e; ++i)
    p.relations.push_back({Relation::Kind::DualCycle, {T(i), T(i - k)}, {T(0), T(-k)}});
  return p;
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : "") << generators[i].to_string();
  os << " |";
  for (std::size_t i = 0; i < relations.size(); ++i)
    os << (i ? "," : "") << ' ' << garside::to_string(relations[i].lhs) << " = " << garside::to_string(relations[i].rhs);
  os << " >";
  return os.str();
}

std::string presentation_dot(const Presentation& pres) {
  const int e = pres.params.e;
  const int n = pres.params.n;
  std::ostringstream os;
  os << "graph presentation {\n  layout=neato;\n  node [shape=circle];\n";
  const double radius = 1.0 + 0.25 * e;
  for (int i = 0; i < e; ++i) {
    const double angle = 2.0 * M_PI * i / e;
    os << "  t" << i << " [pos=\"" << radius * std::cos(angle) << ',' << radius * std::sin(angle) << "!\"];\n";
  }
  for (int j = 3; j <= n; ++j) os << "  s" << j << " [pos=\"" << radius + 1.5 * (j - 2) << ",0!\"];\n";
  for (int i = 0; i < e; ++i) {
    const int other = mod(i - pres.k, e);
    if (e == 2 && i > other) continue;
    os << "  t" << i << " -- t" << other << " [style=dashed];\n";
  }
  if (n >= 3)
    for (int i = 0; i < e; ++i) os << "  t" << i << " -- s3;\n";
  for (int j = 3; j < n; ++j) os << "  s" << j << " -- s" << j + 1 << ";\n";
  os << "}\n";
  return os.str();
}

int t_cycle_components(int e, int k) {
  if (e < 1 || k < 1 || k > e - 1) throw std::invalid_argument("t_cycle_components: need 1 <= k <= e-1");
  std::vector<int> parent(e);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = e;
  for (int i = 0; i < e; ++i) {
    const int a = find(i);
    const int b = find(mod(i - k, e));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

bool positively_equivalent(const Presentation& pres, const Word& lhs, const Word& rhs, std::size_t cap) {
  const auto cls = rewrite_class(pres, lhs, cap, &rhs);
  return cls.count(rhs) > 0;
}

bool preserves_relations(const GeneratorMap& map, const Presentation& source, const Presentation& target) {
  auto apply = [&](const Word& w) {
    Word out;
    for (const auto& g : w) out.push_back(map.at(g));
    return out;
  };
  for (const auto& rel : source.relations)
    if (!positively_equivalent(target, apply(rel.lhs), apply(rel.rhs))) return false;
  return true;
}

CpComparison is_isomorphic_to_CP(int e, int k, int n) {
  const GroupParams params{e, n};
  validate_interval_params(params, k);
  const Presentation classical = emit_presentation(params, 1);
  const Presentation interval = emit_presentation(params, k);
  CpComparison out;
  std::set<Generator> image;
  for (const auto& g : classical.generators) {
    const Generator to = g.is_t() ? Generator::t(mod((g.index + 1) * k, e)) : g;
    out.witness[g] = to;
    image.insert(to);
  }
  out.surjective = image.size() == classical.generators.size();
  out.relations_preserved = preserves_relations(out.witness, classical, interval);
  if (out.surjective) {
    GeneratorMap back;
    for (const auto& [from, to] : out.witness) back[to] = from;
    out.inverse_preserves = preserves_relations(back, interval, classical);
  }
  out.isomorphic = out.surjective && out.relations_preserved && out.inverse_preserves;
  return out;
}

MatsumotoResult matsumoto_check(const Presentation& pres, const GroupElement& w, std::size_t cap) {
  const auto words = all_reduced_expressions(w, cap);
  MatsumotoResult out;
  out.reduced_words = words.size();
  const auto cls = rewrite_class(pres, words.front(), cap);
  out.class_size = cls.size();
  out.ok = std::all_of(words.begin(), words.end(), [&](const Word& x) { return cls.count(x) > 0; }) &&
           cls.size() == words.size();
  return out;
}

}  // namespace garside
