#include "garside/homology.hpp"

#include <algorithm>
#include <sstream>

#include "garside/words.hpp"

namespace garside {

int atom_order(const Generator& g, const GroupParams& params) {
  g.validate(params);
  return g.is_s() ? params.n - g.index : (params.n - 2) + g.index;
}

std::string Cell::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < atoms.size(); ++i) out += (i ? "," : "") + atoms[i].to_string();
  return out + "]";
}

namespace {

int mod(int a, int e) { return ((a % e) + e) % e; }

std::vector<Generator> ordered_atoms(const GroupParams& p) {
  auto atoms = generators(p);
  std::sort(atoms.begin(), atoms.end(),
            [&](const Generator& a, const Generator& b) { return atom_order(a, p) < atom_order(b, p); });
  return atoms;
}

bool is_braid_pair(const Generator& x, const Generator& y) {
  if (x.is_s() && y.is_s()) return std::abs(x.index - y.index) == 1;
  if (x.is_s() != y.is_s()) return (x.is_s() ? x : y).index == 3;
  return false;
}

int side_join(const GarsideStructure& g, Side side, const std::vector<Generator>& atoms) {
  int acc = g.identity();
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
    const auto r = g.interval().join(side, g.atom(*it), acc);
    if (!r.ok()) throw TheoremViolation("atoms have no unique join");
    acc = *r.value;
  }
  return acc;
}

}  // namespace

int cell_lcm(const GarsideStructure& g, const std::vector<Generator>& atoms) {
  return side_join(g, Side::Right, atoms);
}

Generator least_right_divisor(const GarsideStructure& g, int s) {
  for (const auto& x : ordered_atoms(g.params()))
    if (g.interval().divides(Side::Right, g.atom(x), s)) return x;
  throw std::invalid_argument("least_right_divisor: identity has no atom divisor");
}

std::vector<Cell> enumerate_cells(const GarsideStructure& g, int r) {
  if (r < 0) throw std::invalid_argument("enumerate_cells: negative degree");
  const GroupParams p = g.params();
  std::vector<Cell> cells{Cell{}};
  const auto atoms = ordered_atoms(p);
  for (int degree = 1; degree <= r; ++degree) {
    std::vector<Cell> next;
    for (const auto& tail : cells)
      for (const auto& alpha : atoms) {
        if (!tail.atoms.empty() && atom_order(alpha, p) >= atom_order(tail.atoms.front(), p)) continue;
        Cell c;
        c.atoms.push_back(alpha);
        c.atoms.insert(c.atoms.end(), tail.atoms.begin(), tail.atoms.end());
        if (least_right_divisor(g, cell_lcm(g, c.atoms)) == alpha) next.push_back(std::move(c));
      }
    cells = std::move(next);
  }
  std::sort(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) {
    return std::lexicographical_compare(a.atoms.begin(), a.atoms.end(), b.atoms.begin(), b.atoms.end(),
                                        [&](const Generator& x, const Generator& y) {
                                          return atom_order(x, p) < atom_order(y, p);
                                        });
  });
  return cells;
}

bool atom_joins_agree(const GarsideStructure& g, int max_size) {
  const auto atoms = ordered_atoms(g.params());
  const int a = static_cast<int>(atoms.size());
  std::vector<Generator> pick;
  bool agree = true;
  auto rec = [&](auto&& self, int start) -> void {
    if (!pick.empty() && side_join(g, Side::Left, pick) != side_join(g, Side::Right, pick)) agree = false;
    if (static_cast<int>(pick.size()) == max_size || !agree) return;
    for (int i = start; i < a; ++i) {
      pick.push_back(atoms[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return agree;
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

class Basis {
 public:
  explicit Basis(std::vector<Cell> cells) : cells_(std::move(cells)) {
    for (std::size_t i = 0; i < cells_.size(); ++i) index_[cells_[i]] = i;
  }
  std::size_t size() const { return cells_.size(); }
  const Cell& operator[](std::size_t i) const { return cells_[i]; }
  std::size_t at(const Cell& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw TheoremViolation("formula refers to non-cell " + c.to_string());
    return it->second;
  }

 private:
  std::vector<Cell> cells_;
  std::map<Cell, std::size_t> index_;
};

}  // namespace

IntMatrix differential_closed_form(const GarsideStructure& g, int r) {
  if (r < 1 || r > 3) throw std::invalid_argument("closed-form differentials exist for r = 1, 2, 3");
  const GroupParams p = g.params();
  const int e = p.e;
  const int k = g.k();
  const Basis rows(enumerate_cells(g, r - 1));
  const Basis cols(enumerate_cells(g, r));
  IntMatrix d(rows.size(), cols.size());
  if (r == 1) return d;

  auto T = [&](int i) { return Generator::t(mod(i, e)); };
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& a = cols[c].atoms;
    auto add = [&](int coef, std::vector<Generator> atoms) { d.at(rows.at(Cell{std::move(atoms)}), c) += coef; };
    if (r == 2) {
      const Generator x = a[0], y = a[1];
      if (x.is_t() && y.is_t()) {
        if (x.index != 0) throw TheoremViolation("unexpected t-pair cell " + cols[c].to_string());
        const int i = y.index;
        add(+1, {T(i)});
        add(-1, {T(0)});
        add(-1, {T(k)});
        add(+1, {T(i + k)});
      } else if (is_braid_pair(x, y)) {
        add(+1, {y});
        add(-1, {x});
      }
      continue;
    }
    const Generator x = a[0], y = a[1], z = a[2];
    if (y.is_t() && z.is_t()) {
      if (!x.is_s() || y.index != 0) throw TheoremViolation("unexpected cell " + cols[c].to_string());
      const Generator s = x;
      const int j = z.index;
      if (s.index == 3 && mod(j + k, e) != 0) {
        add(+1, {T(0), T(j)});
        add(-1, {s, T(j)});
        add(-1, {T(0), T(j + k)});
        add(+1, {T(0), T(k)});
        add(+1, {s, T(j + 2 * k)});
        add(+1, {s, T(0)});
        add(-1, {s, T(2 * k)});
      } else if (s.index == 3) {
        add(+1, {T(0), T(-k)});
        add(-1, {s, T(-k)});
        add(+1, {s, T(k)});
        add(+1, {T(0), T(k)});
        add(+1, {s, T(0)});
        add(-1, {s, T(2 * k)});
      } else {
        add(-1, {s, T(j)});
        add(+1, {s, T(0)});
        add(-1, {s, T(j + k)});
        add(+1, {s, T(k)});
      }
      continue;
    }
    const bool xy = is_braid_pair(x, y), xz = is_braid_pair(x, z), yz = is_braid_pair(y, z);
    if (xy && !xz && yz) {
      add(-2, {x, z});
    } else if (xy && !xz && !yz) {
      add(+1, {y, z});
      add(-1, {x, z});
    } else if (!xy && !xz && yz) {
      add(+1, {x, y});
      add(-1, {x, z});
    } else if (xy || xz || yz) {
      throw TheoremViolation("no closed form for cell " + cols[c].to_string());
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Generic recursion

namespace {

using Term = std::pair<NormalForm, Cell>;
using Chain = std::map<Term, long long>;

void accumulate(Chain& into, const Chain& from, long long factor = 1) {
  for (const auto& [term, coef] : from) {
    auto& slot = into[term];
    slot += factor * coef;
    if (slot == 0) into.erase(term);
  }
}

class Resolution {
 public:
  Resolution(const GarsideStructure& g, std::size_t cap) : g_(g), cap_(cap), atoms_(ordered_atoms(g.params())) {}

  Chain boundary(const Cell& a) {
    if (auto it = boundary_cache_.find(a); it != boundary_cache_.end()) return it->second;
    Cell tail{std::vector<Generator>(a.atoms.begin() + 1, a.atoms.end())};
    const int q = quotient(a.atoms.front(), tail);
    const NormalForm qnf = g_.from_simple(q);
    Chain out{{Term{qnf, tail}, 1}};
    Chain correction;
    if (tail.atoms.empty()) {
      correction[Term{NormalForm{}, tail}] = 1;
    } else {
      correction = section(left_multiply(qnf, boundary(tail)));
    }
    accumulate(out, correction, -1);
    boundary_cache_[a] = out;
    return out;
  }

  Chain section(const Chain& c) {
    Chain out;
    for (const auto& [term, coef] : c) accumulate(out, section_term(term.first, term.second), coef);
    return out;
  }

  Chain section_term(const NormalForm& x, const Cell& a) {
    const Term key{x, a};
    if (auto it = section_cache_.find(key); it != section_cache_.end()) return it->second;
    if (section_cache_.size() + boundary_cache_.size() > cap_)
      throw CapExceeded("generic differential recursion", section_cache_.size() + boundary_cache_.size(), cap_);
    Chain out;
    if (!(a.atoms.empty() && x.factors.empty() && x.delta_power == 0)) {
      NormalForm f = x;
      g_.right_multiply(f, lcm(a));
      const Generator alpha = least_right_atom(f);
      if (a.atoms.empty() || !(alpha == a.atoms.front())) {
        Cell bigger{{alpha}};
        bigger.atoms.insert(bigger.atoms.end(), a.atoms.begin(), a.atoms.end());
        const int q = quotient(alpha, a);
        NormalForm y = x;
        g_.right_multiply_inverse(y, q);
        if (!y.is_positive()) throw TheoremViolation("quotient does not divide on the right");
        out[Term{y, bigger}] = 1;
        Chain rest;
        if (a.atoms.empty()) {
          rest[Term{y, a}] = 1;
        } else {
          rest = left_multiply(y, section(left_multiply(g_.from_simple(q), boundary(a))));
        }
        accumulate(out, section(rest));
      }
    }
    section_cache_[key] = out;
    return out;
  }

 private:
  Chain left_multiply(const NormalForm& x, const Chain& c) const {
    Chain out;
    for (const auto& [term, coef] : c) {
      auto& slot = out[Term{g_.multiply(x, term.first), term.second}];
      slot += coef;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

  int lcm(const Cell& a) {
    if (auto it = lcm_cache_.find(a); it != lcm_cache_.end()) return it->second;
    return lcm_cache_[a] = cell_lcm(g_, a.atoms);
  }

  // q with q * lcm(A) = lcm(alpha, A).
  int quotient(const Generator& alpha, const Cell& a) {
    std::vector<Generator> all{alpha};
    all.insert(all.end(), a.atoms.begin(), a.atoms.end());
    const int big = lcm(Cell{all});
    const auto o = g_.interval().ordinal(g_.element(big) * inverse(g_.element(lcm(a))));
    if (!o) throw TheoremViolation("lcm quotient is not simple");
    return *o;
  }

  Generator least_right_atom(const NormalForm& f) const {
    for (const auto& x : atoms_) {
      NormalForm probe = f;
      g_.right_multiply_inverse(probe, g_.atom(x));
      if (probe.is_positive()) return x;
    }
    throw TheoremViolation("nontrivial element without an atom right divisor");
  }

  const GarsideStructure& g_;
  std::size_t cap_;
  std::vector<Generator> atoms_;
  std::map<Cell, Chain> boundary_cache_;
  std::map<Term, Chain> section_cache_;
  std::map<Cell, int> lcm_cache_;
};

}  // namespace

IntMatrix differential_generic(const GarsideStructure& g, int r, std::size_t cap) {
  if (r < 1 || r > 3) throw std::invalid_argument("generic differentials are computed for r = 1, 2, 3");
  const Basis rows(enumerate_cells(g, r - 1));
  const Basis cols(enumerate_cells(g, r));
  IntMatrix d(rows.size(), cols.size());
  Resolution res(g, cap);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [term, coef] : res.boundary(cols[c])) d.at(rows.at(term.second), c) += coef;
  return d;
}

std::vector<std::string> generic_boundary_terms(const GarsideStructure& g, const Cell& cell) {
  Resolution res(g, 2000000);
  std::vector<std::string> out;
  for (const auto& [term, coef] : res.boundary(cell))
    out.push_back(std::to_string(coef) + "*" + g.to_string(term.first) + term.second.to_string());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::pair<IntMatrix, IntMatrix> differentials_for(const GarsideStructure& g, int r, DifferentialMethod method) {
  if (r != 1 && r != 2) throw std::invalid_argument("homology is computed for r = 1 or 2");
  auto d = [&](int degree) {
    return method == DifferentialMethod::Closed ? differential_closed_form(g, degree) : differential_generic(g, degree);
  };
  return {d(r), d(r + 1)};
}

}  // namespace

AbelianGroup homology_group(const GarsideStructure& g, int r, DifferentialMethod method) {
  const auto [in, out] = differentials_for(g, r, method);
  return homology_from_ranks(in, out);
}

AbelianGroup homology_group_via_kernel(const GarsideStructure& g, int r, DifferentialMethod method) {
  const auto [in, out] = differentials_for(g, r, method);
  return homology_from_kernel(in, out);
}

}  // namespace garside
