// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Pass criterion numbers as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "garside/homology.hpp"
#include "garside/interval.hpp"
#include "garside/monoid.hpp"
#include "garside/presentation.hpp"
#include "garside/words.hpp"
#include "random_words.hpp"

using namespace garside;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& what) {
    if (pass) note << "first failure: " << what << "; ";
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds, 0 for none
  std::function<void(Outcome&)> body;
};

const std::vector<GroupParams> kWordGrid = {{2, 2}, {3, 2}, {6, 2}, {2, 3}, {3, 3}, {4, 3}, {2, 4}, {3, 4}};

std::string label(int e, int n, int k = 0) {
  std::string s = "(e=" + std::to_string(e) + ",n=" + std::to_string(n);
  if (k) s += ",k=" + std::to_string(k);
  return s + ")";
}

std::size_t interval_size(int e, int n) {
  std::size_t s = 1;
  for (int i = 2; i <= n; ++i) s *= static_cast<std::size_t>(e + 2 * i - 2);
  return s;
}

struct Point {
  int e, n, k;
};

// e in 2..6, n in 2..4, every k, |G| <= 1e5 and |D_k|^2 <= 1e7.
std::vector<Point> full_grid() {
  std::vector<Point> out;
  for (int e = 2; e <= 6; ++e)
    for (int n = 2; n <= 4; ++n) {
      const std::size_t d = interval_size(e, n);
      if (group_order({e, n}) > 100000 || d * d > 10000000) continue;
      for (int k = 1; k < e; ++k) out.push_back({e, n, k});
    }
  return out;
}

AbelianGroup stated_h2(int e, int n, int k) {
  const int h = std::gcd(e, k);
  std::vector<BigInt> orders{e / h};
  if (n == 4)
    for (int i = std::gcd(2 * k, e); i > 0; --i) orders.push_back(2);
  return make_abelian_group(h - 1, orders);
}

// ---------------------------------------------------------------------------

void length_oracle(Outcome& o) {
  std::size_t checked = 0;
  for (const auto& p : kWordGrid) {
    const auto dist = cayley_distances(p);
    for (const auto& w : enumerate_group(p)) {
      ++checked;
      const int alg = static_cast<int>(reduced_expression(w).size());
      if (alg != dist[group_rank(w)] || length(w) != alg) o.fail(label(p.e, p.n) + " element rank " + std::to_string(group_rank(w)));
    }
  }
  o.note << checked << " elements";
}

void unit_step(Outcome& o) {
  std::size_t checked = 0;
  for (const auto& p : kWordGrid) {
    const auto dist = cayley_distances(p);
    for (const auto& w : enumerate_group(p))
      for (const auto& x : generators(p)) {
        ++checked;
        const int before = dist[group_rank(w)];
        const int after = dist[group_rank(generator_matrix(x, p) * w)];
        if (std::abs(after - before) != 1) o.fail(label(p.e, p.n) + " " + x.to_string());
      }
  }
  o.note << checked << " (x, w) pairs";
}

void census(Outcome& o) {
  for (const auto& p : kWordGrid) {
    const auto dist = cayley_distances(p);
    const int top = *std::max_element(dist.begin(), dist.end());
    const auto count = static_cast<std::size_t>(std::count(dist.begin(), dist.end(), top));
    std::size_t expected = 1;
    for (int i = 1; i < p.n; ++i) expected *= static_cast<std::size_t>(p.e - 1);
    const auto listed = maximal_length_elements(p);
    if (top != p.n * (p.n - 1) || count != expected || listed.size() != expected)
      o.fail(label(p.e, p.n) + " max " + std::to_string(top) + " count " + std::to_string(count));
  }
  o.note << kWordGrid.size() << " groups";
}

void interval_identification(Outcome& o) {
  int points = 0;
  for (const auto& p : kWordGrid) {
    const auto dist = cayley_distances(p);
    const auto all = enumerate_group(p);
    auto d = [&](const GroupElement& w) { return dist[group_rank(w)]; };
    for (int k = 1; k < p.e; ++k) {
      ++points;
      const GroupElement top = lambda_power(p, k);
      std::set<std::size_t> left, right, staircase, built;
      for (const auto& w : all) {
        if (d(w) + d(inverse(w) * top) == d(top)) left.insert(group_rank(w));
        if (d(top * inverse(w)) + d(w) == d(top)) right.insert(group_rank(w));
        if (in_Dk(w, k)) staircase.insert(group_rank(w));
      }
      for (const auto& w : build_interval(p, k).members) built.insert(group_rank(w));
      if (left != right || left != staircase || left != built) o.fail(label(p.e, p.n, k));
    }
  }
  o.note << points << " (e,n,k) points";
}

void balanced_classification(Outcome& o) {
  for (const auto& p : kWordGrid) {
    const auto dist = cayley_distances(p);
    const auto all = enumerate_group(p);
    auto d = [&](const GroupElement& w) { return dist[group_rank(w)]; };
    std::set<std::size_t> oracle;
    for (const auto& g : maximal_length_elements(p)) {
      bool balanced = true;
      for (const auto& w : all) {
        const bool l = d(w) + d(inverse(w) * g) == d(g);
        const bool r = d(g * inverse(w)) + d(w) == d(g);
        if (l != r) {
          balanced = false;
          break;
        }
      }
      if (balanced) oracle.insert(group_rank(g));
    }
    std::set<std::size_t> expected, library;
    for (int k = 1; k < p.e; ++k) expected.insert(group_rank(lambda_power(p, k)));
    for (const auto& g : balanced_max_length(p)) library.insert(group_rank(g));
    if (oracle != expected || library != expected) o.fail(label(p.e, p.n));
  }
  o.note << kWordGrid.size() << " groups";
}

void lattice(Outcome& o) {
  const auto grid = full_grid();
  for (const auto& [e, n, k] : grid) {
    const auto report = verify_lattice(build_interval({e, n}, k));
    if (!report.ok()) o.fail(label(e, n, k) + " " + report.detail);
  }
  o.note << grid.size() << " intervals, both orders";
}

void lcm_table(Outcome& o) {
  const auto grid = full_grid();
  for (const auto& [e, n, k] : grid) {
    const auto table = atom_lcm_table(build_interval({e, n}, k));
    if (!table.failures.empty()) o.fail(label(e, n, k) + " " + table.failures.front());
  }
  o.note << grid.size() << " intervals";
}

void normal_forms(Outcome& o) {
  constexpr int kWords = 10000;
  const auto grid = full_grid();
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> len(0, 16);
  for (const auto& [e, n, k] : grid) {
    const GroupParams p{e, n};
    const GarsideStructure g(build_interval(p, k));
    const NormalForm delta = g.from_simple(g.delta());
    const NormalForm delta_inv = g.inverse(delta);
    for (const auto& rel : emit_presentation(p, k).relations)
      if (g.normal_form(to_signed(rel.lhs)) != g.normal_form(to_signed(rel.rhs)))
        o.fail(label(e, n, k) + " relation " + to_string(rel.lhs) + " = " + to_string(rel.rhs));
    for (int i = 0; i < kWords; ++i) {
      const SignedWord w = testing::random_signed_word(p, rng, len(rng));
      const NormalForm nf = g.normal_form(w);
      if (g.image(nf) != testing::evaluate_signed(w, p, k)) o.fail(label(e, n, k) + " image");
      for (std::size_t j = 0; j + 1 < nf.factors.size(); ++j)
        if (!g.is_left_greedy(nf.factors[j], nf.factors[j + 1])) o.fail(label(e, n, k) + " greedy");
      if (g.normal_form(testing::spell(g, nf)) != nf) o.fail(label(e, n, k) + " idempotence");
      NormalForm conj = g.multiply(g.multiply(delta, nf), delta_inv);
      NormalForm expected = nf;
      for (int& f : expected.factors) f = g.tau_inverse(f);
      if (conj != expected) o.fail(label(e, n, k) + " tau");
    }
  }
  o.note << grid.size() << " points x " << kWords << " words";
}

void matsumoto(Outcome& o) {
  std::size_t members = 0;
  for (const GroupParams p : {GroupParams{2, 2}, GroupParams{3, 2}, GroupParams{2, 3}, GroupParams{3, 3}})
    for (int k = 1; k < p.e; ++k) {
      const Presentation pres = emit_presentation(p, k);
      for (const auto& w : build_interval(p, k).members) {
        ++members;
        if (!matsumoto_check(pres, w).ok) o.fail(label(p.e, p.n, k));
      }
    }
  o.note << members << " interval members";
}

void isomorphism(Outcome& o) {
  int checked = 0;
  for (int e = 2; e <= 12; ++e)
    for (int k = 1; k < e; ++k) {
      ++checked;
      const bool coprime = std::gcd(e, k) == 1;
      if (is_isomorphic_to_CP(e, k).isomorphic != coprime) o.fail("isomorphism e=" + std::to_string(e) + " k=" + std::to_string(k));
      if (t_cycle_components(e, k) != std::gcd(e, k)) o.fail("components e=" + std::to_string(e) + " k=" + std::to_string(k));
    }
  o.note << checked << " (e,k) pairs";
}

void first_homology(Outcome& o) {
  int checked = 0;
  for (const auto& [e, n, k] : full_grid()) {
    if (n < 3) continue;
    ++checked;
    const auto h = homology_group(GarsideStructure(build_interval({e, n}, k)), 1);
    if (!(h == make_abelian_group(1, {}))) o.fail(label(e, n, k) + " got " + h.to_string());
  }
  o.note << checked << " points";
}

void second_homology(Outcome& o, int n, int max_e) {
  int checked = 0;
  for (int e = 2; e <= max_e; ++e)
    for (int k = 1; k < e; ++k) {
      ++checked;
      const GarsideStructure g(build_interval({e, n}, k));
      const auto got = homology_group(g, 2);
      const auto via_kernel = homology_group_via_kernel(g, 2);
      const auto want = stated_h2(e, n, k);
      if (!(got == via_kernel)) o.fail(label(e, n, k) + " routes disagree");
      if (!(got == want)) {
        o.note << label(e, n, k) << " computed " << got.to_string() << ", stated " << want.to_string() << "; ";
        o.fail(label(e, n, k));
      }
    }
  o.note << checked << " points";
}

void differential_cross_check(Outcome& o) {
  for (const auto& [e, n, k] : {Point{3, 3, 1}, Point{4, 3, 2}, Point{3, 4, 1}}) {
    const GarsideStructure g(build_interval({e, n}, k));
    const auto d2 = differential_generic(g, 2), d3 = differential_generic(g, 3);
    if (!(d2 == differential_closed_form(g, 2))) o.fail(label(e, n, k) + " d2");
    if (!(d3 == differential_closed_form(g, 3))) o.fail(label(e, n, k) + " d3");
    if (!(d2 * d3).is_zero()) o.fail(label(e, n, k) + " d2*d3");
  }
  o.note << "3 points";
}

void embedding(Outcome& o) {
  int pairs = 0;
  for (const auto& [e, n, k] : full_grid()) {
    if (n < 3) continue;
    const GarsideStructure g(build_interval({e, n}, k));
    for (int i = 0; i < e; ++i) {
      const auto check = embedding_lcm_check(g, i);
      pairs += check.pairs_checked;
      if (!check.ok) o.fail(label(e, n, k) + " i=" + std::to_string(i) + " " + check.failures.front());
    }
  }
  o.note << pairs << " generator pairs";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "length equals BFS Cayley distance", 60, length_oracle},
      {2, "unit-step law |l(xw) - l(w)| = 1", 0, unit_step},
      {3, "maximal length n(n-1) attained (e-1)^(n-1) times", 0, census},
      {4, "left divisors = right divisors = staircase set of lambda^k", 0, interval_identification},
      {5, "balanced maximal-length elements are the lambda^k", 0, balanced_classification},
      {6, "meets and joins exist for both orders", 600, lattice},
      {7, "generator lcm identities, left/right joins agree", 0, lcm_table},
      {8, "normal form: image, greedy, idempotent, relations, tau", 0, normal_forms},
      {9, "reduced words form one rewriting class", 0, matsumoto},
      {10, "isomorphic to the classical presentation iff gcd(e,k) = 1", 0, isomorphism},
      {11, "H1 = Z for n >= 3", 0, first_homology},
      {12, "H2 for n = 3", 60, [](Outcome& o) { second_homology(o, 3, 6); }},
      {13, "H2 for n = 4, e in {2,3,4}", 0, [](Outcome& o) { second_homology(o, 4, 4); }},
      {14, "generic differentials equal closed forms, d2 d3 = 0", 0, differential_cross_check},
      {15, "embedding lcm compatibility", 0, embedding},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs > c.time_limit) o.fail("time limit " + std::to_string(c.time_limit) + " s exceeded");
    if (!o.pass) ++failures;
    std::printf("%s [%02d] %s -- %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), o.note.str().c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
