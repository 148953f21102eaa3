#include <gtest/gtest.h>

#include <numeric>

#include "garside/monoid.hpp"
#include "garside/presentation.hpp"
#include "garside/words.hpp"
#include "random_words.hpp"

using namespace garside;
using garside::testing::evaluate_signed;
using garside::testing::random_signed_word;
using garside::testing::spell;

namespace {

GarsideStructure make(int e, int n, int k) { return GarsideStructure(build_interval({e, n}, k)); }

}  // namespace

TEST(Garside, ComplementsAndTau) {
  for (auto [e, n, k] : {std::tuple{3, 3, 1}, std::tuple{4, 3, 2}, std::tuple{5, 2, 3}}) {
    auto g = make(e, n, k);
    EXPECT_EQ(g.complement(g.identity()), g.delta());
    EXPECT_EQ(g.complement(g.delta()), g.identity());
    EXPECT_EQ(g.tau(g.identity()), g.identity());
    EXPECT_EQ(g.tau(g.delta()), g.delta());
    const int t1 = g.atom(Generator::t(1));
    EXPECT_EQ(g.element(g.complement(t1)), inverse(g.element(t1)) * lambda_power({e, n}, k));
    for (int s = 0; s < static_cast<int>(g.size()); ++s) {
      EXPECT_EQ(g.length(s) + g.length(g.complement(s)), g.length(g.delta()));
      EXPECT_EQ(g.length(s) + g.length(g.left_complement(s)), g.length(g.delta()));
      EXPECT_EQ(g.tau_inverse(g.tau(s)), s);
      EXPECT_EQ(g.element(s) * g.element(g.complement(s)), g.element(g.delta()));
      EXPECT_EQ(g.element(g.left_complement(s)) * g.element(s), g.element(g.delta()));
    }
  }
}

TEST(Garside, TauTrivialExactlyWhenDeltaCommutesWithAtoms) {
  // Frozen per (e,n,k): tau is the identity iff e divides k*n (lambda^k scalar).
  for (int e = 2; e <= 5; ++e)
    for (int n = 2; n <= 3; ++n)
      for (int k = 1; k < e; ++k) {
        auto g = make(e, n, k);
        bool trivial = true;
        for (int s = 0; s < static_cast<int>(g.size()); ++s) trivial = trivial && g.tau(s) == s;
        bool commutes = true;
        const auto top = lambda_power({e, n}, k);
        for (const auto& x : generators({e, n}))
          commutes = commutes && generator_matrix(x, {e, n}) * top == top * generator_matrix(x, {e, n});
        EXPECT_EQ(trivial, commutes);
        EXPECT_EQ(trivial, (k * n) % e == 0) << e << ' ' << n << ' ' << k;
      }
}

TEST(Garside, AtomCount) {
  for (auto [e, n, k] : {std::tuple{3, 3, 1}, std::tuple{4, 4, 3}, std::tuple{6, 2, 2}}) {
    auto g = make(e, n, k);
    int atoms = 0;
    for (int s = 0; s < static_cast<int>(g.size()); ++s) atoms += g.length(s) == 1;
    EXPECT_EQ(atoms, e + n - 2);
  }
}

TEST(NormalizePair, Examples) {
  auto g = make(3, 2, 1);
  const int t0 = g.atom(Generator::t(0));
  const int t1 = g.atom(Generator::t(1));
  EXPECT_EQ(g.normalize_pair(t1, t0), std::make_pair(g.delta(), g.identity()));
  EXPECT_EQ(g.normalize_pair(g.delta(), t0), std::make_pair(g.delta(), t0));
}

TEST(NormalizePair, AllPairs) {
  for (auto [e, n, k] : {std::tuple{3, 3, 1}, std::tuple{4, 3, 2}}) {
    auto g = make(e, n, k);
    const int m = static_cast<int>(g.size());
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        const auto [x, y] = g.normalize_pair(a, b);
        ASSERT_EQ(g.element(x) * g.element(y), g.element(a) * g.element(b));
        ASSERT_EQ(g.length(x) + g.length(y), g.length(a) + g.length(b));
        ASSERT_TRUE(g.is_left_greedy(x, y));
        ASSERT_EQ(g.normalize_pair(x, y), std::make_pair(x, y));
      }
  }
}

TEST(NormalForm, Examples) {
  auto g = make(3, 3, 1);
  EXPECT_EQ(g.normal_form("t0 t0^-1"), NormalForm{});
  EXPECT_EQ(g.normal_form("t1 t0"), g.normal_form("t2 t1"));
  EXPECT_TRUE(g.words_equal("D D^-1 t0", "t0"));
  for (int e = 3; e <= 5; ++e)
    for (int k = 1; k < e; ++k) {
      auto h = make(e, 2, k);
      EXPECT_TRUE(h.words_equal("t0 t" + std::to_string(e - k), "t" + std::to_string(k) + " t0"));
    }
  auto small = make(3, 2, 1);
  EXPECT_FALSE(small.words_equal("t0 t1", "t1 t0"));
  EXPECT_THROW(g.normal_form("t0^2"), std::invalid_argument);
  EXPECT_THROW(g.normal_form("s4"), std::invalid_argument);
  EXPECT_EQ(g.to_string(g.normal_form("t1 t0 t0")), "t1 t0 . t0");
  EXPECT_EQ(g.to_string(g.normal_form("D^-1")), "D^-1");
  EXPECT_EQ(g.to_string(NormalForm{}), "1");
}

TEST(NormalForm, DefiningRelations) {
  for (int e = 2; e <= 5; ++e)
    for (int n = 2; n <= 4; ++n)
      for (int k = 1; k < e; ++k) {
        if (e * n > 16) continue;
        auto g = make(e, n, k);
        for (const auto& rel : emit_presentation({e, n}, k).relations) {
          EXPECT_EQ(g.normal_form(to_signed(rel.lhs)), g.normal_form(to_signed(rel.rhs)))
              << to_string(rel.lhs) << " = " << to_string(rel.rhs);
          EXPECT_EQ(evaluate(rel.lhs, {e, n}), evaluate(rel.rhs, {e, n}));
        }
      }
}

TEST(NormalForm, TauCompatibility) {
  auto g = make(4, 3, 1);
  const auto d = g.from_simple(g.delta());
  for (int s = 1; s < g.delta(); ++s) {
    auto nf = g.multiply(g.multiply(d, g.from_simple(s)), g.inverse(d));
    EXPECT_EQ(nf.delta_power, 0);
    EXPECT_EQ(nf.factors, std::vector<int>{g.tau_inverse(s)});
  }
}

TEST(NormalForm, RandomWordProperties) {
  std::mt19937 rng(12345);
  for (auto [e, n, k] : {std::tuple{3, 3, 1}, std::tuple{4, 3, 2}, std::tuple{2, 4, 1}, std::tuple{6, 2, 4}}) {
    GroupParams p{e, n};
    auto g = make(e, n, k);
    const auto pres = emit_presentation(p, k);
    std::uniform_int_distribution<int> len(0, 14);
    for (int trial = 0; trial < 300; ++trial) {
      auto word = random_signed_word(p, rng, len(rng));
      auto nf = g.normal_form(word);
      for (int f : nf.factors) {
        ASSERT_NE(f, g.identity());
        ASSERT_NE(f, g.delta());
      }
      for (std::size_t i = 1; i < nf.factors.size(); ++i) ASSERT_TRUE(g.is_left_greedy(nf.factors[i - 1], nf.factors[i]));
      ASSERT_EQ(g.image(nf), evaluate_signed(word, p, k));
      ASSERT_EQ(g.normal_form(spell(g, nf)), nf);
      ASSERT_EQ(g.multiply(nf, g.inverse(nf)), NormalForm{});
      // Inserting a relator anywhere leaves the normal form unchanged.
      const auto& rel = pres.relations[std::uniform_int_distribution<std::size_t>(0, pres.relations.size() - 1)(rng)];
      SignedWord relator = to_signed(rel.lhs);
      for (auto it = rel.rhs.rbegin(); it != rel.rhs.rend(); ++it)
        relator.push_back(Letter{Letter::Kind::Atom, *it, true});
      auto padded = word;
      const auto pos = std::uniform_int_distribution<std::size_t>(0, word.size())(rng);
      padded.insert(padded.begin() + static_cast<std::ptrdiff_t>(pos), relator.begin(), relator.end());
      ASSERT_EQ(g.normal_form(padded), nf);
    }
  }
}

TEST(NormalForm, PositiveWordsGivePositiveForms) {
  std::mt19937 rng(99);
  auto g = make(3, 3, 2);
  for (int trial = 0; trial < 200; ++trial) {
    auto word = random_signed_word({3, 3}, rng, 10, false);
    EXPECT_TRUE(g.normal_form(word).is_positive());
  }
}

TEST(Embedding, LcmCompatibility) {
  for (auto [e, n, k] : {std::tuple{3, 3, 1}, std::tuple{4, 3, 2}, std::tuple{3, 4, 2}}) {
    auto g = make(e, n, k);
    for (int i = 0; i < e; ++i) {
      auto check = embedding_lcm_check(g, i);
      EXPECT_TRUE(check.ok) << (check.failures.empty() ? "" : check.failures.front());
      EXPECT_EQ(check.pairs_checked, (n - 1) * (n - 2) / 2);
    }
  }
  auto g = make(3, 4, 1);
  const int s3 = g.atom(Generator::s(3));
  const int s4 = g.atom(Generator::s(4));
  auto join = g.interval().join(Side::Left, s3, s4);
  EXPECT_EQ(g.from_simple(*join.value), g.normal_form("s3 s4 s3"));
  const int q1 = g.product(g.atom(Generator::t(1)), g.atom(Generator::t(0)));
  auto big = g.interval().join(Side::Left, q1, s3);
  EXPECT_EQ(g.length(*big.value), 6);
  EXPECT_EQ(g.from_simple(*big.value), g.normal_form("t1 t0 s3 t1 t0 s3"));
  EXPECT_THROW(embedding_lcm_check(make(3, 2, 1), 0), std::invalid_argument);
}
