#pragma once

// Exact arithmetic in G(e,e,n): n x n monomial matrices whose nonzero entries
// are e-th roots of unity with product 1.
//
// An element is stored as a permutation plus an exponent vector: row i has its
// nonzero entry in column sigma(i), equal to zeta_e^eps(i). Exponents are kept
// reduced mod e, so no floating point ever appears. The public API is 1-based
// (rows and columns numbered 1..n, as in the matrices one writes by hand).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "garside/errors.hpp"

namespace garside {

inline constexpr int kMaxRank = 12;

struct GroupParams {
  int e = 2;
  int n = 2;

  /// Throws std::invalid_argument unless 2 <= e <= 255 and 2 <= n <= kMaxRank.
  void validate() const;
  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// Validates 1 <= k <= e-1 on top of GroupParams::validate().
void validate_interval_params(const GroupParams& params, int k);

class GroupElement {
 public:
  /// perm[i] is the (1-based) column of row i+1; exps[i] the exponent of that entry.
  /// Exponents may be any integers; they are reduced mod e.
  GroupElement(GroupParams params, std::span<const int> perm, std::span<const int> exps);

  static GroupElement identity(GroupParams params);

  GroupParams params() const { return {e_, n_}; }
  int e() const { return e_; }
  int n() const { return n_; }

  /// 1-based column of the nonzero entry in 1-based row `row`.
  int column(int row) const { return perm_[row - 1] + 1; }
  /// Exponent a with w[row, column(row)] = zeta_e^a, 0 <= a < e.
  int exponent(int row) const { return exps_[row - 1]; }

  std::vector<int> perm_vector() const;  // 1-based columns
  std::vector<int> exps_vector() const;

  bool is_identity() const;
  bool is_diagonal() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.e_ == b.e_ && a.n_ == b.n_ && a.perm_ == b.perm_ && a.exps_ == b.exps_;
  }
  /// Lexicographic on (sigma, eps); only meaningful for equal params.
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

  friend GroupElement operator*(const GroupElement& u, const GroupElement& v);
  friend GroupElement inverse(const GroupElement& w);
  friend GroupElement transpose(const GroupElement& w);

  std::size_t hash() const;

 private:
  GroupElement() = default;
  friend class ElementBuilder;

  int e_ = 2;
  int n_ = 2;
  std::array<std::uint8_t, kMaxRank> perm_{};  // 0-based columns
  std::array<std::uint8_t, kMaxRank> exps_{};
};

GroupElement multiply(const GroupElement& u, const GroupElement& v);
GroupElement inverse(const GroupElement& w);
/// Transpose. This is the length-preserving anti-automorphism fixing every s_j
/// and sending t_i to t_{-i}.
GroupElement transpose(const GroupElement& w);

std::ostream& operator<<(std::ostream& os, const GroupElement& w);

// ---------------------------------------------------------------------------
// Generators

struct Generator {
  enum class Kind : std::uint8_t { T, S };
  Kind kind = Kind::T;
  int index = 0;  // i in Z/eZ for T, 3 <= j <= n for S

  static Generator t(int i) { return {Kind::T, i}; }
  static Generator s(int j) { return {Kind::S, j}; }

  bool is_t() const { return kind == Kind::T; }
  bool is_s() const { return kind == Kind::S; }

  /// Throws std::invalid_argument if the index does not fit `params`.
  void validate(const GroupParams& params) const;

  std::string to_string() const;
  /// Parses "t3" / "s4". Throws std::invalid_argument on malformed input.
  static Generator parse(std::string_view token);

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// The full generating set t_0..t_{e-1}, s_3..s_n in that order.
std::vector<Generator> generators(const GroupParams& params);

/// Image in G(e,e,n) of a generator.
GroupElement generator_matrix(const Generator& g, const GroupParams& params);

using Word = std::vector<Generator>;

std::string to_string(const Word& word);
/// Whitespace separated generator tokens; inverses are rejected here.
Word parse_word(std::string_view text, const GroupParams& params);
GroupElement evaluate(const Word& word, const GroupParams& params);

// ---------------------------------------------------------------------------
// Whole-group helpers

/// e^(n-1) * n!, saturating at SIZE_MAX.
std::size_t group_order(const GroupParams& params);

/// Position of w in the lexicographic enumeration order.
std::size_t group_rank(const GroupElement& w);
GroupElement group_unrank(const GroupParams& params, std::size_t rank);

/// All elements exactly once in lexicographic (sigma, eps) order.
/// Throws CapExceeded if the group order exceeds `cap`.
std::vector<GroupElement> enumerate_group(const GroupParams& params,
                                          std::size_t cap = default_group_cap());

/// lambda^k = diag(zeta^{-k(n-1)}, zeta^k, ..., zeta^k).
GroupElement lambda_power(const GroupParams& params, int k);

}  // namespace garside

template <>
struct std::hash<garside::GroupElement> {
  std::size_t operator()(const garside::GroupElement& w) const noexcept { return w.hash(); }
};
