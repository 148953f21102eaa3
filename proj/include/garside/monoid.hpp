#pragma once

// The interval Garside structure on [1, lambda^k]: complements, the Garside
// automorphism, left-greedy normal forms and the word problem in the group of
// fractions.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "garside/interval.hpp"

namespace garside {

/// Delta^delta_power * factors[0] * ... * factors[m-1], factors are simple
/// ordinals different from the identity and from Delta.
struct NormalForm {
  int delta_power = 0;
  std::vector<int> factors;

  bool is_positive() const { return delta_power >= 0; }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

/// One letter of a signed word: an atom, Delta, or the inverse of either.
struct Letter {
  enum class Kind : unsigned char { Atom, Delta };
  Kind kind = Kind::Atom;
  Generator atom;
  bool inverse = false;

  std::string to_string() const;
};
using SignedWord = std::vector<Letter>;

/// Tokens "t0", "s3", "t1^-1", "D", "D^-1", separated by whitespace.
SignedWord parse_signed_word(std::string_view text, const GroupParams& params);
SignedWord to_signed(const Word& word);

class GarsideStructure {
 public:
  /// Throws TheoremViolation when the interval is not a lattice (unless
  /// verify is false) or when a complement leaves the interval.
  explicit GarsideStructure(Interval interval, bool verify = true);

  const Interval& interval() const { return interval_; }
  GroupParams params() const { return interval_.params; }
  int k() const { return interval_.k; }
  std::size_t size() const { return interval_.size(); }
  int identity() const { return interval_.identity(); }
  int delta() const { return interval_.delta(); }
  const GroupElement& element(int s) const { return interval_.members[s]; }
  int length(int s) const { return interval_.lengths[s]; }

  int atom(const Generator& g) const { return atoms_.at(atom_slot(g)); }

  /// s^-1 Delta and Delta s^-1.
  int complement(int s) const { return right_complement_[s]; }
  int left_complement(int s) const { return left_complement_[s]; }
  /// Delta^-1 s Delta and its inverse.
  int tau(int s) const { return tau_[s]; }
  int tau_inverse(int s) const { return tau_inv_[s]; }

  int meet_left(int a, int b) const { return meet_[static_cast<std::size_t>(a) * size() + b]; }
  /// Ordinal of a*b if it is simple, else -1.
  int product(int a, int b) const;

  std::pair<int, int> normalize_pair(int a, int b) const;
  bool is_left_greedy(int a, int b) const { return meet_left(complement(a), b) == identity(); }

  NormalForm normal_form(const SignedWord& word) const;
  NormalForm normal_form(std::string_view text) const;
  NormalForm from_simple(int s) const;

  void right_multiply(NormalForm& nf, int simple) const;
  void right_multiply_inverse(NormalForm& nf, int simple) const;
  void right_multiply_delta(NormalForm& nf, int power) const;

  NormalForm multiply(const NormalForm& a, const NormalForm& b) const;
  NormalForm inverse(const NormalForm& a) const;

  bool words_equal(std::string_view w1, std::string_view w2) const;

  /// Image in G(e,e,n).
  GroupElement image(const NormalForm& nf) const;
  /// "D^p" followed by reduced words of the factors, '.' between factors.
  std::string to_string(const NormalForm& nf) const;

 private:
  std::size_t atom_slot(const Generator& g) const;
  void renormalize(NormalForm& nf) const;

  Interval interval_;
  std::vector<int> atoms_;  // indexed like generators(params)
  std::vector<int> right_complement_;
  std::vector<int> left_complement_;
  std::vector<int> tau_;
  std::vector<int> tau_inv_;
  std::vector<int> meet_;
};

/// Result of comparing interval joins of generator images with the images of
/// the Artin lcms of B(2,1,n-1).
struct EmbeddingCheck {
  bool ok = true;
  std::vector<std::string> failures;
  int pairs_checked = 0;
};

/// q_1 -> t_i t_{i-k}, q_m -> s_{m+1}. Requires n >= 3.
EmbeddingCheck embedding_lcm_check(const GarsideStructure& g, int i);

}  // namespace garside
