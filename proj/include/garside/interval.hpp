#pragma once

// Left/right divisibility, the intervals [1, lambda^k], and lattice checks.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "garside/core.hpp"

namespace garside {

/// a <= b: some reduced word for b starts with one for a.
bool left_divides(const GroupElement& a, const GroupElement& b);
/// b = c*a with lengths adding.
bool right_divides(const GroupElement& a, const GroupElement& b);

/// Staircase criterion: every entry that is not a strict left-to-right running
/// minimum of the column sequence must be 1 or zeta^k.
bool in_Dk(const GroupElement& w, int k);

/// Left and right divisor sets of w coincide. Scans the whole group.
bool is_balanced(const GroupElement& w, std::size_t cap = default_group_cap());

/// Balanced elements among those of maximal length.
std::vector<GroupElement> balanced_max_length(const GroupParams& params,
                                              std::size_t cap = default_group_cap());

/// Fixed-width bit set with the few scans the lattice code needs.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  BitRow& operator&=(const BitRow& other);
  friend BitRow operator&(BitRow a, const BitRow& b) { return a &= b; }
  friend bool operator==(const BitRow&, const BitRow&) = default;

  bool none() const;
  std::size_t count() const;
  /// Index of the lowest/highest set bit, or size() when empty.
  std::size_t find_first() const;
  std::size_t find_last() const;
  bool is_subset_of(const BitRow& other) const;
  std::vector<std::size_t> indices() const;
  /// Little-endian byte image (bit i lives in byte i/8, position i%8).
  std::vector<std::uint8_t> bytes() const;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

enum class Side { Left, Right };

/// Outcome of a meet or join query. `value` is set exactly when the extremal
/// element exists and is unique; otherwise `antichain` lists the competing
/// maximal (or minimal) common bounds.
struct LatticeResult {
  std::optional<int> value;
  std::vector<int> antichain;
  bool ok() const { return value.has_value(); }
};

class Interval {
 public:
  GroupParams params;
  int k = 1;
  /// Members ordered by (length, lexicographic).
  std::vector<GroupElement> members;
  std::vector<int> lengths;
  /// divisors[side][a] = {b : b divides a on that side}; multiples[side][a] likewise.
  std::vector<BitRow> divisors[2];
  std::vector<BitRow> multiples[2];

  std::size_t size() const { return members.size(); }
  int identity() const { return 0; }
  int delta() const { return static_cast<int>(members.size()) - 1; }
  std::optional<int> ordinal(const GroupElement& w) const;
  int ordinal_of(const GroupElement& w) const;  // throws std::out_of_range

  bool divides(Side side, int a, int b) const { return divisors[idx(side)][b].test(a); }

  LatticeResult meet(Side side, int a, int b) const;
  LatticeResult join(Side side, int a, int b) const;

 private:
  static int idx(Side s) { return s == Side::Left ? 0 : 1; }
  std::unordered_map<GroupElement, int> index_;
  friend Interval build_interval(const GroupParams&, int, std::size_t);
  friend Interval build_interval_by_lemma(const GroupParams&, int, std::size_t);
};

/// Members are the in_Dk elements; divisibility tables come from length
/// additivity. Throws TheoremViolation if the staircase set differs from the
/// left or right divisor set of lambda^k in the whole group.
Interval build_interval(const GroupParams& params, int k, std::size_t cap = default_group_cap());

/// Same interval, tables filled by left_divides/right_divides instead.
Interval build_interval_by_lemma(const GroupParams& params, int k, std::size_t cap = default_group_cap());

struct LatticeReport {
  bool meet_left = true;
  bool join_left = true;
  bool meet_right = true;
  bool join_right = true;
  std::optional<std::pair<int, int>> counterexample;
  std::string detail;

  bool ok() const { return meet_left && join_left && meet_right && join_right; }
};

LatticeReport verify_lattice(const Interval& interval);

struct AtomLcmTable {
  std::vector<Generator> atoms;
  std::vector<std::vector<int>> left;   // join ordinals, -1 if missing
  std::vector<std::vector<int>> right;
  /// Closed-form identities or left/right agreements that failed.
  std::vector<std::string> failures;
};

AtomLcmTable atom_lcm_table(const Interval& interval);

}  // namespace garside
