#include "garside/interval.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "garside/words.hpp"

namespace garside {

bool left_divides(const GroupElement& a, const GroupElement& b) {
  GroupElement cur = b;
  const GroupParams p = a.params();
  for (const auto& x : reduced_expression(a)) {
    if (!length_decreases(x, cur)) return false;
    cur = generator_matrix(x, p) * cur;
  }
  return true;
}

bool right_divides(const GroupElement& a, const GroupElement& b) {
  return left_divides(inverse(a), inverse(b));
}

bool in_Dk(const GroupElement& w, int k) {
  validate_interval_params(w.params(), k);
  int running_min = w.n() + 1;
  for (int i = 1; i <= w.n(); ++i) {
    const int c = w.column(i);
    if (c < running_min) {
      running_min = c;
      continue;
    }
    const int a = w.exponent(i);
    if (a != 0 && a != k) return false;
  }
  return true;
}

bool is_balanced(const GroupElement& w, std::size_t cap) {
  for (const auto& a : enumerate_group(w.params(), cap))
    if (left_divides(a, w) != right_divides(a, w)) return false;
  return true;
}

std::vector<GroupElement> balanced_max_length(const GroupParams& params, std::size_t cap) {
  std::vector<GroupElement> out;
  for (const auto& w : maximal_length_elements(params, cap))
    if (is_balanced(w, cap)) out.push_back(w);
  return out;
}

// ---------------------------------------------------------------------------

BitRow& BitRow::operator&=(const BitRow& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool BitRow::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitRow::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitRow::find_first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return bits_;
}

std::size_t BitRow::find_last() const {
  for (std::size_t i = words_.size(); i-- > 0;)
    if (words_[i]) return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[i]));
  return bits_;
}

bool BitRow::is_subset_of(const BitRow& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<std::size_t> BitRow::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::vector<std::uint8_t> BitRow::bytes() const {
  std::vector<std::uint8_t> out((bits_ + 7) / 8, 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint8_t>(words_[i / 8] >> (8 * (i % 8)));
  return out;
}

// ---------------------------------------------------------------------------

std::optional<int> Interval::ordinal(const GroupElement& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Interval::ordinal_of(const GroupElement& w) const {
  auto o = ordinal(w);
  if (!o) throw std::out_of_range("element is not a member of the interval");
  return *o;
}

LatticeResult Interval::meet(Side side, int a, int b) const {
  const auto& div = divisors[idx(side)];
  const auto& mult = multiples[idx(side)];
  BitRow common = div[a] & div[b];
  const auto top = static_cast<int>(common.find_last());
  if (common.is_subset_of(div[top])) return {top, {}};
  LatticeResult r;
  for (auto c : common.indices())
    if ((mult[c] & common).count() == 1) r.antichain.push_back(static_cast<int>(c));
  return r;
}

LatticeResult Interval::join(Side side, int a, int b) const {
  const auto& div = divisors[idx(side)];
  const auto& mult = multiples[idx(side)];
  BitRow common = mult[a] & mult[b];
  if (common.none()) return {};
  const auto bottom = static_cast<int>(common.find_first());
  if (common.is_subset_of(mult[bottom])) return {bottom, {}};
  LatticeResult r;
  for (auto c : common.indices())
    if ((div[c] & common).count() == 1) r.antichain.push_back(static_cast<int>(c));
  return r;
}

namespace {

Interval collect_members(const GroupParams& params, int k, std::size_t cap) {
  validate_interval_params(params, k);
  const GroupElement top = lambda_power(params, k);
  Interval out;
  out.params = params;
  out.k = k;
  std::vector<std::pair<int, GroupElement>> keyed;
  for (const auto& w : enumerate_group(params, cap)) {
    const bool staircase = in_Dk(w, k);
    const bool left = left_divides(w, top);
    const bool right = right_divides(w, top);
    if (staircase != left || staircase != right) {
      std::ostringstream os;
      os << "interval mismatch at " << w << ": staircase=" << staircase << " left=" << left << " right=" << right;
      throw TheoremViolation(os.str());
    }
    if (staircase) keyed.emplace_back(length(w), w);
  }
  std::sort(keyed.begin(), keyed.end());
  for (auto& [l, w] : keyed) {
    out.lengths.push_back(l);
    out.members.push_back(w);
  }
  const std::size_t m = out.members.size();
  for (auto& side : out.divisors) side.assign(m, BitRow(m));
  for (auto& side : out.multiples) side.assign(m, BitRow(m));
  return out;
}

}  // namespace

Interval build_interval(const GroupParams& params, int k, std::size_t cap) {
  Interval out = collect_members(params, k, cap);
  const std::size_t m = out.members.size();
  for (std::size_t i = 0; i < m; ++i) out.index_.emplace(out.members[i], static_cast<int>(i));
  std::vector<GroupElement> inverses;
  for (const auto& w : out.members) inverses.push_back(inverse(w));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const int gap = out.lengths[b] - out.lengths[a];
      if (gap < 0) continue;
      if (length(inverses[a] * out.members[b]) == gap) {
        out.divisors[0][b].set(a);
        out.multiples[0][a].set(b);
      }
      if (length(out.members[b] * inverses[a]) == gap) {
        out.divisors[1][b].set(a);
        out.multiples[1][a].set(b);
      }
    }
  return out;
}

Interval build_interval_by_lemma(const GroupParams& params, int k, std::size_t cap) {
  Interval out = collect_members(params, k, cap);
  const std::size_t m = out.members.size();
  for (std::size_t i = 0; i < m; ++i) out.index_.emplace(out.members[i], static_cast<int>(i));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (left_divides(out.members[a], out.members[b])) {
        out.divisors[0][b].set(a);
        out.multiples[0][a].set(b);
      }
      if (right_divides(out.members[a], out.members[b])) {
        out.divisors[1][b].set(a);
        out.multiples[1][a].set(b);
      }
    }
  return out;
}

LatticeReport verify_lattice(const Interval& interval) {
  LatticeReport report;
  const int m = static_cast<int>(interval.size());
  auto record = [&](bool& flag, const char* what, int a, int b, const LatticeResult& r) {
    if (r.ok() || !flag) return;
    flag = false;
    if (!report.counterexample) {
      report.counterexample = std::make_pair(a, b);
      std::ostringstream os;
      os << what << " fails for members " << a << " and " << b << "; candidates:";
      for (int c : r.antichain) os << ' ' << c;
      report.detail = os.str();
    }
  };
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      record(report.meet_left, "left meet", a, b, interval.meet(Side::Left, a, b));
      record(report.join_left, "left join", a, b, interval.join(Side::Left, a, b));
      record(report.meet_right, "right meet", a, b, interval.meet(Side::Right, a, b));
      record(report.join_right, "right join", a, b, interval.join(Side::Right, a, b));
    }
  return report;
}

AtomLcmTable atom_lcm_table(const Interval& interval) {
  const GroupParams p = interval.params;
  const int k = interval.k;
  AtomLcmTable table;
  table.atoms = generators(p);
  const std::size_t a = table.atoms.size();
  table.left.assign(a, std::vector<int>(a, -1));
  table.right.assign(a, std::vector<int>(a, -1));

  auto gm = [&](const Generator& g) { return generator_matrix(g, p); };
  auto fail = [&](const Generator& x, const Generator& y, const std::string& why) {
    table.failures.push_back(x.to_string() + " v " + y.to_string() + ": " + why);
  };

  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) {
      const Generator x = table.atoms[i];
      const Generator y = table.atoms[j];
      const auto ox = interval.ordinal(gm(x));
      const auto oy = interval.ordinal(gm(y));
      if (!ox || !oy) {
        fail(x, y, "atom outside the interval");
        continue;
      }
      const auto l = interval.join(Side::Left, *ox, *oy);
      const auto r = interval.join(Side::Right, *ox, *oy);
      if (!l.ok() || !r.ok()) {
        fail(x, y, "join missing");
        continue;
      }
      table.left[i][j] = *l.value;
      table.right[i][j] = *r.value;
      if (*l.value != *r.value) fail(x, y, "left and right joins differ");

      std::optional<GroupElement> expected;
      if (x == y) {
        expected = gm(x);
      } else if (x.is_t() && y.is_t()) {
        expected = gm(Generator::t(k)) * gm(Generator::t(0));
      } else if (x.is_t() != y.is_t()) {
        const Generator s = x.is_s() ? x : y;
        const Generator t = x.is_t() ? x : y;
        expected = s.index == 3 ? gm(s) * gm(t) * gm(s) : gm(t) * gm(s);
      } else {
        const int lo = std::min(x.index, y.index);
        const int hi = std::max(x.index, y.index);
        const auto slo = gm(Generator::s(lo));
        const auto shi = gm(Generator::s(hi));
        expected = hi == lo + 1 ? slo * shi * slo : slo * shi;
      }
      if (interval.members[*l.value] != *expected) fail(x, y, "closed-form identity fails");
    }
  return table;
}

}  // namespace garside
