#include "garside/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace garside {

std::size_t default_group_cap() {
  if (const char* env = std::getenv("GARSIDE_CAP")) {
    std::size_t value = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
  }
  return 1'000'000;
}

void GroupParams::validate() const {
  if (e < 2 || e > 255) throw std::invalid_argument("e must satisfy 2 <= e <= 255");
  if (n < 2 || n > kMaxRank)
    throw std::invalid_argument("n must satisfy 2 <= n <= " + std::to_string(kMaxRank));
}

void validate_interval_params(const GroupParams& params, int k) {
  params.validate();
  if (k < 1 || k > params.e - 1) throw std::invalid_argument("k must satisfy 1 <= k <= e-1");
}

namespace {
int mod(long long a, int e) {
  long long r = a % e;
  return static_cast<int>(r < 0 ? r + e : r);
}
}  // namespace

// Raw access for code in this file that builds elements without revalidating.
class ElementBuilder {
 public:
  static GroupElement blank(GroupParams p) {
    GroupElement w;
    w.e_ = p.e;
    w.n_ = p.n;
    for (int i = 0; i < p.n; ++i) w.perm_[i] = static_cast<std::uint8_t>(i);
    return w;
  }
  static std::uint8_t& perm(GroupElement& w, int i) { return w.perm_[i]; }
  static std::uint8_t& exp(GroupElement& w, int i) { return w.exps_[i]; }
};

GroupElement::GroupElement(GroupParams params, std::span<const int> perm,
                           std::span<const int> exps) {
  params.validate();
  if (static_cast<int>(perm.size()) != params.n || static_cast<int>(exps.size()) != params.n)
    throw std::invalid_argument("perm and exps must both have length n");
  e_ = params.e;
  n_ = params.n;
  std::array<bool, kMaxRank> seen{};
  long long sum = 0;
  for (int i = 0; i < n_; ++i) {
    const int c = perm[i];
    if (c < 1 || c > n_ || seen[c - 1]) throw std::invalid_argument("perm is not a permutation of 1..n");
    seen[c - 1] = true;
    perm_[i] = static_cast<std::uint8_t>(c - 1);
    exps_[i] = static_cast<std::uint8_t>(mod(exps[i], e_));
    sum += exps_[i];
  }
  if (sum % e_ != 0) throw std::invalid_argument("exponent sum must be 0 mod e");
}

GroupElement GroupElement::identity(GroupParams params) {
  params.validate();
  return ElementBuilder::blank(params);
}

std::vector<int> GroupElement::perm_vector() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = perm_[i] + 1;
  return out;
}

std::vector<int> GroupElement::exps_vector() const {
  return std::vector<int>(exps_.begin(), exps_.begin() + n_);
}

bool GroupElement::is_identity() const { return is_diagonal() && std::all_of(exps_.begin(), exps_.begin() + n_, [](auto x) { return x == 0; }); }

bool GroupElement::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    if (perm_[i] != i) return false;
  return true;
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (auto c = a.perm_ <=> b.perm_; c != 0) return c;
  return a.exps_ <=> b.exps_;
}

GroupElement operator*(const GroupElement& u, const GroupElement& v) {
  if (u.e_ != v.e_ || u.n_ != v.n_) throw std::invalid_argument("multiply: parameter mismatch");
  GroupElement r = ElementBuilder::blank(u.params());
  for (int i = 0; i < u.n_; ++i) {
    const int mid = u.perm_[i];
    r.perm_[i] = v.perm_[mid];
    r.exps_[i] = static_cast<std::uint8_t>((u.exps_[i] + v.exps_[mid]) % u.e_);
  }
  return r;
}

GroupElement multiply(const GroupElement& u, const GroupElement& v) { return u * v; }

GroupElement inverse(const GroupElement& w) {
  GroupElement r = ElementBuilder::blank(w.params());
  for (int i = 0; i < w.n_; ++i) {
    const int c = w.perm_[i];
    r.perm_[c] = static_cast<std::uint8_t>(i);
    r.exps_[c] = static_cast<std::uint8_t>((w.e_ - w.exps_[i]) % w.e_);
  }
  return r;
}

GroupElement transpose(const GroupElement& w) {
  GroupElement r = ElementBuilder::blank(w.params());
  for (int i = 0; i < w.n_; ++i) {
    const int c = w.perm_[i];
    r.perm_[c] = static_cast<std::uint8_t>(i);
    r.exps_[c] = w.exps_[i];
  }
  return r;
}

std::size_t GroupElement::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int i = 0; i < n_; ++i) {
    h = (h ^ perm_[i]) * 1099511628211ull;
    h = (h ^ exps_[i]) * 1099511628211ull;
  }
  return h ^ (static_cast<std::size_t>(e_) << 40);
}

std::ostream& operator<<(std::ostream& os, const GroupElement& w) {
  os << "{e=" << w.e() << ",n=" << w.n() << ",perm=[";
  for (int i = 1; i <= w.n(); ++i) os << (i > 1 ? "," : "") << w.column(i);
  os << "],exps=[";
  for (int i = 1; i <= w.n(); ++i) os << (i > 1 ? "," : "") << w.exponent(i);
  return os << "]}";
}

// ---------------------------------------------------------------------------

void Generator::validate(const GroupParams& params) const {
  if (kind == Kind::T) {
    if (index < 0 || index >= params.e)
      throw std::invalid_argument("generator t" + std::to_string(index) + " out of range for e=" +
                                  std::to_string(params.e));
  } else if (index < 3 || index > params.n) {
    throw std::invalid_argument("generator s" + std::to_string(index) + " out of range for n=" +
                                std::to_string(params.n));
  }
}

std::string Generator::to_string() const {
  return (kind == Kind::T ? "t" : "s") + std::to_string(index);
}

Generator Generator::parse(std::string_view token) {
  if (token.size() < 2 || (token[0] != 't' && token[0] != 's'))
    throw std::invalid_argument("bad generator token '" + std::string(token) + "'");
  int value = 0;
  const auto digits = token.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 0)
    throw std::invalid_argument("bad generator token '" + std::string(token) + "'");
  return {token[0] == 't' ? Kind::T : Kind::S, value};
}

std::vector<Generator> generators(const GroupParams& params) {
  std::vector<Generator> out;
  for (int i = 0; i < params.e; ++i) out.push_back(Generator::t(i));
  for (int j = 3; j <= params.n; ++j) out.push_back(Generator::s(j));
  return out;
}

GroupElement generator_matrix(const Generator& g, const GroupParams& params) {
  params.validate();
  g.validate(params);
  GroupElement w = ElementBuilder::blank(params);
  if (g.is_t()) {
    ElementBuilder::perm(w, 0) = 1;
    ElementBuilder::perm(w, 1) = 0;
    ElementBuilder::exp(w, 0) = static_cast<std::uint8_t>(mod(-g.index, params.e));
    ElementBuilder::exp(w, 1) = static_cast<std::uint8_t>(mod(g.index, params.e));
  } else {
    const int a = g.index - 1;  // 0-based rows j-2 and j-1
    ElementBuilder::perm(w, a - 1) = static_cast<std::uint8_t>(a);
    ElementBuilder::perm(w, a) = static_cast<std::uint8_t>(a - 1);
  }
  return w;
}

std::string to_string(const Word& word) {
  std::string out;
  for (const auto& g : word) {
    if (!out.empty()) out += ' ';
    out += g.to_string();
  }
  return out;
}

Word parse_word(std::string_view text, const GroupParams& params) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.find('^') != std::string::npos)
      throw std::invalid_argument("inverse letters are not accepted here: '" + token + "'");
    Generator g = Generator::parse(token);
    g.validate(params);
    out.push_back(g);
  }
  return out;
}

GroupElement evaluate(const Word& word, const GroupParams& params) {
  GroupElement w = GroupElement::identity(params);
  for (const auto& g : word) w = w * generator_matrix(g, params);
  return w;
}

// ---------------------------------------------------------------------------

std::size_t group_order(const GroupParams& params) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t order = 1;
  for (int i = 2; i <= params.n; ++i) {
    if (order > kMax / static_cast<std::size_t>(i)) return kMax;
    order *= static_cast<std::size_t>(i);
  }
  for (int i = 1; i < params.n; ++i) {
    if (order > kMax / static_cast<std::size_t>(params.e)) return kMax;
    order *= static_cast<std::size_t>(params.e);
  }
  return order;
}

std::size_t group_rank(const GroupElement& w) {
  const int n = w.n();
  const int e = w.e();
  std::size_t perm_rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j <= n; ++j)
      if (w.column(j) < w.column(i)) ++smaller_after;
    perm_rank = perm_rank * static_cast<std::size_t>(n - i + 1) + static_cast<std::size_t>(smaller_after);
  }
  std::size_t exp_rank = 0;
  for (int i = 1; i < n; ++i) exp_rank = exp_rank * static_cast<std::size_t>(e) + static_cast<std::size_t>(w.exponent(i));
  std::size_t block = 1;
  for (int i = 1; i < n; ++i) block *= static_cast<std::size_t>(e);
  return perm_rank * block + exp_rank;
}

GroupElement group_unrank(const GroupParams& params, std::size_t rank) {
  params.validate();
  const int n = params.n;
  const int e = params.e;
  if (rank >= group_order(params)) throw std::out_of_range("group_unrank: rank out of range");
  std::size_t block = 1;
  for (int i = 1; i < n; ++i) block *= static_cast<std::size_t>(e);
  std::size_t perm_rank = rank / block;
  std::size_t exp_rank = rank % block;

  GroupElement w = ElementBuilder::blank(params);
  // Lehmer code digits, most significant first (radices n, n-1, ..., 1).
  std::array<int, kMaxRank> code{};
  for (int i = n - 1; i >= 0; --i) {
    const auto radix = static_cast<std::size_t>(n - i);
    code[i] = static_cast<int>(perm_rank % radix);
    perm_rank /= radix;
  }
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  for (int i = 0; i < n; ++i) {
    ElementBuilder::perm(w, i) = static_cast<std::uint8_t>(remaining[code[i]]);
    remaining.erase(remaining.begin() + code[i]);
  }
  int sum = 0;
  for (int i = n - 2; i >= 0; --i) {
    const int digit = static_cast<int>(exp_rank % static_cast<std::size_t>(e));
    exp_rank /= static_cast<std::size_t>(e);
    ElementBuilder::exp(w, i) = static_cast<std::uint8_t>(digit);
    sum += digit;
  }
  ElementBuilder::exp(w, n - 1) = static_cast<std::uint8_t>(mod(-sum, e));
  return w;
}

std::vector<GroupElement> enumerate_group(const GroupParams& params, std::size_t cap) {
  params.validate();
  const std::size_t order = group_order(params);
  if (order > cap) throw CapExceeded("enumerate_group: group too large", order, cap);
  std::vector<GroupElement> out;
  out.reserve(order);
  for (std::size_t r = 0; r < order; ++r) out.push_back(group_unrank(params, r));
  return out;
}

GroupElement lambda_power(const GroupParams& params, int k) {
  params.validate();
  if (k < 0) throw std::invalid_argument("lambda_power: k must be non-negative");
  GroupElement w = ElementBuilder::blank(params);
  const int e = params.e;
  ElementBuilder::exp(w, 0) = static_cast<std::uint8_t>(mod(-static_cast<long long>(k) * (params.n - 1), e));
  for (int i = 1; i < params.n; ++i) ElementBuilder::exp(w, i) = static_cast<std::uint8_t>(mod(k, e));
  return w;
}

}  // namespace garside
