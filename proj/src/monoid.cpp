#include "garside/monoid.hpp"

#include <sstream>

#include "garside/words.hpp"

namespace garside {

std::string Letter::to_string() const {
  std::string base = kind == Kind::Delta ? "D" : atom.to_string();
  return inverse ? base + "^-1" : base;
}

SignedWord parse_signed_word(std::string_view text, const GroupParams& params) {
  SignedWord out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    Letter letter;
    std::string_view body = token;
    if (const auto caret = body.find('^'); caret != std::string_view::npos) {
      if (body.substr(caret) != "^-1") throw std::invalid_argument("only ^-1 exponents are accepted: '" + token + "'");
      letter.inverse = true;
      body = body.substr(0, caret);
    }
    if (body == "D") {
      letter.kind = Letter::Kind::Delta;
    } else {
      letter.atom = Generator::parse(body);
      letter.atom.validate(params);
    }
    out.push_back(letter);
  }
  return out;
}

SignedWord to_signed(const Word& word) {
  SignedWord out;
  for (const auto& g : word) out.push_back(Letter{Letter::Kind::Atom, g, false});
  return out;
}

// ---------------------------------------------------------------------------

GarsideStructure::GarsideStructure(Interval interval, bool verify) : interval_(std::move(interval)) {
  if (verify) {
    const auto report = verify_lattice(interval_);
    if (!report.ok()) throw TheoremViolation("interval is not a lattice: " + report.detail);
  }
  const GroupParams p = interval_.params;
  for (const auto& g : generators(p)) {
    const auto o = interval_.ordinal(generator_matrix(g, p));
    if (!o) throw TheoremViolation("generator " + g.to_string() + " is not simple");
    atoms_.push_back(*o);
  }

  const std::size_t m = size();
  const GroupElement top = element(delta());
  const GroupElement top_inv = garside::inverse(top);
  auto lookup = [&](const GroupElement& w, const char* what) {
    const auto o = interval_.ordinal(w);
    if (!o) throw TheoremViolation(std::string(what) + " leaves the interval");
    return *o;
  };
  right_complement_.resize(m);
  left_complement_.resize(m);
  tau_.resize(m);
  tau_inv_.assign(m, -1);
  for (std::size_t s = 0; s < m; ++s) {
    const GroupElement inv = garside::inverse(element(static_cast<int>(s)));
    right_complement_[s] = lookup(inv * top, "right complement");
    left_complement_[s] = lookup(top * inv, "left complement");
    tau_[s] = lookup(top_inv * element(static_cast<int>(s)) * top, "conjugation by Delta");
    if (interval_.lengths[right_complement_[s]] + interval_.lengths[s] != interval_.lengths[delta()])
      throw TheoremViolation("complement lengths do not add up");
  }
  for (std::size_t s = 0; s < m; ++s) {
    if (tau_inv_[tau_[s]] != -1) throw TheoremViolation("conjugation by Delta is not a bijection of simples");
    tau_inv_[tau_[s]] = static_cast<int>(s);
  }

  meet_.assign(m * m, -1);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      const auto r = interval_.meet(Side::Left, static_cast<int>(a), static_cast<int>(b));
      if (!r.ok()) throw TheoremViolation("left meet is not unique");
      meet_[a * m + b] = meet_[b * m + a] = *r.value;
    }
}

std::size_t GarsideStructure::atom_slot(const Generator& g) const {
  g.validate(params());
  return g.is_t() ? static_cast<std::size_t>(g.index) : static_cast<std::size_t>(params().e + g.index - 3);
}

int GarsideStructure::product(int a, int b) const {
  const auto o = interval_.ordinal(element(a) * element(b));
  return o ? *o : -1;
}

std::pair<int, int> GarsideStructure::normalize_pair(int a, int b) const {
  const int t = meet_left(complement(a), b);
  if (t == identity()) return {a, b};
  const int head = product(a, t);
  const auto tail = interval_.ordinal(garside::inverse(element(t)) * element(b));
  if (head < 0 || !tail) throw TheoremViolation("local normalization left the interval");
  return {head, *tail};
}

void GarsideStructure::renormalize(NormalForm& nf) const {
  auto& f = nf.factors;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = f.size(); i-- > 1;) {
      const auto [x, y] = normalize_pair(f[i - 1], f[i]);
      if (x != f[i - 1] || y != f[i]) {
        f[i - 1] = x;
        f[i] = y;
        changed = true;
      }
    }
  }
  std::size_t lead = 0;
  while (lead < f.size() && f[lead] == delta()) ++lead;
  nf.delta_power += static_cast<int>(lead);
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
  while (!f.empty() && f.back() == identity()) f.pop_back();
}

void GarsideStructure::right_multiply(NormalForm& nf, int simple) const {
  if (simple == identity()) return;
  if (simple == delta()) {
    right_multiply_delta(nf, 1);
    return;
  }
  nf.factors.push_back(simple);
  renormalize(nf);
}

void GarsideStructure::right_multiply_inverse(NormalForm& nf, int simple) const {
  right_multiply_delta(nf, -1);
  right_multiply(nf, left_complement(simple));
}

void GarsideStructure::right_multiply_delta(NormalForm& nf, int power) const {
  // s Delta = Delta tau(s).
  for (int i = 0; i < power; ++i)
    for (auto& f : nf.factors) f = tau(f);
  for (int i = 0; i > power; --i)
    for (auto& f : nf.factors) f = tau_inverse(f);
  nf.delta_power += power;
}

NormalForm GarsideStructure::from_simple(int s) const {
  NormalForm nf;
  right_multiply(nf, s);
  return nf;
}

NormalForm GarsideStructure::normal_form(const SignedWord& word) const {
  NormalForm nf;
  for (const auto& letter : word) {
    if (letter.kind == Letter::Kind::Delta) {
      right_multiply_delta(nf, letter.inverse ? -1 : 1);
    } else if (letter.inverse) {
      right_multiply_inverse(nf, atom(letter.atom));
    } else {
      right_multiply(nf, atom(letter.atom));
    }
  }
  return nf;
}

NormalForm GarsideStructure::normal_form(std::string_view text) const {
  return normal_form(parse_signed_word(text, params()));
}

NormalForm GarsideStructure::multiply(const NormalForm& a, const NormalForm& b) const {
  NormalForm r = a;
  right_multiply_delta(r, b.delta_power);
  for (int f : b.factors) right_multiply(r, f);
  return r;
}

NormalForm GarsideStructure::inverse(const NormalForm& a) const {
  NormalForm r;
  for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it) right_multiply_inverse(r, *it);
  right_multiply_delta(r, -a.delta_power);
  return r;
}

bool GarsideStructure::words_equal(std::string_view w1, std::string_view w2) const {
  return normal_form(w1) == normal_form(w2);
}

GroupElement GarsideStructure::image(const NormalForm& nf) const {
  const GroupParams p = params();
  GroupElement out = GroupElement::identity(p);
  const GroupElement top = nf.delta_power >= 0 ? element(delta()) : garside::inverse(element(delta()));
  for (int i = 0; i < std::abs(nf.delta_power); ++i) out = out * top;
  for (int f : nf.factors) out = out * element(f);
  return out;
}

std::string GarsideStructure::to_string(const NormalForm& nf) const {
  std::vector<std::string> parts;
  if (nf.delta_power != 0) parts.push_back("D^" + std::to_string(nf.delta_power));
  for (int f : nf.factors) parts.push_back(garside::to_string(reduced_expression(element(f))));
  if (parts.empty()) return "1";
  std::string out;
  for (const auto& part : parts) out += (out.empty() ? "" : " . ") + part;
  return out;
}

// ---------------------------------------------------------------------------

EmbeddingCheck embedding_lcm_check(const GarsideStructure& g, int i) {
  const GroupParams p = g.params();
  if (p.n < 3) throw std::invalid_argument("embedding check needs n >= 3");
  const int e = p.e;
  const int k = g.k();
  const int ti = g.atom(Generator::t(((i % e) + e) % e));
  const int tik = g.atom(Generator::t((((i - k) % e) + e) % e));
  std::vector<int> images;  // images[m-1] = image of q_m
  const int q1 = g.product(ti, tik);
  if (q1 < 0) throw TheoremViolation("t_i t_{i-k} is not simple");
  images.push_back(q1);
  for (int m = 2; m <= p.n - 1; ++m) images.push_back(g.atom(Generator::s(m + 1)));

  EmbeddingCheck out;
  const int r = static_cast<int>(images.size());
  for (int a = 1; a <= r; ++a)
    for (int b = a + 1; b <= r; ++b) {
      const int m = (a == 1 && b == 2) ? 4 : (b == a + 1 ? 3 : 2);
      NormalForm ab, ba;
      for (int step = 0; step < m; ++step) {
        g.right_multiply(ab, images[(step % 2 == 0 ? a : b) - 1]);
        g.right_multiply(ba, images[(step % 2 == 0 ? b : a) - 1]);
      }
      const auto join = g.interval().join(Side::Left, images[a - 1], images[b - 1]);
      ++out.pairs_checked;
      std::ostringstream why;
      if (!join.ok()) {
        why << "no unique join for q" << a << ", q" << b;
      } else if (g.from_simple(*join.value) != ab || ab != ba) {
        why << "join of images of q" << a << ", q" << b << " is " << g.to_string(g.from_simple(*join.value))
            << " but the image of the lcm is " << g.to_string(ab);
      } else {
        continue;
      }
      out.ok = false;
      out.failures.push_back(why.str());
    }
  return out;
}

}  // namespace garside
