#include "garside/io.hpp"

#include <algorithm>
#include <boost/archive/iterators/base64_from_binary.hpp>
#include <boost/archive/iterators/binary_from_base64.hpp>
#include <boost/archive/iterators/transform_width.hpp>
#include <sstream>
#include <stdexcept>

#include "garside/words.hpp"

namespace garside::io {

Json to_json(const GroupElement& w) {
  return Json{{"e", w.params().e}, {"n", w.params().n}, {"perm", w.perm_vector()}, {"exps", w.exps_vector()}};
}

GroupElement element_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("element: expected a JSON object");
  for (const char* key : {"e", "n", "perm", "exps"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("element: missing \"") + key + "\"");
  const GroupParams p{j.at("e").get<int>(), j.at("n").get<int>()};
  p.validate();
  const auto perm = j.at("perm").get<std::vector<int>>();
  const auto exps = j.at("exps").get<std::vector<int>>();
  return GroupElement(p, perm, exps);
}

GroupElement element_from_json(std::string_view text, const GroupParams& expected) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& err) {
    throw std::invalid_argument(std::string("element: ") + err.what());
  }
  const GroupElement w = element_from_json(j);
  if (!(w.params() == expected))
    throw std::invalid_argument("element: e/n in the JSON do not match the command line");
  return w;
}

Json to_json(const GarsideStructure& g, const NormalForm& nf) {
  Json factors = Json::array();
  for (int s : nf.factors) factors.push_back(to_json(g.element(s)));
  return Json{{"delta_power", nf.delta_power}, {"factors", factors}};
}

namespace {

Json integer(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

}  // namespace

Json to_json(const AbelianGroup& a) {
  Json torsion = Json::array();
  for (const auto& t : a.torsion) torsion.push_back(integer(t));
  return Json{{"free_rank", a.free_rank}, {"torsion", torsion}};
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer(m.at(r, c)));
    out.push_back(row);
  }
  return out;
}

std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
  using namespace boost::archive::iterators;
  using It = base64_from_binary<transform_width<std::vector<std::uint8_t>::const_iterator, 6, 8>>;
  std::string out(It(bytes.begin()), It(bytes.end()));
  out.append((3 - bytes.size() % 3) % 3, '=');
  return out;
}

std::vector<std::uint8_t> base64_decode(std::string_view text) {
  using namespace boost::archive::iterators;
  using It = transform_width<binary_from_base64<std::string::const_iterator>, 8, 6>;
  std::string body(text);
  const std::size_t pad = body.size() - std::min(body.size(), body.find_last_not_of('=') + 1);
  if (body.size() % 4 != 0 || pad > 2) throw std::invalid_argument("base64: malformed input");
  std::replace(body.end() - static_cast<std::ptrdiff_t>(pad), body.end(), '=', 'A');
  std::vector<std::uint8_t> out;
  try {
    for (It it(body.cbegin()), end(body.cend()); it != end; ++it) out.push_back(static_cast<std::uint8_t>(*it));
  } catch (const std::exception&) {
    throw std::invalid_argument("base64: malformed input");
  }
  out.resize(out.size() - pad);
  return out;
}

std::string interval_dot(const Interval& interval) {
  std::ostringstream os;
  os << "digraph interval {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for (std::size_t a = 0; a < interval.size(); ++a) {
    const Word w = reduced_expression(interval.members[a]);
    os << "  m" << a << " [label=\"" << (w.empty() ? std::string("1") : to_string(w)) << "\"];\n";
  }
  for (std::size_t b = 0; b < interval.size(); ++b)
    for (std::size_t a : interval.divisors[0][b].indices())
      if (interval.lengths[a] + 1 == interval.lengths[b]) os << "  m" << a << " -> m" << b << ";\n";
  os << "}\n";
  return os.str();
}

Json interval_json(const Interval& interval) {
  Json members = Json::array();
  for (const auto& w : interval.members) members.push_back(to_json(w));
  auto rows = [&](int side) {
    Json out = Json::array();
    for (const auto& row : interval.divisors[side]) out.push_back(base64_encode(row.bytes()));
    return out;
  };
  return Json{{"e", interval.params.e},
              {"n", interval.params.n},
              {"k", interval.k},
              {"size", interval.size()},
              {"members", members},
              {"lengths", interval.lengths},
              {"left_divisors", rows(0)},
              {"right_divisors", rows(1)}};
}

}  // namespace garside::io
