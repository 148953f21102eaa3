#pragma once

// JSON and DOT encodings shared by the command-line tool and the regression files.

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "garside/core.hpp"
#include "garside/monoid.hpp"
#include "garside/smith.hpp"

namespace garside::io {

using Json = nlohmann::ordered_json;

/// {"e":3,"n":4,"perm":[4,2,3,1],"exps":[0,2,1,0]}, perm 1-based.
Json to_json(const GroupElement& w);
/// Accepts an object or its text. When `expected` is given, e and n must agree.
GroupElement element_from_json(const Json& j);
GroupElement element_from_json(std::string_view text, const GroupParams& expected);

/// {"delta_power":p,"factors":[element,...]}
Json to_json(const GarsideStructure& g, const NormalForm& nf);

/// {"free_rank":r,"torsion":[...]}; torsion entries beyond 64 bits become strings.
Json to_json(const AbelianGroup& a);
/// Row-major nested arrays.
Json to_json(const IntMatrix& m);

std::string base64_encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> base64_decode(std::string_view text);

/// Hasse diagram of left divisibility: one node per member, edges on covering pairs.
std::string interval_dot(const Interval& interval);
/// Members, lengths and one base64 bit row per member for divisors on each side.
Json interval_json(const Interval& interval);

}  // namespace garside::io
