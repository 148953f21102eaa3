#include <gtest/gtest.h>

#include <random>

#include "garside/io.hpp"
#include "garside/words.hpp"

using namespace garside;

TEST(ElementJson, RoundTrip) {
  const GroupParams p{3, 4};
  const std::string text = R"({"e":3,"n":4,"perm":[4,2,3,1],"exps":[0,2,1,0]})";
  const GroupElement w = io::element_from_json(text, p);
  EXPECT_EQ(io::to_json(w).dump(), text);
  EXPECT_EQ(io::element_from_json(io::to_json(w)), w);
  for (std::size_t r = 0; r < group_order(p); r += 37) {
    const auto x = group_unrank(p, r);
    EXPECT_EQ(io::element_from_json(io::to_json(x)), x);
  }
}

TEST(ElementJson, Rejects) {
  const GroupParams p{3, 4};
  EXPECT_THROW(io::element_from_json(R"({"e":3,"n":4,"perm":[4,2,3,1]})", p), std::invalid_argument);
  EXPECT_THROW(io::element_from_json(R"({"e":3,"n":3,"perm":[1,2,3],"exps":[0,0,0]})", p), std::invalid_argument);
  EXPECT_THROW(io::element_from_json("{not json", p), std::invalid_argument);
  EXPECT_THROW(io::element_from_json(R"({"e":3,"n":4,"perm":[1,1,3,4],"exps":[0,0,0,0]})", p), std::invalid_argument);
  EXPECT_THROW(io::element_from_json(R"({"e":3,"n":4,"perm":[1,2,3,4],"exps":[1,0,0,0]})", p), std::invalid_argument);
}

TEST(Base64, KnownVectors) {
  auto bytes = [](std::string s) { return std::vector<std::uint8_t>(s.begin(), s.end()); };
  EXPECT_EQ(io::base64_encode(bytes("")), "");
  EXPECT_EQ(io::base64_encode(bytes("f")), "Zg==");
  EXPECT_EQ(io::base64_encode(bytes("fo")), "Zm8=");
  EXPECT_EQ(io::base64_encode(bytes("foo")), "Zm9v");
  EXPECT_EQ(io::base64_encode(bytes("foobar")), "Zm9vYmFy");
  EXPECT_EQ(io::base64_decode("Zm9vYg=="), bytes("foob"));
  EXPECT_THROW(io::base64_decode("Zm9"), std::invalid_argument);
}

TEST(Base64, RandomRoundTrip) {
  std::mt19937 rng(7);
  for (int len = 0; len < 40; ++len) {
    std::vector<std::uint8_t> b(len);
    for (auto& x : b) x = static_cast<std::uint8_t>(rng());
    EXPECT_EQ(io::base64_decode(io::base64_encode(b)), b);
  }
}

TEST(IntervalExport, JsonRowsDecodeToDivisors) {
  const Interval iv = build_interval({3, 3}, 2);
  const auto j = io::interval_json(iv);
  EXPECT_EQ(j["size"], iv.size());
  ASSERT_EQ(j["members"].size(), iv.size());
  for (std::size_t b = 0; b < iv.size(); ++b) {
    EXPECT_EQ(io::element_from_json(j["members"][b]), iv.members[b]);
    for (int side = 0; side < 2; ++side) {
      const auto bytes = io::base64_decode(j[side == 0 ? "left_divisors" : "right_divisors"][b].get<std::string>());
      for (std::size_t a = 0; a < iv.size(); ++a) {
        const bool bit = (bytes.at(a / 8) >> (a % 8)) & 1;
        EXPECT_EQ(bit, iv.divides(side == 0 ? Side::Left : Side::Right, a, b));
      }
    }
  }
}

TEST(IntervalExport, DotHasCoveringEdgesOnly) {
  const Interval iv = build_interval({2, 3}, 1);
  const std::string dot = io::interval_dot(iv);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; ++pos) ++edges;
  std::size_t covers = 0;
  for (std::size_t b = 0; b < iv.size(); ++b)
    for (std::size_t a = 0; a < iv.size(); ++a)
      if (iv.divides(Side::Left, a, b) && iv.lengths[a] + 1 == iv.lengths[b]) ++covers;
  EXPECT_EQ(edges, covers);
  EXPECT_NE(dot.find("m0 [label=\"1\"]"), std::string::npos);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
}

TEST(GroupJson, AbelianAndMatrix) {
  EXPECT_EQ(io::to_json(make_abelian_group(1, {3})).dump(), R"({"free_rank":1,"torsion":[3]})");
  EXPECT_EQ(io::to_json(make_abelian_group(0, {})).dump(), R"({"free_rank":0,"torsion":[]})");
  AbelianGroup big;
  big.torsion.push_back(BigInt("100000000000000000000000"));
  EXPECT_EQ(io::to_json(big)["torsion"][0], "100000000000000000000000");
  IntMatrix m(2, 2);
  m.at(0, 1) = -4;
  EXPECT_EQ(io::to_json(m).dump(), "[[0,-4],[0,0]]");
}
