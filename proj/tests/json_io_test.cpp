#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace smyth;
using nlohmann::json;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(JsonIo, ParseErrorNamesLine) {
  auto msg = error_of([] { parse_json("{\n  \"points\": [\"a\",\n  ]\n}", "bad.json"); });
  EXPECT_EQ(msg.rfind("bad.json:3:", 0), 0u) << msg;
}

TEST(JsonIo, MissingAndWrongFields) {
  EXPECT_NE(error_of([] { space_from_json(json{{"points", {"a"}}}); }).find("'opens'"), std::string::npos);
  EXPECT_NE(error_of([] { space_from_json(json::parse(R"({"points": ["a"], "opens": [["q"]]})")); }).find("opens[0][0]"),
            std::string::npos);
  EXPECT_NE(error_of([] { poset_from_json(json::parse(R"({"elements": ["a", "b"], "leq": [["a"]]})")); }).find("leq[0]"),
            std::string::npos);
  EXPECT_NE(error_of([] { poset_from_json(json{{"elements", {"a", "a"}}}); }).find("duplicate"), std::string::npos);
}

TEST(JsonIo, AxiomViolationIsNamed) {
  json j{{"points", {"a", "b", "c"}}, {"opens", json::array({json::array(), json{"a"}, json{"b"}, json{"a", "b", "c"}})}};
  EXPECT_NE(error_of([&] { space_from_json(j); }).find("topology axiom violated"), std::string::npos);
}

TEST(JsonIo, NonAntisymmetricPoset) {
  auto j = json::parse(R"({"elements": ["a", "b"], "leq": [["a", "b"], ["b", "a"]]})");
  EXPECT_NE(error_of([&] { poset_from_json(j); }).find("antisymmetric"), std::string::npos);
}

TEST(JsonIo, GenerateFromSubbasis) {
  auto j = json::parse(R"({"points": ["a", "b", "c"], "opens": [["a", "b"], ["b", "c"]], "generate": true})");
  auto t = space_from_json(j);
  EXPECT_TRUE(t.is_open(PointSet::of(3, {1})));
}

TEST(JsonIo, PosetFileBecomesScottSpace) {
  auto j = json::parse(R"({"elements": ["0", "1"], "leq": [["0", "1"]]})");
  auto t = space_or_poset_from_json(j);
  EXPECT_EQ(t, fixtures::scott(fixtures::chain2()));
}

TEST(JsonIo, SpaceRoundTrip) {
  auto t = fixtures::scott(fixtures::diamond());
  EXPECT_EQ(space_from_json(to_json(t)), t);
  auto p = fixtures::diamond();
  auto back = poset_from_json(to_json(p));
  EXPECT_EQ(static_cast<const Preorder&>(back), static_cast<const Preorder&>(p));
}

TEST(JsonIo, PowerSpaceRoundTrip) {
  auto ps = build_powerspace(fixtures::scott(fixtures::diamond()));
  auto t = space_from_json(powerspace_json(ps));
  EXPECT_EQ(t, ps.uv());
  auto side = powerspace_sidecar(ps, canonical_map(ps));
  EXPECT_EQ(side["xi"]["graph"]["a"], "{a,1}");
  EXPECT_TRUE(side["xi"]["injective"].get<bool>());
}

TEST(JsonIo, SpaceReportCarriesProofOrWitness) {
  auto sober = to_json(analyze(fixtures::sierpinski()), fixtures::sierpinski());
  for (const auto& key : {"sober", "well_filtered", "d_space", "coherent"}) {
    const auto& v = sober[key];
    EXPECT_TRUE(v.contains("witness") || v.contains("proof") || v.contains("note")) << key;
  }
  auto t = fixtures::indiscrete2();
  auto bad = to_json(analyze(t), t);
  EXPECT_FALSE(bad["sober"]["value"].get<bool>());
  EXPECT_EQ(bad["sober"]["witness"]["generic_points"], json({"a", "b"}));
  EXPECT_TRUE(bad["d_space"].contains("witness"));
}

TEST(JsonIo, DumpIsStable) {
  auto ps = build_powerspace(fixtures::discrete(3));
  EXPECT_EQ(dump(powerspace_json(ps)), dump(powerspace_json(build_powerspace(fixtures::discrete(3)))));
  EXPECT_EQ(dump(json{{"b", 1}, {"a", 2}}), "{\n  \"a\": 2,\n  \"b\": 1\n}\n");
}
