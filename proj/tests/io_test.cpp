#include <gtest/gtest.h>

#include "parabolic/random.hpp"
#include "parabolic/workspace.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_workspace(text);
  } catch (const DomainError& e) {
    return e.what();
  }
  return "";
}

const char* kBase = R"({
  "curves": [{"name": "X", "genus": 0, "points": ["p"]}, {"name": "Y", "genus": 0, "points": []}],
  "coverings": [{"name": "f", "source": "Y", "target": "X", "degree": 2,
                 "fibers": [{"base": "p", "above": [{"point": "y1", "e": 2}]},
                            {"base": "b", "above": [{"point": "y2", "e": 2}]}]}],
  "bundles": [{"name": "E", "curve": "X",
               "atoms": [{"rank": 2, "degree": -1, "weights": {"p": [{"w": "0", "m": 1}, {"w": "1/2", "m": 1}]}}]}]
})";

}  // namespace

TEST(Workspace, ParsesAndRoundTrips) {
  Workspace ws = parse_workspace(kBase);
  EXPECT_EQ(par_deg(ws.bundle("E")), q(-1, 2));
  EXPECT_EQ(ws.covering("f").degree(), 2);
  std::string once = save_workspace(ws);
  EXPECT_EQ(save_workspace(parse_workspace(once)), once);
  EXPECT_EQ(once.back(), '\n');
}

TEST(Workspace, RandomRoundTrips) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto r = random_instance(mix_seed(31, i));
    Workspace ws;
    add_to_workspace(ws, r.covering);
    add_to_workspace(ws, "E", r.target_bundle);
    add_to_workspace(ws, "V", r.source_bundle);
    Workspace back = parse_workspace(save_workspace(ws));
    ASSERT_EQ(back.bundle("E"), r.target_bundle);
    ASSERT_EQ(back.bundle("V"), r.source_bundle);
    ASSERT_EQ(back.covering(r.covering.name()), r.covering);
  }
}

TEST(Workspace, WeightOutOfRange) {
  std::string text = kBase;
  text.replace(text.find("\"1/2\""), 5, "\"3/2\"");
  EXPECT_NE(error_of(text).find("outside [0,1)"), std::string::npos);
}

TEST(Workspace, FiberSumQuoted) {
  std::string text = kBase;
  text.replace(text.find("\"e\": 2"), 6, "\"e\": 1");
  std::string msg = error_of(text);
  EXPECT_NE(msg.find("fiber"), std::string::npos);
  EXPECT_NE(msg.find("1"), std::string::npos);
}

TEST(Workspace, RejectsUnknownFieldsAndReferences) {
  std::string text = kBase;
  text.replace(text.find("\"genus\": 0"), 10, "\"genus\": 0, \"colour\": 1");
  EXPECT_FALSE(error_of(text).empty());
  text = kBase;
  text.replace(text.find("\"curve\": \"X\""), 12, "\"curve\": \"Q\"");
  EXPECT_FALSE(error_of(text).empty());
  EXPECT_FALSE(error_of("{not json").empty());
  EXPECT_THROW(parse_workspace(kBase).bundle("nope"), DomainError);
}

TEST(Workspace, DerivedKindsRoundTrip) {
  Workspace ws = parse_workspace(kBase);
  auto spec = ParabolicBundle::from_spectrum(ws.curve("X"), {{1, q(1)}, {2, q(-1)}});
  Workspace out;
  add_to_workspace(out, "S", spec);
  EXPECT_EQ(parse_workspace(save_workspace(out)).bundle("S"), spec);
}
