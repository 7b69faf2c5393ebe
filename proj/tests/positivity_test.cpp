#include <gtest/gtest.h>

#include "parabolic/positivity.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

const MarkedCurve kLine("X", 0);

ParabolicBundle line(std::int64_t d) { return bundle(kLine, {atom(1, d)}); }

}  // namespace

TEST(Classify, Examples) {
  auto l = classify(line(1));
  EXPECT_TRUE(l.ample);
  EXPECT_TRUE(l.nef);

  auto e = classify(ParabolicBundle::from_spectrum(kLine, {{1, q(1)}, {1, q(0)}}));
  EXPECT_TRUE(e.nef);
  EXPECT_FALSE(e.ample);

  auto neg = classify(ParabolicBundle::from_spectrum(kLine, {{2, q(-1)}}));
  EXPECT_TRUE(neg.anti_ample);
  EXPECT_TRUE(neg.anti_nef);
  EXPECT_FALSE(neg.nef);
  // the dual spectrum is [(2, 1)]
  EXPECT_EQ(-neg.mu_max, q(1, 2));
}

TEST(Harness, NefNeverFails) {
  auto r = nef_definitional_harness(ParabolicBundle::from_spectrum(kLine, {{1, q(1)}, {1, q(0)}}),
                                    line(1), 20);
  EXPECT_TRUE(r.nef);
  EXPECT_FALSE(r.first_failure);
  EXPECT_TRUE(r.consistent);
  ASSERT_EQ(r.steps.size(), 20u);
  for (const auto& s : r.steps) EXPECT_TRUE(s.ample);
}

TEST(Harness, FailsAtPredictedIndex) {
  // mu_min = -1/3: first k with k·(-1/3) + 1 <= 0 is 3
  auto e = bundle(kLine, {atom(3, -1), atom(1, 2)});
  ASSERT_EQ(mu_min(e), q(-1, 3));
  auto r = nef_definitional_harness(e, line(1));
  EXPECT_EQ(r.first_failure, 3);
  EXPECT_EQ(r.predicted_failure, 3);
  EXPECT_EQ(r.steps[1].mu_min, q(1, 3));
  EXPECT_EQ(r.steps[2].mu_min, 0);
  EXPECT_TRUE(r.consistent);
}

TEST(Harness, AmpleStaysAmple) {
  auto r = nef_definitional_harness(bundle(kLine, {atom(2, 1)}), line(1));
  EXPECT_FALSE(r.first_failure);
  EXPECT_TRUE(r.consistent);
}

TEST(Harness, RejectsBadLine) {
  auto e = line(0);
  EXPECT_THROW(nef_definitional_harness(e, line(0)), DomainError);
  EXPECT_THROW(nef_definitional_harness(e, bundle(kLine, {atom(2, 1)})), DomainError);
  MarkedCurve c("X", 0, {"p"});
  EXPECT_THROW(nef_definitional_harness(bundle(c, {atom(1, 0)}),
                                        bundle(c, {atom(1, 1, {{"p", ws({{q(1, 2), 1}})}})})),
               DomainError);
}
