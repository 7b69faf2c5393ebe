#include <gtest/gtest.h>

#include "parabolic/calculus.hpp"
#include "parabolic/covering.hpp"
#include "parabolic/positivity.hpp"
#include "parabolic/random.hpp"
#include "parabolic/transport.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

CoveringMap double_cover() {
  return covering_from_monodromy(0, {from_one_indexed({2, 1}), from_one_indexed({2, 1})});
}

}  // namespace

TEST(DirectImage, TrivialLineOnDoubleCover) {
  auto f = double_cover();
  auto o = bundle(f.source(), {atom(1, 0)});
  auto t = direct_image_with_report(f, o);
  EXPECT_EQ(t.bundle.rank(), 2);
  EXPECT_EQ(t.bundle.local_data().degree, -1);
  for (const char* b : {"b1", "b2"})
    EXPECT_EQ(t.bundle.local_data().weights.at(b), ws({{q(0), 1}, {q(1, 2), 1}}));
  EXPECT_EQ(par_deg(t.bundle), 0);
  EXPECT_EQ(t.report.divisor_out, (std::vector<std::string>{"b1", "b2"}));
  EXPECT_FALSE(classify(t.bundle).ample);
}

TEST(DirectImage, DegreeOneLineOnDoubleCover) {
  auto f = double_cover();
  auto o1 = bundle(f.source(), {atom(1, 1)});
  auto e = direct_image(f, o1);
  EXPECT_EQ(e.local_data().degree, 0);
  EXPECT_EQ(par_deg(e), 1);
  EXPECT_EQ(mu_min(e), q(1, 2));
  EXPECT_TRUE(classify(e).ample);
}

TEST(DirectImage, SpectrumHalves) {
  auto f = double_cover();
  auto v = bundle(f.source(), {atom(1, 1)});
  // two pullback copies of the line have slope 2·1; dividing by deg h = 2
  // recovers the slope of f_*V on the base
  auto e = direct_image(f, v);
  EXPECT_EQ(hn_spectrum(e).graded, (std::vector<GradedPiece>{{2, q(1)}}));
}

TEST(DirectImage, UnderlyingDegreeFromRamification) {
  // deg f_*V = deg V - rank·R/2 for the underlying bundles
  for (std::uint64_t i = 0; i < 500; ++i) {
    auto r = random_instance(mix_seed(21, i));
    auto v = r.source_bundle;
    auto e = direct_image(r.covering, v);
    ASSERT_EQ(e.rank(), r.covering.degree() * v.rank());
    ASSERT_EQ(par_deg(e), par_deg(v));
    Rational expect = Rational(v.local_data().degree) -
                      make_rational(v.rank() * r.covering.ramification_total(), 2);
    ASSERT_EQ(Rational(e.local_data().degree), expect);
  }
}

TEST(DirectImage, RejectsSpectrumOnly) {
  auto f = double_cover();
  auto s = ParabolicBundle::from_spectrum(f.source(), {{1, q(1)}});
  try {
    direct_image(f, s);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("local data required"), std::string::npos);
  }
  EXPECT_THROW(pullback(f, ParabolicBundle::from_spectrum(f.target(), {{1, q(1)}})), DomainError);
}

TEST(Pullback, IdentityIsIdentity) {
  MarkedCurve c("X", 1, {"p"});
  auto e = bundle(c, {atom(2, 1, {{"p", ws({{q(1, 3), 2}})}})});
  EXPECT_EQ(pullback(identity_covering(c, {"p"}), e), e);
}

TEST(Pullback, RamifiedWeightBecomesInteger) {
  CoveringData d;
  d.name = "f";
  d.source = MarkedCurve("Y", 0, {"y"});
  d.target = MarkedCurve("X", 0, {"x"});
  d.degree = 2;
  d.fibers = {{"x", {{"y", 2}}}, {"b", {{"z", 2}}}};
  CoveringMap f(d);
  auto e = bundle(f.target(), {atom(1, 1, {{"x", ws({{q(1, 2), 1}})}})});
  auto t = pullback_with_report(f, e);
  EXPECT_EQ(t.bundle.local_data().degree, 3);
  EXPECT_EQ(t.bundle.local_data().weights.at("y"), WeightMultiset::zeros(1));
  EXPECT_EQ(par_deg(t.bundle), 2 * par_deg(e));
  EXPECT_EQ(t.report.degree_used, 2);
}

TEST(Pullback, MuMinScales) {
  auto f = double_cover();
  MarkedCurve x = f.target();
  auto e = bundle(x, {atom(3, 1)});
  EXPECT_EQ(mu_min(pullback(f, e)), q(2, 3));
}

TEST(Transport, DualCommutes) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto r = random_instance(mix_seed(22, i));
    ASSERT_EQ(dual(pullback(r.covering, r.target_bundle)), pullback(r.covering, dual(r.target_bundle)));
    ASSERT_EQ(dual(direct_image(r.covering, r.source_bundle)),
              direct_image(r.covering, dual(r.source_bundle)));
  }
}
