#include <gtest/gtest.h>

#include <algorithm>

#include "parabolic/random.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

// Sums deg + every weight in the flattened per-point lists, atom by atom.
Rational pardeg_oracle(const ParabolicBundle& b) {
  Rational s = 0;
  for (const auto& a : b.atoms()) {
    s += Rational(a.degree());
    for (const auto& [p, w] : a.local().weights)
      for (const auto& x : flatten(w)) s += x;
  }
  return s;
}

Rational min_atom_slope(const ParabolicBundle& b) {
  Rational m = b.atoms().front().slope();
  for (const auto& a : b.atoms()) m = std::min(m, a.slope());
  return m;
}

}  // namespace

TEST(Rational, LowestTermsAndParsing) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(q(3)), "3/1");
  EXPECT_EQ(parse_rational("5"), q(5));
  EXPECT_EQ(parse_rational("-2/6"), q(-1, 3));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("x"), DomainError);
  EXPECT_EQ(floor_of(q(-1, 2)), -1);
  EXPECT_EQ(frac_of(q(-1, 3)), q(2, 3));
  EXPECT_EQ(binomial(7, 3), 35);
}

TEST(WeightMultiset, RejectsOutOfRange) {
  EXPECT_THROW(ws({{q(1), 1}}), DomainError);
  EXPECT_THROW(ws({{q(-1, 2), 1}}), DomainError);
  EXPECT_THROW(ws({{q(1, 2), 0}}), DomainError);
  EXPECT_EQ(ws({{q(1, 2), 1}, {q(1, 2), 2}}).entries().size(), 1u);
}

TEST(Atom, RankMustMatchWeights) {
  MarkedCurve c("X", 0, {"p"});
  EXPECT_THROW(bundle(c, {atom(2, 0, {{"p", ws({{q(1, 2), 1}})}})}), DomainError);
  EXPECT_THROW(bundle(c, {atom(1, 0, {{"r", ws({{q(1, 2), 1}})}})}), DomainError);
}

TEST(ParDeg, Examples) {
  MarkedCurve c("X", 0, {"p", "q"});
  auto l = bundle(c, {atom(1, 3)});
  EXPECT_EQ(par_deg(l), 3);
  EXPECT_EQ(par_slope(l), 3);

  auto e = bundle(c, {atom(2, -1, {{"p", ws({{q(0), 1}, {q(1, 2), 1}})}})});
  EXPECT_EQ(par_deg(e), q(-1, 2));
  EXPECT_EQ(par_slope(e), q(-1, 4));

  auto w = ws({{q(1, 4), 2}, {q(3, 4), 1}});
  auto f = bundle(c, {atom(3, 2, {{"p", w}, {"q", w}})});
  EXPECT_EQ(par_deg(f), pardeg_oracle(f));
  EXPECT_EQ(par_deg(f), q(9, 2));
  EXPECT_EQ(par_slope(f), pardeg_oracle(f) / 3);
}

TEST(Spectrum, Examples) {
  MarkedCurve c("X", 1);
  auto one = bundle(c, {atom(2, 1)});
  EXPECT_EQ(hn_spectrum(one).graded, (std::vector<GradedPiece>{{2, q(1)}}));
  EXPECT_EQ(mu_min(one), q(1, 2));
  EXPECT_EQ(d_min(one), 1);

  auto two = bundle(c, {atom(2, -1), atom(1, 2)});
  EXPECT_EQ(hn_spectrum(two).graded, (std::vector<GradedPiece>{{1, q(2)}, {2, q(-1)}}));
  EXPECT_EQ(mu_min(two), q(-1, 2));
  EXPECT_EQ(d_min(two), -1);

  auto merged = bundle(c, {atom(1, 1), atom(1, 1)});
  EXPECT_EQ(hn_spectrum(merged).graded, (std::vector<GradedPiece>{{2, q(2)}}));
}

TEST(Curve, ExtensionPadsZeros) {
  MarkedCurve c("X", 0, {"p"});
  auto b = bundle(c, {atom(2, 0, {{"p", ws({{q(1, 3), 2}})}})});
  auto e = b.extended_to(c.with_points({"q"}));
  EXPECT_EQ(e.local_data().weights.at("q"), WeightMultiset::zeros(2));
  EXPECT_EQ(par_deg(e), par_deg(b));
  EXPECT_THROW(b.extended_to(MarkedCurve("Y", 0, {"p"})), DomainError);
}

TEST(Spectrum, RandomInvariants) {
  Profile profile;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(mix_seed(7, i));
    MarkedCurve c("X", rng.uniform(0, 2), {"p1", "p2", "p3"});
    auto b = random_bundle(rng, c, profile);
    auto s = hn_spectrum(b);
    ASSERT_EQ(par_deg(b), pardeg_oracle(b));
    ASSERT_EQ(mu_min(b), min_atom_slope(b));
    ASSERT_EQ(d_min(b), mu_min(b) * s.graded.back().rank);
    std::int64_t r = 0;
    Rational pd = 0;
    for (std::size_t k = 0; k < s.graded.size(); ++k) {
      if (k) ASSERT_GT(s.graded[k - 1].slope(), s.graded[k].slope());
      r += s.graded[k].rank;
      pd += s.graded[k].par_degree;
    }
    ASSERT_EQ(r, b.rank());
    ASSERT_EQ(pd, par_deg(b));
  }
}
