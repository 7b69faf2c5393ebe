#include <gtest/gtest.h>

#include "parabolic/calculus.hpp"
#include "parabolic/random.hpp"
#include "support.hpp"

using namespace testing_support;

TEST(Dual, Examples) {
  MarkedCurve c("X", 0, {"p"});
  auto triv = bundle(c, {atom(1, 0)});
  EXPECT_EQ(dual(triv), triv);

  auto l = bundle(c, {atom(1, 1, {{"p", ws({{q(1, 2), 1}})}})});
  auto d = dual(l);
  EXPECT_EQ(d.local_data().degree, -2);
  EXPECT_EQ(d.local_data().weights.at("p"), ws({{q(1, 2), 1}}));
  EXPECT_EQ(par_deg(d), q(-3, 2));
  EXPECT_EQ(par_deg(d), -par_deg(l));
}

TEST(Dual, InvolutionOnRandomBundles) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng(mix_seed(11, i));
    auto b = random_bundle(rng, MarkedCurve("X", 1, {"a", "b"}));
    ASSERT_EQ(dual(dual(b)), b);
    ASSERT_EQ(mu_min(dual(b)), -mu_max(b));
  }
}

TEST(Sum, DoublesAndRejectsMismatch) {
  MarkedCurve c("X", 0, {"p"});
  auto e = bundle(c, {atom(2, 1, {{"p", ws({{q(1, 3), 2}})}})});
  auto s = direct_sum(e, e);
  EXPECT_EQ(s.rank(), 4);
  EXPECT_EQ(par_deg(s), 2 * par_deg(e));
  EXPECT_EQ(mu_min(s), mu_min(e));
  auto other = bundle(MarkedCurve("X", 1), {atom(1, 0)});
  try {
    direct_sum(e, other);
    FAIL();
  } catch (const DomainError& err) {
    EXPECT_NE(std::string(err.what()).find("incompatible base curves"), std::string::npos);
  }
}

TEST(Sum, NaryMatchesFold) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng(mix_seed(12, i));
    std::vector<ParabolicBundle> parts;
    for (int j = 0; j < 4; ++j) {
      std::vector<std::string> pts{"p" + std::to_string(j)};
      parts.push_back(random_bundle(rng, MarkedCurve("X", 0, pts)));
    }
    ParabolicBundle fold = parts[0];
    for (std::size_t j = 1; j < parts.size(); ++j) fold = direct_sum(fold, parts[j]);
    ASSERT_EQ(direct_sum(parts), fold);
  }
}

TEST(Tensor, Examples) {
  MarkedCurve c("X", 0, {"x"});
  auto a = bundle(c, {atom(1, 1, {{"x", ws({{q(1, 2), 1}})}})});
  auto b = bundle(c, {atom(1, 0, {{"x", ws({{q(3, 4), 1}})}})});
  auto t = tensor(a, b);
  EXPECT_EQ(t.rank(), 1);
  EXPECT_EQ(t.local_data().degree, 2);
  EXPECT_EQ(t.local_data().weights.at("x"), ws({{q(1, 4), 1}}));
  // rank(a)·pd(b) + rank(b)·pd(a)
  EXPECT_EQ(par_deg(t), q(3, 4) + q(3, 2));
  EXPECT_EQ(par_deg(t), q(9, 4));

  auto unit = bundle(c, {atom(1, 0)});
  EXPECT_EQ(tensor(a, unit), a);
}

TEST(Tensor, DegreeIdentityRandom) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng(mix_seed(13, i));
    MarkedCurve c("X", 1, {"a", "b", "c"});
    auto v = random_bundle(rng, c), w = random_bundle(rng, c);
    auto t = tensor(v, w);
    ASSERT_EQ(par_deg(t), Rational(v.rank()) * par_deg(w) + Rational(w.rank()) * par_deg(v));
    ASSERT_EQ(mu_min(t), mu_min(v) + mu_min(w));
  }
}

TEST(Sym, Examples) {
  MarkedCurve c("X", 0, {"p"});
  auto e = bundle(c, {atom(2, 1, {{"p", ws({{q(1, 3), 1}, {q(2, 3), 1}})}})});
  EXPECT_EQ(sym_power(e, 1), e);
  auto s2 = sym_power(e, 2);
  EXPECT_EQ(s2.rank(), 3);  // C(3, 2)
  EXPECT_EQ(par_slope(s2), 2 * par_slope(e));
  EXPECT_THROW(sym_power(e, 0), DomainError);
}

TEST(Sym, WeightsOfSingleAtomMatchBruteForce) {
  // Sym^3 of rank 3 with weights {0, 1/4, 1/2}: sums over multisets of size 3
  MarkedCurve c("X", 0, {"p"});
  auto e = bundle(c, {atom(3, 1, {{"p", ws({{q(0), 1}, {q(1, 4), 1}, {q(1, 2), 1}})}})});
  std::vector<Rational> w{q(0), q(1, 4), q(1, 2)};
  Rational pd = 0;
  std::int64_t n = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int k = j; k < 3; ++k) {
        pd += w[i] + w[j] + w[k];
        ++n;
      }
  auto s = sym_power(e, 3);
  EXPECT_EQ(s.rank(), n);
  // underlying degree C(r+k-1, k-1)·d = C(5,2) = 10
  EXPECT_EQ(par_deg(s), 10 + pd);
}

TEST(Sym, SlopeScalesRandom) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng(mix_seed(14, i));
    auto e = random_bundle(rng, MarkedCurve("X", 0, {"a", "b"}));
    for (std::int64_t k = 1; k <= 5; ++k) ASSERT_EQ(mu_min(sym_power(e, k)), k * mu_min(e));
  }
}

TEST(Quotients, Enumeration) {
  MarkedCurve c("X", 0);
  auto one = bundle(c, {atom(1, 3)});
  ASSERT_EQ(summand_quotients(one).size(), 1u);
  EXPECT_EQ(summand_quotients(one).front(), one);

  auto two = bundle(c, {atom(1, 3), atom(2, -1)});
  auto qs = summand_quotients(two);
  ASSERT_EQ(qs.size(), 3u);
  for (const auto& qb : qs) EXPECT_GE(par_slope(qb), mu_min(two));

  std::vector<SemistableAtom> many;
  for (int i = 0; i < 17; ++i) many.push_back(atom(1, i));
  try {
    summand_quotients(bundle(c, many));
    FAIL();
  } catch (const DomainError& err) {
    EXPECT_NE(std::string(err.what()).find("quotient enumeration bound exceeded"), std::string::npos);
  }
}
