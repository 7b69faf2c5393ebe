#include <gtest/gtest.h>

#include <set>

#include "parabolic/galois.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

Permutation p1(std::vector<std::int64_t> images) { return from_one_indexed(images); }

// Closure by repeated products until nothing new appears.
std::set<Permutation> brute_closure(std::size_t n, const std::vector<Permutation>& gens) {
  std::set<Permutation> all{identity_permutation(n)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<Permutation> next = all;
    for (const auto& a : all)
      for (const auto& g : gens) next.insert(compose(a, g));
    grew = next.size() != all.size();
    all = std::move(next);
  }
  return all;
}

}  // namespace

TEST(Closure, SmallGroups) {
  EXPECT_EQ(group_closure(2, {p1({2, 1})}).order(), 2u);
  std::vector<Permutation> gens{p1({2, 1, 3}), p1({2, 3, 1})};
  auto s3 = group_closure(3, gens);
  EXPECT_EQ(s3.order(), brute_closure(3, gens).size());
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_EQ(s3.elements().front(), identity_permutation(3));
  EXPECT_EQ(group_closure(4, {}).order(), 1u);
  try {
    group_closure(3, gens, 5);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("group order cap exceeded"), std::string::npos);
  }
}

TEST(Closure, Normality) {
  auto s3 = group_closure(3, {p1({2, 1, 3}), p1({2, 3, 1})});
  auto a3 = group_closure(3, {p1({2, 3, 1})});
  auto c2 = group_closure(3, {p1({1, 3, 2})});
  EXPECT_TRUE(is_normal_subgroup(s3, a3));
  EXPECT_FALSE(is_normal_subgroup(s3, c2));
}

TEST(GaloisClosure, DoubleCoverIsGalois) {
  auto f = covering_from_monodromy(0, {p1({2, 1}), p1({2, 1})});
  auto d = galois_closure_data(f);
  EXPECT_EQ(d.gamma.order(), 2u);
  EXPECT_EQ(d.stabilizer.order(), 1u);
  EXPECT_EQ(d.deg_h, 2);
  EXPECT_EQ(d.deg_g, 1);
  EXPECT_TRUE(d.f_is_galois);
  EXPECT_TRUE(d.subgroup_normal);
  EXPECT_EQ(d.decomposition.transversal.size(), 2u);

  auto rep = verify_decomposition(d, bundle(f.source(), {atom(1, 0)}));
  EXPECT_TRUE(rep.ok());
  ASSERT_EQ(rep.checks.size(), 4u);
  EXPECT_EQ(rep.checks[2].left, "rank 2, par-deg 0/1");
  EXPECT_EQ(rep.checks[2].right, rep.checks[2].left);
}

TEST(GaloisClosure, S3Cover) {
  auto t12 = p1({2, 1, 3}), t23 = p1({1, 3, 2});
  auto f = covering_from_monodromy(0, {t12, t12, t23, t23});
  auto d = galois_closure_data(f);
  EXPECT_EQ(d.gamma.order(), 6u);
  EXPECT_EQ(d.stabilizer.order(), 2u);
  for (const auto& s : d.stabilizer.elements()) EXPECT_EQ(s[0], 0u);
  EXPECT_EQ(d.deg_g, 2);
  EXPECT_EQ(d.deg_h, 6);
  EXPECT_FALSE(d.f_is_galois);
  EXPECT_FALSE(d.subgroup_normal);
  EXPECT_EQ(d.decomposition.transversal.size(), 3u);
  EXPECT_TRUE(d.decomposition.transversal_hits_each_left_coset_once);
  EXPECT_EQ(d.h.degree(), 6);
  EXPECT_EQ(compose(d.g, d.f).fibers(), d.h.fibers());

  auto rep = verify_decomposition(d, bundle(f.source(), {atom(1, 1)}));
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.invariant_orbits, 3u);
  EXPECT_EQ(rep.transversal_size, 3u);
}

TEST(GaloisClosure, DeckTransformationsComposeToH) {
  auto t12 = p1({2, 1, 3}), t23 = p1({1, 3, 2});
  auto f = covering_from_monodromy(0, {t12, t12, t23, t23});
  auto d = galois_closure_data(f);
  for (const auto& g : d.gamma.elements()) {
    auto deck = deck_transformation(d, g);
    EXPECT_EQ(deck.degree(), 1);
    EXPECT_EQ(compose(deck, d.h).fibers(), d.h.fibers());
  }
}

TEST(GaloisClosure, NeedsMonodromy) {
  CoveringData cd;
  cd.source = MarkedCurve("Y", 0);
  cd.target = MarkedCurve("X", 0);
  cd.degree = 2;
  cd.fibers = {{"b1", {{"y1", 2}}}, {"b2", {{"y2", 2}}}};
  EXPECT_THROW(galois_closure_data(CoveringMap(cd)), DomainError);
}
