#include <gtest/gtest.h>

#include <set>

#include "parabolic/random.hpp"
#include "parabolic/verify.hpp"
#include "parabolic/workspace.hpp"
#include "support.hpp"

using namespace testing_support;

TEST(Random, Deterministic) {
  auto a = random_instance(0), b = random_instance(0);
  EXPECT_EQ(a.covering, b.covering);
  EXPECT_EQ(a.source_bundle, b.source_bundle);
  EXPECT_EQ(a.target_bundle, b.target_bundle);
  EXPECT_NE(mix_seed(1, 0), mix_seed(1, 1));
}

TEST(Random, DegreeOneProfile) {
  Profile p;
  p.max_covering_degree = 1;
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto r = random_instance(mix_seed(3, i), p);
    ASSERT_EQ(r.covering.degree(), 1);
    ASSERT_EQ(r.covering.ramification_total(), 0);
  }
}

TEST(Random, MonodromyProductIsIdentity) {
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    auto perms = random_monodromy(rng, rng.uniform(1, 5), rng.uniform(0, 6));
    if (perms.empty()) continue;
    Permutation acc = identity_permutation(perms.front().size());
    for (const auto& p : perms) acc = compose(p, acc);  // σ_k ∘ ... ∘ σ_1
    ASSERT_EQ(acc, identity_permutation(acc.size()));
  }
}

TEST(Suites, DeterministicReports) {
  auto a = run_suite("pullback-ample", 100, 42), b = run_suite("pullback-ample", 100, 42);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_EQ(a.failures.size(), b.failures.size());
}

TEST(Suites, CoverAllOperations) {
  std::set<std::string> used;
  for (const auto& name : suite_names()) {
    auto r = run_suite(name, 5, 1);
    EXPECT_TRUE(r.ok()) << name;
    used.insert(r.operations.begin(), r.operations.end());
  }
  for (const char* op : {"par_deg", "mu_min", "dual", "direct_sum", "tensor", "sym_power",
                         "summand_quotients", "pullback", "direct_image", "classify",
                         "nef_definitional_harness", "group_closure", "galois_closure_data",
                         "verify_decomposition", "covering_from_monodromy", "compose"})
    EXPECT_TRUE(used.count(op)) << op;
}

TEST(Suites, UnknownName) { EXPECT_THROW(run_suite("nope", 1, 1), DomainError); }

TEST(Minimize, ShrinksAndTerminates) {
  MarkedCurve c("X", 0, {"p", "q"});
  TrialInstance t{std::nullopt,
                  {bundle(c, {atom(1, 5), atom(1, -3, {{"p", ws({{q(1, 2), 1}})}}), atom(2, 0)})}};
  // fails while some atom has negative degree
  auto fails = [](const TrialInstance& x) -> std::optional<std::string> {
    for (const auto& a : x.bundles.at(0).atoms())
      if (a.degree() < 0) return "negative";
    return std::nullopt;
  };
  auto m = minimize(t, fails);
  ASSERT_TRUE(fails(m));
  EXPECT_EQ(m.bundles.at(0).atoms().size(), 1u);
  EXPECT_LE(m.bundles.at(0).curve().points().size(), 1u);
  EXPECT_NO_THROW(parse_workspace(serialize(m)));
}
