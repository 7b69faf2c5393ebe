#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "parabolic/bundle.hpp"
#include "parabolic/covering.hpp"
#include "parabolic/random.hpp"

namespace parabolic {

/// What a single trial operates on; the unit the minimizer shrinks.
struct TrialInstance {
  std::optional<CoveringMap> covering;
  std::vector<ParabolicBundle> bundles;
};

struct TrialFailure {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::string message;
  std::string counterexample;  // canonical JSON of the minimized instance
};

struct SuiteReport {
  std::string suite;
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;
  std::vector<TrialFailure> failures;
  std::set<std::string> operations;  // operations the suite exercises
  double seconds = 0;

  bool ok() const { return failures.empty() && passed == trials; }
};

/// All suite names accepted by run_suite, in reporting order.
const std::vector<std::string>& suite_names();

/// Runs `trials` trials of the named suite. Trial i draws its instance from
/// mix_seed(seed, i); trials run in parallel and the report does not depend on
/// scheduling.
SuiteReport run_suite(const std::string& name, std::uint64_t trials, std::uint64_t seed,
                      const Profile& profile = {});

/// Ample/nef/anti equivalences and mu_min scaling under pullback.
SuiteReport suite_pullback(std::uint64_t trials, std::uint64_t seed);
/// Equivalences, degree and rank bookkeeping, and dual commutation for direct images.
SuiteReport suite_pushforward(std::uint64_t trials, std::uint64_t seed);
/// Tensor degree identity, dual involution, quotient bound, nef harness.
std::vector<SuiteReport> suite_algebra(std::uint64_t trials, std::uint64_t seed);

/// Greedy shrinking: drops atoms, marked points and unramified unmarked
/// fibers while `fails` keeps returning a message. Always terminates.
TrialInstance minimize(TrialInstance instance,
                       const std::function<std::optional<std::string>(const TrialInstance&)>& fails);

std::string serialize(const TrialInstance& instance);

}  // namespace parabolic
