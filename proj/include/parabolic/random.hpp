#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "parabolic/bundle.hpp"
#include "parabolic/covering.hpp"

namespace parabolic {

/// Bounds for randomly generated instances.
struct Profile {
  std::int64_t max_rank = 6;
  std::int64_t max_atoms = 4;
  std::int64_t max_marked = 3;
  std::int64_t max_denominator = 12;
  std::int64_t min_covering_degree = 1;
  std::int64_t max_covering_degree = 5;
  std::int64_t max_branch = 6;
  std::int64_t max_target_genus = 1;
  std::int64_t max_abs_degree = 5;
};

/// splitmix64 finalizer; used to derive per-trial seeds.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(std::int64_t num, std::int64_t den) { return uniform(1, den) <= num; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// A random bundle on `curve` (weights at every marked point).
ParabolicBundle random_bundle(Rng& rng, const MarkedCurve& curve, const Profile& profile = {});

/// Random local monodromies with product 1 and transitive action.
std::vector<Permutation> random_monodromy(Rng& rng, std::int64_t degree, std::int64_t branch_count);

struct RandomInstance {
  CoveringMap covering;          // source and target carry the bundles' marked points
  ParabolicBundle target_bundle;  // on the target, for pullback
  ParabolicBundle source_bundle;  // on the source, for direct image
};

/// Deterministic in `seed`; always passes validation.
RandomInstance random_instance(std::uint64_t seed, const Profile& profile = {});

}  // namespace parabolic
