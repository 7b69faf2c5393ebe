#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "parabolic/bundle.hpp"

namespace parabolic {

/// Positivity of a parabolic bundle read off its extreme HN slopes:
/// ample iff mu_min > 0, nef iff mu_min >= 0, and the anti- versions via the
/// dual, whose minimal slope is -mu_max.
struct PositivityVerdict {
  bool ample = false;
  bool nef = false;
  bool anti_ample = false;
  bool anti_nef = false;
  Rational mu_min;
  Rational mu_max;

  friend bool operator==(const PositivityVerdict&, const PositivityVerdict&) = default;
};

PositivityVerdict classify(const ParabolicBundle& bundle);

inline constexpr std::int64_t kDefaultHarnessRange = 20;

struct NefHarnessStep {
  std::int64_t k;
  Rational mu_min;           // of S^k(E) ⊗ L, computed
  Rational closed_form;      // k·mu_min(E) + deg L
  bool ample;
};

struct NefHarnessReport {
  std::vector<NefHarnessStep> steps;
  /// First k in 1..K at which S^k(E) ⊗ L is not ample.
  std::optional<std::int64_t> first_failure;
  /// ⌈deg L / (-mu_min)⌉ when mu_min(E) < 0: first k with k·mu_min + deg L <= 0.
  std::optional<std::int64_t> predicted_failure;
  bool nef = false;
  /// Every step agrees with the closed form, and the observed failure pattern
  /// matches classify(E).nef and the predicted index.
  bool consistent = false;
};

/// Checks the definition of nefness for k = 1..K against the slope criterion.
/// `line` must be a rank-one bundle with all weights zero and positive degree.
NefHarnessReport nef_definitional_harness(const ParabolicBundle& bundle,
                                          const ParabolicBundle& line,
                                          std::int64_t max_k = kDefaultHarnessRange);

}  // namespace parabolic
