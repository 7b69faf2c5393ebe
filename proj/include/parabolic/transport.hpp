#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parabolic/bundle.hpp"
#include "parabolic/covering.hpp"

namespace parabolic {

/// Audit record of one pullback or direct image.
struct TransportReport {
  Rational input_pardeg;
  Rational output_pardeg;
  std::int64_t degree_used = 0;
  /// Parabolic divisor of the output: f^{-1}(D)_red for pullback, f(R ∪ D) for direct image.
  std::vector<std::string> divisor_out;
};

struct Transported {
  ParabolicBundle bundle;
  TransportReport report;
};

/// f*E for E on the target of f. At a point over x with index e a weight α
/// becomes frac(e·α); floors go into the degree, which starts at deg(f)·d.
/// Atoms map to atoms, so the spectrum slopes scale by deg(f).
Transported pullback_with_report(const CoveringMap& f, const ParabolicBundle& bundle);
ParabolicBundle pullback(const CoveringMap& f, const ParabolicBundle& bundle);

/// f_*V for V on the source of f, carried as a transport-derived bundle on the
/// target marked at Δ = f(R ∪ D). A weight α at y with index e contributes
/// (α+j)/e for j = 0..e-1; the degree is fixed by par_deg(f_*V) = par_deg(V).
/// Each graded piece (r, μ) of V becomes (deg(f)·r, μ/deg(f)).
Transported direct_image_with_report(const CoveringMap& f, const ParabolicBundle& bundle);
ParabolicBundle direct_image(const CoveringMap& f, const ParabolicBundle& bundle);

}  // namespace parabolic
