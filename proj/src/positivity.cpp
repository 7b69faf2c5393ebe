#include "parabolic/positivity.hpp"

#include "parabolic/calculus.hpp"

namespace parabolic {

PositivityVerdict classify(const ParabolicBundle& bundle) {
  PositivityVerdict v;
  v.mu_min = mu_min(bundle);
  v.mu_max = mu_max(bundle);
  v.ample = v.mu_min > 0;
  v.nef = v.mu_min >= 0;
  // mu_min of the dual is -mu_max
  Rational dual_min = -v.mu_max;
  v.anti_ample = dual_min > 0;
  v.anti_nef = dual_min >= 0;
  return v;
}

NefHarnessReport nef_definitional_harness(const ParabolicBundle& bundle,
                                          const ParabolicBundle& line, std::int64_t max_k) {
  if (max_k < 1) throw DomainError("harness range K must be >= 1");
  if (line.rank() != 1 || !line.has_local_data())
    throw DomainError("L must be a line bundle with local data");
  for (const auto& [p, ws] : line.local_data().weights)
    if (!ws.all_zero()) throw DomainError("L must carry trivial parabolic weights");
  const Integer deg_l = line.local_data().degree;
  if (deg_l <= 0) throw DomainError("L must be ample (degree > 0)");

  NefHarnessReport report;
  const Rational mu = mu_min(bundle);
  report.nef = classify(bundle).nef;
  bool agree = true;
  for (std::int64_t k = 1; k <= max_k; ++k) {
    ParabolicBundle twisted = tensor(sym_power(bundle, k), line);
    PositivityVerdict v = classify(twisted);
    NefHarnessStep step{k, v.mu_min, mu * k + Rational(deg_l), v.ample};
    if (step.mu_min != step.closed_form || step.ample != (step.closed_form > 0)) agree = false;
    if (!step.ample && !report.first_failure) report.first_failure = k;
    report.steps.push_back(std::move(step));
  }
  if (mu < 0) report.predicted_failure = ceil_of(Rational(deg_l) / -mu).get_si();

  bool pattern;
  if (report.nef) {
    pattern = !report.first_failure && !report.predicted_failure;
  } else if (*report.predicted_failure <= max_k) {
    pattern = report.first_failure == report.predicted_failure;
  } else {
    pattern = !report.first_failure;
  }
  report.consistent = agree && pattern;
  return report;
}

}  // namespace parabolic
