#include "parabolic/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <thread>

#include "parabolic/calculus.hpp"
#include "parabolic/galois.hpp"
#include "parabolic/positivity.hpp"
#include "parabolic/transport.hpp"
#include "parabolic/workspace.hpp"

namespace parabolic {

namespace {

using Check = std::function<std::optional<std::string>(const TrialInstance&)>;
using Maker = std::function<TrialInstance(std::uint64_t, const Profile&)>;

struct SuiteDef {
  std::set<std::string> operations;
  Maker make;
  Check check;
};

// Accumulates the first failed assertion of a trial.
class Expect {
 public:
  void that(bool cond, const std::string& what) {
    if (!cond && !failure_) failure_ = what;
  }
  void equal(const Rational& a, const Rational& b, const std::string& what) {
    that(a == b, what + ": " + to_string(a) + " != " + to_string(b));
  }
  std::optional<std::string> result() const { return failure_; }

 private:
  std::optional<std::string> failure_;
};

MarkedCurve random_curve(Rng& rng, const Profile& profile) {
  std::vector<std::string> pts;
  auto n = rng.uniform(0, profile.max_marked);
  for (std::int64_t i = 1; i <= n; ++i) pts.push_back("p" + std::to_string(i));
  return MarkedCurve("X", rng.uniform(0, profile.max_target_genus), std::move(pts));
}

ParabolicBundle trivial_line(const MarkedCurve& curve, std::int64_t degree) {
  return ParabolicBundle::from_atoms(curve, {SemistableAtom(1, Integer(degree))});
}

Expect compare_verdicts(Expect ex, const PositivityVerdict& a, const PositivityVerdict& b,
                        const std::string& what) {
  ex.that(a.ample == b.ample, what + ": ample verdicts differ");
  ex.that(a.nef == b.nef, what + ": nef verdicts differ");
  ex.that(a.anti_ample == b.anti_ample, what + ": anti-ample verdicts differ");
  ex.that(a.anti_nef == b.anti_nef, what + ": anti-nef verdicts differ");
  return ex;
}

// ---- suites ----------------------------------------------------------------

SuiteDef tensor_degree_suite() {
  return {{"tensor", "par_deg", "mu_min", "hn_spectrum", "direct_sum", "random_instance"},
          [](std::uint64_t seed, const Profile& profile) {
            Rng rng(seed);
            MarkedCurve c = random_curve(rng, profile);
            ParabolicBundle a = random_bundle(rng, c, profile);
            ParabolicBundle b = random_bundle(rng, c, profile);
            return TrialInstance{std::nullopt, {a, b}};
          },
          [](const TrialInstance& t) {
            Expect ex;
            const auto& a = t.bundles.at(0);
            const auto& b = t.bundles.at(1);
            ParabolicBundle ab = tensor(a, b);
            ex.equal(par_deg(ab), par_deg(b) * a.rank() + par_deg(a) * b.rank(), "par_deg(a⊗b)");
            ex.that(ab.rank() == a.rank() * b.rank(), "rank(a⊗b)");
            ex.equal(mu_min(ab), mu_min(a) + mu_min(b), "mu_min(a⊗b)");
            ex.that(ab == tensor(b, a), "tensor is not commutative on canonical forms");
            ParabolicBundle s = direct_sum(a, b);
            ex.equal(par_deg(s), par_deg(a) + par_deg(b), "par_deg(a⊕b)");
            ex.equal(mu_min(s), std::min(mu_min(a), mu_min(b)), "mu_min(a⊕b)");
            HNSpectrum hs = hn_spectrum(ab);
            for (std::size_t i = 1; i < hs.graded.size(); ++i)
              ex.that(hs.graded[i - 1].slope() > hs.graded[i].slope(), "spectrum slopes not strictly decreasing");
            return ex.result();
          }};
}

SuiteDef dual_involution_suite() {
  return {{"dual", "classify", "par_deg", "mu_min", "d_min", "par_slope"},
          [](std::uint64_t seed, const Profile& profile) {
            Rng rng(seed);
            MarkedCurve c = random_curve(rng, profile);
            return TrialInstance{std::nullopt, {random_bundle(rng, c, profile)}};
          },
          [](const TrialInstance& t) {
            Expect ex;
            const auto& e = t.bundles.at(0);
            ParabolicBundle d = dual(e);
            ex.that(dual(d) == e, "dual(dual(E)) != E");
            ex.equal(par_deg(d), -par_deg(e), "par_deg(dual E)");
            ex.equal(mu_min(d), -mu_max(e), "mu_min(dual E)");
            PositivityVerdict v = classify(e), vd = classify(d);
            ex.that(vd.ample == v.anti_ample, "dual ample vs anti-ample");
            ex.that(vd.nef == v.anti_nef, "dual nef vs anti-nef");
            ex.that(mu_min(e) <= par_slope(e), "mu_min > slope");
            ex.equal(d_min(e), mu_min(e) * hn_spectrum(e).graded.back().rank, "d_min identity");
            return ex.result();
          }};
}

SuiteDef pullback_suite() {
  return {{"pullback", "classify", "mu_min", "par_deg", "covering_from_monodromy", "validate_covering"},
          [](std::uint64_t seed, const Profile& profile) {
            RandomInstance r = random_instance(seed, profile);
            return TrialInstance{r.covering, {r.target_bundle}};
          },
          [](const TrialInstance& t) {
            Expect ex;
            const auto& f = *t.covering;
            const auto& e = t.bundles.at(0);
            ParabolicBundle fe = pullback(f, e);
            ex = compare_verdicts(ex, classify(e), classify(fe), "E vs f*E");
            ex.equal(mu_min(fe), mu_min(e) * f.degree(), "mu_min(f*E)");
            ex.equal(par_deg(fe), par_deg(e) * f.degree(), "par_deg(f*E)");
            ex.that(fe.rank() == e.rank(), "rank(f*E)");
            return ex.result();
          }};
}

SuiteDef pushforward_suite() {
  return {{"direct_image", "dual", "classify", "par_deg", "mu_min", "covering_from_monodromy"},
          [](std::uint64_t seed, const Profile& profile) {
            RandomInstance r = random_instance(seed, profile);
            return TrialInstance{r.covering, {r.source_bundle}};
          },
          [](const TrialInstance& t) {
            Expect ex;
            const auto& f = *t.covering;
            const auto& v = t.bundles.at(0);
            ParabolicBundle fv = direct_image(f, v);  // throws on non-integral deg0
            ex = compare_verdicts(ex, classify(v), classify(fv), "V vs f_*V");
            ex.equal(par_deg(fv), par_deg(v), "par_deg(f_*V)");
            ex.that(fv.rank() == v.rank() * f.degree(), "rank(f_*V)");
            ex.equal(mu_min(fv), mu_min(v) / f.degree(), "mu_min(f_*V)");
            ex.that(dual(fv) == direct_image(f, dual(v)), "dual(f_*V) != f_*(dual V)");
            // deg0 = d - r·R/2, R the total ramification
            ex.equal(Rational(fv.local_data().degree),
                     Rational(v.local_data().degree) - make_rational(v.rank() * f.ramification_total(), 2),
                     "deg0 of f_*V");
            return ex.result();
          }};
}

SuiteDef dual_commutation_suite() {
  return {{"dual", "pullback", "direct_image"},
          [](std::uint64_t seed, const Profile& profile) {
            RandomInstance r = random_instance(seed, profile);
            return TrialInstance{r.covering, {r.target_bundle, r.source_bundle}};
          },
          [](const TrialInstance& t) {
            Expect ex;
            const auto& f = *t.covering;
            ex.that(dual(pullback(f, t.bundles.at(0))) == pullback(f, dual(t.bundles.at(0))),
                    "dual∘pullback != pullback∘dual");
            ex.that(dual(direct_image(f, t.bundles.at(1))) == direct_image(f, dual(t.bundles.at(1))),
                    "dual∘direct_image != direct_image∘dual");
            return ex.result();
          }};
}

SuiteDef quotient_bound_suite() {
  return {{"summand_quotients", "par_slope", "mu_min", "classify"},
          [](std::uint64_t seed, const Profile& profile) {
            Rng rng(seed);
            MarkedCurve c = random_curve(rng, profile);
            return TrialInstance{std::nullopt, {random_bundle(rng, c, profile)}};
          },
          [](const TrialInstance& t) {
            Expect ex;
            const auto& e = t.bundles.at(0);
            const Rational lo = mu_min(e);
            bool all_positive = true;
            for (const auto& q : summand_quotients(e)) {
              ex.that(par_slope(q) >= lo, "quotient slope " + to_string(par_slope(q)) +
                                              " below mu_min " + to_string(lo));
              if (par_deg(q) <= 0) all_positive = false;
            }
            ex.that((lo > 0) == (par_deg(e) > 0 && all_positive),
                    "mu_min > 0 disagrees with positivity of every summand quotient");
            ex.that(classify(e).ample == (lo > 0), "classify.ample");
            return ex.result();
          }};
}

SuiteDef nef_harness_suite() {
  return {{"nef_definitional_harness", "sym_power", "tensor", "classify", "mu_min"},
          [](std::uint64_t seed, const Profile& profile) {
            Rng rng(seed);
            MarkedCurve c = random_curve(rng, profile);
            return TrialInstance{std::nullopt, {random_bundle(rng, c, profile), trivial_line(c, 1)}};
          },
          [](const TrialInstance& t) {
            Expect ex;
            const auto& e = t.bundles.at(0);
            NefHarnessReport r = nef_definitional_harness(e, t.bundles.at(1), kDefaultHarnessRange);
            ex.that(r.consistent, "harness disagrees with k*mu_min + deg L");
            for (std::int64_t k = 1; k <= 6; ++k)
              ex.equal(mu_min(sym_power(e, k)), mu_min(e) * k, "mu_min(S^" + std::to_string(k) + " E)");
            return ex.result();
          }};
}

SuiteDef galois_suite() {
  return {{"group_closure", "galois_closure_data", "verify_decomposition", "compose", "pullback",
           "direct_image", "covering_from_monodromy"},
          [](std::uint64_t seed, const Profile& profile) {
            RandomInstance r = random_instance(seed, profile);
            return TrialInstance{r.covering, {r.source_bundle}};
          },
          [](const TrialInstance& t) {
            Expect ex;
            GaloisClosureData data = galois_closure_data(*t.covering);
            DecompositionReport rep = verify_decomposition(data, t.bundles.at(0));
            for (const auto& c : rep.checks)
              ex.that(c.passed, c.name + ": " + c.left + " vs " + c.right);
            ex.that(rep.transversal_size == static_cast<std::size_t>(t.covering->degree()), "|transversal| != n");
            ex.that(data.subgroup_normal == data.f_is_galois, "normality of G vs Galois-ness of f");
            ex.that(compose(data.g, data.f).fibers() == data.h.fibers(), "f∘g fibers differ from h");
            return ex.result();
          }};
}

const std::map<std::string, std::function<SuiteDef()>>& registry() {
  static const std::map<std::string, std::function<SuiteDef()>> r = {
      {"tensor-degree", tensor_degree_suite},   {"dual-involution", dual_involution_suite},
      {"pullback-ample", pullback_suite},       {"pushforward-ample", pushforward_suite},
      {"dual-commutation", dual_commutation_suite}, {"quotient-bound", quotient_bound_suite},
      {"nef-harness", nef_harness_suite},       {"galois-decomposition", galois_suite},
  };
  return r;
}

std::optional<std::string> guarded(const Check& check, const TrialInstance& t) {
  try {
    return check(t);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "tensor-degree",     "dual-involution", "pullback-ample", "pushforward-ample",
      "dual-commutation",  "quotient-bound",  "nef-harness",    "galois-decomposition"};
  return names;
}

std::string serialize(const TrialInstance& t) {
  Workspace ws;
  if (t.covering) add_to_workspace(ws, *t.covering);
  for (std::size_t i = 0; i < t.bundles.size(); ++i) {
    const auto& b = t.bundles[i];
    const std::string name = "B" + std::to_string(i);
    auto it = ws.curves.find(b.curve().name());
    if (it == ws.curves.end() || it->second == b.curve()) {
      add_to_workspace(ws, name, b);
      continue;
    }
    // the bundle marks other points than the covering's curve of the same name
    MarkedCurve renamed(b.curve().name() + "_" + name, b.curve().genus(), b.curve().points());
    Json j = to_json(b, name);
    j["curve"] = renamed.name();
    ws.curves.emplace(renamed.name(), renamed);
    ws.bundles.emplace(name, bundle_from_json(j, ws.curves));
  }
  return save_workspace(ws);
}

TrialInstance minimize(TrialInstance inst, const Check& fails) {
  auto candidates = [](const TrialInstance& t) {
    std::vector<std::function<TrialInstance()>> out;
    for (std::size_t i = 0; i < t.bundles.size(); ++i) {
      const auto& b = t.bundles[i];
      if (b.kind() != BundleKind::full) continue;
      for (std::size_t j = 0; b.atoms().size() > 1 && j < b.atoms().size(); ++j)
        out.push_back([&t, i, j] {
          TrialInstance c = t;
          auto atoms = t.bundles[i].atoms();
          atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(j));
          c.bundles[i] = ParabolicBundle::from_atoms(t.bundles[i].curve(), std::move(atoms));
          return c;
        });
      for (const auto& p : b.curve().points())
        out.push_back([&t, i, p] {
          TrialInstance c = t;
          const auto& src = t.bundles[i];
          auto pts = src.curve().points();
          pts.erase(std::find(pts.begin(), pts.end(), p));
          MarkedCurve curve(src.curve().name(), src.curve().genus(), pts);
          std::vector<SemistableAtom> atoms;
          for (const auto& a : src.atoms()) {
            auto ws = a.local().weights;
            ws.erase(p);
            atoms.emplace_back(a.rank(), a.degree(), std::move(ws));
          }
          c.bundles[i] = ParabolicBundle::from_atoms(curve, std::move(atoms));
          return c;
        });
    }
    if (t.covering) {
      const auto& f = *t.covering;
      for (std::size_t k = 0; k < f.fibers().size(); ++k) {
        const auto& fib = f.fibers()[k];
        bool unramified = std::all_of(fib.above.begin(), fib.above.end(),
                                      [](const SourcePoint& p) { return p.e == 1; });
        if (!unramified || f.fibers().size() < 2) continue;
        out.push_back([&t, k] {
          TrialInstance c = t;
          CoveringData d = t.covering->data();
          d.fibers.erase(d.fibers.begin() + static_cast<std::ptrdiff_t>(k));
          if (!d.monodromy.empty()) d.monodromy.erase(d.monodromy.begin() + static_cast<std::ptrdiff_t>(k));
          c.covering = CoveringMap(std::move(d));  // rejects fibers carrying marks
          for (const auto& b : c.bundles)
            for (const auto& p : b.curve().points())
              if (!c.covering->fiber_over(p) && !c.covering->image_of(p))
                throw DomainError("fiber still carries a marked point");
          return c;
        });
      }
    }
    return out;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& make : candidates(inst)) {
      TrialInstance next = inst;
      try {
        next = make();
      } catch (const std::exception&) {
        continue;
      }
      if (guarded(fails, next)) {
        inst = std::move(next);
        progress = true;
        break;
      }
    }
  }
  return inst;
}

SuiteReport run_suite(const std::string& name, std::uint64_t trials, std::uint64_t seed,
                      const Profile& profile) {
  auto it = registry().find(name);
  if (it == registry().end()) throw DomainError("unknown suite \"" + name + "\"");
  const SuiteDef def = it->second();
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::optional<TrialFailure>> results(trials);
  auto work = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t i = first; i < trials; i += stride) {
      const std::uint64_t s = mix_seed(seed, i);
      std::optional<TrialInstance> inst;
      std::optional<std::string> failure;
      try {
        inst = def.make(s, profile);
        failure = guarded(def.check, *inst);
      } catch (const std::exception& e) {
        failure = std::string("instance generation failed: ") + e.what();
      }
      if (!failure) continue;
      TrialFailure tf{i, s, *failure, {}};
      if (inst) {
        TrialInstance small = minimize(*inst, def.check);
        if (auto m = guarded(def.check, small)) tf.message = *m;
        tf.counterexample = serialize(small);
      }
      results[i] = std::move(tf);
    }
  };
  const std::uint64_t threads =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(std::thread::hardware_concurrency(), 8));
  std::vector<std::thread> pool;
  for (std::uint64_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  for (auto& th : pool) th.join();

  SuiteReport report;
  report.suite = name;
  report.trials = trials;
  report.operations = def.operations;
  for (auto& r : results) {
    if (r)
      report.failures.push_back(std::move(*r));
    else
      ++report.passed;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SuiteReport suite_pullback(std::uint64_t trials, std::uint64_t seed) {
  return run_suite("pullback-ample", trials, seed);
}

SuiteReport suite_pushforward(std::uint64_t trials, std::uint64_t seed) {
  return run_suite("pushforward-ample", trials, seed);
}

std::vector<SuiteReport> suite_algebra(std::uint64_t trials, std::uint64_t seed) {
  std::vector<SuiteReport> out;
  for (const char* s : {"tensor-degree", "dual-involution", "quotient-bound", "nef-harness"})
    out.push_back(run_suite(s, trials, seed));
  return out;
}

}  // namespace parabolic
