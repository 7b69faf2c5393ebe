// Command-line front end: every subcommand reads a JSON workspace and writes
// canonical JSON. Exit status 0 on success, 1 on domain errors or failed
// verification, 2 on usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "parabolic/calculus.hpp"
#include "parabolic/galois.hpp"
#include "parabolic/positivity.hpp"
#include "parabolic/random.hpp"
#include "parabolic/transport.hpp"
#include "parabolic/verify.hpp"
#include "parabolic/workspace.hpp"

using namespace parabolic;

namespace {

std::size_t group_cap_from_env() {
  const char* env = std::getenv("PARABOLIC_CAP");
  if (!env || !*env) return kDefaultGroupCap;
  try {
    long long v = std::stoll(env);
    if (v < 1) throw std::invalid_argument("cap");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw DomainError(std::string("PARABOLIC_CAP must be a positive integer, got \"") + env + "\"");
  }
}

Json bundle_result(const ParabolicBundle& b, const std::string& name) {
  return {{"bundle", to_json(b, name)}, {"curve", to_json(b.curve())}, {"kind", to_string(b.kind())}};
}

Json suite_json(const SuiteReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"counterexample", Json::parse(f.counterexample.empty() ? "null" : f.counterexample)},
                        {"message", f.message},
                        {"seed", f.seed},
                        {"trial", f.trial}});
  return {{"failures", failures}, {"passed", r.passed}, {"suite", r.suite}, {"trials", r.trials}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculus of parabolic bundles on marked curves"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string workspace_path, output_path;
  std::uint64_t seed = 42;
  app.add_option("--workspace", workspace_path, "JSON workspace file");
  app.add_option("--output", output_path, "write the result here instead of stdout");
  app.add_option("--seed", seed, "master seed for verify and generate");

  std::string bundle_name, other_name, covering_name, suite = "all";
  std::int64_t k = 1;
  std::uint64_t trials = 1000;
  Profile profile;

  auto need_bundle = [&](CLI::App* sub) { sub->add_option("--bundle", bundle_name, "bundle name")->required(); };
  auto* pardeg = app.add_subcommand("pardeg", "parabolic degree");
  auto* slope = app.add_subcommand("slope", "parabolic slope");
  auto* hn = app.add_subcommand("hn", "Harder-Narasimhan spectrum, mu_min and d_min");
  auto* cls = app.add_subcommand("classify", "ample / nef / anti-ample / anti-nef verdict");
  auto* dual_cmd = app.add_subcommand("dual", "parabolic dual");
  for (auto* s : {pardeg, slope, hn, cls, dual_cmd}) need_bundle(s);

  auto* sum_cmd = app.add_subcommand("sum", "direct sum of two bundles");
  auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of two bundles");
  for (auto* s : {sum_cmd, tensor_cmd}) {
    need_bundle(s);
    s->add_option("--other", other_name, "second bundle")->required();
  }
  auto* sym_cmd = app.add_subcommand("sym", "symmetric power");
  need_bundle(sym_cmd);
  sym_cmd->add_option("-k,--power", k, "power k >= 1")->required();

  auto* pull_cmd = app.add_subcommand("pullback", "pullback along a covering");
  auto* push_cmd = app.add_subcommand("pushforward", "direct image along a covering");
  for (auto* s : {pull_cmd, push_cmd}) {
    need_bundle(s);
    s->add_option("--covering", covering_name, "covering name")->required();
  }
  auto* galois_cmd = app.add_subcommand("galois", "Galois closure data and decomposition check");
  galois_cmd->add_option("--covering", covering_name, "covering with monodromy")->required();
  galois_cmd->add_option("--bundle", bundle_name, "bundle on the covering's source to check");

  auto* verify_cmd = app.add_subcommand("verify", "run randomized theorem suites");
  verify_cmd->add_option("--suite", suite, "suite name or \"all\"");
  verify_cmd->add_option("--trials", trials, "trials per suite");

  auto* gen_cmd = app.add_subcommand("generate", "write a random workspace instance");
  gen_cmd->add_option("--min-degree", profile.min_covering_degree, "least covering degree");
  gen_cmd->add_option("--max-degree", profile.max_covering_degree, "largest covering degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto emit = [&](const Json& j) {
    const std::string text = dump_canonical(j);
    if (output_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output_path);
      if (!out) throw DomainError("cannot write " + output_path);
      out << text;
    }
  };

  try {
    if (gen_cmd->parsed()) {
      if (profile.min_covering_degree < 1 || profile.max_covering_degree < profile.min_covering_degree) {
        std::cerr << "error: need 1 <= --min-degree <= --max-degree\n";
        return 2;
      }
      RandomInstance inst = random_instance(seed, profile);
      Workspace ws;
      add_to_workspace(ws, inst.covering);
      add_to_workspace(ws, "E", inst.target_bundle);
      add_to_workspace(ws, "V", inst.source_bundle);
      emit(workspace_to_json(ws));
      return 0;
    }
    if (verify_cmd->parsed()) {
      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else {
        auto& all = suite_names();
        if (std::find(all.begin(), all.end(), suite) == all.end()) {
          std::cerr << "error: unknown suite \"" << suite << "\"\n";
          return 2;
        }
        names = {suite};
      }
      Json reports = Json::array();
      bool ok = true;
      for (const auto& n : names) {
        SuiteReport r = run_suite(n, trials, seed);
        ok = ok && r.ok();
        reports.push_back(suite_json(r));
      }
      emit({{"ok", ok}, {"seed", seed}, {"suites", reports}});
      return ok ? 0 : 1;
    }

    if (workspace_path.empty()) {
      std::cerr << "error: --workspace is required for this subcommand\n";
      return 2;
    }
    const Workspace ws = load_workspace(workspace_path);

    if (pardeg->parsed()) {
      emit({{"par_deg", to_string(par_deg(ws.bundle(bundle_name)))}});
    } else if (slope->parsed()) {
      emit({{"slope", to_string(par_slope(ws.bundle(bundle_name)))}});
    } else if (hn->parsed()) {
      const auto& b = ws.bundle(bundle_name);
      emit({{"d_min", to_string(d_min(b))}, {"mu_min", to_string(mu_min(b))}, {"spectrum", to_json(hn_spectrum(b))}});
    } else if (cls->parsed()) {
      emit(to_json(classify(ws.bundle(bundle_name))));
    } else if (dual_cmd->parsed()) {
      emit(bundle_result(dual(ws.bundle(bundle_name)), "dual(" + bundle_name + ")"));
    } else if (sum_cmd->parsed()) {
      emit(bundle_result(direct_sum(ws.bundle(bundle_name), ws.bundle(other_name)),
                         bundle_name + "+" + other_name));
    } else if (tensor_cmd->parsed()) {
      emit(bundle_result(tensor(ws.bundle(bundle_name), ws.bundle(other_name)),
                         bundle_name + "*" + other_name));
    } else if (sym_cmd->parsed()) {
      emit(bundle_result(sym_power(ws.bundle(bundle_name), k),
                         "S" + std::to_string(k) + "(" + bundle_name + ")"));
    } else if (pull_cmd->parsed()) {
      Transported t = pullback_with_report(ws.covering(covering_name), ws.bundle(bundle_name));
      Json j = bundle_result(t.bundle, covering_name + "^*" + bundle_name);
      j["report"] = to_json(t.report);
      emit(j);
    } else if (push_cmd->parsed()) {
      Transported t = direct_image_with_report(ws.covering(covering_name), ws.bundle(bundle_name));
      Json j = bundle_result(t.bundle, covering_name + "_*" + bundle_name);
      j["report"] = to_json(t.report);
      emit(j);
    } else if (galois_cmd->parsed()) {
      GaloisClosureData data = galois_closure_data(ws.covering(covering_name), group_cap_from_env());
      Json j = to_json(data);
      if (!bundle_name.empty()) {
        DecompositionReport r = verify_decomposition(data, ws.bundle(bundle_name));
        j["decomposition"] = to_json(r);
        emit(j);
        return r.ok() ? 0 : 1;
      }
      emit(j);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
