#include "parabolic/workspace.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace parabolic {

namespace {

void check_keys(const Json& j, const std::string& where, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw DomainError(where + ": expected an object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!j.contains(k)) throw DomainError(where + ": missing field \"" + k + "\"");
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw DomainError(where + ": unknown field \"" + k + "\"");
}

std::int64_t get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw DomainError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

Integer get_integer(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (!is_integral(q)) throw DomainError(where + ": expected an integer");
    return q.get_num();
  }
  throw DomainError(where + ": expected an integer");
}

std::string get_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw DomainError(where + ": expected a string");
  return j.get<std::string>();
}

Rational get_rational(const Json& j, const std::string& where) {
  if (!j.is_string()) throw DomainError(where + ": rationals are written as \"p/q\" strings");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const DomainError& e) {
    throw DomainError(where + ": " + e.what());
  }
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Json weights_json(const std::map<std::string, WeightMultiset>& weights) {
  Json out = Json::object();
  for (const auto& [p, ws] : weights) {
    if (ws.all_zero()) continue;
    Json list = Json::array();
    for (const auto& [w, m] : ws.entries()) list.push_back({{"m", m}, {"w", to_string(w)}});
    out[p] = std::move(list);
  }
  return out;
}

std::map<std::string, WeightMultiset> weights_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw DomainError(where + ": expected an object of point -> weights");
  std::map<std::string, WeightMultiset> out;
  for (const auto& [p, list] : j.items()) {
    const std::string at = where + "." + p;
    if (!list.is_array()) throw DomainError(at + ": expected a list of {\"w\",\"m\"}");
    std::vector<WeightMultiset::Entry> entries;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string ai = at + "[" + std::to_string(i) + "]";
      check_keys(list[i], ai, {"w", "m"});
      entries.emplace_back(get_rational(list[i]["w"], ai + ".w"), get_int(list[i]["m"], ai + ".m"));
    }
    try {
      out.emplace(p, WeightMultiset(std::move(entries)));
    } catch (const DomainError& e) {
      throw DomainError(at + ": " + e.what());
    }
  }
  return out;
}

std::vector<GradedPiece> spectrum_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw DomainError(where + ": expected a list");
  std::vector<GradedPiece> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    check_keys(j[i], at, {"rank", "par_deg"});
    out.push_back({get_int(j[i]["rank"], at + ".rank"), get_rational(j[i]["par_deg"], at + ".par_deg")});
  }
  return out;
}

Json pieces_json(const std::vector<GradedPiece>& pieces) {
  Json out = Json::array();
  for (const auto& p : pieces) out.push_back({{"par_deg", to_string(p.par_degree)}, {"rank", p.rank}});
  return out;
}

const MarkedCurve& find_curve(const std::map<std::string, MarkedCurve>& curves,
                              const std::string& name, const std::string& where) {
  auto it = curves.find(name);
  if (it == curves.end()) throw DomainError(where + ": unknown curve \"" + name + "\"");
  return it->second;
}

}  // namespace

// ---- lookups ---------------------------------------------------------------

const MarkedCurve& Workspace::curve(const std::string& name) const {
  auto it = curves.find(name);
  if (it == curves.end()) throw DomainError("no curve named \"" + name + "\"");
  return it->second;
}

const CoveringMap& Workspace::covering(const std::string& name) const {
  auto it = coverings.find(name);
  if (it == coverings.end()) throw DomainError("no covering named \"" + name + "\"");
  return it->second;
}

const ParabolicBundle& Workspace::bundle(const std::string& name) const {
  auto it = bundles.find(name);
  if (it == bundles.end()) throw DomainError("no bundle named \"" + name + "\"");
  return it->second;
}

// ---- object <-> json -------------------------------------------------------

Json to_json(const MarkedCurve& curve) {
  return {{"genus", curve.genus()}, {"name", curve.name()}, {"points", curve.points()}};
}

MarkedCurve curve_from_json(const Json& j) {
  check_keys(j, "curve", {"name", "genus", "points"});
  const std::string name = get_string(j["name"], "curve.name");
  const std::string where = "curve " + name;
  if (!j["points"].is_array()) throw DomainError(where + ".points: expected a list");
  std::vector<std::string> pts;
  for (const auto& p : j["points"]) pts.push_back(get_string(p, where + ".points"));
  return MarkedCurve(name, get_int(j["genus"], where + ".genus"), std::move(pts));
}

Json to_json(const CoveringMap& c) {
  Json fibers = Json::array();
  for (const auto& f : c.fibers()) {
    Json above = Json::array();
    for (const auto& p : f.above) above.push_back({{"e", p.e}, {"point", p.point}});
    fibers.push_back({{"above", above}, {"base", f.base}});
  }
  Json out = {{"degree", c.degree()}, {"fibers", fibers}, {"name", c.name()},
              {"source", c.source().name()}, {"target", c.target().name()}};
  if (c.has_monodromy()) {
    Json mono = Json::array();
    for (const auto& p : c.monodromy()) mono.push_back(to_one_indexed(p));
    out["monodromy"] = mono;
  }
  return out;
}

CoveringMap covering_from_json(const Json& j, const std::map<std::string, MarkedCurve>& curves) {
  check_keys(j, "covering", {"name", "source", "target", "degree", "fibers"}, {"monodromy"});
  CoveringData d;
  d.name = get_string(j["name"], "covering.name");
  const std::string where = "covering " + d.name;
  d.source = find_curve(curves, get_string(j["source"], where + ".source"), where);
  d.target = find_curve(curves, get_string(j["target"], where + ".target"), where);
  d.degree = get_int(j["degree"], where + ".degree");
  if (!j["fibers"].is_array()) throw DomainError(where + ".fibers: expected a list");
  for (std::size_t i = 0; i < j["fibers"].size(); ++i) {
    const auto& fj = j["fibers"][i];
    const std::string at = where + ".fibers[" + std::to_string(i) + "]";
    check_keys(fj, at, {"base", "above"});
    FiberProfile f{get_string(fj["base"], at + ".base"), {}};
    if (!fj["above"].is_array()) throw DomainError(at + ".above: expected a list");
    for (std::size_t k = 0; k < fj["above"].size(); ++k) {
      const auto& pj = fj["above"][k];
      const std::string pat = at + ".above[" + std::to_string(k) + "]";
      check_keys(pj, pat, {"point", "e"});
      f.above.push_back({get_string(pj["point"], pat + ".point"), get_int(pj["e"], pat + ".e")});
    }
    d.fibers.push_back(std::move(f));
  }
  if (j.contains("monodromy")) {
    if (!j["monodromy"].is_array()) throw DomainError(where + ".monodromy: expected a list");
    for (const auto& pj : j["monodromy"]) {
      if (!pj.is_array()) throw DomainError(where + ".monodromy: expected image lists");
      std::vector<std::int64_t> images;
      for (const auto& x : pj) images.push_back(get_int(x, where + ".monodromy"));
      try {
        d.monodromy.push_back(from_one_indexed(images));
      } catch (const DomainError& e) {
        throw DomainError(where + ".monodromy: " + e.what());
      }
    }
  }
  return CoveringMap(std::move(d));
}

Json to_json(const ParabolicBundle& b, const std::string& name) {
  Json out = {{"curve", b.curve().name()}, {"name", name}};
  switch (b.kind()) {
    case BundleKind::full: {
      Json atoms = Json::array();
      for (const auto& a : b.atoms())
        atoms.push_back({{"degree", integer_json(a.degree())},
                         {"rank", a.rank()},
                         {"weights", weights_json(a.local().weights)}});
      out["atoms"] = atoms;
      break;
    }
    case BundleKind::transport_derived:
      out["kind"] = to_string(b.kind());
      out["degree"] = integer_json(b.local_data().degree);
      out["weights"] = weights_json(b.local_data().weights);
      out["spectrum"] = pieces_json(b.pieces());
      break;
    case BundleKind::spectrum_only:
      out["kind"] = to_string(b.kind());
      out["spectrum"] = pieces_json(b.pieces());
      break;
  }
  return out;
}

ParabolicBundle bundle_from_json(const Json& j, const std::map<std::string, MarkedCurve>& curves) {
  if (!j.is_object() || !j.contains("name")) throw DomainError("bundle: missing field \"name\"");
  const std::string name = get_string(j["name"], "bundle.name");
  const std::string where = "bundle " + name;
  std::string kind = "full";
  if (j.contains("kind")) kind = get_string(j["kind"], where + ".kind");

  try {
    if (kind == "full") {
      check_keys(j, where, {"name", "curve", "atoms"});
      const MarkedCurve& curve = find_curve(curves, get_string(j["curve"], where + ".curve"), where);
      if (!j["atoms"].is_array()) throw DomainError(where + ".atoms: expected a list");
      std::vector<SemistableAtom> atoms;
      for (std::size_t i = 0; i < j["atoms"].size(); ++i) {
        const auto& aj = j["atoms"][i];
        const std::string at = where + ".atoms[" + std::to_string(i) + "]";
        check_keys(aj, at, {"rank", "degree"}, {"weights"});
        std::map<std::string, WeightMultiset> ws;
        if (aj.contains("weights")) ws = weights_from_json(aj["weights"], at + ".weights");
        atoms.emplace_back(get_int(aj["rank"], at + ".rank"), get_integer(aj["degree"], at + ".degree"),
                           std::move(ws));
      }
      return ParabolicBundle::from_atoms(curve, std::move(atoms));
    }
    if (kind == "transport-derived") {
      check_keys(j, where, {"name", "curve", "kind", "degree", "spectrum"}, {"weights"});
      const MarkedCurve& curve = find_curve(curves, get_string(j["curve"], where + ".curve"), where);
      LocalData local{get_integer(j["degree"], where + ".degree"), {}};
      if (j.contains("weights")) local.weights = weights_from_json(j["weights"], where + ".weights");
      return ParabolicBundle::from_local(curve, std::move(local),
                                         spectrum_from_json(j["spectrum"], where + ".spectrum"));
    }
    if (kind == "spectrum-only") {
      check_keys(j, where, {"name", "curve", "kind", "spectrum"});
      const MarkedCurve& curve = find_curve(curves, get_string(j["curve"], where + ".curve"), where);
      return ParabolicBundle::from_spectrum(curve, spectrum_from_json(j["spectrum"], where + ".spectrum"));
    }
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    if (msg.rfind(where, 0) == 0) throw;
    throw DomainError(where + ": " + msg);
  }
  throw DomainError(where + ": unknown kind \"" + kind + "\"");
}

Json to_json(const HNSpectrum& s) {
  Json out = Json::array();
  for (const auto& g : s.graded)
    out.push_back({{"par_deg", to_string(g.par_degree)}, {"rank", g.rank}, {"slope", to_string(g.slope())}});
  return out;
}

Json to_json(const PositivityVerdict& v) {
  return {{"ample", v.ample},         {"anti_ample", v.anti_ample},   {"anti_nef", v.anti_nef},
          {"mu_max", to_string(v.mu_max)}, {"mu_min", to_string(v.mu_min)}, {"nef", v.nef}};
}

Json to_json(const TransportReport& r) {
  return {{"degree_used", r.degree_used},
          {"divisor_out", r.divisor_out},
          {"input_pardeg", to_string(r.input_pardeg)},
          {"output_pardeg", to_string(r.output_pardeg)}};
}

Json to_json(const NefHarnessReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"ample", s.ample}, {"closed_form", to_string(s.closed_form)}, {"k", s.k},
                     {"mu_min", to_string(s.mu_min)}});
  return {{"consistent", r.consistent},
          {"first_failure", r.first_failure ? Json(*r.first_failure) : Json(nullptr)},
          {"nef", r.nef},
          {"predicted_failure", r.predicted_failure ? Json(*r.predicted_failure) : Json(nullptr)},
          {"steps", steps}};
}

Json to_json(const GaloisClosureData& d) {
  Json transversal = Json::array();
  for (const auto& t : d.decomposition.transversal) transversal.push_back(to_one_indexed(t));
  return {{"deg_g", d.deg_g},
          {"deg_h", d.deg_h},
          {"f_is_galois", d.f_is_galois},
          {"gamma_order", d.gamma.order()},
          {"left_coset_count", d.decomposition.left_coset_count},
          {"right_coset_count", d.decomposition.right_coset_count},
          {"stabilizer_order", d.stabilizer.order()},
          {"subgroup_normal", d.subgroup_normal},
          {"transversal", transversal},
          {"transversal_hits_each_left_coset_once", d.decomposition.transversal_hits_each_left_coset_once},
          {"transversal_hits_each_right_coset_once", d.decomposition.transversal_hits_each_right_coset_once},
          {"transversal_meets_subgroup_in_identity", d.decomposition.transversal_meets_subgroup_in_identity},
          {"h", to_json(d.h)},
          {"g", to_json(d.g)},
          {"Z", to_json(d.h.source())}};
}

Json to_json(const DecompositionReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"left", c.left}, {"name", c.name}, {"passed", c.passed}, {"right", c.right}});
  return {{"checks", checks},
          {"invariant_orbits", r.invariant_orbits},
          {"ok", r.ok()},
          {"transversal_size", r.transversal_size}};
}

// ---- workspace -------------------------------------------------------------

Workspace parse_workspace(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("JSON parse error: ") + e.what());
  }
  check_keys(j, "workspace", {}, {"curves", "coverings", "bundles"});
  Workspace ws;
  for (const char* key : {"curves", "coverings", "bundles"})
    if (j.contains(key) && !j[key].is_array())
      throw DomainError(std::string("workspace.") + key + ": expected a list");
  if (j.contains("curves"))
    for (const auto& cj : j["curves"]) {
      MarkedCurve c = curve_from_json(cj);
      std::string name = c.name();
      if (!ws.curves.emplace(name, std::move(c)).second)
        throw DomainError("duplicate curve \"" + name + "\"");
    }
  if (j.contains("coverings"))
    for (const auto& cj : j["coverings"]) {
      CoveringMap c = covering_from_json(cj, ws.curves);
      std::string name = c.name();
      if (!ws.coverings.emplace(name, std::move(c)).second)
        throw DomainError("duplicate covering \"" + name + "\"");
    }
  if (j.contains("bundles"))
    for (const auto& bj : j["bundles"]) {
      ParabolicBundle b = bundle_from_json(bj, ws.curves);
      std::string name = bj["name"].get<std::string>();
      if (!ws.bundles.emplace(name, std::move(b)).second)
        throw DomainError("duplicate bundle \"" + name + "\"");
    }
  return ws;
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open workspace file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str());
}

Json workspace_to_json(const Workspace& ws) {
  Json curves = Json::array(), coverings = Json::array(), bundles = Json::array();
  for (const auto& [n, c] : ws.curves) curves.push_back(to_json(c));
  for (const auto& [n, c] : ws.coverings) coverings.push_back(to_json(c));
  for (const auto& [n, b] : ws.bundles) bundles.push_back(to_json(b, n));
  return {{"bundles", bundles}, {"coverings", coverings}, {"curves", curves}};
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

std::string save_workspace(const Workspace& ws) { return dump_canonical(workspace_to_json(ws)); }

namespace {

void register_curve(Workspace& ws, const MarkedCurve& c) {
  auto [it, inserted] = ws.curves.emplace(c.name(), c);
  if (!inserted && it->second != c)
    throw DomainError("workspace already has a different curve named \"" + c.name() + "\"");
}

}  // namespace

void add_to_workspace(Workspace& ws, const std::string& name, const ParabolicBundle& bundle) {
  register_curve(ws, bundle.curve());
  ws.bundles.insert_or_assign(name, bundle);
}

void add_to_workspace(Workspace& ws, const CoveringMap& covering) {
  register_curve(ws, covering.source());
  register_curve(ws, covering.target());
  ws.coverings.insert_or_assign(covering.name(), covering);
}

}  // namespace parabolic
