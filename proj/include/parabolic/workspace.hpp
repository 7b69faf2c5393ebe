#pragma once

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "parabolic/bundle.hpp"
#include "parabolic/covering.hpp"
#include "parabolic/galois.hpp"
#include "parabolic/positivity.hpp"
#include "parabolic/transport.hpp"

namespace parabolic {

using Json = nlohmann::json;

/// Named curves, coverings and bundles, all validated and cross-referenced.
struct Workspace {
  std::map<std::string, MarkedCurve> curves;
  std::map<std::string, CoveringMap> coverings;
  std::map<std::string, ParabolicBundle> bundles;

  const MarkedCurve& curve(const std::string& name) const;
  const CoveringMap& covering(const std::string& name) const;
  const ParabolicBundle& bundle(const std::string& name) const;
};

Workspace parse_workspace(const std::string& text);
Workspace load_workspace(const std::string& path);
Json workspace_to_json(const Workspace& ws);
/// Canonical form: sorted keys, two-space indent, trailing newline.
std::string save_workspace(const Workspace& ws);
/// Adds the objects of `ws` to a file-ready workspace; curves referenced by
/// coverings and bundles are registered automatically.
void add_to_workspace(Workspace& ws, const std::string& name, const ParabolicBundle& bundle);
void add_to_workspace(Workspace& ws, const CoveringMap& covering);

std::string dump_canonical(const Json& j);

Json to_json(const MarkedCurve& curve);
Json to_json(const CoveringMap& covering);
Json to_json(const ParabolicBundle& bundle, const std::string& name);
Json to_json(const HNSpectrum& spectrum);
Json to_json(const PositivityVerdict& verdict);
Json to_json(const TransportReport& report);
Json to_json(const NefHarnessReport& report);
Json to_json(const GaloisClosureData& data);
Json to_json(const DecompositionReport& report);

MarkedCurve curve_from_json(const Json& j);
CoveringMap covering_from_json(const Json& j, const std::map<std::string, MarkedCurve>& curves);
ParabolicBundle bundle_from_json(const Json& j, const std::map<std::string, MarkedCurve>& curves);

}  // namespace parabolic
