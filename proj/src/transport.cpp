#include "parabolic/transport.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace parabolic {

namespace {

const LocalData& require_local(const ParabolicBundle& b) {
  if (!b.has_local_data())
    throw DomainError("local data required: cannot transport a spectrum-only bundle");
  return b.local_data();
}

LocalData pull_local(const CoveringMap& f, const LocalData& local, std::int64_t rank,
                     const MarkedCurve& out_curve) {
  LocalData out{local.degree * f.degree(), {}};
  for (const auto& y : out_curve.points()) {
    auto img = f.image_of(y);
    auto it = img ? local.weights.find(img->first) : local.weights.end();
    if (it == local.weights.end()) {
      out.weights.emplace(y, WeightMultiset::zeros(rank));
      continue;
    }
    const std::int64_t e = img->second;
    std::vector<WeightMultiset::Entry> entries;
    for (const auto& [w, m] : it->second.entries()) {
      Rational s = w * e;
      Integer fl = floor_of(s);
      out.degree += fl * m;
      entries.emplace_back(s - Rational(fl), m);
    }
    out.weights.emplace(y, WeightMultiset(std::move(entries)));
  }
  return out;
}

}  // namespace

Transported pullback_with_report(const CoveringMap& f, const ParabolicBundle& bundle) {
  const LocalData& local = require_local(bundle);
  if (!bundle.curve().same_surface(f.target()))
    throw DomainError("pullback: bundle lives on " + bundle.curve().name() + ", but " +
                      f.name() + " maps to " + f.target().name());
  std::vector<std::string> divisor;
  for (const auto& x : bundle.curve().points()) {
    const auto* fib = f.fiber_over(x);
    if (!fib)
      throw DomainError("pullback: marked point " + x + " has no listed fiber in " + f.name());
    for (const auto& p : fib->above) divisor.push_back(p.point);
  }
  MarkedCurve out_curve = f.source().with_points(divisor);

  std::vector<GradedPiece> pieces;
  for (const auto& p : bundle.pieces()) pieces.push_back({p.rank, p.par_degree * f.degree()});

  std::optional<ParabolicBundle> out;
  if (bundle.kind() == BundleKind::full) {
    std::vector<SemistableAtom> atoms;
    for (const auto& a : bundle.atoms()) {
      LocalData l = pull_local(f, a.local(), a.rank(), out_curve);
      atoms.emplace_back(a.rank(), l.degree, l.weights);
    }
    out = ParabolicBundle::from_atoms(out_curve, std::move(atoms));
  } else {
    out = ParabolicBundle::from_local(out_curve, pull_local(f, local, bundle.rank(), out_curve),
                                      std::move(pieces));
  }
  std::sort(divisor.begin(), divisor.end());
  TransportReport report{par_deg(bundle), par_deg(*out), f.degree(), std::move(divisor)};
  return {std::move(*out), std::move(report)};
}

ParabolicBundle pullback(const CoveringMap& f, const ParabolicBundle& bundle) {
  return pullback_with_report(f, bundle).bundle;
}

Transported direct_image_with_report(const CoveringMap& f, const ParabolicBundle& bundle) {
  const LocalData& local = require_local(bundle);
  if (!bundle.curve().same_surface(f.source()))
    throw DomainError("direct image: bundle lives on " + bundle.curve().name() + ", but " +
                      f.name() + " starts at " + f.source().name());

  std::set<std::string> delta;
  for (const auto& y : bundle.curve().points()) {
    auto img = f.image_of(y);
    if (!img)
      throw DomainError("direct image: marked point " + y + " lies over no listed fiber of " +
                        f.name());
    delta.insert(img->first);
  }
  for (const auto& fib : f.fibers())
    for (const auto& p : fib.above)
      if (p.e > 1) delta.insert(fib.base);
  std::vector<std::string> divisor(delta.begin(), delta.end());
  MarkedCurve out_curve = f.target().with_points(divisor);

  const std::int64_t rank = bundle.rank();
  const std::int64_t out_rank = rank * f.degree();
  LocalData out{0, {}};
  for (const auto& x : out_curve.points()) {
    const auto* fib = f.fiber_over(x);
    if (!delta.count(x) || !fib) {
      out.weights.emplace(x, WeightMultiset::zeros(out_rank));
      continue;
    }
    std::vector<WeightMultiset::Entry> entries;
    for (const auto& [y, e] : fib->above) {
      auto it = local.weights.find(y);
      WeightMultiset ws = it == local.weights.end() ? WeightMultiset::zeros(rank) : it->second;
      for (const auto& [w, m] : ws.entries())
        for (std::int64_t j = 0; j < e; ++j) entries.emplace_back((w + j) / e, m);
    }
    out.weights.emplace(x, WeightMultiset(std::move(entries)));
  }

  const Rational pd = par_deg(bundle);
  const Rational deg0 = pd - out.weight_sum();
  if (!is_integral(deg0))
    throw DomainError("inconsistent covering/bundle data: direct image degree " +
                      to_string(deg0) + " is not an integer");
  out.degree = deg0.get_num();

  std::vector<GradedPiece> pieces;
  for (const auto& g : hn_spectrum(bundle).graded)
    pieces.push_back({g.rank * f.degree(), g.par_degree});

  ParabolicBundle result = ParabolicBundle::from_local(out_curve, std::move(out), std::move(pieces));
  TransportReport report{pd, par_deg(result), f.degree(), std::move(divisor)};
  return {std::move(result), std::move(report)};
}

ParabolicBundle direct_image(const CoveringMap& f, const ParabolicBundle& bundle) {
  return direct_image_with_report(f, bundle).bundle;
}

}  // namespace parabolic
