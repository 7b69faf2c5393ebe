#include "parabolic/calculus.hpp"

#include <functional>
#include <map>

namespace parabolic {

LocalData dual_local(const LocalData& local) {
  LocalData out;
  out.degree = -local.degree;
  for (const auto& [p, ws] : local.weights) {
    out.degree -= ws.nonzero_count();
    out.weights.emplace(p, ws.map([](const Rational& w) { return w == 0 ? w : Rational(1 - w); }));
  }
  return out;
}

LocalData sum_local(const LocalData& a, const LocalData& b) {
  LocalData out{a.degree + b.degree, {}};
  for (const auto& [p, ws] : a.weights) out.weights.emplace(p, ws.merged(b.weights.at(p)));
  return out;
}

LocalData tensor_local(const LocalData& a, std::int64_t rank_a, const LocalData& b,
                       std::int64_t rank_b) {
  LocalData out{a.degree * rank_b + b.degree * rank_a, {}};
  for (const auto& [p, wa] : a.weights) {
    const auto& wb = b.weights.at(p);
    std::vector<WeightMultiset::Entry> entries;
    for (const auto& [x, mx] : wa.entries())
      for (const auto& [y, my] : wb.entries()) {
        Rational s = x + y;
        Integer fl = floor_of(s);
        out.degree += fl * (mx * my);
        entries.emplace_back(s - Rational(fl), mx * my);
      }
    out.weights.emplace(p, WeightMultiset(std::move(entries)));
  }
  return out;
}

LocalData sym_local(const LocalData& local, std::int64_t rank, std::int64_t k) {
  LocalData out{binomial(rank + k - 1, k - 1) * local.degree, {}};
  for (const auto& [p, ws] : local.weights) {
    // by_left[l][s]: ways to place k - l of the k factors on the weights seen
    // so far with weight sum s
    std::vector<std::map<Rational, Integer>> by_left(k + 1);
    by_left[k][Rational(0)] = 1;
    for (const auto& [w, m] : ws.entries()) {
      std::vector<std::map<Rational, Integer>> next(k + 1);
      for (std::int64_t left = 0; left <= k; ++left)
        for (const auto& [s, c] : by_left[left])
          for (std::int64_t kj = 0; kj <= left; ++kj)
            next[left - kj][s + w * kj] += c * binomial(m + kj - 1, kj);
      by_left = std::move(next);
    }
    std::vector<WeightMultiset::Entry> entries;
    for (const auto& [s, c] : by_left[0]) {
      Integer fl = floor_of(s);
      out.degree += fl * c;
      entries.emplace_back(s - Rational(fl), c.get_si());
    }
    out.weights.emplace(p, WeightMultiset(std::move(entries)));
  }
  return out;
}

namespace {

std::vector<GradedPiece> tensor_pieces(const std::vector<GradedPiece>& a,
                                       const std::vector<GradedPiece>& b) {
  std::vector<GradedPiece> out;
  for (const auto& x : a)
    for (const auto& y : b)
      out.push_back({x.rank * y.rank, x.par_degree * y.rank + y.par_degree * x.rank});
  return out;
}

std::vector<GradedPiece> concat(std::vector<GradedPiece> a, const std::vector<GradedPiece>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

MarkedCurve common_curve(const MarkedCurve& a, const MarkedCurve& b) {
  if (!a.same_surface(b))
    throw DomainError("incompatible base curves: " + a.name() + " (genus " +
                      std::to_string(a.genus()) + ") vs " + b.name() + " (genus " +
                      std::to_string(b.genus()) + ")");
  return a.with_points(b.points());
}

}  // namespace

ParabolicBundle dual(const ParabolicBundle& bundle) {
  std::vector<GradedPiece> pieces;
  for (const auto& p : bundle.pieces()) pieces.push_back({p.rank, -p.par_degree});
  switch (bundle.kind()) {
    case BundleKind::full: {
      std::vector<SemistableAtom> atoms;
      for (const auto& a : bundle.atoms()) {
        LocalData d = dual_local(a.local());
        atoms.emplace_back(a.rank(), d.degree, d.weights);
      }
      return ParabolicBundle::from_atoms(bundle.curve(), std::move(atoms));
    }
    case BundleKind::transport_derived:
      return ParabolicBundle::from_local(bundle.curve(), dual_local(bundle.local_data()),
                                         std::move(pieces));
    case BundleKind::spectrum_only:
      break;
  }
  return ParabolicBundle::from_spectrum(bundle.curve(), std::move(pieces));
}

ParabolicBundle direct_sum(const ParabolicBundle& a0, const ParabolicBundle& b0) {
  MarkedCurve curve = common_curve(a0.curve(), b0.curve());
  ParabolicBundle a = a0.extended_to(curve), b = b0.extended_to(curve);
  if (a.kind() == BundleKind::full && b.kind() == BundleKind::full) {
    std::vector<SemistableAtom> atoms = a.atoms();
    atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
    return ParabolicBundle::from_atoms(curve, std::move(atoms));
  }
  if (a.has_local_data() && b.has_local_data())
    return ParabolicBundle::from_local(curve, sum_local(a.local_data(), b.local_data()),
                                       concat(a.pieces(), b.pieces()));
  return ParabolicBundle::from_spectrum(curve, concat(a.pieces(), b.pieces()));
}

ParabolicBundle direct_sum(const std::vector<ParabolicBundle>& parts) {
  if (parts.empty()) throw DomainError("direct sum of no bundles");
  MarkedCurve curve = parts.front().curve();
  for (const auto& p : parts) curve = common_curve(curve, p.curve());
  bool all_full = true, all_local = true;
  for (const auto& p : parts) {
    all_full = all_full && p.kind() == BundleKind::full;
    all_local = all_local && p.has_local_data();
  }
  std::vector<GradedPiece> pieces;
  if (all_full) {
    std::vector<SemistableAtom> atoms;
    for (const auto& p : parts) atoms.insert(atoms.end(), p.atoms().begin(), p.atoms().end());
    return ParabolicBundle::from_atoms(curve, std::move(atoms));
  }
  for (const auto& p : parts) pieces.insert(pieces.end(), p.pieces().begin(), p.pieces().end());
  if (!all_local) return ParabolicBundle::from_spectrum(curve, std::move(pieces));
  LocalData local = parts.front().extended_to(curve).local_data();
  for (std::size_t i = 1; i < parts.size(); ++i)
    local = sum_local(local, parts[i].extended_to(curve).local_data());
  return ParabolicBundle::from_local(curve, std::move(local), std::move(pieces));
}

ParabolicBundle tensor(const ParabolicBundle& a0, const ParabolicBundle& b0) {
  MarkedCurve curve = common_curve(a0.curve(), b0.curve());
  ParabolicBundle a = a0.extended_to(curve), b = b0.extended_to(curve);
  if (a.kind() == BundleKind::full && b.kind() == BundleKind::full) {
    std::vector<SemistableAtom> atoms;
    for (const auto& x : a.atoms())
      for (const auto& y : b.atoms()) {
        LocalData t = tensor_local(x.local(), x.rank(), y.local(), y.rank());
        atoms.emplace_back(x.rank() * y.rank(), t.degree, t.weights);
      }
    return ParabolicBundle::from_atoms(curve, std::move(atoms));
  }
  auto pieces = tensor_pieces(a.pieces(), b.pieces());
  if (a.has_local_data() && b.has_local_data())
    return ParabolicBundle::from_local(
        curve, tensor_local(a.local_data(), a.rank(), b.local_data(), b.rank()),
        std::move(pieces));
  return ParabolicBundle::from_spectrum(curve, std::move(pieces));
}

ParabolicBundle sym_power(const ParabolicBundle& bundle, std::int64_t k) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (k == 1) return bundle;
  if (bundle.kind() == BundleKind::full && bundle.atoms().size() == 1) {
    const auto& atom = bundle.atoms().front();
    LocalData s = sym_local(atom.local(), atom.rank(), k);
    std::int64_t rank = binomial(atom.rank() + k - 1, k).get_si();
    return ParabolicBundle::from_atoms(bundle.curve(), {SemistableAtom(rank, s.degree, s.weights)});
  }
  // one piece per multi-degree (k_1..k_m), Σ k_i = k
  const auto& src = bundle.pieces();
  std::vector<GradedPiece> out;
  std::function<void(std::size_t, std::int64_t, const Integer&, const Rational&)> walk =
      [&](std::size_t i, std::int64_t left, const Integer& rank, const Rational& slope) {
        if (i + 1 == src.size()) {
          Integer r = rank * binomial(src[i].rank + left - 1, left);
          Rational mu = slope + src[i].slope() * left;
          out.push_back({r.get_si(), mu * r});
          return;
        }
        for (std::int64_t ki = 0; ki <= left; ++ki)
          walk(i + 1, left - ki, rank * binomial(src[i].rank + ki - 1, ki),
               slope + src[i].slope() * ki);
      };
  walk(0, k, Integer(1), Rational(0));
  return ParabolicBundle::from_spectrum(bundle.curve(), std::move(out));
}

std::vector<ParabolicBundle> summand_quotients(const ParabolicBundle& bundle) {
  const bool full = bundle.kind() == BundleKind::full;
  const std::size_t n = full ? bundle.atoms().size() : bundle.pieces().size();
  if (n > kQuotientEnumerationBound)
    throw DomainError("quotient enumeration bound exceeded (" + std::to_string(n) + " > " +
                      std::to_string(kQuotientEnumerationBound) + " atoms)");
  std::vector<ParabolicBundle> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (full) {
      std::vector<SemistableAtom> kept;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) kept.push_back(bundle.atoms()[i]);
      out.push_back(ParabolicBundle::from_atoms(bundle.curve(), std::move(kept)));
    } else {
      std::vector<GradedPiece> kept;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) kept.push_back(bundle.pieces()[i]);
      out.push_back(ParabolicBundle::from_spectrum(bundle.curve(), std::move(kept)));
    }
  }
  return out;
}

}  // namespace parabolic
