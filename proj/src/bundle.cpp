#include "parabolic/bundle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace parabolic {

// ---- WeightMultiset --------------------------------------------------------

WeightMultiset::WeightMultiset(std::vector<Entry> entries) {
  for (const auto& [w, m] : entries) {
    if (w < 0 || w >= 1) throw DomainError("weight " + to_string(w) + " outside [0,1)");
    if (m < 1) throw DomainError("weight multiplicity must be >= 1, got " + std::to_string(m));
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().first == e.first)
      entries_.back().second += e.second;
    else
      entries_.push_back(std::move(e));
  }
}

WeightMultiset WeightMultiset::zeros(std::int64_t rank) {
  return WeightMultiset({{Rational(0), rank}});
}

std::int64_t WeightMultiset::total() const {
  std::int64_t t = 0;
  for (const auto& e : entries_) t += e.second;
  return t;
}

Rational WeightMultiset::sum() const {
  Rational s = 0;
  for (const auto& [w, m] : entries_) s += w * m;
  return s;
}

std::int64_t WeightMultiset::nonzero_count() const {
  std::int64_t t = 0;
  for (const auto& [w, m] : entries_)
    if (w != 0) t += m;
  return t;
}

bool WeightMultiset::all_zero() const { return nonzero_count() == 0; }

WeightMultiset WeightMultiset::map(const std::function<Rational(const Rational&)>& fn) const {
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& [w, m] : entries_) out.emplace_back(fn(w), m);
  return WeightMultiset(std::move(out));
}

WeightMultiset WeightMultiset::merged(const WeightMultiset& other) const {
  std::vector<Entry> all = entries_;
  all.insert(all.end(), other.entries_.begin(), other.entries_.end());
  return WeightMultiset(std::move(all));
}

bool operator<(const WeightMultiset& a, const WeightMultiset& b) {
  return std::lexicographical_compare(
      a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
      [](const WeightMultiset::Entry& x, const WeightMultiset::Entry& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

Rational LocalData::weight_sum() const {
  Rational s = 0;
  for (const auto& [p, ws] : weights) s += ws.sum();
  return s;
}

// ---- SemistableAtom --------------------------------------------------------

SemistableAtom::SemistableAtom(std::int64_t rank, Integer degree,
                               std::map<std::string, WeightMultiset> weights)
    : rank_(rank), local_{std::move(degree), std::move(weights)} {
  if (rank_ < 1) throw DomainError("atom rank must be >= 1, got " + std::to_string(rank_));
  for (const auto& [p, ws] : local_.weights)
    if (ws.total() != rank_)
      throw DomainError("weights at " + p + " have total multiplicity " +
                        std::to_string(ws.total()) + ", expected rank " + std::to_string(rank_));
}

SemistableAtom SemistableAtom::conformed_to(const MarkedCurve& curve) const {
  std::map<std::string, WeightMultiset> full;
  for (const auto& [p, ws] : local_.weights)
    if (!curve.has_point(p))
      throw DomainError("weights given at \"" + p + "\", which is not a marked point of " +
                        curve.name());
  for (const auto& p : curve.points()) {
    auto it = local_.weights.find(p);
    full.emplace(p, it == local_.weights.end() ? WeightMultiset::zeros(rank_) : it->second);
  }
  return SemistableAtom(rank_, local_.degree, std::move(full));
}

// ---- ParabolicBundle -------------------------------------------------------

const char* to_string(BundleKind kind) {
  switch (kind) {
    case BundleKind::full: return "full";
    case BundleKind::transport_derived: return "transport-derived";
    case BundleKind::spectrum_only: return "spectrum-only";
  }
  return "?";
}

namespace {

bool atom_less(const SemistableAtom& a, const SemistableAtom& b) {
  Rational sa = a.slope(), sb = b.slope();
  if (sa != sb) return sa > sb;
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.local().weights < b.local().weights;
}

bool piece_less(const GradedPiece& a, const GradedPiece& b) {
  Rational sa = a.slope(), sb = b.slope();
  if (sa != sb) return sa > sb;
  return a.rank < b.rank;
}

std::int64_t total_rank(const std::vector<GradedPiece>& pieces) {
  std::int64_t r = 0;
  for (const auto& p : pieces) r += p.rank;
  return r;
}

void check_pieces(const std::vector<GradedPiece>& pieces) {
  if (pieces.empty()) throw DomainError("a bundle needs at least one piece");
  for (const auto& p : pieces)
    if (p.rank < 1) throw DomainError("piece rank must be >= 1");
}

}  // namespace

ParabolicBundle ParabolicBundle::from_atoms(MarkedCurve curve, std::vector<SemistableAtom> atoms) {
  if (atoms.empty()) throw DomainError("a bundle needs at least one atom");
  ParabolicBundle b;
  b.kind_ = BundleKind::full;
  for (auto& a : atoms) b.atoms_.push_back(a.conformed_to(curve));
  std::sort(b.atoms_.begin(), b.atoms_.end(), atom_less);

  LocalData local;
  local.degree = 0;
  std::map<std::string, std::vector<WeightMultiset::Entry>> gathered;
  for (const auto& p : curve.points()) gathered[p];
  for (const auto& a : b.atoms_) {
    b.pieces_.push_back({a.rank(), a.par_deg()});
    b.rank_ += a.rank();
    local.degree += a.degree();
    for (auto& [p, es] : gathered) {
      const auto& src = a.local().weights.at(p).entries();
      es.insert(es.end(), src.begin(), src.end());
    }
  }
  for (auto& [p, es] : gathered) local.weights.emplace(p, WeightMultiset(std::move(es)));
  b.local_ = std::move(local);
  b.curve_ = std::move(curve);
  return b;
}

ParabolicBundle ParabolicBundle::from_local(MarkedCurve curve, LocalData local,
                                            std::vector<GradedPiece> pieces) {
  check_pieces(pieces);
  ParabolicBundle b;
  b.kind_ = BundleKind::transport_derived;
  b.rank_ = total_rank(pieces);
  SemistableAtom shape(b.rank_, local.degree, std::move(local.weights));
  shape = shape.conformed_to(curve);
  b.local_ = shape.local();

  Rational piece_sum = 0;
  for (const auto& p : pieces) piece_sum += p.par_degree;
  if (piece_sum != b.local_->par_deg())
    throw DomainError("inconsistent local data and spectrum: local par-deg " +
                      to_string(b.local_->par_deg()) + " vs spectrum total " +
                      to_string(piece_sum));
  std::sort(pieces.begin(), pieces.end(), piece_less);
  b.pieces_ = std::move(pieces);
  b.curve_ = std::move(curve);
  return b;
}

ParabolicBundle ParabolicBundle::from_spectrum(MarkedCurve curve,
                                               std::vector<GradedPiece> pieces) {
  check_pieces(pieces);
  ParabolicBundle b;
  b.kind_ = BundleKind::spectrum_only;
  b.rank_ = total_rank(pieces);
  std::sort(pieces.begin(), pieces.end(), piece_less);
  b.pieces_ = std::move(pieces);
  b.curve_ = std::move(curve);
  return b;
}

const LocalData& ParabolicBundle::local_data() const {
  if (!local_) throw DomainError("local data required (bundle is spectrum-only)");
  return *local_;
}

ParabolicBundle ParabolicBundle::extended_to(const MarkedCurve& curve) const {
  if (!curve_.same_surface(curve)) throw DomainError("incompatible base curves");
  for (const auto& p : curve_.points())
    if (!curve.has_point(p)) throw DomainError("incompatible base curves");
  if (curve == curve_) return *this;
  switch (kind_) {
    case BundleKind::full:
      return from_atoms(curve, atoms_);
    case BundleKind::transport_derived:
      return from_local(curve, *local_, pieces_);
    case BundleKind::spectrum_only:
      return from_spectrum(curve, pieces_);
  }
  return *this;
}

// ---- degree and spectrum ---------------------------------------------------

Rational par_deg(const ParabolicBundle& bundle) {
  Rational s = 0;
  for (const auto& p : bundle.pieces()) s += p.par_degree;
  return s;
}

Rational par_slope(const ParabolicBundle& bundle) { return par_deg(bundle) / bundle.rank(); }

HNSpectrum spectrum_of(std::vector<GradedPiece> pieces) {
  std::sort(pieces.begin(), pieces.end(), piece_less);
  HNSpectrum s;
  for (const auto& p : pieces) {
    if (!s.graded.empty() && s.graded.back().slope() == p.slope()) {
      s.graded.back().rank += p.rank;
      s.graded.back().par_degree += p.par_degree;
    } else {
      s.graded.push_back(p);
    }
  }
  return s;
}

HNSpectrum hn_spectrum(const ParabolicBundle& bundle) { return spectrum_of(bundle.pieces()); }

Rational mu_min(const ParabolicBundle& bundle) { return bundle.pieces().back().slope(); }

Rational mu_max(const ParabolicBundle& bundle) { return bundle.pieces().front().slope(); }

Rational d_min(const ParabolicBundle& bundle) { return hn_spectrum(bundle).graded.back().par_degree; }

}  // namespace parabolic
