#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parabolic/curve.hpp"
#include "parabolic/rational.hpp"

namespace parabolic {

/// Parabolic weights at one marked point, as a multiset of values in [0,1).
/// Weight 0 is stored explicitly so the total multiplicity is always the rank.
class WeightMultiset {
 public:
  using Entry = std::pair<Rational, std::int64_t>;

  WeightMultiset() = default;
  /// Merges repeated weights and sorts; rejects weights outside [0,1) and
  /// nonpositive multiplicities.
  explicit WeightMultiset(std::vector<Entry> entries);

  /// {0 : rank}
  static WeightMultiset zeros(std::int64_t rank);

  const std::vector<Entry>& entries() const { return entries_; }
  std::int64_t total() const;
  /// Σ weight · multiplicity.
  Rational sum() const;
  /// Total multiplicity of nonzero weights.
  std::int64_t nonzero_count() const;
  bool all_zero() const;

  /// Applies `fn` to each weight and re-normalizes. `fn` must land in [0,1).
  WeightMultiset map(const std::function<Rational(const Rational&)>& fn) const;
  /// Multiset union.
  WeightMultiset merged(const WeightMultiset& other) const;

  friend bool operator==(const WeightMultiset& a, const WeightMultiset& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const WeightMultiset& a, const WeightMultiset& b);

 private:
  std::vector<Entry> entries_;
};

/// Underlying degree together with weight data at every marked point.
struct LocalData {
  Integer degree;
  std::map<std::string, WeightMultiset> weights;

  Rational weight_sum() const;
  Rational par_deg() const { return Rational(degree) + weight_sum(); }

  friend bool operator==(const LocalData&, const LocalData&) = default;
};

/// A formal parabolic-semistable building block.
class SemistableAtom {
 public:
  SemistableAtom(std::int64_t rank, Integer degree,
                 std::map<std::string, WeightMultiset> weights = {});

  std::int64_t rank() const { return rank_; }
  const Integer& degree() const { return local_.degree; }
  const LocalData& local() const { return local_; }
  Rational par_deg() const { return local_.par_deg(); }
  Rational slope() const { return par_deg() / rank_; }

  /// Fills in all-zero multisets for points of `curve` missing here; rejects
  /// points not on the curve and multisets whose size is not the rank.
  SemistableAtom conformed_to(const MarkedCurve& curve) const;

  friend bool operator==(const SemistableAtom&, const SemistableAtom&) = default;

 private:
  std::int64_t rank_;
  LocalData local_;
};

/// One Harder–Narasimhan graded piece, or a synthetic piece of a derived bundle.
struct GradedPiece {
  std::int64_t rank;
  Rational par_degree;

  Rational slope() const { return par_degree / rank; }
  friend bool operator==(const GradedPiece&, const GradedPiece&) = default;
};

/// Graded pieces in strictly decreasing slope order.
struct HNSpectrum {
  std::vector<GradedPiece> graded;
  friend bool operator==(const HNSpectrum&, const HNSpectrum&) = default;
};

enum class BundleKind {
  full,               // atoms with their own local data
  transport_derived,  // bundle-level local data, synthetic pieces
  spectrum_only,      // pieces only
};

const char* to_string(BundleKind kind);

/// A parabolic vector bundle on a marked curve, modelled as a multiset of
/// semistable pieces. Immutable; atoms and pieces are kept in canonical order.
class ParabolicBundle {
 public:
  static ParabolicBundle from_atoms(MarkedCurve curve, std::vector<SemistableAtom> atoms);
  static ParabolicBundle from_local(MarkedCurve curve, LocalData local,
                                    std::vector<GradedPiece> pieces);
  static ParabolicBundle from_spectrum(MarkedCurve curve, std::vector<GradedPiece> pieces);

  const MarkedCurve& curve() const { return curve_; }
  BundleKind kind() const { return kind_; }
  bool has_local_data() const { return local_.has_value(); }

  /// Empty unless kind() == full.
  const std::vector<SemistableAtom>& atoms() const { return atoms_; }
  /// One entry per atom (full) or per synthetic piece; unmerged.
  const std::vector<GradedPiece>& pieces() const { return pieces_; }
  /// Bundle-level degree and weights; throws "local data required" for
  /// spectrum-only bundles.
  const LocalData& local_data() const;

  std::int64_t rank() const { return rank_; }

  /// Same bundle on `curve`, which must be the same surface with a superset
  /// of the marked points; the new points get zero weights.
  ParabolicBundle extended_to(const MarkedCurve& curve) const;

  friend bool operator==(const ParabolicBundle&, const ParabolicBundle&) = default;

 private:
  ParabolicBundle() = default;

  MarkedCurve curve_;
  BundleKind kind_ = BundleKind::full;
  std::vector<SemistableAtom> atoms_;
  std::vector<GradedPiece> pieces_;
  std::optional<LocalData> local_;
  std::int64_t rank_ = 0;
};

Rational par_deg(const ParabolicBundle& bundle);
Rational par_slope(const ParabolicBundle& bundle);
HNSpectrum hn_spectrum(const ParabolicBundle& bundle);
/// Slope of the last (minimal) graded piece.
Rational mu_min(const ParabolicBundle& bundle);
/// Slope of the first (maximal) graded piece.
Rational mu_max(const ParabolicBundle& bundle);
/// Parabolic degree of the last graded piece.
Rational d_min(const ParabolicBundle& bundle);

/// Sorts pieces by slope descending and merges equal slopes.
HNSpectrum spectrum_of(std::vector<GradedPiece> pieces);

}  // namespace parabolic
