#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parabolic/curve.hpp"
#include "parabolic/permutation.hpp"
#include "parabolic/rational.hpp"

namespace parabolic {

struct SourcePoint {
  std::string point;
  std::int64_t e = 1;  // ramification index

  friend bool operator==(const SourcePoint&, const SourcePoint&) = default;
};

/// The points lying over one base point, with ramification indices.
struct FiberProfile {
  std::string base;
  std::vector<SourcePoint> above;

  std::int64_t index_sum() const;
  friend bool operator==(const FiberProfile&, const FiberProfile&) = default;
};

/// Unvalidated covering description, as read from a file or built by hand.
/// Points of the target that are not fiber bases are implicitly unramified.
struct CoveringData {
  std::string name;
  MarkedCurve source;
  MarkedCurve target;
  std::int64_t degree = 0;
  std::vector<FiberProfile> fibers;
  /// Optional local monodromy, one permutation per fiber (same order).
  std::vector<Permutation> monodromy;
};

/// Throws DomainError naming the violated condition; Riemann–Hurwitz failures
/// quote the equation with numbers filled in.
void validate_covering(const CoveringData& data);

/// Genus forced on the source by Riemann–Hurwitz; may be fractional or negative.
Rational riemann_hurwitz_genus(std::int64_t degree, std::int64_t target_genus,
                               std::int64_t ramification_total);

/// A validated branched covering source → target of smooth projective curves.
/// Fibers are sorted by base point and points above are sorted by name.
class CoveringMap {
 public:
  explicit CoveringMap(CoveringData data);

  const std::string& name() const { return data_.name; }
  const MarkedCurve& source() const { return data_.source; }
  const MarkedCurve& target() const { return data_.target; }
  std::int64_t degree() const { return data_.degree; }
  const std::vector<FiberProfile>& fibers() const { return data_.fibers; }
  const std::vector<Permutation>& monodromy() const { return data_.monodromy; }
  bool has_monodromy() const { return !data_.monodromy.empty(); }
  const CoveringData& data() const { return data_; }

  const FiberProfile* fiber_over(const std::string& base) const;
  /// Base point and ramification index of a listed source point.
  std::optional<std::pair<std::string, std::int64_t>> image_of(const std::string& point) const;
  /// Σ (e - 1) over all listed source points.
  std::int64_t ramification_total() const;
  /// Source points with e > 1.
  std::vector<std::string> ramification_locus() const;

  friend bool operator==(const CoveringMap& a, const CoveringMap& b);

 private:
  CoveringData data_;
};

struct MonodromyNames {
  std::string covering = "f";
  std::string source = "Y";
  std::string target = "X";
  std::string base_prefix = "b";
};

/// Builds the covering with the given local monodromies over branch points
/// b1, b2, ... . Source points over b_i are named "b_i.j", one per cycle, where
/// j is the cycle's smallest (1-indexed) element. The source genus comes from
/// Riemann–Hurwitz. Throws "disconnected cover" when the action is intransitive.
CoveringMap covering_from_monodromy(std::int64_t target_genus,
                                    const std::vector<Permutation>& branch_perms,
                                    const MonodromyNames& names = {});

/// Degree-1 identity map of `curve` with trivial fibers over `points`.
CoveringMap identity_covering(const MarkedCurve& curve, const std::vector<std::string>& points);

/// h = f ∘ g for g : Z → Y and f : Y → X. Every base point of g must be a
/// listed source point of f. Points of Z over a y that g leaves implicit are
/// synthesized as "y^1", "y^2", ... .
CoveringMap compose(const CoveringMap& g, const CoveringMap& f);

}  // namespace parabolic
