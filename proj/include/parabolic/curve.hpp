#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace parabolic {

/// A smooth projective curve with a finite set of marked (parabolic) points.
/// Points are kept sorted lexicographically and unique.
class MarkedCurve {
 public:
  MarkedCurve() = default;
  MarkedCurve(std::string name, std::int64_t genus, std::vector<std::string> points = {});

  const std::string& name() const { return name_; }
  std::int64_t genus() const { return genus_; }
  const std::vector<std::string>& points() const { return points_; }

  bool has_point(const std::string& p) const;
  /// Same underlying curve: name and genus agree. Marked points may differ.
  bool same_surface(const MarkedCurve& other) const;
  /// Same curve with `extra` added to the marked points.
  MarkedCurve with_points(const std::vector<std::string>& extra) const;

  friend bool operator==(const MarkedCurve&, const MarkedCurve&) = default;

 private:
  std::string name_;
  std::int64_t genus_ = 0;
  std::vector<std::string> points_;
};

}  // namespace parabolic
