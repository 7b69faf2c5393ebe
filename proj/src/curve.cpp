#include "parabolic/curve.hpp"

#include <algorithm>

#include "parabolic/rational.hpp"

namespace parabolic {

MarkedCurve::MarkedCurve(std::string name, std::int64_t genus, std::vector<std::string> points)
    : name_(std::move(name)), genus_(genus), points_(std::move(points)) {
  if (genus_ < 0) throw DomainError("curve " + name_ + ": genus must be nonnegative");
  std::sort(points_.begin(), points_.end());
  auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end())
    throw DomainError("curve " + name_ + ": duplicate marked point \"" + *dup + "\"");
}

bool MarkedCurve::has_point(const std::string& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

bool MarkedCurve::same_surface(const MarkedCurve& other) const {
  return name_ == other.name_ && genus_ == other.genus_;
}

MarkedCurve MarkedCurve::with_points(const std::vector<std::string>& extra) const {
  std::vector<std::string> merged = points_;
  for (const auto& p : extra)
    if (!has_point(p)) merged.push_back(p);
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return MarkedCurve(name_, genus_, std::move(merged));
}

}  // namespace parabolic
