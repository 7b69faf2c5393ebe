#include "parabolic/permutation.hpp"

#include <numeric>

#include "parabolic/rational.hpp"

namespace parabolic {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

std::vector<std::vector<std::uint32_t>> cycles(const Permutation& p) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::uint32_t> c;
    for (std::uint32_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Permutation from_one_indexed(const std::vector<std::int64_t>& images) {
  Permutation p;
  p.reserve(images.size());
  for (auto x : images) {
    if (x < 1 || x > static_cast<std::int64_t>(images.size()))
      throw DomainError("permutation image " + std::to_string(x) + " out of range 1.." +
                        std::to_string(images.size()));
    p.push_back(static_cast<std::uint32_t>(x - 1));
  }
  if (!is_permutation(p)) throw DomainError("image list is not a permutation");
  return p;
}

std::vector<std::int64_t> to_one_indexed(const Permutation& p) {
  std::vector<std::int64_t> out;
  for (auto x : p) out.push_back(static_cast<std::int64_t>(x) + 1);
  return out;
}

std::string to_cycle_string(const Permutation& p) {
  std::string s;
  for (const auto& c : cycles(p)) {
    if (c.size() < 2) continue;
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i] + 1);
    s += ")";
  }
  return s.empty() ? "()" : s;
}

}  // namespace parabolic
