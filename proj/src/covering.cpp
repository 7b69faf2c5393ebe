#include "parabolic/covering.hpp"

#include <algorithm>
#include <set>

namespace parabolic {

std::int64_t FiberProfile::index_sum() const {
  std::int64_t s = 0;
  for (const auto& p : above) s += p.e;
  return s;
}

Rational riemann_hurwitz_genus(std::int64_t degree, std::int64_t target_genus,
                               std::int64_t ramification_total) {
  // 2g - 2 = n(2h - 2) + R
  Integer rhs = Integer(degree) * (2 * target_genus - 2) + ramification_total;
  return make_rational(rhs + 2, Integer(2));
}

namespace {

std::vector<std::int64_t> sorted_indices(const FiberProfile& f) {
  std::vector<std::int64_t> es;
  for (const auto& p : f.above) es.push_back(p.e);
  std::sort(es.begin(), es.end());
  return es;
}

std::vector<std::int64_t> cycle_type(const Permutation& p) {
  std::vector<std::int64_t> es;
  for (const auto& c : cycles(p)) es.push_back(static_cast<std::int64_t>(c.size()));
  std::sort(es.begin(), es.end());
  return es;
}

void normalize(CoveringData& d) {
  for (auto& f : d.fibers)
    std::sort(f.above.begin(), f.above.end(),
              [](const SourcePoint& a, const SourcePoint& b) { return a.point < b.point; });
  std::vector<std::size_t> order(d.fibers.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return d.fibers[a].base < d.fibers[b].base;
  });
  std::vector<FiberProfile> fibers;
  std::vector<Permutation> mono;
  for (auto i : order) {
    fibers.push_back(std::move(d.fibers[i]));
    if (i < d.monodromy.size()) mono.push_back(std::move(d.monodromy[i]));
  }
  d.fibers = std::move(fibers);
  if (!d.monodromy.empty()) d.monodromy = std::move(mono);
}

}  // namespace

void validate_covering(const CoveringData& d) {
  const std::string who = "covering " + d.name + ": ";
  if (d.degree < 1) throw DomainError(who + "degree must be >= 1, got " + std::to_string(d.degree));

  std::set<std::string> bases, sources;
  std::int64_t ram = 0;
  for (const auto& f : d.fibers) {
    if (!bases.insert(f.base).second) throw DomainError(who + "duplicate fiber over " + f.base);
    if (f.above.empty()) throw DomainError(who + "empty fiber over " + f.base);
    for (const auto& p : f.above) {
      if (p.e < 1)
        throw DomainError(who + "ramification index of " + p.point + " must be >= 1");
      if (!sources.insert(p.point).second)
        throw DomainError(who + "source point " + p.point + " appears in more than one place");
      ram += p.e - 1;
    }
    if (f.index_sum() != d.degree)
      throw DomainError(who + "fiber over " + f.base + " has index sum " +
                        std::to_string(f.index_sum()) + ", expected degree " +
                        std::to_string(d.degree));
  }
  for (const auto& x : d.target.points())
    if (!bases.count(x))
      throw DomainError(who + "marked point " + x + " of " + d.target.name() +
                        " has no listed fiber");
  for (const auto& y : d.source.points())
    if (!sources.count(y))
      throw DomainError(who + "marked point " + y + " of " + d.source.name() +
                        " lies over no listed fiber");

  if (!d.monodromy.empty()) {
    if (d.monodromy.size() != d.fibers.size())
      throw DomainError(who + "monodromy has " + std::to_string(d.monodromy.size()) +
                        " permutations for " + std::to_string(d.fibers.size()) + " fibers");
    for (std::size_t i = 0; i < d.fibers.size(); ++i) {
      const auto& p = d.monodromy[i];
      if (p.size() != static_cast<std::size_t>(d.degree) || !is_permutation(p))
        throw DomainError(who + "monodromy over " + d.fibers[i].base +
                          " is not a permutation of 1.." + std::to_string(d.degree));
      if (cycle_type(p) != sorted_indices(d.fibers[i]))
        throw DomainError(who + "cycle type of monodromy " + to_cycle_string(p) + " over " +
                          d.fibers[i].base + " does not match the ramification profile");
    }
  }

  const std::string eq = "2g-2 = " + std::to_string(d.degree) + "*(2*" +
                         std::to_string(d.target.genus()) + "-2) + " + std::to_string(ram);
  Rational g = riemann_hurwitz_genus(d.degree, d.target.genus(), ram);
  if (!is_integral(g) || g < 0) {
    std::string msg = who + "non-integral or negative genus: Riemann-Hurwitz " + eq +
                      " gives g = " + to_string(g);
    if (ram % 2 != 0) msg += " (ramification total " + std::to_string(ram) + " has the wrong parity)";
    throw DomainError(msg);
  }
  if (g != d.source.genus())
    throw DomainError(who + "Riemann-Hurwitz violated: " + eq + " forces source genus " +
                      g.get_num().get_str() + ", but " + d.source.name() + " has genus " +
                      std::to_string(d.source.genus()));
}

CoveringMap::CoveringMap(CoveringData data) : data_(std::move(data)) {
  normalize(data_);
  validate_covering(data_);
}

const FiberProfile* CoveringMap::fiber_over(const std::string& base) const {
  auto it = std::lower_bound(data_.fibers.begin(), data_.fibers.end(), base,
                             [](const FiberProfile& f, const std::string& b) { return f.base < b; });
  if (it == data_.fibers.end() || it->base != base) return nullptr;
  return &*it;
}

std::optional<std::pair<std::string, std::int64_t>> CoveringMap::image_of(
    const std::string& point) const {
  for (const auto& f : data_.fibers)
    for (const auto& p : f.above)
      if (p.point == point) return std::make_pair(f.base, p.e);
  return std::nullopt;
}

std::int64_t CoveringMap::ramification_total() const {
  std::int64_t r = 0;
  for (const auto& f : data_.fibers)
    for (const auto& p : f.above) r += p.e - 1;
  return r;
}

std::vector<std::string> CoveringMap::ramification_locus() const {
  std::vector<std::string> out;
  for (const auto& f : data_.fibers)
    for (const auto& p : f.above)
      if (p.e > 1) out.push_back(p.point);
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const CoveringMap& a, const CoveringMap& b) {
  return a.data_.name == b.data_.name && a.data_.source == b.data_.source &&
         a.data_.target == b.data_.target && a.data_.degree == b.data_.degree &&
         a.data_.fibers == b.data_.fibers && a.data_.monodromy == b.data_.monodromy;
}

CoveringMap covering_from_monodromy(std::int64_t target_genus,
                                    const std::vector<Permutation>& perms,
                                    const MonodromyNames& names) {
  if (perms.empty()) throw DomainError("monodromy needs at least one permutation");
  const std::size_t n = perms.front().size();
  if (n == 0) throw DomainError("monodromy permutations must act on {1..n} with n >= 1");
  for (const auto& p : perms)
    if (p.size() != n || !is_permutation(p))
      throw DomainError("monodromy permutations must all act on {1.." + std::to_string(n) + "}");

  // transitivity: orbit of 0 under the generators
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (const auto& p : perms)
      if (!seen[p[x]]) {
        seen[p[x]] = true;
        ++reached;
        stack.push_back(p[x]);
      }
  }
  if (reached != n)
    throw DomainError("disconnected cover: monodromy orbit of 1 has size " +
                      std::to_string(reached) + " < " + std::to_string(n));

  CoveringData d;
  d.name = names.covering;
  d.degree = static_cast<std::int64_t>(n);
  std::int64_t ram = 0;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    FiberProfile f;
    f.base = names.base_prefix + std::to_string(i + 1);
    for (const auto& c : cycles(perms[i])) {
      f.above.push_back({f.base + "." + std::to_string(c.front() + 1),
                         static_cast<std::int64_t>(c.size())});
      ram += static_cast<std::int64_t>(c.size()) - 1;
    }
    d.fibers.push_back(std::move(f));
  }
  d.monodromy = perms;
  Rational g = riemann_hurwitz_genus(d.degree, target_genus, ram);
  if (!is_integral(g) || g < 0)
    throw DomainError("monodromy data gives non-integral or negative genus " + to_string(g));
  d.target = MarkedCurve(names.target, target_genus);
  d.source = MarkedCurve(names.source, g.get_num().get_si());
  return CoveringMap(std::move(d));
}

CoveringMap identity_covering(const MarkedCurve& curve, const std::vector<std::string>& points) {
  CoveringData d;
  d.name = "id_" + curve.name();
  d.source = curve;
  d.target = curve;
  d.degree = 1;
  std::set<std::string> all(points.begin(), points.end());
  all.insert(curve.points().begin(), curve.points().end());
  for (const auto& p : all) d.fibers.push_back({p, {{p, 1}}});
  d.monodromy.assign(d.fibers.size(), identity_permutation(1));
  return CoveringMap(std::move(d));
}

CoveringMap compose(const CoveringMap& g, const CoveringMap& f) {
  if (!g.target().same_surface(f.source()))
    throw DomainError("cannot compose: target " + g.target().name() + " of " + g.name() +
                      " is not the source " + f.source().name() + " of " + f.name());
  for (const auto& fib : g.fibers())
    if (!f.image_of(fib.base))
      throw DomainError("cannot compose: branch point " + fib.base + " of " + g.name() +
                        " is not a listed point of " + f.name());

  CoveringData d;
  d.name = f.name() + "o" + g.name();
  d.source = g.source();
  d.target = f.target();
  d.degree = g.degree() * f.degree();
  for (const auto& fib : f.fibers()) {
    FiberProfile h{fib.base, {}};
    for (const auto& [y, ef] : fib.above) {
      if (const auto* gf = g.fiber_over(y)) {
        for (const auto& [z, eg] : gf->above) h.above.push_back({z, eg * ef});
      } else {
        for (std::int64_t j = 1; j <= g.degree(); ++j)
          h.above.push_back({y + "^" + std::to_string(j), ef});
      }
    }
    d.fibers.push_back(std::move(h));
  }
  try {
    return CoveringMap(std::move(d));
  } catch (const DomainError& e) {
    throw DomainError(std::string("composition failed validation: ") + e.what());
  }
}

}  // namespace parabolic
