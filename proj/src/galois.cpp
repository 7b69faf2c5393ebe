#include "parabolic/galois.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "parabolic/calculus.hpp"
#include "parabolic/transport.hpp"

namespace parabolic {

PermutationGroup PermutationGroup::from_elements(std::size_t degree,
                                                 std::vector<Permutation> generators,
                                                 std::vector<Permutation> elements) {
  PermutationGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  g.elements_ = std::move(elements);
  return g;
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermutationGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) throw DomainError("permutation is not a group element");
  return static_cast<std::size_t>(it - elements_.begin());
}

PermutationGroup group_closure(std::size_t degree, const std::vector<Permutation>& generators,
                               std::size_t cap) {
  if (cap < 1) throw DomainError("group order cap must be >= 1");
  for (const auto& g : generators)
    if (g.size() != degree || !is_permutation(g))
      throw DomainError("generator is not a permutation of 1.." + std::to_string(degree));
  std::set<Permutation> seen{identity_permutation(degree)};
  std::deque<Permutation> queue{identity_permutation(degree)};
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation y = compose(g, x);
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw DomainError("group order cap exceeded (cap " + std::to_string(cap) + ")");
        queue.push_back(std::move(y));
      }
    }
  }
  return PermutationGroup::from_elements(degree, generators, {seen.begin(), seen.end()});
}

bool is_normal_subgroup(const PermutationGroup& group, const PermutationGroup& sub) {
  for (const auto& g : group.elements()) {
    Permutation gi = inverse(g);
    for (const auto& t : sub.elements())
      if (!sub.contains(compose(compose(g, t), gi))) return false;
  }
  return true;
}

namespace {

// Source point of f over fiber i for each sheet. Cycles are matched with points
// by the "base.j" naming when present, otherwise by (index, name) order.
std::vector<std::pair<std::string, std::int64_t>> sheet_points(const CoveringMap& f,
                                                               std::size_t i) {
  const auto& fib = f.fibers()[i];
  auto cyc = cycles(f.monodromy()[i]);
  std::vector<std::pair<std::string, std::int64_t>> out(static_cast<std::size_t>(f.degree()));

  bool by_name = true;
  std::vector<std::string> names;
  for (const auto& c : cyc) {
    std::string nm = fib.base + "." + std::to_string(c.front() + 1);
    auto it = std::find_if(fib.above.begin(), fib.above.end(),
                           [&](const SourcePoint& p) { return p.point == nm; });
    if (it == fib.above.end() || it->e != static_cast<std::int64_t>(c.size())) by_name = false;
    names.push_back(nm);
  }
  if (!by_name) {
    std::vector<std::size_t> corder(cyc.size());
    for (std::size_t k = 0; k < corder.size(); ++k) corder[k] = k;
    std::stable_sort(corder.begin(), corder.end(),
                     [&](std::size_t a, std::size_t b) { return cyc[a].size() < cyc[b].size(); });
    std::vector<SourcePoint> pts = fib.above;
    std::stable_sort(pts.begin(), pts.end(),
                     [](const SourcePoint& a, const SourcePoint& b) { return a.e < b.e; });
    for (std::size_t k = 0; k < corder.size(); ++k) names[corder[k]] = pts[k].point;
  }
  for (std::size_t k = 0; k < cyc.size(); ++k)
    for (auto s : cyc[k]) out[s] = {names[k], static_cast<std::int64_t>(cyc[k].size())};
  return out;
}

std::vector<std::string> z_point_of_sheet(const std::string& base, const Permutation& regular) {
  std::vector<std::string> out(regular.size());
  for (const auto& c : cycles(regular)) {
    std::string nm = base + "#" + std::to_string(c.front() + 1);
    for (auto j : c) out[j] = nm;
  }
  return out;
}

}  // namespace

GaloisClosureData galois_closure_data(const CoveringMap& f, std::size_t cap) {
  if (!f.has_monodromy())
    throw DomainError("galois closure needs monodromy data on covering " + f.name());
  const std::size_t n = static_cast<std::size_t>(f.degree());
  PermutationGroup gamma = group_closure(n, f.monodromy(), cap);

  std::set<std::uint32_t> images;
  for (const auto& p : gamma.elements()) images.insert(p[0]);
  if (images.size() != n)
    throw DomainError("disconnected cover: intransitive monodromy on " + f.name());

  std::vector<Permutation> stab_elems;
  for (const auto& p : gamma.elements())
    if (p[0] == 0) stab_elems.push_back(p);
  PermutationGroup stab = PermutationGroup::from_elements(n, {}, std::move(stab_elems));

  CosetDecomposition dec;
  dec.transversal.assign(n, {});
  for (const auto& p : gamma.elements())  // lexicographic, so first hit is least
    if (dec.transversal[p[0]].empty()) dec.transversal[p[0]] = p;
  std::set<std::uint32_t> right_keys, transversal_right;
  for (const auto& p : gamma.elements()) right_keys.insert(inverse(p)[0]);
  dec.left_coset_count = images.size();
  dec.right_coset_count = right_keys.size();
  std::size_t in_g = 0;
  std::set<std::uint32_t> transversal_left;
  for (const auto& t : dec.transversal) {
    if (stab.contains(t)) ++in_g;
    transversal_left.insert(t[0]);
    transversal_right.insert(inverse(t)[0]);
  }
  dec.transversal_meets_subgroup_in_identity =
      in_g == 1 && stab.contains(identity_permutation(n)) &&
      dec.transversal[0] == identity_permutation(n);
  dec.transversal_hits_each_left_coset_once = transversal_left.size() == n;
  dec.transversal_hits_each_right_coset_once = transversal_right.size() == n;

  // h : Z -> X from the regular representation γ ↦ σγ
  const std::size_t order = gamma.order();
  CoveringData hd;
  hd.name = "h";
  hd.target = f.target();
  hd.degree = static_cast<std::int64_t>(order);
  std::int64_t ram = 0;
  std::vector<Permutation> regular;
  for (std::size_t i = 0; i < f.fibers().size(); ++i) {
    Permutation reg(order);
    for (std::size_t j = 0; j < order; ++j)
      reg[j] = static_cast<std::uint32_t>(
          gamma.index_of(compose(f.monodromy()[i], gamma.elements()[j])));
    FiberProfile fib{f.fibers()[i].base, {}};
    for (const auto& c : cycles(reg)) {
      fib.above.push_back({fib.base + "#" + std::to_string(c.front() + 1),
                           static_cast<std::int64_t>(c.size())});
      ram += static_cast<std::int64_t>(c.size()) - 1;
    }
    hd.fibers.push_back(std::move(fib));
    regular.push_back(std::move(reg));
  }
  hd.monodromy = regular;
  Rational gz = riemann_hurwitz_genus(hd.degree, f.target().genus(), ram);
  hd.source = MarkedCurve("Z", gz.get_num().get_si());
  CoveringMap h(hd);

  // g : Z -> Y, a Z point over b with sheet γ lies over the f point of sheet γ(0)
  CoveringData gd;
  gd.name = "g";
  gd.source = hd.source;
  gd.target = f.source();
  gd.degree = static_cast<std::int64_t>(stab.order());
  for (std::size_t i = 0; i < f.fibers().size(); ++i) {
    auto sheets = sheet_points(f, i);
    std::map<std::string, FiberProfile> by_y;
    for (const auto& c : cycles(regular[i])) {
      const auto& [y, ey] = sheets[gamma.elements()[c.front()][0]];
      auto& fib = by_y[y];
      fib.base = y;
      fib.above.push_back({f.fibers()[i].base + "#" + std::to_string(c.front() + 1),
                           static_cast<std::int64_t>(c.size()) / ey});
    }
    for (auto& [y, fib] : by_y) gd.fibers.push_back(std::move(fib));
  }
  CoveringMap g(gd);

  const auto deg_h = static_cast<std::int64_t>(order);
  const auto deg_g = static_cast<std::int64_t>(stab.order());
  bool normal = is_normal_subgroup(gamma, stab);
  bool galois = order == n;
  return GaloisClosureData{std::move(gamma), std::move(stab), std::move(dec), deg_h, deg_g,
                           normal, galois, f, std::move(h), std::move(g)};
}

CoveringMap deck_transformation(const GaloisClosureData& data, const Permutation& gamma) {
  const auto& elems = data.gamma.elements();
  CoveringData d;
  d.name = "deck";
  d.source = MarkedCurve(data.h.source().name(), data.h.source().genus());
  d.target = d.source;
  d.degree = 1;
  for (std::size_t i = 0; i < data.h.fibers().size(); ++i) {
    auto names = z_point_of_sheet(data.h.fibers()[i].base, data.h.monodromy()[i]);
    std::set<std::string> done;
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (!done.insert(names[j]).second) continue;
      std::size_t moved = data.gamma.index_of(compose(elems[j], gamma));
      // z ↦ z·γ, so the fiber over z·γ is {z}
      d.fibers.push_back({names[moved], {{names[j], 1}}});
    }
  }
  return CoveringMap(std::move(d));
}

bool DecompositionReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const DecompositionCheck& c) { return c.passed; });
}

namespace {

std::string describe(std::int64_t rank, const Rational& pd) {
  return "rank " + std::to_string(rank) + ", par-deg " + to_string(pd);
}

std::string describe(const HNSpectrum& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.graded.size(); ++i)
    out += (i ? ", " : "") + std::string("(") + std::to_string(s.graded[i].rank) + ", " +
           to_string(s.graded[i].par_degree) + ")";
  return out + "]";
}

ParabolicBundle sum_all(const std::vector<ParabolicBundle>& parts) {
  return direct_sum(parts);
}

}  // namespace

DecompositionReport verify_decomposition(const GaloisClosureData& data,
                                         const ParabolicBundle& bundle) {
  DecompositionReport report;
  const auto& elems = data.gamma.elements();
  const auto order = static_cast<std::int64_t>(elems.size());
  const std::int64_t n = data.f.degree();

  ParabolicBundle gv = pullback(data.g, bundle);
  std::vector<ParabolicBundle> translates;
  for (const auto& gamma : elems) translates.push_back(pullback(deck_transformation(data, gamma), gv));

  // (a) ⊕_{γ ∈ Γ} γ*g*V
  ParabolicBundle all = sum_all(translates);
  {
    std::int64_t want_rank = order * bundle.rank();
    Rational want_pd = par_deg(bundle) * order * data.deg_g;
    report.checks.push_back({"(a) sum over Gamma",
                             all.rank() == want_rank && par_deg(all) == want_pd,
                             describe(all.rank(), par_deg(all)), describe(want_rank, want_pd)});
  }

  // (b) orbits of γ ↦ tγ, t ∈ G
  std::vector<bool> seen(elems.size(), false);
  std::size_t orbits = 0;
  for (std::size_t j = 0; j < elems.size(); ++j) {
    if (seen[j]) continue;
    ++orbits;
    for (const auto& t : data.stabilizer.elements()) seen[data.gamma.index_of(compose(t, elems[j]))] = true;
  }
  report.invariant_orbits = orbits;
  {
    auto inv_rank = static_cast<std::int64_t>(orbits) * gv.rank();
    report.checks.push_back({"(b) G-orbits on Gamma",
                             static_cast<std::int64_t>(orbits) == n && inv_rank == n * gv.rank(),
                             std::to_string(orbits) + " orbits, invariant rank " +
                                 std::to_string(inv_rank),
                             std::to_string(n) + " cosets, rank " + std::to_string(n * gv.rank())});
  }

  // (c), (d) ⊕_{γ ∈ Γ̃} γ*g*V against h*(f_*V)
  std::vector<ParabolicBundle> picked;
  for (const auto& t : data.decomposition.transversal) picked.push_back(translates[data.gamma.index_of(t)]);
  report.transversal_size = picked.size();
  ParabolicBundle lhs = sum_all(picked);
  ParabolicBundle rhs = pullback(data.h, direct_image(data.f, bundle));
  report.checks.push_back({"(c) rank and par-deg of h*(f_*V)",
                           lhs.rank() == rhs.rank() && par_deg(lhs) == par_deg(rhs),
                           describe(lhs.rank(), par_deg(lhs)), describe(rhs.rank(), par_deg(rhs))});
  HNSpectrum ls = hn_spectrum(lhs), rs = hn_spectrum(rhs);
  report.checks.push_back({"(d) HN spectrum of h*(f_*V)", ls == rs, describe(ls), describe(rs)});
  return report;
}

}  // namespace parabolic
