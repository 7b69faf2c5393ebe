#include "parabolic/random.hpp"

#include <algorithm>

namespace parabolic {

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(master ^ mix(index));
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

namespace {

Rational random_weight(Rng& rng, const Profile& profile) {
  if (rng.chance(1, 3)) return Rational(0);
  std::int64_t q = rng.uniform(2, std::max<std::int64_t>(2, profile.max_denominator));
  return make_rational(rng.uniform(1, q - 1), q);
}

std::vector<std::string> pick(Rng& rng, std::vector<std::string> from, std::int64_t max_count) {
  std::shuffle(from.begin(), from.end(), rng.engine());
  auto count = rng.uniform(0, std::min<std::int64_t>(max_count, static_cast<std::int64_t>(from.size())));
  from.resize(static_cast<std::size_t>(count));
  return from;
}

}  // namespace

ParabolicBundle random_bundle(Rng& rng, const MarkedCurve& curve, const Profile& profile) {
  const std::int64_t rank = rng.uniform(1, profile.max_rank);
  const std::int64_t atoms = rng.uniform(1, std::min(profile.max_atoms, rank));
  // split rank into `atoms` positive parts
  std::vector<std::int64_t> parts(static_cast<std::size_t>(atoms), 1);
  for (std::int64_t left = rank - atoms; left > 0; --left)
    ++parts[static_cast<std::size_t>(rng.uniform(0, atoms - 1))];

  std::vector<SemistableAtom> out;
  for (auto r : parts) {
    std::map<std::string, WeightMultiset> ws;
    for (const auto& p : curve.points()) {
      std::vector<WeightMultiset::Entry> entries;
      for (std::int64_t i = 0; i < r; ++i) entries.emplace_back(random_weight(rng, profile), 1);
      ws.emplace(p, WeightMultiset(std::move(entries)));
    }
    out.emplace_back(r, Integer(rng.uniform(-profile.max_abs_degree, profile.max_abs_degree)),
                     std::move(ws));
  }
  return ParabolicBundle::from_atoms(curve, std::move(out));
}

std::vector<Permutation> random_monodromy(Rng& rng, std::int64_t degree, std::int64_t branch_count) {
  const auto n = static_cast<std::size_t>(degree);
  auto transitive = [n](const std::vector<Permutation>& perms) {
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (const auto& p : perms)
        if (!seen[p[x]]) seen[p[x]] = true, ++reached, stack.push_back(p[x]);
    }
    return reached == n;
  };
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Permutation> perms;
    Permutation product = identity_permutation(n);
    for (std::int64_t i = 0; i + 1 < branch_count; ++i) {
      Permutation p = identity_permutation(n);
      if (!rng.chance(1, 5)) std::shuffle(p.begin(), p.end(), rng.engine());
      product = compose(p, product);
      perms.push_back(std::move(p));
    }
    perms.push_back(inverse(product));  // σ_k ∘ ... ∘ σ_1 = 1
    if (transitive(perms)) return perms;
  }
  // fall back to an n-cycle and its inverse, padded with identities
  Permutation cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<std::uint32_t>((i + 1) % n);
  std::vector<Permutation> perms{cyc, inverse(cyc)};
  while (static_cast<std::int64_t>(perms.size()) < branch_count) perms.push_back(identity_permutation(n));
  return perms;
}

RandomInstance random_instance(std::uint64_t seed, const Profile& profile) {
  Rng rng(seed);
  const std::int64_t degree = rng.uniform(profile.min_covering_degree, profile.max_covering_degree);
  const std::int64_t branches = rng.uniform(degree > 1 ? 2 : 1, std::max<std::int64_t>(2, profile.max_branch));
  const std::int64_t target_genus = rng.uniform(0, profile.max_target_genus);
  CoveringMap bare = covering_from_monodromy(target_genus, random_monodromy(rng, degree, branches));

  std::vector<std::string> bases, sources;
  for (const auto& f : bare.fibers()) {
    bases.push_back(f.base);
    for (const auto& p : f.above) sources.push_back(p.point);
  }
  CoveringData d = bare.data();
  d.target = MarkedCurve(d.target.name(), d.target.genus(), pick(rng, bases, profile.max_marked));
  d.source = MarkedCurve(d.source.name(), d.source.genus(), pick(rng, sources, profile.max_marked));
  CoveringMap covering(std::move(d));

  ParabolicBundle e = random_bundle(rng, covering.target(), profile);
  ParabolicBundle v = random_bundle(rng, covering.source(), profile);
  return {std::move(covering), std::move(e), std::move(v)};
}

}  // namespace parabolic
