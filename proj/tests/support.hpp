#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parabolic/bundle.hpp"

namespace testing_support {

using namespace parabolic;

inline Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

inline WeightMultiset ws(std::vector<std::pair<Rational, std::int64_t>> entries) {
  return WeightMultiset(std::move(entries));
}

inline SemistableAtom atom(std::int64_t rank, std::int64_t degree,
                           std::map<std::string, WeightMultiset> weights = {}) {
  return SemistableAtom(rank, Integer(degree), std::move(weights));
}

inline ParabolicBundle bundle(const MarkedCurve& c, std::vector<SemistableAtom> atoms) {
  return ParabolicBundle::from_atoms(c, std::move(atoms));
}

// Flattened weight list at one point: each weight repeated by multiplicity.
inline std::vector<Rational> flatten(const WeightMultiset& w) {
  std::vector<Rational> out;
  for (const auto& [a, m] : w.entries())
    for (std::int64_t i = 0; i < m; ++i) out.push_back(a);
  return out;
}

}  // namespace testing_support
