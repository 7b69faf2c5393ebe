#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parabolic/bundle.hpp"
#include "parabolic/covering.hpp"
#include "parabolic/permutation.hpp"

namespace parabolic {

inline constexpr std::size_t kDefaultGroupCap = 100000;

/// A finite permutation group on {0..n-1}, stored as its full element list in
/// lexicographic order of image lists (so the identity comes first).
class PermutationGroup {
 public:
  static PermutationGroup from_elements(std::size_t degree, std::vector<Permutation> generators,
                                        std::vector<Permutation> elements);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Permutation& p) const;
  std::size_t index_of(const Permutation& p) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// Breadth-first closure of `generators` (all acting on {0..degree-1}).
/// Throws "group order cap exceeded" once more than `cap` elements appear.
PermutationGroup group_closure(std::size_t degree, const std::vector<Permutation>& generators,
                               std::size_t cap = kDefaultGroupCap);

/// True iff g H g^{-1} = H for every g in `group`.
bool is_normal_subgroup(const PermutationGroup& group, const PermutationGroup& sub);

/// Γ with the stabilizer G of the first point and a transversal Γ̃ of the left
/// cosets γG. transversal[i] is the lexicographically least γ with γ(0) = i.
struct CosetDecomposition {
  std::vector<Permutation> transversal;
  std::size_t left_coset_count = 0;   // |Γ/G|, cosets γG
  std::size_t right_coset_count = 0;  // |G\Γ|, cosets Gγ = orbits of γ ↦ tγ
  bool transversal_meets_subgroup_in_identity = false;
  bool transversal_hits_each_left_coset_once = false;
  bool transversal_hits_each_right_coset_once = false;
};

/// Galois closure tower h = f ∘ g : Z → Y → X of a covering with monodromy.
struct GaloisClosureData {
  PermutationGroup gamma;       // Gal(h), the monodromy group of f
  PermutationGroup stabilizer;  // Gal(g) = Stab(first sheet)
  CosetDecomposition decomposition;
  std::int64_t deg_h = 0;  // |Γ|
  std::int64_t deg_g = 0;  // |G| = |Γ| / deg f
  bool subgroup_normal = false;
  bool f_is_galois = false;  // Γ acts regularly: |Γ| = deg f
  CoveringMap f;
  CoveringMap h;
  CoveringMap g;
};

/// Builds Γ, G, Γ̃ and the coverings h : Z → X (regular representation of Γ)
/// and g : Z → Y. Z points over base b are named "b#k", k the least sheet.
GaloisClosureData galois_closure_data(const CoveringMap& f, std::size_t cap = kDefaultGroupCap);

/// The automorphism z ↦ z·γ of Z (right multiplication on sheets) as a
/// degree-one covering, so pullback along it realizes γ*.
CoveringMap deck_transformation(const GaloisClosureData& data, const Permutation& gamma);

struct DecompositionCheck {
  std::string name;
  bool passed = false;
  std::string left;
  std::string right;
};

struct DecompositionReport {
  std::vector<DecompositionCheck> checks;  // (a) .. (d)
  std::size_t transversal_size = 0;
  std::size_t invariant_orbits = 0;
  bool ok() const;
};

/// Cross-checks h*(f_*V) against ⊕_{γ ∈ Γ̃} γ*g*V and the bookkeeping of
/// ⊕_{γ ∈ Γ} γ*g*V and its G-invariant part. Mismatches are reported, not thrown.
DecompositionReport verify_decomposition(const GaloisClosureData& data,
                                         const ParabolicBundle& bundle);

}  // namespace parabolic
