#pragma once

#include <cstdint>
#include <vector>

#include "parabolic/bundle.hpp"

namespace parabolic {

/// Parabolic dual. Nonzero weights α become 1-α and the degree becomes
/// -d - #(nonzero weights), so par_deg flips sign.
ParabolicBundle dual(const ParabolicBundle& bundle);

/// Direct sum. The operands must live on the same curve (name and genus);
/// marked points are unioned, with zero weights at newly added points.
ParabolicBundle direct_sum(const ParabolicBundle& a, const ParabolicBundle& b);
/// Same as folding the binary sum, in one pass.
ParabolicBundle direct_sum(const std::vector<ParabolicBundle>& parts);

/// Parabolic tensor product: weights frac(α+β), floors folded into the degree.
ParabolicBundle tensor(const ParabolicBundle& a, const ParabolicBundle& b);

/// k-th parabolic symmetric power. Single-atom bundles keep full local data;
/// everything else yields a spectrum-only result. k = 1 returns the input.
ParabolicBundle sym_power(const ParabolicBundle& bundle, std::int64_t k);

inline constexpr std::size_t kQuotientEnumerationBound = 16;

/// Every quotient obtained by projecting onto a nonempty sub-multiset of the
/// bundle's atoms (pieces, for derived bundles). Ordered by subset bitmask.
std::vector<ParabolicBundle> summand_quotients(const ParabolicBundle& bundle);

// Local-data building blocks shared with transport.
LocalData dual_local(const LocalData& local);
LocalData tensor_local(const LocalData& a, std::int64_t rank_a, const LocalData& b,
                       std::int64_t rank_b);
LocalData sym_local(const LocalData& local, std::int64_t rank, std::int64_t k);
LocalData sum_local(const LocalData& a, const LocalData& b);

}  // namespace parabolic
