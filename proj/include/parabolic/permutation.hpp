#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace parabolic {

/// Image list of a permutation of {0..n-1}. Serialized 1-indexed.
using Permutation = std::vector<std::uint32_t>;

Permutation identity_permutation(std::size_t n);
bool is_permutation(const Permutation& p);
/// (a ∘ b)(i) = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
/// Disjoint cycles, each starting at its smallest element, ordered by that element.
std::vector<std::vector<std::uint32_t>> cycles(const Permutation& p);

Permutation from_one_indexed(const std::vector<std::int64_t>& images);
std::vector<std::int64_t> to_one_indexed(const Permutation& p);
std::string to_cycle_string(const Permutation& p);

}  // namespace parabolic
