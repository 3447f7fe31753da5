#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tropkap {

/// Advances `indices` (strictly increasing, values < n) to the next
/// k-subset of {0..n-1} in lexicographic order. Returns false after the last.
bool next_combination(std::vector<std::size_t>& indices, std::size_t n);

/// All k-subsets of {0..n-1}, lexicographically ordered.
std::vector<std::vector<std::size_t>> combinations(std::size_t n,
                                                   std::size_t k);

/// +1 or -1 according to the parity of a permutation given in
/// zero-based one-line form.
int permutation_sign(std::span<const std::size_t> image);

/// n! as an unsigned count; only meaningful for small n.
std::size_t factorial(std::size_t n);

}  // namespace tropkap
