#include "tropkap/combinatorics.hpp"

#include <numeric>

#include "tropkap/error.hpp"

namespace tropkap {

bool next_combination(std::vector<std::size_t>& indices, std::size_t n) {
  const std::size_t k = indices.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (indices[i] < n - k + i) {
      ++indices[i];
      for (std::size_t j = i + 1; j < k; ++j) indices[j] = indices[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n,
                                                   std::size_t k) {
  if (k > n) throw DimensionError("combination size exceeds set size");
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current(k);
  std::iota(current.begin(), current.end(), std::size_t{0});
  do {
    out.push_back(current);
  } while (next_combination(current, n));
  return out;
}

int permutation_sign(std::span<const std::size_t> image) {
  // Parity via cycle decomposition: each cycle of length L contributes L-1
  // transpositions.
  std::vector<bool> seen(image.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t start = 0; start < image.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (std::size_t j = start; !seen[j]; j = image[j]) {
      seen[j] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace tropkap
