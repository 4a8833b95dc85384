// Copyright 2026 The latcheck authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LATCHECK_COMBINATORICS_HPP
#define LATCHECK_COMBINATORICS_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "latcheck/lattice.hpp"

namespace latcheck {

// Exact binomial coefficient in 64-bit integer arithmetic.  Arguments stay
// small here (n <= ~60 for the diagonals we touch); overflow is not guarded.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

inline std::uint64_t factorial(int n) {
  detail::require(n >= 0 && n <= 20, "factorial: argument out of 64-bit range");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

// Sorted multi-indices: nondecreasing integer tuples of length n over
// {0, ..., d-1}.  They enumerate a basis of symmetric tensors; there are
// C(d+n-1, n) of them.  rank/unrank below use lexicographic order.

inline std::uint64_t sorted_index_count(int domain_dim, int order) {
  return binomial(domain_dim + order - 1, order);
}

inline bool is_sorted_index(std::span<const int> idx, int domain_dim) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 0 || idx[k] >= domain_dim) return false;
    if (k > 0 && idx[k] < idx[k - 1]) return false;
  }
  return true;
}

// Lexicographic rank of a nondecreasing tuple among all nondecreasing
// tuples of the same length over {0..d-1}.
inline std::size_t sorted_index_rank(std::span<const int> idx, int domain_dim) {
  const int n = static_cast<int>(idx.size());
  std::size_t r = 0;
  int prev = 0;
  for (int k = 0; k < n; ++k) {
    for (int v = prev; v < idx[k]; ++v) {
      // nondecreasing completions of length n-k-1 over the alphabet {v..d-1}
      r += static_cast<std::size_t>(
          binomial(domain_dim - v + n - k - 2, n - k - 1));
    }
    prev = idx[k];
  }
  return r;
}

// Visit all sorted multi-indices in lexicographic order.
template <class F>
void for_each_sorted_index(int domain_dim, int order, F&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(order), 0);
  while (true) {
    fn(std::span<const int>(idx));
    int k = order - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == domain_dim - 1) --k;
    if (k < 0) break;
    const int v = ++idx[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < order; ++j) idx[static_cast<std::size_t>(j)] = v;
  }
}

// Number of distinct permutations of a sorted multi-index,
// n! / (prod of multiplicities!).
inline std::uint64_t distinct_permutation_count(std::span<const int> idx) {
  const int n = static_cast<int>(idx.size());
  std::uint64_t denom = 1;
  int run = 1;
  for (int k = 1; k < n; ++k) {
    if (idx[k] == idx[k - 1]) {
      ++run;
      denom *= static_cast<std::uint64_t>(run);
    } else {
      run = 1;
    }
  }
  return factorial(n) / denom;
}

// A multi-index is mixed when it contains at least two distinct values.
inline bool is_mixed_index(std::span<const int> idx) {
  for (std::size_t k = 1; k < idx.size(); ++k)
    if (idx[k] != idx[0]) return true;
  return false;
}

}  // namespace latcheck

#endif  // LATCHECK_COMBINATORICS_HPP
