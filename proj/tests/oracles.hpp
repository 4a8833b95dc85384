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
//
// Reference implementations kept deliberately naive and structurally
// unrelated to the library code paths they are used to cross-check.

#ifndef LATCHECK_TESTS_ORACLES_HPP
#define LATCHECK_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "latcheck/lattice.hpp"

namespace latcheck::testing {

// Dense symmetric tensor given as sorted-multi-index -> value rows.
using DenseTensor = std::map<std::vector<int>, std::vector<double>>;

// Walks every one of the d^n full index tuples and accumulates
// coeff(sorted tuple) * prod_k args[k][i_k].  No rank arithmetic, no
// permutation counting, no sparsity shortcuts.
inline std::vector<double> naive_tensor_eval(const DenseTensor& tensor, int order,
                                             int domain_dim, int codomain_dim,
                                             const std::vector<LatticeElement>& args) {
  std::vector<double> acc(static_cast<std::size_t>(codomain_dim), 0.0);
  std::vector<int> tuple(static_cast<std::size_t>(order), 0);
  while (true) {
    std::vector<int> key = tuple;
    std::sort(key.begin(), key.end());
    auto it = tensor.find(key);
    if (it != tensor.end()) {
      double prod = 1.0;
      for (int k = 0; k < order; ++k)
        prod *= args[static_cast<std::size_t>(k)][tuple[static_cast<std::size_t>(k)]];
      for (int c = 0; c < codomain_dim; ++c)
        acc[static_cast<std::size_t>(c)] += it->second[static_cast<std::size_t>(c)] * prod;
    }
    int pos = order - 1;
    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == domain_dim - 1) {
      tuple[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++tuple[static_cast<std::size_t>(pos)];
  }
  return acc;
}

// Same walk in complex arithmetic.
inline std::vector<std::complex<double>> naive_complex_tensor_eval(
    const DenseTensor& tensor, int order, int domain_dim, int codomain_dim,
    const std::vector<std::vector<std::complex<double>>>& args) {
  std::vector<std::complex<double>> acc(static_cast<std::size_t>(codomain_dim), 0.0);
  std::vector<int> tuple(static_cast<std::size_t>(order), 0);
  while (true) {
    std::vector<int> key = tuple;
    std::sort(key.begin(), key.end());
    auto it = tensor.find(key);
    if (it != tensor.end()) {
      std::complex<double> prod = 1.0;
      for (int k = 0; k < order; ++k)
        prod *= args[static_cast<std::size_t>(k)]
                    [static_cast<std::size_t>(tuple[static_cast<std::size_t>(k)])];
      for (int c = 0; c < codomain_dim; ++c)
        acc[static_cast<std::size_t>(c)] += it->second[static_cast<std::size_t>(c)] * prod;
    }
    int pos = order - 1;
    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == domain_dim - 1) {
      tuple[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++tuple[static_cast<std::size_t>(pos)];
  }
  return acc;
}

// sup over the unit circle of (cos t) f + (sin t) g, sampled on a uniform
// grid.  Approximates the coordinatewise modulus from below.
inline std::vector<double> grid_modulus(const LatticeElement& f, const LatticeElement& g,
                                        int points) {
  std::vector<double> out(f.dim(), -std::numeric_limits<double>::infinity());
  const double step = 2.0 * std::acos(-1.0) / points;
  for (int i = 0; i < points; ++i) {
    const double c = std::cos(i * step);
    const double s = std::sin(i * step);
    for (std::size_t j = 0; j < f.dim(); ++j)
      out[j] = std::max(out[j], c * f[j] + s * g[j]);
  }
  return out;
}

// Root mean power and geometric mean written scalar-first with raw pow.
inline double scalar_root_mean_power(int n, const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += std::pow(std::fabs(v), n);
  return std::pow(sum, 1.0 / n);
}

inline double scalar_geometric_mean(int n, double scale, const std::vector<double>& values) {
  double prod = scale;
  for (double v : values) prod *= std::fabs(v);
  return std::pow(prod, 1.0 / n);
}

// Additive Pascal triangle, no multiplication.
inline std::uint64_t pascal_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j) - 1];
  return row[static_cast<std::size_t>(k)];
}

}  // namespace latcheck::testing

#endif  // LATCHECK_TESTS_ORACLES_HPP
