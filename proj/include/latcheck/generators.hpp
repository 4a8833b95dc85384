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

#ifndef LATCHECK_GENERATORS_HPP
#define LATCHECK_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "latcheck/multilinear.hpp"

namespace latcheck {

// The one PRNG used anywhere in the library.  mt19937_64 is fully pinned by
// the standard, so fixed seeds reproduce bit-identical streams everywhere.
inline constexpr const char* kPrngName = "mt19937_64";

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform integer in [lo, hi] from raw engine words.  The tiny modulo bias
// is irrelevant here; what matters is that the mapping is pinned, so streams
// are identical across platforms.
inline int draw_int(std::mt19937_64& eng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(eng() % span);
}

inline double draw_uniform(std::mt19937_64& eng, double lo, double hi) {
  // 53-bit mantissa fraction; deterministic across platforms.
  const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

}  // namespace detail

enum class InstanceKind { oa, perturbed, random };

inline std::string kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::oa: return "oa";
    case InstanceKind::perturbed: return "perturbed";
    default: return "random";
  }
}

inline InstanceKind parse_kind(const std::string& s) {
  if (s == "oa") return InstanceKind::oa;
  if (s == "perturbed") return InstanceKind::perturbed;
  if (s == "random") return InstanceKind::random;
  throw std::invalid_argument("unknown instance kind: " + s);
}

/** Parameters of one generated polynomial instance. */
struct InstanceSpec {
  int domain_dim = 1;
  int degree = 1;
  int codomain_dim = 1;
  InstanceKind kind = InstanceKind::oa;
  double epsilon = 0.0;  // meaningful for perturbed instances only
  std::uint64_t seed = 0;

  void validate() const {
    detail::require(domain_dim >= 1, "InstanceSpec: domain_dim must be >= 1");
    detail::require(degree >= 1, "InstanceSpec: degree must be >= 1");
    detail::require(codomain_dim >= 1, "InstanceSpec: codomain_dim must be >= 1");
    if (kind == InstanceKind::perturbed) {
      detail::require(epsilon > 0.0, "InstanceSpec: perturbed needs epsilon > 0");
      detail::require(domain_dim >= 2,
                      "InstanceSpec: perturbed needs domain_dim >= 2 (no mixed index)");
      detail::require(degree >= 2,
                      "InstanceSpec: perturbed needs degree >= 2 (no mixed index)");
    }
  }
};

namespace detail {

// Diagonal coefficients drawn first so that a perturbed instance with the
// same seed shares them exactly (the epsilon -> 0 limit is the oa instance).
inline SymmetricMultilinearMap draw_diagonal(const InstanceSpec& s,
                                             std::mt19937_64& eng) {
  SymmetricMultilinearMap map(s.degree, s.domain_dim, s.codomain_dim);
  std::vector<int> idx(static_cast<std::size_t>(s.degree));
  std::vector<double> value(static_cast<std::size_t>(s.codomain_dim));
  for (int j = 0; j < s.domain_dim; ++j) {
    bool all_zero = true;
    do {
      all_zero = true;
      for (double& v : value) {
        v = static_cast<double>(draw_int(eng, -5, 5));
        all_zero = all_zero && v == 0.0;
      }
    } while (all_zero);
    std::fill(idx.begin(), idx.end(), j);
    map.set_coefficient(idx, value);
  }
  return map;
}

}  // namespace detail

/** Diagonal instance sum_j c_j x_j^n: orthogonally additive by construction.
 *  Coefficient vectors are uniform integers in [-5,5], never all zero. */
inline HomogeneousPolynomial gen_oa(const InstanceSpec& spec) {
  spec.validate();
  detail::require(spec.kind == InstanceKind::oa, "gen_oa: kind must be oa");
  std::mt19937_64 eng(spec.seed);
  return HomogeneousPolynomial(detail::draw_diagonal(spec, eng));
}

/** Diagonal instance plus epsilon on one seeded mixed multi-index; fails
 *  every orthogonal-additivity characterization with margin ~ epsilon. */
inline HomogeneousPolynomial gen_perturbed(const InstanceSpec& spec) {
  spec.validate();
  detail::require(spec.kind == InstanceKind::perturbed,
                  "gen_perturbed: kind must be perturbed");
  std::mt19937_64 eng(spec.seed);
  SymmetricMultilinearMap map = detail::draw_diagonal(spec, eng);

  std::vector<int> idx(static_cast<std::size_t>(spec.degree));
  do {
    for (int& v : idx) v = detail::draw_int(eng, 0, spec.domain_dim - 1);
    std::sort(idx.begin(), idx.end());
  } while (!is_mixed_index(idx));
  const std::vector<double> value(static_cast<std::size_t>(spec.codomain_dim),
                                  spec.epsilon);
  map.set_coefficient(idx, value);
  return HomogeneousPolynomial(std::move(map));
}

/** Dense instance: every sorted multi-index gets a uniform integer
 *  coefficient vector in [-3,3].  No verdict is promised, only agreement. */
inline HomogeneousPolynomial gen_random(const InstanceSpec& spec) {
  spec.validate();
  detail::require(spec.kind == InstanceKind::random, "gen_random: kind must be random");
  std::mt19937_64 eng(spec.seed);
  SymmetricMultilinearMap map(spec.degree, spec.domain_dim, spec.codomain_dim);
  std::vector<double> value(static_cast<std::size_t>(spec.codomain_dim));
  for_each_sorted_index(spec.domain_dim, spec.degree, [&](std::span<const int> idx) {
    for (double& v : value) v = static_cast<double>(detail::draw_int(eng, -3, 3));
    map.set_coefficient(idx, value);
  });
  return HomogeneousPolynomial(std::move(map));
}

inline HomogeneousPolynomial generate(const InstanceSpec& spec) {
  switch (spec.kind) {
    case InstanceKind::oa: return gen_oa(spec);
    case InstanceKind::perturbed: return gen_perturbed(spec);
    default: return gen_random(spec);
  }
}

}  // namespace latcheck

#endif  // LATCHECK_GENERATORS_HPP
