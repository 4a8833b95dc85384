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

#ifndef LATCHECK_CHARACTERIZE_HPP
#define LATCHECK_CHARACTERIZE_HPP

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latcheck/generators.hpp"
#include "latcheck/multilinear.hpp"

namespace latcheck {

/** Probe counts for the sampled predicates.  All draws are seeded; two runs
 *  with the same seed probe the same inputs. */
struct Budget {
  int draws_per_split = 4;   // magnitude draws per complementary-support split
  int tuples_per_r = 4;      // random positive tuples per r value
  int z_draws = 4;           // dense complex probes
  int basis_probe_cap = 64;  // mixed-index basis probes
  int split_enum_cap = 10;   // enumerate all 2^d-2 splits up to this dimension
  int sampled_splits = 64;   // split sample size above the cap
};

/** Inputs achieving a predicate's max residual, for reports. */
struct Witness {
  std::vector<std::pair<std::string, std::vector<double>>> parts;
  int k = -1;  // power split, where applicable
  int r = -1;  // tuple length, where applicable

  bool empty() const { return parts.empty(); }
};

struct ConditionOutcome {
  bool verdict = true;
  double residual = 0.0;
  double tolerance = 0.0;
  Witness witness;
};

/** Outcome of all four predicates on one instance. */
struct ConditionReport {
  std::string id;
  InstanceSpec spec;
  ConditionOutcome orth_additivity;       // (i)
  ConditionOutcome mean_identities;       // (ii)
  ConditionOutcome complex_modulus;       // (iii)
  ConditionOutcome disjoint_annihilation; // (iv)
  bool agree = false;
  bool expected_ok = false;

  std::array<const ConditionOutcome*, 4> conditions() const {
    return {&orth_additivity, &mean_identities, &complex_modulus,
            &disjoint_annihilation};
  }
};

namespace detail {

// Verdict tolerance scales with coefficient magnitude and probe size:
// tau * (1 + max|coeff| * max_norm^n).
inline double scaled_tolerance(double tau, double max_coeff, double max_norm, int n) {
  return tau * (1.0 + max_coeff * int_pow(max_norm, n));
}

// Running max residual with its witness and the largest probe norm seen.
struct ResidualTracker {
  double residual = 0.0;
  double max_norm = 0.0;
  Witness witness;

  void note_norm(const LatticeElement& x) {
    max_norm = std::max(max_norm, infinity_norm(x));
  }
  void note_norm(double n) { max_norm = std::max(max_norm, n); }

  template <class MakeWitness>
  void consider(double value, MakeWitness&& make) {
    if (value > residual || witness.parts.empty()) {
      residual = std::max(residual, value);
      witness = make();
    }
  }

  ConditionOutcome finish(double tau, double max_coeff, int n) const {
    ConditionOutcome out;
    out.residual = residual;
    out.tolerance = scaled_tolerance(tau, max_coeff, max_norm, n);
    out.verdict = residual <= out.tolerance;
    out.witness = witness;
    return out;
  }
};

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

inline double max_abs(std::span<const double> a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::fabs(x));
  return m;
}

enum class DrawMode { units, alternating, random_signed, random_positive };

// f lives on the mask's support, g on the complement.
inline std::pair<LatticeElement, LatticeElement> split_pair(
    int d, std::uint64_t mask, DrawMode mode, std::mt19937_64& eng) {
  std::vector<double> f(static_cast<std::size_t>(d), 0.0);
  std::vector<double> g(static_cast<std::size_t>(d), 0.0);
  for (int j = 0; j < d; ++j) {
    double v = 1.0;
    switch (mode) {
      case DrawMode::units: break;
      case DrawMode::alternating: v = (j % 2 == 0) ? 1.0 : -1.0; break;
      case DrawMode::random_signed:
        v = draw_uniform(eng, 0.3, 1.0) * (draw_int(eng, 0, 1) ? 1.0 : -1.0);
        break;
      case DrawMode::random_positive: v = draw_uniform(eng, 0.3, 1.0); break;
    }
    if (mask & (std::uint64_t{1} << j)) {
      f[static_cast<std::size_t>(j)] = v;
    } else {
      g[static_cast<std::size_t>(j)] = v;
    }
  }
  return {LatticeElement(std::move(f)), LatticeElement(std::move(g))};
}

// All nontrivial complementary-support splits for small d, a seeded sample
// above the enumeration cap.  Masks never include 0 or 2^d-1.
template <class F>
void for_each_split(int d, const Budget& budget, std::mt19937_64& eng, F&& fn) {
  detail::require(d <= 63, "split enumeration: domain dimension above 63");
  if (d < 2) return;
  if (d <= budget.split_enum_cap) {
    const std::uint64_t top = (std::uint64_t{1} << d) - 1;
    for (std::uint64_t mask = 1; mask < top; ++mask) fn(mask);
  } else {
    const std::uint64_t top = (std::uint64_t{1} << d) - 1;
    for (int i = 0; i < budget.sampled_splits; ++i) {
      std::uint64_t mask = 0;
      do {
        mask = eng() & top;
      } while (mask == 0 || mask == top);
      fn(mask);
    }
  }
}

inline Witness fg_witness(const LatticeElement& f, const LatticeElement& g,
                          int k = -1) {
  Witness w;
  w.parts.push_back({"f", f.coords()});
  w.parts.push_back({"g", g.coords()});
  w.k = k;
  return w;
}

}  // namespace detail

/** Condition (i): orthogonal additivity.  Enumerates complementary-support
 *  splits f | g with seeded magnitude draws (mixed signs included) and takes
 *  the max of ||P(f+g) - P(f) - P(g)||_inf.  Vacuously true for d = 1. */
inline ConditionOutcome check_orthogonal_additivity(const HomogeneousPolynomial& P,
                                                    const Budget& budget,
                                                    std::uint64_t seed,
                                                    double tau = 1e-8) {
  const int d = P.domain_dim();
  std::mt19937_64 eng(detail::splitmix64(seed ^ 0x6f61646431ULL));
  detail::ResidualTracker tracker;
  detail::for_each_split(d, budget, eng, [&](std::uint64_t mask) {
    for (int t = 0; t < budget.draws_per_split; ++t) {
      const detail::DrawMode mode = t == 0   ? detail::DrawMode::units
                                    : t == 1 ? detail::DrawMode::alternating
                                             : detail::DrawMode::random_signed;
      auto [f, g] = detail::split_pair(d, mask, mode, eng);
      const LatticeElement sum = f + g;
      tracker.note_norm(f);
      tracker.note_norm(g);
      tracker.note_norm(sum);
      const std::vector<double> lhs = P(sum);
      std::vector<double> rhs = P(f);
      const std::vector<double> pg = P(g);
      for (std::size_t c = 0; c < rhs.size(); ++c) rhs[c] += pg[c];
      tracker.consider(detail::max_abs_diff(lhs, rhs),
                       [&] { return detail::fg_witness(f, g); });
    }
  });
  return tracker.finish(tau, P.map().max_abs_coefficient(), P.degree());
}

/** Condition (ii): the two mean identities on positive tuples.
 *
 *  Root-mean-power identity, for each r in r_values:
 *      P(S_n(f_1..f_r)) == sum_k P(f_k).
 *  Geometric-mean identity on n-tuples:
 *      P(G_n(f_1..f_n)) == T(f_1, ..., f_n).
 *  Besides random positive tuples, every nonzero mixed stored index
 *  contributes a basis-vector tuple; those probes read single tensor
 *  entries, which pins a deterministic failure margin on perturbed input.
 */
inline ConditionOutcome check_mean_identities(const HomogeneousPolynomial& P,
                                              const SymmetricMultilinearMap& T,
                                              std::span<const int> r_values,
                                              const Budget& budget,
                                              std::uint64_t seed,
                                              double tau = 1e-8) {
  const int n = P.degree();
  const int d = P.domain_dim();
  for (int r : r_values)
    detail::require(r >= 1 && r <= 6, "check_mean_identities: r must be in 1..6");
  std::mt19937_64 eng(detail::splitmix64(seed ^ 0x6b75736964ULL));
  detail::ResidualTracker tracker;

  auto random_positive = [&] {
    std::vector<double> c(static_cast<std::size_t>(d));
    for (double& x : c) x = detail::draw_uniform(eng, 0.0, 1.0);
    return LatticeElement(std::move(c));
  };
  auto tuple_witness = [](const std::vector<LatticeElement>& tuple, int r) {
    Witness w;
    for (std::size_t k = 0; k < tuple.size(); ++k)
      w.parts.push_back({"f" + std::to_string(k + 1), tuple[k].coords()});
    w.r = r;
    return w;
  };

  for (int r : r_values) {
    for (int t = 0; t < budget.tuples_per_r; ++t) {
      std::vector<LatticeElement> tuple;
      tuple.reserve(static_cast<std::size_t>(r));
      for (int k = 0; k < r; ++k) tuple.push_back(random_positive());
      const LatticeElement mean = root_mean_power(n, tuple);
      for (const LatticeElement& f : tuple) tracker.note_norm(f);
      tracker.note_norm(mean);
      const std::vector<double> lhs = P(mean);
      std::vector<double> rhs(lhs.size(), 0.0);
      for (const LatticeElement& f : tuple) {
        const std::vector<double> pf = P(f);
        for (std::size_t c = 0; c < rhs.size(); ++c) rhs[c] += pf[c];
      }
      tracker.consider(detail::max_abs_diff(lhs, rhs),
                       [&] { return tuple_witness(tuple, r); });
    }
  }

  auto geometric_probe = [&](const std::vector<LatticeElement>& tuple) {
    std::vector<PowerTuple::Entry> entries;
    entries.reserve(tuple.size());
    for (const LatticeElement& f : tuple) entries.push_back({f, 1});
    const LatticeElement mean = geometric_mean(n, PowerTuple(std::move(entries)));
    for (const LatticeElement& f : tuple) tracker.note_norm(f);
    tracker.note_norm(mean);
    const std::vector<double> lhs = P(mean);
    const std::vector<double> rhs = T.evaluate(tuple);
    tracker.consider(detail::max_abs_diff(lhs, rhs),
                     [&] { return tuple_witness(tuple, n); });
  };

  for (int t = 0; t < budget.tuples_per_r; ++t) {
    std::vector<LatticeElement> tuple;
    tuple.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) tuple.push_back(random_positive());
    geometric_probe(tuple);
  }

  int probes = 0;
  for (std::size_t rank : T.nonzero_mixed_ranks()) {
    if (probes++ >= budget.basis_probe_cap) break;
    std::span<const int> idx = T.index_at(rank);
    std::vector<LatticeElement> tuple;
    tuple.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
      tuple.push_back(LatticeElement::unit(static_cast<std::size_t>(d),
                                           static_cast<std::size_t>(idx[k])));
    geometric_probe(tuple);
  }

  return tracker.finish(tau, T.max_abs_coefficient(), n);
}

/** Condition (iii): the complexified polynomial sees the modulus.
 *
 *  Even n = 2m:  P(|z|) == re T_C(z^m, conj(z)^m), imaginary part ~ 0.
 *  Odd  n = 2m+1: same with arguments (z^m, conj(z)^m, |z|), the modulus
 *  embedded with zero imaginary part.
 *  Probes: complementary-support splits z = f + ig (f, g disjoint) plus
 *  dense draws whose imaginary part has full support.
 */
inline ConditionOutcome check_complex_modulus_identity(const HomogeneousPolynomial& P,
                                                       const SymmetricMultilinearMap& T,
                                                       const Budget& budget,
                                                       std::uint64_t seed,
                                                       double tau = 1e-8) {
  const int n = P.degree();
  const int d = P.domain_dim();
  const int m = n / 2;  // pairs of (z, conj z); odd n adds the modulus slot
  std::mt19937_64 eng(detail::splitmix64(seed ^ 0x636f6d706cULL));
  detail::ResidualTracker tracker;

  auto probe = [&](const ComplexElement& z) {
    const LatticeElement mod = modulus(z);
    tracker.note_norm(z.re);
    tracker.note_norm(z.im);
    tracker.note_norm(mod);
    std::vector<ComplexElement> zargs;
    zargs.reserve(static_cast<std::size_t>(n));
    const ComplexElement zbar = conjugate(z);
    for (int k = 0; k < m; ++k) zargs.push_back(z);
    for (int k = 0; k < m; ++k) zargs.push_back(zbar);
    if (n % 2 == 1) zargs.push_back(ComplexElement::from_real(mod));
    const ComplexCodomainValue val = T.complex_evaluate(zargs);
    const std::vector<double> lhs = P(mod);
    const double res =
        std::max(detail::max_abs_diff(lhs, val.re), detail::max_abs(val.im));
    tracker.consider(res, [&] {
      Witness w;
      w.parts.push_back({"re", z.re.coords()});
      w.parts.push_back({"im", z.im.coords()});
      return w;
    });
  };

  detail::for_each_split(d, budget, eng, [&](std::uint64_t mask) {
    for (int t = 0; t < budget.draws_per_split; ++t) {
      const detail::DrawMode mode = t == 0   ? detail::DrawMode::units
                                    : t == 1 ? detail::DrawMode::random_positive
                                             : detail::DrawMode::random_signed;
      auto [f, g] = detail::split_pair(d, mask, mode, eng);
      probe(ComplexElement(f, g));
    }
  });

  for (int t = 0; t < budget.z_draws; ++t) {
    std::vector<double> re(static_cast<std::size_t>(d));
    std::vector<double> im(static_cast<std::size_t>(d));
    for (double& x : re) x = detail::draw_uniform(eng, -1.0, 1.0);
    // full-support imaginary part: degenerate z = f + i*0 probes nothing new
    for (double& x : im)
      x = detail::draw_uniform(eng, 0.3, 1.0) * (detail::draw_int(eng, 0, 1) ? 1.0 : -1.0);
    probe(ComplexElement(LatticeElement(std::move(re)), LatticeElement(std::move(im))));
  }

  return tracker.finish(tau, T.max_abs_coefficient(), n);
}

/** Condition (iv): mixed powers annihilate disjoint pairs.
 *  max over splits, draws and k in 1..n-1 of ||T(f^(n-k) g^k)||_inf.
 *  Vacuously true for n = 1 or d = 1. */
inline ConditionOutcome check_disjoint_annihilation(const SymmetricMultilinearMap& T,
                                                    const Budget& budget,
                                                    std::uint64_t seed,
                                                    double tau = 1e-8) {
  const int n = T.order();
  const int d = T.domain_dim();
  std::mt19937_64 eng(detail::splitmix64(seed ^ 0x616e6e696cULL));
  detail::ResidualTracker tracker;
  if (n >= 2) {
    detail::for_each_split(d, budget, eng, [&](std::uint64_t mask) {
      for (int t = 0; t < budget.draws_per_split; ++t) {
        const detail::DrawMode mode = t == 0   ? detail::DrawMode::units
                                      : t == 1 ? detail::DrawMode::alternating
                                               : detail::DrawMode::random_signed;
        auto [f, g] = detail::split_pair(d, mask, mode, eng);
        tracker.note_norm(f);
        tracker.note_norm(g);
        for (int k = 1; k <= n - 1; ++k) {
          const std::vector<double> val =
              T.evaluate_power(PowerTuple({{f, n - k}, {g, k}}));
          tracker.consider(detail::max_abs(val),
                           [&] { return detail::fg_witness(f, g, k); });
        }
      }
    });
  }
  return tracker.finish(tau, T.max_abs_coefficient(), n);
}

/** Run all four predicates against one polynomial.  The multilinear map is
 *  not taken from the instance; it is re-derived from black-box evaluations
 *  by polarization, so the whole pipeline is exercised. */
inline ConditionReport check_polynomial(std::string id, const InstanceSpec& spec,
                                        const HomogeneousPolynomial& P,
                                        const Budget& budget = {},
                                        std::span<const int> r_values = {},
                                        double tau = 1e-8,
                                        std::uint64_t probe_seed = 0) {
  static constexpr int kDefaultR[] = {1, 2, 3};
  if (r_values.empty()) r_values = kDefaultR;

  const SymmetricMultilinearMap T =
      polarize(P.degree(), [&](const LatticeElement& f) { return P(f); },
               P.domain_dim(), P.codomain_dim());

  const std::uint64_t s = detail::splitmix64(probe_seed ^ spec.seed);
  ConditionReport rep;
  rep.id = std::move(id);
  rep.spec = spec;
  rep.orth_additivity = check_orthogonal_additivity(P, budget, s ^ 1, tau);
  rep.mean_identities = check_mean_identities(P, T, r_values, budget, s ^ 2, tau);
  rep.complex_modulus = check_complex_modulus_identity(P, T, budget, s ^ 3, tau);
  rep.disjoint_annihilation = check_disjoint_annihilation(T, budget, s ^ 4, tau);

  const bool v1 = rep.orth_additivity.verdict;
  rep.agree = v1 == rep.mean_identities.verdict &&
              v1 == rep.complex_modulus.verdict &&
              v1 == rep.disjoint_annihilation.verdict;
  switch (spec.kind) {
    case InstanceKind::oa:
      rep.expected_ok = rep.agree && v1;
      break;
    case InstanceKind::perturbed:
      rep.expected_ok = rep.agree && !v1;
      break;
    default:
      rep.expected_ok = rep.agree;
      break;
  }
  return rep;
}

/** Generate an instance and check it; disagreement lands in the report,
 *  never in an exception. */
inline ConditionReport equivalence_harness(const InstanceSpec& spec,
                                           const Budget& budget = {},
                                           std::span<const int> r_values = {},
                                           double tau = 1e-8,
                                           std::uint64_t probe_seed = 0,
                                           std::string id = {}) {
  spec.validate();
  if (id.empty()) {
    id = kind_name(spec.kind) + "-n" + std::to_string(spec.degree) + "-d" +
         std::to_string(spec.domain_dim) + "-m" + std::to_string(spec.codomain_dim) +
         "-s" + std::to_string(spec.seed);
  }
  const HomogeneousPolynomial P = generate(spec);
  return check_polynomial(std::move(id), spec, P, budget, r_values, tau, probe_seed);
}

/** One sample of a codomain-valued polynomial in lambda. */
struct LambdaSample {
  double lambda;
  std::vector<double> value;
};

namespace detail {

// Householder QR least squares.  A is rows x cols with rows >= cols; B holds
// one RHS row per A row and its first cols rows are overwritten with the
// solution.  Unlike normal equations this keeps the condition of A itself,
// which matters for polynomial sample matrices.
inline void least_squares(std::vector<std::vector<double>>& A,
                          std::vector<std::vector<double>>& B) {
  const std::size_t rows = A.size();
  const std::size_t cols = A.front().size();
  const std::size_t width = B.front().size();
  std::vector<double> v(rows, 0.0);
  for (std::size_t j = 0; j < cols; ++j) {
    double norm2 = 0.0;
    for (std::size_t i = j; i < rows; ++i) norm2 += A[i][j] * A[i][j];
    require(norm2 > 0.0, "least_squares: rank-deficient system");
    const double alpha = A[j][j] >= 0.0 ? -std::sqrt(norm2) : std::sqrt(norm2);
    double vnorm2 = 0.0;
    for (std::size_t i = j; i < rows; ++i) {
      v[i] = A[i][j] - (i == j ? alpha : 0.0);
      vnorm2 += v[i] * v[i];
    }
    if (vnorm2 == 0.0) continue;
    for (std::size_t c = j; c < cols; ++c) {
      double dot = 0.0;
      for (std::size_t i = j; i < rows; ++i) dot += v[i] * A[i][c];
      const double f = 2.0 * dot / vnorm2;
      for (std::size_t i = j; i < rows; ++i) A[i][c] -= f * v[i];
    }
    for (std::size_t c = 0; c < width; ++c) {
      double dot = 0.0;
      for (std::size_t i = j; i < rows; ++i) dot += v[i] * B[i][c];
      const double f = 2.0 * dot / vnorm2;
      for (std::size_t i = j; i < rows; ++i) B[i][c] -= f * v[i];
    }
  }
  for (std::size_t r = cols; r-- > 0;) {
    for (std::size_t c = 0; c < width; ++c) {
      double s = B[r][c];
      for (std::size_t k = r + 1; k < cols; ++k) s -= A[r][k] * B[k][c];
      B[r][c] = s / A[r][r];
    }
  }
}

}  // namespace detail

/** Recover v_0..v_n with sum_k lambda^k v_k == q(lambda) from samples of q
 *  at distinct positive lambda.  Exactly n+1 samples solve the Vandermonde
 *  system directly; more samples go through least squares.  All-zero samples
 *  return exactly zero coefficients. */
inline std::vector<std::vector<double>> vandermonde_coefficients(
    int n, std::span<const LambdaSample> samples) {
  detail::require(n >= 0, "vandermonde_coefficients: n must be >= 0");
  const std::size_t cols = static_cast<std::size_t>(n) + 1;
  detail::require(samples.size() >= cols,
                  "vandermonde_coefficients: need at least n+1 samples");
  const std::size_t m = samples.front().value.size();
  detail::require(m >= 1, "vandermonde_coefficients: empty sample value");
  for (const LambdaSample& s : samples) {
    detail::require(s.lambda > 0.0, "vandermonde_coefficients: lambda must be > 0");
    detail::require(s.value.size() == m,
                    "vandermonde_coefficients: inconsistent value dimensions");
  }
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      detail::require(samples[i].lambda != samples[j].lambda,
                      "vandermonde_coefficients: duplicate lambda");

  // Work on nodes sorted ascending; the result is then independent of the
  // sample order handed in.
  std::vector<std::size_t> order(samples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return samples[a].lambda < samples[b].lambda;
  });

  if (samples.size() == cols) {
    // Bjorck-Pereyra: divided differences, then Newton form to monomial
    // coefficients.  On increasing positive nodes this recovers polynomial
    // coefficients to near machine accuracy even where the raw condition
    // number of the Vandermonde matrix is hopeless.
    std::vector<double> lam(cols);
    std::vector<std::vector<double>> a(cols);
    for (std::size_t i = 0; i < cols; ++i) {
      lam[i] = samples[order[i]].lambda;
      a[i] = samples[order[i]].value;
    }
    for (std::size_t k = 0; k + 1 < cols; ++k) {
      for (std::size_t i = cols - 1; i > k; --i) {
        const double denom = lam[i] - lam[i - k - 1];
        for (std::size_t c = 0; c < m; ++c)
          a[i][c] = (a[i][c] - a[i - 1][c]) / denom;
      }
    }
    for (std::size_t k = cols - 1; k-- > 0;)
      for (std::size_t i = k; i + 1 < cols; ++i)
        for (std::size_t c = 0; c < m; ++c) a[i][c] -= lam[k] * a[i + 1][c];
    return a;
  }

  // Oversampled: least squares on the rectangular Vandermonde rows
  // (1, lambda, ..., lambda^n).
  std::vector<std::vector<double>> V(samples.size(), std::vector<double>(cols));
  std::vector<std::vector<double>> B(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double p = 1.0;
    for (std::size_t k = 0; k < cols; ++k) {
      V[i][k] = p;
      p *= samples[order[i]].lambda;
    }
    B[i] = samples[order[i]].value;
  }
  detail::least_squares(V, B);
  B.resize(cols);
  return B;
}

/** Exact integer identity behind the odd-order recombination step: for odd
 *  n and every k in 1..n-1,
 *      C(n,k) - (-1)^k (C(n-1,k) - C(n-1,k-1)) == 2 C(n-1, psi(k)),
 *  where psi(k) = k for odd k and k-1 for even k.  n = 1 passes vacuously. */
inline bool check_odd_binomial_identity(int n) {
  detail::require(n >= 1 && n % 2 == 1,
                  "check_odd_binomial_identity: n must be odd, >= 1");
  for (int k = 1; k <= n - 1; ++k) {
    const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    const std::int64_t lhs =
        static_cast<std::int64_t>(binomial(n, k)) -
        sign * (static_cast<std::int64_t>(binomial(n - 1, k)) -
                static_cast<std::int64_t>(binomial(n - 1, k - 1)));
    const int psi = (k % 2 == 1) ? k : k - 1;
    const std::int64_t rhs = 2 * static_cast<std::int64_t>(binomial(n - 1, psi));
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace latcheck

#endif  // LATCHECK_CHARACTERIZE_HPP
