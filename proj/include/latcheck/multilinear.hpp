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

#ifndef LATCHECK_MULTILINEAR_HPP
#define LATCHECK_MULTILINEAR_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "latcheck/combinatorics.hpp"
#include "latcheck/complexify.hpp"
#include "latcheck/funcalc.hpp"
#include "latcheck/lattice.hpp"

namespace latcheck {

/** Value of a complexified map: real and imaginary codomain vectors. */
struct ComplexCodomainValue {
  std::vector<double> re;
  std::vector<double> im;
};

inline ComplexCodomainValue conjugate(const ComplexCodomainValue& v) {
  ComplexCodomainValue out = v;
  for (double& x : out.im) x = -x;
  return out;
}

/** A symmetric n-linear map R^d x ... x R^d -> R^m.
 *
 *  One coefficient vector is stored per sorted multi-index (nondecreasing
 *  length-n tuple over {0..d-1}); the full symmetric tensor is implied.
 *  Storage is O(C(d+n-1, n) * m) and never materializes d^n entries.
 *
 *  Evaluation picks between two exact strategies:
 *   - walking the cartesian product of the arguments' supports (wins when
 *     arguments are sparse, e.g. disjointly supported probes), and
 *   - walking distinct permutations of stored nonzero indices (wins when the
 *     tensor is sparse, e.g. diagonal instances).
 *  Both enumerate each contributing term exactly once.
 */
class SymmetricMultilinearMap {
 public:
  static constexpr int kMaxOrder = 12;

  SymmetricMultilinearMap(int order, int domain_dim, int codomain_dim)
      : order_(order), domain_dim_(domain_dim), codomain_dim_(codomain_dim) {
    detail::require(order_ >= 1, "SymmetricMultilinearMap: order must be >= 1");
    detail::require(order_ <= kMaxOrder, "SymmetricMultilinearMap: order above cap");
    detail::require(domain_dim_ >= 1, "SymmetricMultilinearMap: domain_dim must be >= 1");
    detail::require(codomain_dim_ >= 1,
                    "SymmetricMultilinearMap: codomain_dim must be >= 1");
    count_ = static_cast<std::size_t>(sorted_index_count(domain_dim_, order_));
    coeffs_.assign(count_ * static_cast<std::size_t>(codomain_dim_), 0.0);
    row_nonzero_.assign(count_, 0);
    indices_flat_.reserve(count_ * static_cast<std::size_t>(order_));
    perm_counts_.reserve(count_);
    for_each_sorted_index(domain_dim_, order_, [&](std::span<const int> idx) {
      indices_flat_.insert(indices_flat_.end(), idx.begin(), idx.end());
      perm_counts_.push_back(distinct_permutation_count(idx));
    });
  }

  int order() const { return order_; }
  int domain_dim() const { return domain_dim_; }
  int codomain_dim() const { return codomain_dim_; }
  std::size_t coefficient_count() const { return count_; }

  std::span<const int> index_at(std::size_t rank) const {
    return {indices_flat_.data() + rank * static_cast<std::size_t>(order_),
            static_cast<std::size_t>(order_)};
  }

  std::uint64_t permutation_count_at(std::size_t rank) const {
    return perm_counts_[rank];
  }

  std::size_t rank_of(std::span<const int> idx) const {
    detail::require(static_cast<int>(idx.size()) == order_,
                    "SymmetricMultilinearMap: index length must equal order");
    detail::require(is_sorted_index(idx, domain_dim_),
                    "SymmetricMultilinearMap: index must be sorted and in range");
    return sorted_index_rank(idx, domain_dim_);
  }

  std::span<const double> coefficient_at(std::size_t rank) const {
    return {coeffs_.data() + rank * static_cast<std::size_t>(codomain_dim_),
            static_cast<std::size_t>(codomain_dim_)};
  }

  std::span<const double> coefficient(std::span<const int> idx) const {
    return coefficient_at(rank_of(idx));
  }

  void set_coefficient(std::span<const int> idx, std::span<const double> value) {
    detail::require(static_cast<int>(value.size()) == codomain_dim_,
                    "SymmetricMultilinearMap: value length must equal codomain_dim");
    const std::size_t r = rank_of(idx);
    bool nz = false;
    for (int c = 0; c < codomain_dim_; ++c) {
      const double v = value[static_cast<std::size_t>(c)];
      detail::require(std::isfinite(v), "SymmetricMultilinearMap: non-finite value");
      coeffs_[r * static_cast<std::size_t>(codomain_dim_) + static_cast<std::size_t>(c)] = v;
      nz = nz || v != 0.0;
    }
    row_nonzero_[r] = nz ? 1 : 0;
  }

  double max_abs_coefficient() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::fabs(c));
    return m;
  }

  // Ranks of nonzero mixed coefficient rows (used by probe construction).
  std::vector<std::size_t> nonzero_mixed_ranks() const {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < count_; ++r)
      if (row_nonzero_[r] && is_mixed_index(index_at(r))) out.push_back(r);
    return out;
  }

  bool is_diagonal() const { return nonzero_mixed_ranks().empty(); }

  /** Full multilinear evaluation T(f_1, ..., f_n). */
  std::vector<double> evaluate(std::span<const LatticeElement> args) const {
    detail::require(static_cast<int>(args.size()) == order_,
                    "evaluate: argument count must equal order");
    std::vector<const LatticeElement*> ptrs(args.size());
    for (std::size_t k = 0; k < args.size(); ++k) {
      detail::require(static_cast<int>(args[k].dim()) == domain_dim_,
                      "evaluate: argument dimension mismatch");
      ptrs[k] = &args[k];
    }
    return evaluate_ptrs(ptrs);
  }

  /** Evaluation of a power tuple T(f^(n-k) g^k ...); the tuple's scalar
   *  factor multiplies the result linearly. */
  std::vector<double> evaluate_power(const PowerTuple& pt) const {
    detail::require(pt.total_multiplicity() == order_,
                    "evaluate_power: total multiplicity must equal order");
    detail::require(static_cast<int>(pt.dim()) == domain_dim_,
                    "evaluate_power: dimension mismatch");
    std::vector<const LatticeElement*> ptrs;
    ptrs.reserve(static_cast<std::size_t>(order_));
    for (const PowerTuple::Entry& e : pt.entries())
      for (int i = 0; i < e.multiplicity; ++i) ptrs.push_back(&e.element);
    if (pt.extra()) ptrs.push_back(&*pt.extra());
    std::vector<double> out = evaluate_ptrs(ptrs);
    if (pt.scale() != 1.0)
      for (double& x : out) x *= pt.scale();
    return out;
  }

  /** Diagonal restriction P(f) = T(f, ..., f), the degree-n homogeneous
   *  polynomial attached to this map.  Costs one pass over nonzero rows. */
  std::vector<double> evaluate_diagonal(const LatticeElement& f) const {
    detail::require(static_cast<int>(f.dim()) == domain_dim_,
                    "evaluate_diagonal: dimension mismatch");
    std::vector<double> out(static_cast<std::size_t>(codomain_dim_), 0.0);
    for (std::size_t r = 0; r < count_; ++r) {
      if (!row_nonzero_[r]) continue;
      std::span<const int> idx = index_at(r);
      double prod = static_cast<double>(perm_counts_[r]);
      for (int k = 0; k < order_; ++k) prod *= f[static_cast<std::size_t>(idx[k])];
      const double* row = coeffs_.data() + r * static_cast<std::size_t>(codomain_dim_);
      for (int c = 0; c < codomain_dim_; ++c)
        out[static_cast<std::size_t>(c)] += row[c] * prod;
    }
    return out;
  }

  /** Complex extension applied to complex arguments:
   *      T_C(z_1, ..., z_n) = sum over component choices of i^(#imag) T(...),
   *  the 2^n-term expansion.  Terms are grouped by i^k mod 4 into the real
   *  and imaginary outputs; equal argument multisets are evaluated once and
   *  in canonical order, so conjugation symmetry cancels exactly where the
   *  inputs allow it.
   */
  ComplexCodomainValue complex_evaluate(std::span<const ComplexElement> zargs) const {
    detail::require(static_cast<int>(zargs.size()) == order_,
                    "complex_evaluate: argument count must equal order");
    for (const ComplexElement& z : zargs)
      detail::require(static_cast<int>(z.dim()) == domain_dim_,
                      "complex_evaluate: dimension mismatch");

    // Deduplicate the 2n component vectors by content.
    std::vector<const LatticeElement*> uniq;
    std::vector<int> comp_id(2 * static_cast<std::size_t>(order_));
    auto intern = [&](const LatticeElement* p) {
      for (std::size_t i = 0; i < uniq.size(); ++i)
        if (*uniq[i] == *p) return static_cast<int>(i);
      uniq.push_back(p);
      return static_cast<int>(uniq.size() - 1);
    };
    for (int k = 0; k < order_; ++k) {
      comp_id[2 * static_cast<std::size_t>(k)] = intern(&zargs[static_cast<std::size_t>(k)].re);
      comp_id[2 * static_cast<std::size_t>(k) + 1] = intern(&zargs[static_cast<std::size_t>(k)].im);
    }

    ComplexCodomainValue out;
    out.re.assign(static_cast<std::size_t>(codomain_dim_), 0.0);
    out.im.assign(static_cast<std::size_t>(codomain_dim_), 0.0);

    std::map<std::vector<int>, std::vector<double>> memo;
    std::vector<int> key(static_cast<std::size_t>(order_));
    std::vector<const LatticeElement*> ptrs(static_cast<std::size_t>(order_));
    const std::uint32_t patterns = 1u << order_;
    for (std::uint32_t eps = 0; eps < patterns; ++eps) {
      for (int k = 0; k < order_; ++k)
        key[static_cast<std::size_t>(k)] =
            comp_id[2 * static_cast<std::size_t>(k) + ((eps >> k) & 1u)];
      std::sort(key.begin(), key.end());
      auto it = memo.find(key);
      if (it == memo.end()) {
        for (int k = 0; k < order_; ++k)
          ptrs[static_cast<std::size_t>(k)] = uniq[static_cast<std::size_t>(key[static_cast<std::size_t>(k)])];
        it = memo.emplace(key, evaluate_ptrs(ptrs)).first;
      }
      const std::vector<double>& val = it->second;
      switch (std::popcount(eps) & 3) {
        case 0:
          for (int c = 0; c < codomain_dim_; ++c) out.re[static_cast<std::size_t>(c)] += val[static_cast<std::size_t>(c)];
          break;
        case 1:
          for (int c = 0; c < codomain_dim_; ++c) out.im[static_cast<std::size_t>(c)] += val[static_cast<std::size_t>(c)];
          break;
        case 2:
          for (int c = 0; c < codomain_dim_; ++c) out.re[static_cast<std::size_t>(c)] -= val[static_cast<std::size_t>(c)];
          break;
        default:
          for (int c = 0; c < codomain_dim_; ++c) out.im[static_cast<std::size_t>(c)] -= val[static_cast<std::size_t>(c)];
          break;
      }
    }
    return out;
  }

 private:
  std::vector<double> evaluate_ptrs(std::span<const LatticeElement* const> raw_args) const {
    std::vector<double> out(static_cast<std::size_t>(codomain_dim_), 0.0);

    // Canonicalize the argument order by content.  The map is symmetric, so
    // this is value-neutral; it makes the result bit-identical under any
    // permutation of the arguments.
    std::vector<const LatticeElement*> args(raw_args.begin(), raw_args.end());
    std::sort(args.begin(), args.end(),
              [](const LatticeElement* a, const LatticeElement* b) {
                return std::lexicographical_compare(a->begin(), a->end(), b->begin(),
                                                    b->end());
              });

    // Support-product cost vs stored-permutation cost; both saturate safely.
    double cost_support = 1.0;
    std::vector<std::vector<int>> supports(args.size());
    for (std::size_t k = 0; k < args.size(); ++k) {
      supports[k] = support(*args[k]);
      if (supports[k].empty()) return out;
      cost_support *= static_cast<double>(supports[k].size());
    }
    double cost_stored = 0.0;
    for (std::size_t r = 0; r < count_; ++r)
      if (row_nonzero_[r]) cost_stored += static_cast<double>(perm_counts_[r]);

    if (cost_support <= cost_stored) {
      // Odometer over the support sets.
      std::vector<std::size_t> pos(args.size(), 0);
      std::vector<int> idx(args.size());
      std::vector<int> sorted_idx(args.size());
      while (true) {
        double prod = 1.0;
        for (std::size_t k = 0; k < args.size(); ++k) {
          idx[k] = supports[k][pos[k]];
          prod *= (*args[k])[static_cast<std::size_t>(idx[k])];
        }
        sorted_idx = idx;
        std::sort(sorted_idx.begin(), sorted_idx.end());
        const std::size_t r = sorted_index_rank(sorted_idx, domain_dim_);
        if (row_nonzero_[r]) {
          const double* row = coeffs_.data() + r * static_cast<std::size_t>(codomain_dim_);
          for (int c = 0; c < codomain_dim_; ++c)
            out[static_cast<std::size_t>(c)] += row[c] * prod;
        }
        std::size_t k = args.size();
        while (k > 0 && ++pos[k - 1] == supports[k - 1].size()) {
          pos[k - 1] = 0;
          --k;
        }
        if (k == 0) break;
      }
    } else {
      // Distinct permutations of each stored nonzero index.
      std::vector<int> perm(static_cast<std::size_t>(order_));
      for (std::size_t r = 0; r < count_; ++r) {
        if (!row_nonzero_[r]) continue;
        std::span<const int> idx = index_at(r);
        std::copy(idx.begin(), idx.end(), perm.begin());
        double sum = 0.0;
        do {
          double prod = 1.0;
          for (std::size_t k = 0; k < perm.size(); ++k)
            prod *= (*args[k])[static_cast<std::size_t>(perm[k])];
          sum += prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        const double* row = coeffs_.data() + r * static_cast<std::size_t>(codomain_dim_);
        for (int c = 0; c < codomain_dim_; ++c)
          out[static_cast<std::size_t>(c)] += row[c] * sum;
      }
    }
    return out;
  }

  int order_;
  int domain_dim_;
  int codomain_dim_;
  std::size_t count_;
  std::vector<double> coeffs_;
  std::vector<std::uint64_t> perm_counts_;
  std::vector<int> indices_flat_;
  std::vector<char> row_nonzero_;
};

/** Degree-n homogeneous polynomial presented by its symmetric multilinear map. */
class HomogeneousPolynomial {
 public:
  explicit HomogeneousPolynomial(SymmetricMultilinearMap map) : map_(std::move(map)) {}

  int degree() const { return map_.order(); }
  int domain_dim() const { return map_.domain_dim(); }
  int codomain_dim() const { return map_.codomain_dim(); }
  const SymmetricMultilinearMap& map() const { return map_; }

  std::vector<double> operator()(const LatticeElement& f) const {
    return map_.evaluate_diagonal(f);
  }

 private:
  SymmetricMultilinearMap map_;
};

inline std::vector<double> poly_eval(const HomogeneousPolynomial& p,
                                     const LatticeElement& f) {
  return p(f);
}

using PolynomialFn = std::function<std::vector<double>(const LatticeElement&)>;

/** Recover the symmetric multilinear map of a degree-n homogeneous
 *  polynomial from black-box evaluations:
 *
 *      T(f_1..f_n) = 1/(n! 2^n) * sum over signs e in {-1,1}^n of
 *                    (prod e_k) P(sum_k e_k f_k).
 *
 *  Each coefficient is probed at signed sums of basis vectors.  With
 *  integer-valued polynomials every intermediate stays an integer below
 *  2^53, and the final division is exact, so integer tensors round-trip
 *  bit for bit.  Capped at n <= 10 (2^n probe patterns per coefficient).
 */
inline SymmetricMultilinearMap polarize(int n, const PolynomialFn& poly,
                                        int domain_dim, int codomain_dim) {
  detail::require(n >= 1, "polarize: order must be >= 1");
  detail::require(n <= 10, "polarize: order capped at 10");
  detail::require(domain_dim >= 1 && codomain_dim >= 1,
                  "polarize: dimensions must be >= 1");

  SymmetricMultilinearMap out(n, domain_dim, codomain_dim);
  const double norm =
      static_cast<double>(factorial(n)) * static_cast<double>(std::uint64_t{1} << n);
  std::vector<double> acc(static_cast<std::size_t>(codomain_dim));
  std::vector<double> probe(static_cast<std::size_t>(domain_dim));
  const std::uint32_t patterns = 1u << n;
  for (std::size_t r = 0; r < out.coefficient_count(); ++r) {
    std::span<const int> idx = out.index_at(r);
    std::fill(acc.begin(), acc.end(), 0.0);
    for (std::uint32_t eps = 0; eps < patterns; ++eps) {
      std::fill(probe.begin(), probe.end(), 0.0);
      double sign = 1.0;
      for (int k = 0; k < n; ++k) {
        const double e = ((eps >> k) & 1u) ? -1.0 : 1.0;
        sign *= e;
        probe[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])] += e;
      }
      const std::vector<double> val = poly(LatticeElement(probe));
      detail::require(static_cast<int>(val.size()) == codomain_dim,
                      "polarize: polynomial returned wrong codomain dimension");
      for (int c = 0; c < codomain_dim; ++c)
        acc[static_cast<std::size_t>(c)] += sign * val[static_cast<std::size_t>(c)];
    }
    for (double& a : acc) a /= norm;
    out.set_coefficient(idx, acc);
  }
  return out;
}

}  // namespace latcheck

#endif  // LATCHECK_MULTILINEAR_HPP
