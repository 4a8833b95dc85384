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

#ifndef LATCHECK_FUNCALC_HPP
#define LATCHECK_FUNCALC_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "latcheck/lattice.hpp"

namespace latcheck {

namespace detail {

// Integer power by squaring.  Exponent >= 0.
inline double int_pow(double x, int e) {
  double r = 1.0;
  double b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline double nth_root(double x, int n) {
  if (n == 1) return x;
  if (n == 2) return std::sqrt(x);
  return std::pow(x, 1.0 / static_cast<double>(n));
}

// Order-canonical accumulation: sort the term multiset first so that the
// result does not depend on the order arguments were supplied in.
inline double stable_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

inline double stable_product(std::vector<double>& factors) {
  std::sort(factors.begin(), factors.end());
  double p = 1.0;
  for (double f : factors) p *= f;
  return p;
}

}  // namespace detail

/** A formal product of lattice elements with positive integer multiplicities,
 *  an optional scalar factor and an optional extra first-power element.
 *
 *  The consuming operation fixes the arity: geometric_mean(n, pt) requires
 *  the total multiplicity (extra included) to equal n, and evaluate_power on
 *  a degree-n map does the same.  The scalar factor is interpreted by the
 *  consumer: geometric_mean takes its n-th root, evaluate_power multiplies
 *  the result linearly.
 */
class PowerTuple {
 public:
  struct Entry {
    LatticeElement element;
    int multiplicity;
  };

  explicit PowerTuple(std::vector<Entry> entries, double scale = 1.0,
                      std::optional<LatticeElement> extra = std::nullopt)
      : entries_(std::move(entries)), scale_(scale), extra_(std::move(extra)) {
    detail::require(scale_ >= 0.0 && std::isfinite(scale_),
                    "PowerTuple: scale must be finite and nonnegative");
    detail::require(!entries_.empty() || extra_.has_value(),
                    "PowerTuple: needs at least one element");
    std::size_t d = extra_ ? extra_->dim() : entries_.front().element.dim();
    for (const Entry& e : entries_) {
      detail::require(e.multiplicity >= 1, "PowerTuple: multiplicity must be >= 1");
      detail::require(e.element.dim() == d, "PowerTuple: dimension mismatch");
    }
    if (extra_) detail::require(extra_->dim() == d, "PowerTuple: dimension mismatch");
    dim_ = d;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  double scale() const { return scale_; }
  const std::optional<LatticeElement>& extra() const { return extra_; }
  std::size_t dim() const { return dim_; }

  int total_multiplicity() const {
    int t = extra_ ? 1 : 0;
    for (const Entry& e : entries_) t += e.multiplicity;
    return t;
  }

  // Arguments listed with multiplicity, extra element last.
  std::vector<LatticeElement> expand() const {
    std::vector<LatticeElement> out;
    out.reserve(static_cast<std::size_t>(total_multiplicity()));
    for (const Entry& e : entries_)
      for (int i = 0; i < e.multiplicity; ++i) out.push_back(e.element);
    if (extra_) out.push_back(*extra_);
    return out;
  }

 private:
  std::vector<Entry> entries_;
  double scale_;
  std::optional<LatticeElement> extra_;
  std::size_t dim_;
};

/** Root mean power: coordinatewise (sum_k |x_k|^n)^(1/n).
 *
 *  Defined for any number r >= 1 of arguments; r need not equal n.
 *  Term accumulation is order-canonical, so the result is exactly
 *  invariant under permutations of the arguments.
 */
inline LatticeElement root_mean_power(int n, std::span<const LatticeElement> args) {
  detail::require(n >= 1, "root_mean_power: n must be >= 1");
  detail::require(!args.empty(), "root_mean_power: needs at least one argument");
  const std::size_t d = args.front().dim();
  for (const LatticeElement& a : args)
    detail::require(a.dim() == d, "root_mean_power: dimension mismatch");

  std::vector<double> out(d);
  std::vector<double> terms(args.size());
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < args.size(); ++k)
      terms[k] = detail::int_pow(std::fabs(args[k][j]), n);
    out[j] = detail::nth_root(detail::stable_sum(terms), n);
  }
  return LatticeElement(std::move(out));
}

inline LatticeElement root_mean_power(int n, std::initializer_list<LatticeElement> args) {
  return root_mean_power(n, std::span<const LatticeElement>(args.begin(), args.size()));
}

/** Geometric mean: coordinatewise n-th root of
 *  scale * prod_k |x_k|^(mult_k) * |extra| .
 *
 *  Requires the tuple's total multiplicity (extra counts once) to equal n.
 *  The scalar factor rides inside the root, so
 *  geometric_mean(n, a * pt) == a^(1/n) * geometric_mean(n, pt) up to
 *  roundoff.  Factor accumulation is order-canonical.
 */
inline LatticeElement geometric_mean(int n, const PowerTuple& pt) {
  detail::require(n >= 1, "geometric_mean: n must be >= 1");
  detail::require(pt.total_multiplicity() == n,
                  "geometric_mean: total multiplicity must equal n");

  const std::size_t d = pt.dim();
  std::vector<double> out(d);
  std::vector<double> factors;
  for (std::size_t j = 0; j < d; ++j) {
    factors.clear();
    if (pt.scale() != 1.0) factors.push_back(pt.scale());
    for (const PowerTuple::Entry& e : pt.entries())
      factors.push_back(detail::int_pow(std::fabs(e.element[j]), e.multiplicity));
    if (pt.extra()) factors.push_back(std::fabs((*pt.extra())[j]));
    out[j] = detail::nth_root(detail::stable_product(factors), n);
  }
  return LatticeElement(std::move(out));
}

}  // namespace latcheck

#endif  // LATCHECK_FUNCALC_HPP
