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

#ifndef LATCHECK_COMPLEXIFY_HPP
#define LATCHECK_COMPLEXIFY_HPP

#include <utility>
#include <vector>

#include "latcheck/combinatorics.hpp"
#include "latcheck/funcalc.hpp"
#include "latcheck/lattice.hpp"

namespace latcheck {

/** z = f + ig with f, g in the same real lattice. */
struct ComplexElement {
  LatticeElement re;
  LatticeElement im;

  ComplexElement(LatticeElement r, LatticeElement i)
      : re(std::move(r)), im(std::move(i)) {
    detail::require(re.dim() == im.dim(), "ComplexElement: dimension mismatch");
  }

  static ComplexElement from_real(LatticeElement r) {
    LatticeElement z = LatticeElement::zeros(r.dim());
    return ComplexElement(std::move(r), std::move(z));
  }

  std::size_t dim() const { return re.dim(); }

  friend bool operator==(const ComplexElement& a, const ComplexElement& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline ComplexElement conjugate(const ComplexElement& z) {
  return ComplexElement(z.re, -z.im);
}

// |f + ig| = sqrt(f^2 + g^2) coordinatewise.  Shares the exact code path of
// the order-2 root mean power, so the two agree bit for bit.
inline LatticeElement modulus(const ComplexElement& z) {
  return root_mean_power(2, {z.re, z.im});
}

/** Expansion of the modulus through power/geometric means, even order.
 *
 *  For even n = 2m the modulus of z = f + ig equals the order-n root mean
 *  power of the m+1 geometric means
 *      G_n(C(m,k) * f^(n-2k) g^(2k)),  k = 0..m.
 */
inline LatticeElement modulus_expansion_even(int n, const ComplexElement& z) {
  detail::require(n >= 2 && n % 2 == 0, "modulus_expansion_even: n must be even, >= 2");
  const int m = n / 2;
  std::vector<LatticeElement> entries;
  entries.reserve(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    std::vector<PowerTuple::Entry> e;
    if (n - 2 * k > 0) e.push_back({z.re, n - 2 * k});
    if (2 * k > 0) e.push_back({z.im, 2 * k});
    const double scale = static_cast<double>(binomial(m, k));
    entries.push_back(geometric_mean(n, PowerTuple(std::move(e), scale)));
  }
  return root_mean_power(n, std::span<const LatticeElement>(entries));
}

/** Expansion of the modulus through power/geometric means, odd order.
 *
 *  For odd n = 2m+1 the modulus appears once inside each geometric mean:
 *      |z| = S_n{ G_n(C(m,k) * f^(n-1-2k) g^(2k) |z|), k = 0..m }.
 */
inline LatticeElement modulus_expansion_odd(int n, const ComplexElement& z) {
  detail::require(n >= 1 && n % 2 == 1, "modulus_expansion_odd: n must be odd, >= 1");
  const int m = (n - 1) / 2;
  const LatticeElement mod = modulus(z);
  std::vector<LatticeElement> entries;
  entries.reserve(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    std::vector<PowerTuple::Entry> e;
    if (n - 1 - 2 * k > 0) e.push_back({z.re, n - 1 - 2 * k});
    if (2 * k > 0) e.push_back({z.im, 2 * k});
    const double scale = static_cast<double>(binomial(m, k));
    entries.push_back(geometric_mean(n, PowerTuple(std::move(e), scale, mod)));
  }
  return root_mean_power(n, std::span<const LatticeElement>(entries));
}

}  // namespace latcheck

#endif  // LATCHECK_COMPLEXIFY_HPP
