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

#ifndef LATCHECK_LATTICE_HPP
#define LATCHECK_LATTICE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "latcheck/tolerance.hpp"

namespace latcheck {

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace detail

/** An element of the model vector lattice R^d with coordinatewise order.
 *
 * Immutable after construction.  Coordinates must be finite; the dimension
 * must be at least 1.  Join, meet and friends are free functions, all pure.
 */
class LatticeElement {
 public:
  explicit LatticeElement(std::vector<double> coords) : coords_(std::move(coords)) {
    detail::require(!coords_.empty(), "LatticeElement: dimension must be >= 1");
    for (double c : coords_)
      detail::require(std::isfinite(c), "LatticeElement: coordinates must be finite");
  }

  LatticeElement(std::initializer_list<double> coords)
      : LatticeElement(std::vector<double>(coords)) {}

  static LatticeElement zeros(std::size_t dim) {
    return LatticeElement(std::vector<double>(dim, 0.0));
  }

  // Standard basis vector e_axis (0-based axis).
  static LatticeElement unit(std::size_t dim, std::size_t axis) {
    detail::require(axis < dim, "LatticeElement::unit: axis out of range");
    std::vector<double> c(dim, 0.0);
    c[axis] = 1.0;
    return LatticeElement(std::move(c));
  }

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<double>& coords() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  friend bool operator==(const LatticeElement& a, const LatticeElement& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const LatticeElement& a, const LatticeElement& b) {
    return !(a == b);
  }

 private:
  std::vector<double> coords_;
};

namespace detail {

inline void require_same_dim(const LatticeElement& a, const LatticeElement& b,
                             const char* who) {
  require(a.dim() == b.dim(), std::string(who) + ": dimension mismatch");
}

template <class F>
LatticeElement zip(const LatticeElement& a, const LatticeElement& b, F&& f,
                   const char* who) {
  require_same_dim(a, b, who);
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = f(a[i], b[i]);
  return LatticeElement(std::move(out));
}

}  // namespace detail

inline LatticeElement operator+(const LatticeElement& a, const LatticeElement& b) {
  return detail::zip(a, b, [](double x, double y) { return x + y; }, "operator+");
}

inline LatticeElement operator-(const LatticeElement& a, const LatticeElement& b) {
  return detail::zip(a, b, [](double x, double y) { return x - y; }, "operator-");
}

inline LatticeElement operator-(const LatticeElement& a) {
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = -a[i];
  return LatticeElement(std::move(out));
}

inline LatticeElement operator*(double s, const LatticeElement& a) {
  detail::require(std::isfinite(s), "operator*: scalar must be finite");
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = s * a[i];
  return LatticeElement(std::move(out));
}

inline LatticeElement operator*(const LatticeElement& a, double s) { return s * a; }

// Coordinatewise maximum, f v g.
inline LatticeElement join(const LatticeElement& a, const LatticeElement& b) {
  return detail::zip(a, b, [](double x, double y) { return std::max(x, y); }, "join");
}

// Coordinatewise minimum, f ^ g.
inline LatticeElement meet(const LatticeElement& a, const LatticeElement& b) {
  return detail::zip(a, b, [](double x, double y) { return std::min(x, y); }, "meet");
}

inline LatticeElement abs(const LatticeElement& a) {
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = std::fabs(a[i]);
  return LatticeElement(std::move(out));
}

// Positive and negative parts; f == f_plus - f_minus and |f| == f_plus + f_minus
// hold exactly in floating point, since only min/max/negation are involved.
inline std::pair<LatticeElement, LatticeElement> decompose(const LatticeElement& a) {
  std::vector<double> plus(a.dim()), minus(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    plus[i] = std::max(a[i], 0.0);
    minus[i] = std::max(-a[i], 0.0);
  }
  return {LatticeElement(std::move(plus)), LatticeElement(std::move(minus))};
}

// Disjointness |f| ^ |g| <= tol coordinatewise.  tol = 0 demands exact
// support separation.
inline bool is_disjoint(const LatticeElement& a, const LatticeElement& b,
                        double tol = 0.0) {
  detail::require_same_dim(a, b, "is_disjoint");
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (std::min(std::fabs(a[i]), std::fabs(b[i])) > tol) return false;
  return true;
}

inline bool is_positive(const LatticeElement& a) {
  for (double c : a)
    if (c < 0.0) return false;
  return true;
}

// Coordinatewise a <= b + slack.
inline bool coordinatewise_leq(const LatticeElement& a, const LatticeElement& b,
                               double slack = 0.0) {
  detail::require_same_dim(a, b, "coordinatewise_leq");
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] > b[i] + slack) return false;
  return true;
}

inline double infinity_norm(const LatticeElement& a) {
  double m = 0.0;
  for (double c : a) m = std::max(m, std::fabs(c));
  return m;
}

// Indices of exactly nonzero coordinates.
inline std::vector<int> support(const LatticeElement& a) {
  std::vector<int> s;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] != 0.0) s.push_back(static_cast<int>(i));
  return s;
}

inline bool approx_equal(const LatticeElement& a, const LatticeElement& b,
                         Tolerance tol = {}) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!tol.equal(a[i], b[i])) return false;
  return true;
}

inline std::ostream& operator<<(std::ostream& os, const LatticeElement& a) {
  os << '(';
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i) os << ", ";
    os << a[i];
  }
  return os << ')';
}

}  // namespace latcheck

#endif  // LATCHECK_LATTICE_HPP
