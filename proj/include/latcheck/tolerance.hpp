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

#ifndef LATCHECK_TOLERANCE_HPP
#define LATCHECK_TOLERANCE_HPP

#include <algorithm>
#include <cmath>

namespace latcheck {

/** Two-tier comparison policy.
 *
 * Results of pure min/max/negation/addition/scalar chains are compared
 * exactly by the callers that know they stayed in that regime.  Once an
 * n-th root enters a computation, comparisons go through this relative
 * tolerance with an absolute floor near zero.
 */
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;

  bool equal(double a, double b) const {
    const double diff = std::fabs(a - b);
    if (diff <= abs) return true;
    return diff <= rel * std::max(std::fabs(a), std::fabs(b));
  }
};

}  // namespace latcheck

#endif  // LATCHECK_TOLERANCE_HPP
