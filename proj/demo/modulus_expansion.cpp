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
// Walks the modulus expansion: |f + ig| computed directly and through the
// power/geometric-mean ladder at several orders.

#include <cstdio>

#include "latcheck/latcheck.hpp"

int main() {
  using namespace latcheck;

  const ComplexElement z{LatticeElement({3.0, -1.5, 0.0, 2.0}),
                         LatticeElement({4.0, 2.0, -5.0, 0.0})};
  const LatticeElement direct = modulus(z);

  std::printf("coordinatewise modulus of f + ig\n");
  std::printf("  f       = [% .3f % .3f % .3f % .3f]\n", z.re[0], z.re[1], z.re[2], z.re[3]);
  std::printf("  g       = [% .3f % .3f % .3f % .3f]\n", z.im[0], z.im[1], z.im[2], z.im[3]);
  std::printf("  |f+ig|  = [% .6f % .6f % .6f % .6f]\n\n", direct[0], direct[1], direct[2],
              direct[3]);

  std::printf("expansion through root-mean powers of geometric means\n");
  for (int n = 1; n <= 8; ++n) {
    const LatticeElement expanded =
        (n % 2 == 0) ? modulus_expansion_even(n, z) : modulus_expansion_odd(n, z);
    double worst = 0.0;
    for (std::size_t j = 0; j < direct.dim(); ++j) {
      const double diff = expanded[j] - direct[j];
      if (std::abs(diff) > std::abs(worst)) worst = diff;
    }
    std::printf("  order %d (%s): [% .6f % .6f % .6f % .6f]  max deviation % .2e\n", n,
                n % 2 == 0 ? "even" : "odd ", expanded[0], expanded[1], expanded[2],
                expanded[3], worst);
  }
  return 0;
}
