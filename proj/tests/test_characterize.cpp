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

#include <catch2/catch_amalgamated.hpp>

#include "latcheck/characterize.hpp"
#include "test_support.hpp"

using namespace latcheck;

TEST_CASE("diagonal instances satisfy all four conditions") {
  auto eng = testing::seeded_engine(601);
  for (int t = 0; t < 25; ++t) {
    InstanceSpec spec{testing::draw_int(eng, 1, 6), testing::draw_int(eng, 2, 5),
                      testing::draw_int(eng, 1, 3), InstanceKind::oa, 0.0, eng()};
    ConditionReport rep = equivalence_harness(spec);
    CHECK(rep.agree);
    CHECK(rep.expected_ok);
    for (const ConditionOutcome* out : rep.conditions()) {
      CHECK(out->verdict);
      CHECK(out->residual <= out->tolerance);
    }
  }
}

TEST_CASE("pinned perturbed residuals match the hand-computed margins") {
  // d = 2, n = 2, one mixed entry of size eps: splitting along the two axes
  // leaves a cross term of 2 eps in condition (i) and the bare entry eps in
  // condition (iv).  The harness rebuilds the tensor by polarization, so the
  // margins carry the rounding of the diagonal sums; eps = 0.5 keeps every
  // intermediate integral and the margins exact.
  Tolerance near{1e-9, 1e-12};
  for (double eps : {0.5, 1e-3}) {
    for (std::uint64_t seed : {1ULL, 99ULL, 424242ULL}) {
      InstanceSpec spec{2, 2, 1, InstanceKind::perturbed, eps, seed};
      ConditionReport rep = equivalence_harness(spec);
      CHECK(rep.agree);
      CHECK(rep.expected_ok);
      CHECK_FALSE(rep.orth_additivity.verdict);
      CHECK(near.equal(rep.orth_additivity.residual, 2.0 * eps));
      CHECK(rep.mean_identities.residual >= eps * (1.0 - 1e-9));
      CHECK(near.equal(rep.disjoint_annihilation.residual, eps));
      if (eps == 0.5) {
        CHECK(rep.orth_additivity.residual == 1.0);
        CHECK(rep.disjoint_annihilation.residual == 0.5);
      }
    }
  }
}

TEST_CASE("perturbed instances fail all four conditions with visible margins") {
  auto eng = testing::seeded_engine(602);
  for (double eps : {1e-3, 0.5}) {
    for (int t = 0; t < 12; ++t) {
      InstanceSpec spec{testing::draw_int(eng, 2, 6), testing::draw_int(eng, 2, 5),
                        testing::draw_int(eng, 1, 3), InstanceKind::perturbed, eps, eng()};
      ConditionReport rep = equivalence_harness(spec);
      CHECK(rep.agree);
      CHECK(rep.expected_ok);
      for (const ConditionOutcome* out : rep.conditions()) {
        CHECK_FALSE(out->verdict);
        CHECK(out->residual >= eps / 2.0);
        CHECK_FALSE(out->witness.empty());
      }
    }
  }
}

TEST_CASE("random instances always produce agreeing verdicts") {
  auto eng = testing::seeded_engine(603);
  for (int t = 0; t < 40; ++t) {
    InstanceSpec spec{testing::draw_int(eng, 1, 5), testing::draw_int(eng, 2, 5),
                      testing::draw_int(eng, 1, 2), InstanceKind::random, 0.0, eng()};
    ConditionReport rep = equivalence_harness(spec);
    CHECK(rep.agree);
    CHECK(rep.expected_ok);
  }
}

TEST_CASE("degree-1 maps are orthogonally additive by linearity") {
  auto eng = testing::seeded_engine(604);
  for (int t = 0; t < 10; ++t) {
    InstanceSpec spec{testing::draw_int(eng, 1, 6), 1, testing::draw_int(eng, 1, 3),
                      InstanceKind::random, 0.0, eng()};
    ConditionReport rep = equivalence_harness(spec);
    CHECK(rep.agree);
    for (const ConditionOutcome* out : rep.conditions()) CHECK(out->verdict);
  }
}

TEST_CASE("report identity fields round through check_polynomial") {
  InstanceSpec spec{3, 2, 1, InstanceKind::oa, 0.0, 11};
  HomogeneousPolynomial poly = generate(spec);
  ConditionReport rep = check_polynomial("my-id", spec, poly);
  CHECK(rep.id == "my-id");
  CHECK(rep.spec.seed == 11);
  ConditionReport named = equivalence_harness(spec);
  CHECK(named.id == "oa-n2-d3-m1-s11");
}

TEST_CASE("mean identity order range is enforced") {
  InstanceSpec spec{2, 2, 1, InstanceKind::oa, 0.0, 5};
  HomogeneousPolynomial poly = generate(spec);
  std::vector<int> bad{7};
  CHECK_THROWS_AS(check_polynomial("x", spec, poly, Budget{}, bad), std::invalid_argument);
  std::vector<int> zero{0};
  CHECK_THROWS_AS(check_polynomial("x", spec, poly, Budget{}, zero), std::invalid_argument);
  std::vector<int> good{1, 6};
  CHECK_NOTHROW(check_polynomial("x", spec, poly, Budget{}, good));
}

TEST_CASE("verdict tolerance scales with coefficients and probe magnitudes") {
  CHECK(detail::scaled_tolerance(1e-8, 0.0, 0.0, 3) == 1e-8);
  CHECK(detail::scaled_tolerance(1e-8, 2.0, 3.0, 2) == 1e-8 * (1.0 + 2.0 * 9.0));
  CHECK(detail::scaled_tolerance(0.0, 5.0, 5.0, 4) == 0.0);
}

TEST_CASE("condition checks run standalone") {
  InstanceSpec spec{4, 3, 2, InstanceKind::perturbed, 0.25, 17};
  HomogeneousPolynomial poly = generate(spec);
  Budget budget;
  ConditionOutcome oa = check_orthogonal_additivity(poly, budget, 7);
  CHECK_FALSE(oa.verdict);
  std::vector<int> rs{1, 2, 3};
  ConditionOutcome mi = check_mean_identities(poly, poly.map(), rs, budget, 7);
  CHECK_FALSE(mi.verdict);
  ConditionOutcome cm = check_complex_modulus_identity(poly, poly.map(), budget, 7);
  CHECK_FALSE(cm.verdict);
  ConditionOutcome da = check_disjoint_annihilation(poly.map(), budget, 7);
  CHECK_FALSE(da.verdict);
  // The unit-vector split that covers the mixed index reads it back as an
  // integer multiple of eps; permutation counts bound the multiple by n!.
  CHECK(da.residual >= 0.25);
  CHECK(da.residual <= 6.0 * 0.25);
}

TEST_CASE("vandermonde pinned first-order system") {
  // q(lambda) = 1 + 2 lambda through (1,3) and (2,5).
  std::vector<LambdaSample> samples{{1.0, {3.0}}, {2.0, {5.0}}};
  std::vector<std::vector<double>> v = vandermonde_coefficients(1, samples);
  REQUIRE(v.size() == 2);
  CHECK(v[0] == std::vector<double>{1.0});
  CHECK(v[1] == std::vector<double>{2.0});
}

TEST_CASE("vandermonde all-zero samples return exact zeros") {
  for (int n = 0; n <= 6; ++n) {
    std::vector<LambdaSample> samples;
    for (int i = 1; i <= n + 1; ++i)
      samples.push_back({static_cast<double>(i), {0.0, 0.0}});
    std::vector<std::vector<double>> v =
        vandermonde_coefficients(n, samples);
    REQUIRE(v.size() == static_cast<std::size_t>(n) + 1);
    for (const std::vector<double>& row : v) CHECK(row == std::vector<double>{0.0, 0.0});
  }
}

TEST_CASE("vandermonde recovers random integer coefficients") {
  auto eng = testing::seeded_engine(605);
  // Exactly determined grids resolve integer coefficients to the last bit;
  // the least-squares path trades some accuracy for the extra samples.
  Tolerance square_tol{1e-9, 1e-12};
  for (int t = 0; t < 30; ++t) {
    int n = testing::draw_int(eng, 1, 6);
    int m = testing::draw_int(eng, 1, 3);
    std::vector<std::vector<double>> want(static_cast<std::size_t>(n) + 1,
                                          std::vector<double>(static_cast<std::size_t>(m)));
    for (auto& row : want)
      for (double& x : row) x = static_cast<double>(testing::draw_int(eng, -9, 9));
    bool oversample = (t % 3) == 0;
    int count = n + 1 + (oversample ? 3 : 0);
    std::vector<LambdaSample> samples;
    for (int i = 1; i <= count; ++i) {
      double lam = static_cast<double>(i);
      std::vector<double> val(static_cast<std::size_t>(m), 0.0);
      double p = 1.0;
      for (int k = 0; k <= n; ++k) {
        for (int c = 0; c < m; ++c)
          val[static_cast<std::size_t>(c)] +=
              want[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] * p;
        p *= lam;
      }
      samples.push_back({lam, val});
    }
    std::vector<std::vector<double>> got = vandermonde_coefficients(n, samples);
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k)
      for (int c = 0; c < m; ++c) {
        const double a = got[k][static_cast<std::size_t>(c)];
        const double b = want[k][static_cast<std::size_t>(c)];
        if (oversample)
          CHECK(std::abs(a - b) <= 1e-7 * std::max({1.0, std::abs(a), std::abs(b)}));
        else
          CHECK(square_tol.equal(a, b));
      }
  }
}

TEST_CASE("vandermonde input validation") {
  std::vector<LambdaSample> one{{1.0, {1.0}}};
  CHECK_THROWS_AS(vandermonde_coefficients(1, one), std::invalid_argument);
  std::vector<LambdaSample> dup{{1.0, {1.0}}, {1.0, {2.0}}};
  CHECK_THROWS_AS(vandermonde_coefficients(1, dup), std::invalid_argument);
  std::vector<LambdaSample> nonpos{{0.0, {1.0}}, {2.0, {2.0}}};
  CHECK_THROWS_AS(vandermonde_coefficients(1, nonpos), std::invalid_argument);
  std::vector<LambdaSample> ragged{{1.0, {1.0}}, {2.0, {2.0, 3.0}}};
  CHECK_THROWS_AS(vandermonde_coefficients(1, ragged), std::invalid_argument);
  CHECK_THROWS_AS(vandermonde_coefficients(-1, one), std::invalid_argument);
}

TEST_CASE("lambda sampling reconstructs mixed tensor slices") {
  auto eng = testing::seeded_engine(606);
  for (int t = 0; t < 20; ++t) {
    int n = testing::draw_int(eng, 2, 6);
    int d = testing::draw_int(eng, 2, 4);
    testing::TensorPair pair = testing::random_tensor(eng, n, d, 1);
    LatticeElement f = testing::random_element(eng, d, -2.0, 2.0);
    LatticeElement g = testing::random_element(eng, d, -2.0, 2.0);
    std::vector<LambdaSample> samples;
    for (int i = 1; i <= n + 1; ++i) {
      double lam = static_cast<double>(i);
      samples.push_back({lam, pair.map.evaluate_diagonal(f + lam * g)});
    }
    std::vector<std::vector<double>> coeffs = vandermonde_coefficients(n, samples);
    // The samples mix the slices with weights up to (n+1)^n, so a slice much
    // smaller than its siblings cannot be pinned to its own magnitude; the
    // family scale is the honest yardstick.
    double scale = 1.0;
    double err = 0.0;
    for (int k = 0; k <= n; ++k) {
      std::vector<PowerTuple::Entry> entries;
      if (n - k > 0) entries.push_back({f, n - k});
      if (k > 0) entries.push_back({g, k});
      std::vector<double> slice = pair.map.evaluate_power(PowerTuple(entries));
      double want = static_cast<double>(binomial(n, k)) * slice[0];
      double got = coeffs[static_cast<std::size_t>(k)][0];
      scale = std::max({scale, std::abs(want), std::abs(got)});
      err = std::max(err, std::abs(want - got));
    }
    CHECK(err <= 1e-8 * scale);
  }
}

TEST_CASE("odd binomial recombination identity holds exactly") {
  for (int n = 1; n <= 15; n += 2) CHECK(check_odd_binomial_identity(n));
  CHECK_THROWS_AS(check_odd_binomial_identity(4), std::invalid_argument);
  CHECK_THROWS_AS(check_odd_binomial_identity(-3), std::invalid_argument);
}

TEST_CASE("witness payloads name the probe vectors") {
  InstanceSpec spec{2, 2, 1, InstanceKind::perturbed, 0.5, 3};
  ConditionReport rep = equivalence_harness(spec);
  bool saw_f = false;
  for (const auto& part : rep.orth_additivity.witness.parts)
    saw_f = saw_f || part.first == "f";
  CHECK(saw_f);
  CHECK(rep.disjoint_annihilation.witness.k >= 1);
}
