// Copyright 2026 The decom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "decom/decoherence.hpp"
#include "decom/noise.hpp"
#include "support.hpp"

using namespace decom;
using decom::testing::Rng;

namespace {

// Brute force over random pure states with the independent affine map.
double random_search_oracle(const KrausChannel& ch, Rng& rng, int samples) {
  const auto o = decom::testing::affine_oracle(ch);
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    Eigen::Vector3d v(rng.normal(), rng.normal(), rng.normal());
    v.normalize();
    best = std::max(best, 0.5 * ((o.t - Eigen::Matrix3d::Identity()) * v + o.c).norm());
  }
  return best;
}

}  // namespace

TEST(FibonacciSphere, unit_points) {
  const auto pts = fibonacci_sphere(500);
  ASSERT_EQ(pts.size(), 500u);
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  for (const auto& p : pts) {
    EXPECT_NEAR(p.norm(), 1.0, 1e-14);
    mean += Eigen::Vector3d(p.x, p.y, p.z);
  }
  EXPECT_LT((mean / 500.0).norm(), 1e-2);
  EXPECT_THROW(fibonacci_sphere(0), RangeError);
}

TEST(MeasureDiagonal, examples) {
  EXPECT_NEAR(measure_diagonal(ChiMatrix::diagonal(0.75, 0.25, 0, 0)), 0.25, 1e-15);
  EXPECT_NEAR(measure_diagonal(ChiMatrix::diagonal(0.7, 0.1, 0.1, 0.1)), 0.2, 1e-15);
  EXPECT_NEAR(measure_diagonal(ChiMatrix::diagonal(0.4, 0.3, 0.2, 0.1)), 0.5, 1e-15);
  EXPECT_EQ(measure_diagonal(ChiMatrix::identity()), 0.0);
  EXPECT_THROW(measure_diagonal(kraus_to_chi(amplitude_damping(0.5))), InvariantError);
}

TEST(MeasureDiagonal, pauli_channels_against_oracle) {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    double w[4];
    double total = 0.0;
    for (double& x : w) total += (x = rng.uniform());
    std::vector<Matrix> ops;
    for (int a = 0; a < 4; ++a) ops.push_back(std::sqrt(w[a] / total) * PauliBasis::element(a));
    const KrausChannel ch(ops);
    EXPECT_NEAR(measure_diagonal(kraus_to_chi(ch)), decom::testing::unital_measure_oracle(ch), 1e-12);
  }
}

TEST(BlochAffine, matches_independent_map) {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const KrausChannel ch = rng.channel(rng.integer(1, 4));
    const auto o = decom::testing::affine_oracle(ch);
    const BlochAffine map = bloch_affine(kraus_to_chi(ch));
    EXPECT_LT((map.a - (o.t - Eigen::Matrix3d::Identity())).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((map.t - o.c).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(GeneralObjective, equals_distance_at_state) {
  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const KrausChannel ch = rng.channel(3);
    const Matrix v = rng.bloch();
    const Eigen::Vector3d u = Eigen::Vector3d(v(0).real(), v(1).real(), v(2).real()).normalized();
    const BlochPoint p{u.x(), u.y(), u.z()};
    const Matrix rho = p.density().matrix();
    const double direct = decom::testing::norm_2x2(apply_channel(ch, rho) - rho);
    EXPECT_NEAR(general_objective(kraus_to_chi(ch), p), direct, 1e-12);
  }
}

TEST(QuadraticForm, rejects_linear_terms) {
  EXPECT_THROW(build_quadratic_form(kraus_to_chi(amplitude_damping(0.3))), InvariantError);
  EXPECT_THROW(measure_quadratic(kraus_to_chi(amplitude_damping(0.3))), InvariantError);
  EXPECT_NO_THROW(quadratic_part(kraus_to_chi(amplitude_damping(0.3))));
}

TEST(QuadraticForm, squares_objective_for_unital_maps) {
  Rng rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const ChiMatrix chi = kraus_to_chi(rng.unital_channel(3));
    ASSERT_LT(chi.linear_magnitude(), 1e-12);
    const QuadraticForm3 form = build_quadratic_form(chi);
    EXPECT_LT((form.m - form.m.transpose()).cwiseAbs().maxCoeff(), 1e-15);
    for (const auto& p : fibonacci_sphere(40)) {
      const double g = general_objective(chi, p);
      EXPECT_NEAR(form.evaluate(p), g * g, 1e-12);
    }
  }
}

TEST(MeasureQuadratic, unital_channels_against_svd_oracle) {
  Rng rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    const KrausChannel ch = rng.unital_channel(rng.integer(1, 4));
    EXPECT_NEAR(measure_quadratic(kraus_to_chi(ch)), decom::testing::unital_measure_oracle(ch), 1e-10);
  }
}

TEST(MeasureQuadratic, diagonal_agreement) {
  for (double p : {0.0, 0.1, 0.5, 1.0}) {
    const ChiMatrix chi = kraus_to_chi(bit_flip(p));
    EXPECT_NEAR(measure_quadratic(chi), measure_diagonal(chi), 1e-12);
  }
  const ChiMatrix dep = kraus_to_chi(depolarizing(0.3));
  EXPECT_NEAR(measure_quadratic(dep), 0.3, 1e-12);
}

TEST(QuadraticMaximizers, tie_returns_every_axis) {
  const QuadraticForm3 form = build_quadratic_form(kraus_to_chi(bit_flip(0.2)));
  const auto axes = quadratic_maximizers(form);
  ASSERT_EQ(axes.size(), 2u);
  for (const auto& a : axes) {
    EXPECT_NEAR(std::abs(a.x), 0.0, 1e-12);
    EXPECT_NEAR(form.evaluate(a), 0.04, 1e-12);
  }
  EXPECT_EQ(quadratic_maximizers(build_quadratic_form(kraus_to_chi(depolarizing(0.2)))).size(), 3u);
}

TEST(MeasureGeneral, amplitude_damping_closed_form) {
  for (double gt : {0.01, 0.3, 1.0, 4.0}) {
    const GeneralMeasure m = maximize_general(kraus_to_chi(amplitude_damping(gt)));
    EXPECT_NEAR(m.value, 1 - std::exp(-gt), 1e-9) << gt;
    EXPECT_NEAR(std::abs(m.argmax.z), 1.0, 1e-4);
  }
}

TEST(MeasureGeneral, random_channels_bracket_brute_force) {
  Rng rng(46);
  for (int trial = 0; trial < 40; ++trial) {
    const KrausChannel ch = rng.channel(rng.integer(1, 4));
    const double general = measure_general(kraus_to_chi(ch));
    const double brute = random_search_oracle(ch, rng, 20000);
    EXPECT_GE(general, brute - 1e-12);
    EXPECT_LT(general - brute, 5e-3);
  }
}

TEST(MeasureGeneral, unital_matches_svd_oracle) {
  Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const KrausChannel ch = rng.unital_channel(3);
    EXPECT_NEAR(measure_general(kraus_to_chi(ch)), decom::testing::unital_measure_oracle(ch), 1e-9);
  }
}

TEST(MeasureGeneral, argument_checks) {
  EXPECT_THROW(measure_general(ChiMatrix::identity(), 4), RangeError);
  EXPECT_THROW(measure_general(ChiMatrix::identity(), 100, -1), RangeError);
  EXPECT_EQ(measure_general(ChiMatrix::identity()), 0.0);
}

TEST(MeasureByDefinition, bounds) {
  EXPECT_THROW(measure_by_definition(KrausChannel::identity(4)), DimensionError);
  EXPECT_THROW(measure_by_definition(bit_flip(0.1), 0), RangeError);
  Rng rng(48);
  for (int trial = 0; trial < 10; ++trial) {
    const KrausChannel ch = rng.channel(2);
    EXPECT_LE(measure_by_definition(ch, 2000), measure_general(kraus_to_chi(ch)) + 1e-12);
  }
}
