// Copyright 2026 The bregman-geometry Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bregman/distance.hpp"
#include "bregman/errors.hpp"

namespace bregman {
namespace {

TEST(Distance, WorkedExamples) {
  // energy: half squared Euclidean distance
  EXPECT_DOUBLE_EQ(distance(LegendreFunction::energy(2), Vector{1.0, 2.0}, Vector{4.0, -2.0}), 12.5);
  // entropy: Kullback-Leibler x ln(x/y) - x + y
  EXPECT_NEAR(distance(LegendreFunction::entropy(1), Vector{2.0}, Vector{1.0}), 2.0 * std::log(2.0) - 1.0, 1e-15);
  // neglog: Itakura-Saito x/y - ln(x/y) - 1
  EXPECT_NEAR(distance(LegendreFunction::neglog(1), Vector{1.0}, Vector{2.0}), std::log(2.0) - 0.5, 1e-15);
  EXPECT_NEAR(distance(LegendreFunction::neglog(1), Vector{1.0}, Vector{2.0}), 0.193147180560, 1e-12);
}

TEST(Distance, EntropyAtBoundaryOfFirstArgument) {
  // x = 0 is in dom f, so D(0, y) = y
  EXPECT_DOUBLE_EQ(distance(LegendreFunction::entropy(1), Vector{0.0}, Vector{3.0}), 3.0);
  EXPECT_TRUE(std::isinf(distance(LegendreFunction::entropy(1), Vector{3.0}, Vector{0.0})));
}

TEST(Distance, OutsideDomainIsInfinite) {
  EXPECT_TRUE(std::isinf(distance(LegendreFunction::neglog(1), Vector{-1.0}, Vector{1.0})));
  EXPECT_TRUE(std::isinf(distance(LegendreFunction::neglog(1), Vector{1.0}, Vector{0.0})));
  EXPECT_THROW(distance(LegendreFunction::energy(2), Vector{1.0}, Vector{1.0, 2.0}), DimensionError);
}

TEST(Distance, NearlyEqualArgumentsKeepRelativePrecision) {
  // D(y(1+e), y) = y e^2 / 2 + O(e^3) for entropy, e^2 / 2 for neglog
  const double y = 3.0;
  const double e = 1e-7;
  const double ent = distance(LegendreFunction::entropy(1), Vector{y * (1 + e)}, Vector{y});
  const double is = distance(LegendreFunction::neglog(1), Vector{y * (1 + e)}, Vector{y});
  EXPECT_NEAR(ent / (y * e * e / 2), 1.0, 1e-6);
  EXPECT_NEAR(is / (e * e / 2), 1.0, 1e-6);
}

class DistanceProperties : public ::testing::TestWithParam<Kind> {};

TEST_P(DistanceProperties, NonnegativeZeroOnlyOnDiagonalAndDual) {
  const Kind k = GetParam();
  const LegendreFunction fn(k, 3);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(k == Kind::HalvedEnergy ? -4.0 : 0.1, 4.0);
  for (int i = 0; i < 500; ++i) {
    const Vector x{u(rng), u(rng), u(rng)};
    const Vector y{u(rng), u(rng), u(rng)};
    const Vector z{u(rng), u(rng), u(rng)};
    const double dxy = distance(fn, x, y);
    EXPECT_GT(dxy, 0.0);
    EXPECT_EQ(distance(fn, x, x), 0.0);
    EXPECT_LE(distance_dual_identity_residual(fn, x, y), 1e-12 * (1 + dxy));
    // three-point identity
    const double lhs = distance(fn, x, y) + distance(fn, y, z) - distance(fn, x, z);
    const double rhs = dot(fn.gradient(z) - fn.gradient(y), x - y);
    EXPECT_NEAR(lhs, rhs, 1e-10 * (1 + std::abs(lhs)));
  }
}

TEST_P(DistanceProperties, AgreesWithDefinition) {
  const Kind k = GetParam();
  const LegendreFunction fn(k, 2);
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(k == Kind::HalvedEnergy ? -4.0 : 0.1, 4.0);
  for (int i = 0; i < 500; ++i) {
    const Vector x{u(rng), u(rng)};
    const Vector y{u(rng), u(rng)};
    const double naive = fn.value(x) - fn.value(y) - dot(fn.gradient(y), x - y);
    EXPECT_NEAR(distance(fn, x, y), naive, 1e-12 * (1 + std::abs(fn.value(x)) + std::abs(fn.value(y))));
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, DistanceProperties,
                         ::testing::Values(Kind::HalvedEnergy, Kind::NegativeEntropy, Kind::NegativeLog),
                         [](const auto& info) { return std::string(kind_name(info.param)); });

TEST(Distance, GenerallyAsymmetric) {
  const LegendreFunction fn = LegendreFunction::entropy(1);
  EXPECT_GT(std::abs(distance(fn, Vector{1.0}, Vector{4.0}) - distance(fn, Vector{4.0}, Vector{1.0})), 0.1);
}

}  // namespace
}  // namespace bregman
