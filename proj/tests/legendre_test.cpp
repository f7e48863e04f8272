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

#include "bregman/errors.hpp"
#include "bregman/legendre.hpp"

namespace bregman {
namespace {

constexpr Kind kCatalog[] = {Kind::HalvedEnergy, Kind::NegativeEntropy, Kind::NegativeLog};
constexpr Kind kAll[] = {Kind::HalvedEnergy, Kind::NegativeEntropy, Kind::NegativeLog, Kind::Exponential,
                         Kind::NegativeLogConj};

// A point inside the domain of each kind, parameterized by u in (0, 1).
double interior_point(Kind k, double u) {
  switch (k) {
    case Kind::HalvedEnergy:
    case Kind::Exponential: return -3.0 + 6.0 * u;
    case Kind::NegativeEntropy:
    case Kind::NegativeLog: return 0.2 + 4.0 * u;
    case Kind::NegativeLogConj: return -4.0 + 3.8 * u;
  }
  return 0.0;
}

TEST(KindNames, RoundTrip) {
  for (Kind k : kAll) {
    const auto back = kind_from_name(kind_name(k));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, k);
    EXPECT_EQ(conjugate_kind(conjugate_kind(k)), k);
  }
  EXPECT_FALSE(kind_from_name("quadratic").has_value());
}

TEST(ScalarCatalog, WorkedValues) {
  EXPECT_DOUBLE_EQ(scalar::value(Kind::HalvedEnergy, 3.0), 4.5);
  EXPECT_DOUBLE_EQ(scalar::value(Kind::NegativeEntropy, 1.0), -1.0);
  EXPECT_DOUBLE_EQ(scalar::value(Kind::NegativeEntropy, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(scalar::value(Kind::NegativeLog, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(scalar::value(Kind::Exponential, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(scalar::value(Kind::NegativeLogConj, -1.0), -1.0);
}

TEST(ScalarCatalog, DomainsAndBoundaries) {
  EXPECT_TRUE(scalar::in_domain(Kind::NegativeEntropy, 0.0));
  EXPECT_FALSE(scalar::in_interior(Kind::NegativeEntropy, 0.0));
  EXPECT_FALSE(scalar::in_domain(Kind::NegativeLog, 0.0));
  EXPECT_FALSE(scalar::in_domain(Kind::NegativeLogConj, 0.0));
  EXPECT_TRUE(scalar::in_interior(Kind::HalvedEnergy, -1e300));
  EXPECT_TRUE(std::isinf(scalar::value(Kind::NegativeEntropy, -1.0)));
  EXPECT_TRUE(std::isinf(scalar::value(Kind::NegativeLog, -1.0)));
  EXPECT_TRUE(std::isinf(scalar::value(Kind::NegativeLogConj, 0.5)));
}

// f*(s) = sup_t s t - f(t), maximized on a dense grid around the known
// maximizer; checks the closed-form conjugates independently.
TEST(ScalarCatalog, ConjugateMatchesGridSupremum) {
  for (Kind k : kCatalog) {
    for (double u : {0.1, 0.35, 0.6, 0.9}) {
      const double t0 = interior_point(k, u);
      const double s = scalar::derivative(k, t0);
      double best = -INFINITY;
      for (int i = -20000; i <= 20000; ++i) {
        const double t = t0 * (1.0 + 0.5 * i / 20000.0) + (k == Kind::HalvedEnergy ? 0.5 * i / 20000.0 : 0.0);
        if (!scalar::in_domain(k, t)) continue;
        best = std::max(best, s * t - scalar::value(k, t));
      }
      EXPECT_NEAR(scalar::value(conjugate_kind(k), s), best, 1e-7) << kind_name(k) << " s=" << s;
    }
  }
}

TEST(ScalarCatalog, DerivativesMatchFiniteDifferences) {
  for (Kind k : kAll) {
    for (double u : {0.15, 0.5, 0.85}) {
      const double t = interior_point(k, u);
      const double h = 1e-5;
      const double d1 = (scalar::value(k, t + h) - scalar::value(k, t - h)) / (2 * h);
      const double d2 = (scalar::derivative(k, t + h) - scalar::derivative(k, t - h)) / (2 * h);
      EXPECT_NEAR(scalar::derivative(k, t), d1, 1e-7 * (1 + std::abs(d1))) << kind_name(k) << " t=" << t;
      EXPECT_NEAR(scalar::second_derivative(k, t), d2, 1e-6 * (1 + std::abs(d2))) << kind_name(k) << " t=" << t;
    }
  }
}

TEST(LegendreFunction, GradientBijection) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (Kind k : kAll) {
    const LegendreFunction fn(k, 3);
    for (int i = 0; i < 200; ++i) {
      const Vector x{interior_point(k, u(rng)), interior_point(k, u(rng)), interior_point(k, u(rng))};
      const Vector xs = fn.gradient(x);
      EXPECT_TRUE(fn.conjugate().in_interior(xs));
      EXPECT_LT(max_abs_diff(fn.conjugate_gradient(xs), x), 1e-12 * (1 + norm_inf(x)));
      EXPECT_NEAR(fn.value(x) + fn.conjugate_value(xs), dot(x, xs), 1e-12 * (1 + std::abs(dot(x, xs))));
    }
  }
}

TEST(LegendreFunction, ConjugateIsCoordinatewise) {
  const LegendreFunction fn({Kind::HalvedEnergy, Kind::NegativeEntropy, Kind::NegativeLog});
  const LegendreFunction c = fn.conjugate();
  EXPECT_EQ(c.kind(0), Kind::HalvedEnergy);
  EXPECT_EQ(c.kind(1), Kind::Exponential);
  EXPECT_EQ(c.kind(2), Kind::NegativeLogConj);
  EXPECT_EQ(c.conjugate(), fn);
  EXPECT_FALSE(fn.uniform_kind().has_value());
  EXPECT_EQ(LegendreFunction::entropy(4).uniform_kind(), Kind::NegativeEntropy);
  EXPECT_EQ(LegendreFunction::entropy(4).name(), "entropy");
}

TEST(LegendreFunction, MixedValueIsSumOfCoordinates) {
  const LegendreFunction fn({Kind::HalvedEnergy, Kind::NegativeEntropy, Kind::NegativeLog});
  const Vector x{-2.0, 3.0, 0.5};
  EXPECT_NEAR(fn.value(x), 2.0 + (3.0 * std::log(3.0) - 3.0) + std::log(2.0), 1e-14);
  const Vector g = fn.gradient(x);
  EXPECT_DOUBLE_EQ(g[0], -2.0);
  EXPECT_DOUBLE_EQ(g[1], std::log(3.0));
  EXPECT_DOUBLE_EQ(g[2], -2.0);
}

TEST(LegendreFunction, InteriorViolationNamesCoordinate) {
  const LegendreFunction fn = LegendreFunction::neglog(3);
  const Vector bad{1.0, 2.0, -0.5};
  ASSERT_EQ(fn.interior_violation(bad), std::optional<std::size_t>(2));
  try {
    fn.require_interior(bad);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.coordinate(), 2u);
    EXPECT_DOUBLE_EQ(e.value(), -0.5);
  }
  EXPECT_TRUE(std::isinf(fn.value(bad)));
  EXPECT_THROW(fn.require_interior(Vector{1.0}), DimensionError);
}

TEST(LegendreFunction, EntropyBoundaryIsInDomainButNotInterior) {
  const LegendreFunction fn = LegendreFunction::entropy(2);
  const Vector x{0.0, 1.0};
  EXPECT_TRUE(fn.in_domain(x));
  EXPECT_FALSE(fn.in_interior(x));
  EXPECT_DOUBLE_EQ(fn.value(x), -1.0);
}

}  // namespace
}  // namespace bregman
