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

#include <cmath>
#include <limits>

#include "bregman/acceptance.hpp"
#include "bregman/errors.hpp"

namespace bregman::acceptance::oracle {

double f(Kind k, double t) {
  switch (k) {
    case Kind::HalvedEnergy: return 0.5 * t * t;
    case Kind::NegativeEntropy: return t == 0.0 ? 0.0 : t * std::log(t) - t;
    case Kind::NegativeLog: return -std::log(t);
    default: throw InvalidArgument("oracle covers the catalog members only");
  }
}

double df(Kind k, double t) {
  switch (k) {
    case Kind::HalvedEnergy: return t;
    case Kind::NegativeEntropy: return std::log(t);
    case Kind::NegativeLog: return -1.0 / t;
    default: throw InvalidArgument("oracle covers the catalog members only");
  }
}

double fconj(Kind k, double s) {
  switch (k) {
    case Kind::HalvedEnergy: return 0.5 * s * s;
    case Kind::NegativeEntropy: return std::exp(s);
    case Kind::NegativeLog: return -1.0 - std::log(-s);
    default: throw InvalidArgument("oracle covers the catalog members only");
  }
}

double naive_distance(Kind k, const Vector& x, const Vector& y) {
  double d = 0.0;
  for (std::size_t j = 0; j < x.dim(); ++j) d += f(k, x[j]) - f(k, y[j]) - df(k, y[j]) * (x[j] - y[j]);
  return d;
}

double interval_right_center(Kind k, double a, double b) {
  switch (k) {
    case Kind::HalvedEnergy: return 0.5 * (a + b);
    case Kind::NegativeEntropy: return (b - a) / (std::log(b) - std::log(a));
    case Kind::NegativeLog: return a * b * (std::log(b) - std::log(a)) / (b - a);
    default: throw InvalidArgument("oracle covers the catalog members only");
  }
}

double interval_left_center(Kind k, double a, double b) {
  switch (k) {
    case Kind::HalvedEnergy: return 0.5 * (a + b);
    case Kind::NegativeEntropy:
      return std::exp((b * std::log(b) - b - a * std::log(a) + a) / (b - a));
    case Kind::NegativeLog: return (b - a) / (std::log(b) - std::log(a));
    default: throw InvalidArgument("oracle covers the catalog members only");
  }
}

double grid_conjugate(const std::function<double(double)>& h, double lo, double hi,
                      std::size_t points, double z) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < points; ++k) {
    const double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1);
    best = std::max(best, z * x - h(x));
  }
  return best;
}

double grid_min(const std::function<double(double)>& obj, double lo, double hi, std::size_t points) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < points; ++k) {
    best = std::min(best, obj(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1)));
  }
  return best;
}

double grid_max(const std::function<double(double)>& obj, double lo, double hi, std::size_t points) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < points; ++k) {
    best = std::max(best, obj(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1)));
  }
  return best;
}

}  // namespace bregman::acceptance::oracle
