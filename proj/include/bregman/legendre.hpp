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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bregman/vector.hpp"

namespace bregman {

/// One-dimensional Legendre functions. The first three form the public
/// catalog; the last two are their conjugates, which the catalog needs so that
/// f* is again a LegendreFunction.
enum class Kind {
  HalvedEnergy,     ///< t^2 / 2 on R
  NegativeEntropy,  ///< t ln t - t on [0, inf), interior (0, inf)
  NegativeLog,      ///< -ln t on (0, inf)
  Exponential,      ///< e^t on R (conjugate of NegativeEntropy)
  NegativeLogConj,  ///< -1 - ln(-t) on (-inf, 0) (conjugate of NegativeLog)
};

std::string_view kind_name(Kind k);
std::optional<Kind> kind_from_name(std::string_view name);
Kind conjugate_kind(Kind k);

/// Scalar building blocks. `value` and `conj_value` return +inf outside the
/// domain; the derivative helpers assume an interior argument.
namespace scalar {
bool in_interior(Kind k, double t);
bool in_domain(Kind k, double t);
double value(Kind k, double t);
double derivative(Kind k, double t);
double second_derivative(Kind k, double t);
/// D(s, t) in a cancellation-free form; +inf when t is not interior or s is
/// outside the domain.
double distance(Kind k, double s, double t);
}  // namespace scalar

/// A separable Legendre function f(x) = sum_j f_j(x_j).
class LegendreFunction {
 public:
  LegendreFunction(Kind kind, std::size_t dim);
  explicit LegendreFunction(std::vector<Kind> coordinates);

  static LegendreFunction energy(std::size_t dim) { return {Kind::HalvedEnergy, dim}; }
  static LegendreFunction entropy(std::size_t dim) { return {Kind::NegativeEntropy, dim}; }
  static LegendreFunction neglog(std::size_t dim) { return {Kind::NegativeLog, dim}; }

  std::size_t dim() const noexcept { return kinds_.size(); }
  Kind kind(std::size_t j) const { return kinds_.at(j); }
  const std::vector<Kind>& kinds() const noexcept { return kinds_; }
  /// The common kind if every coordinate uses the same one.
  std::optional<Kind> uniform_kind() const;
  /// "entropy" for uniform functions, otherwise a JSON-style list.
  std::string name() const;

  /// f*, coordinate-wise.
  LegendreFunction conjugate() const;

  bool in_interior(const Vector& x) const;
  bool in_domain(const Vector& x) const;
  /// First interior violation, if any.
  std::optional<std::size_t> interior_violation(const Vector& x) const;
  /// Throws DomainError naming the offending coordinate.
  void require_interior(const Vector& x) const;

  /// f(x); +inf outside dom f.
  double value(const Vector& x) const;
  /// f*(y) by the closed form of each coordinate; +inf outside dom f*.
  double conjugate_value(const Vector& y) const;
  Vector gradient(const Vector& x) const;
  Vector conjugate_gradient(const Vector& y) const;
  Vector second_derivative(const Vector& x) const;

  friend bool operator==(const LegendreFunction&, const LegendreFunction&) = default;

 private:
  std::vector<Kind> kinds_;
};

}  // namespace bregman
