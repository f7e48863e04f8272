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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bregman {

/// A point of R^n. The dimension is fixed at construction.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim, double fill = 0.0) : coords_(dim, fill) {}
  Vector(std::initializer_list<double> coords) : coords_(coords) {}
  explicit Vector(std::vector<double> coords) : coords_(std::move(coords)) {}

  std::size_t dim() const noexcept { return coords_.size(); }
  bool empty() const noexcept { return coords_.empty(); }

  double operator[](std::size_t j) const { return coords_[j]; }
  double& operator[](std::size_t j) { return coords_[j]; }

  std::span<const double> span() const noexcept { return coords_; }
  std::span<double> span() noexcept { return coords_; }
  const std::vector<double>& coords() const noexcept { return coords_; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  auto begin() noexcept { return coords_.begin(); }
  auto end() noexcept { return coords_.end(); }

  bool all_finite() const noexcept;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(double s);

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> coords_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(double s, Vector v);

double dot(const Vector& a, const Vector& b);
double norm_inf(const Vector& v);
double norm2(const Vector& v);
double max_abs_diff(const Vector& a, const Vector& b);

/// (1 - t) a + t b
Vector lerp(const Vector& a, const Vector& b, double t);

/// Throws DimensionError unless both vectors have dimension `dim`.
void require_dim(const Vector& v, std::size_t dim);

/// Lexicographic order, used wherever a deterministic tie order is needed.
bool lex_less(const Vector& a, const Vector& b);

std::string to_string(const Vector& v);

}  // namespace bregman
