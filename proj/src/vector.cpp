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

#include "bregman/vector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bregman/errors.hpp"

namespace bregman {

DimensionError::DimensionError(std::size_t expected, std::size_t actual)
    : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
            std::to_string(actual)),
      expected_(expected),
      actual_(actual) {}

DomainError::DomainError(std::size_t coordinate, double value, const std::string& what)
    : Error(what + " (coordinate " + std::to_string(coordinate) + " = " + std::to_string(value) +
            ")"),
      coordinate_(coordinate),
      value_(value) {}

ParseError::ParseError(std::string path, const std::string& reason)
    : Error(path.empty() ? reason : path + ": " + reason), path_(std::move(path)) {}

bool Vector::all_finite() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](double v) { return std::isfinite(v); });
}

Vector& Vector::operator+=(const Vector& other) {
  require_dim(other, dim());
  for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] += other.coords_[j];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_dim(other, dim());
  for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] -= other.coords_[j];
  return *this;
}

Vector& Vector::operator*=(double s) {
  for (double& v : coords_) v *= s;
  return *this;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator*(double s, Vector v) { return v *= s; }

double dot(const Vector& a, const Vector& b) {
  require_dim(b, a.dim());
  double s = 0.0;
  for (std::size_t j = 0; j < a.dim(); ++j) s += a[j] * b[j];
  return s;
}

double norm_inf(const Vector& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double norm2(const Vector& v) { return std::sqrt(dot(v, v)); }

double max_abs_diff(const Vector& a, const Vector& b) {
  require_dim(b, a.dim());
  double m = 0.0;
  for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

Vector lerp(const Vector& a, const Vector& b, double t) {
  require_dim(b, a.dim());
  Vector out(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) out[j] = (1.0 - t) * a[j] + t * b[j];
  return out;
}

void require_dim(const Vector& v, std::size_t dim) {
  if (v.dim() != dim) throw DimensionError(dim, v.dim());
}

bool lex_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  char buf[32];
  for (std::size_t j = 0; j < v.dim(); ++j) {
    std::snprintf(buf, sizeof buf, "%.12g", v[j]);
    if (j) s += ", ";
    s += buf;
  }
  return s + ")";
}

}  // namespace bregman
