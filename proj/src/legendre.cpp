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

#include "bregman/legendre.hpp"

#include <cmath>
#include <limits>

#include "bregman/errors.hpp"

namespace bregman {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// u - log1p(u) for u > -1, i.e. r - 1 - ln r with r = 1 + u.
double itakura_saito_core(double u) { return u - std::log1p(u); }

}  // namespace

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::HalvedEnergy: return "energy";
    case Kind::NegativeEntropy: return "entropy";
    case Kind::NegativeLog: return "neglog";
    case Kind::Exponential: return "exp";
    case Kind::NegativeLogConj: return "neglog_conj";
  }
  return "unknown";
}

std::optional<Kind> kind_from_name(std::string_view name) {
  for (Kind k : {Kind::HalvedEnergy, Kind::NegativeEntropy, Kind::NegativeLog, Kind::Exponential,
                 Kind::NegativeLogConj}) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

Kind conjugate_kind(Kind k) {
  switch (k) {
    case Kind::HalvedEnergy: return Kind::HalvedEnergy;
    case Kind::NegativeEntropy: return Kind::Exponential;
    case Kind::Exponential: return Kind::NegativeEntropy;
    case Kind::NegativeLog: return Kind::NegativeLogConj;
    case Kind::NegativeLogConj: return Kind::NegativeLog;
  }
  return k;
}

namespace scalar {

bool in_interior(Kind k, double t) {
  if (!std::isfinite(t)) return false;
  switch (k) {
    case Kind::HalvedEnergy:
    case Kind::Exponential: return true;
    case Kind::NegativeEntropy:
    case Kind::NegativeLog: return t > 0.0;
    case Kind::NegativeLogConj: return t < 0.0;
  }
  return false;
}

bool in_domain(Kind k, double t) {
  if (k == Kind::NegativeEntropy) return std::isfinite(t) && t >= 0.0;
  return in_interior(k, t);
}

double value(Kind k, double t) {
  if (!in_domain(k, t)) return kInf;
  switch (k) {
    case Kind::HalvedEnergy: return 0.5 * t * t;
    case Kind::NegativeEntropy: return t == 0.0 ? 0.0 : t * std::log(t) - t;
    case Kind::NegativeLog: return -std::log(t);
    case Kind::Exponential: return std::exp(t);
    case Kind::NegativeLogConj: return -1.0 - std::log(-t);
  }
  return kInf;
}

double derivative(Kind k, double t) {
  switch (k) {
    case Kind::HalvedEnergy: return t;
    case Kind::NegativeEntropy: return std::log(t);
    case Kind::NegativeLog: return -1.0 / t;
    case Kind::Exponential: return std::exp(t);
    case Kind::NegativeLogConj: return -1.0 / t;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double second_derivative(Kind k, double t) {
  switch (k) {
    case Kind::HalvedEnergy: return 1.0;
    case Kind::NegativeEntropy: return 1.0 / t;
    case Kind::NegativeLog:
    case Kind::NegativeLogConj: return 1.0 / (t * t);
    case Kind::Exponential: return std::exp(t);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double distance(Kind k, double s, double t) {
  if (!in_interior(k, t) || !in_domain(k, s)) return kInf;
  switch (k) {
    case Kind::HalvedEnergy: {
      const double d = s - t;
      return 0.5 * d * d;
    }
    case Kind::NegativeEntropy: {
      if (s == 0.0) return t;
      // s ln(s/t) - s + t = t ((1+u) ln(1+u) - u), u = s/t - 1
      const double u = s / t - 1.0;
      return t * ((1.0 + u) * std::log1p(u) - u);
    }
    case Kind::NegativeLog:
    case Kind::NegativeLogConj:
      // ln(t/s) + s/t - 1; for the conjugate both arguments are negative and
      // the same expression holds with r = s/t > 0.
      return itakura_saito_core(s / t - 1.0);
    case Kind::Exponential: {
      const double d = s - t;
      return std::exp(t) * (std::expm1(d) - d);
    }
  }
  return kInf;
}

}  // namespace scalar

LegendreFunction::LegendreFunction(Kind kind, std::size_t dim) : kinds_(dim, kind) {
  if (dim == 0) throw InvalidArgument("Legendre function needs a positive dimension");
}

LegendreFunction::LegendreFunction(std::vector<Kind> coordinates) : kinds_(std::move(coordinates)) {
  if (kinds_.empty()) throw InvalidArgument("Legendre function needs a positive dimension");
}

std::optional<Kind> LegendreFunction::uniform_kind() const {
  for (Kind k : kinds_) {
    if (k != kinds_.front()) return std::nullopt;
  }
  return kinds_.front();
}

std::string LegendreFunction::name() const {
  if (auto k = uniform_kind()) return std::string(kind_name(*k));
  std::string s = "[";
  for (std::size_t j = 0; j < kinds_.size(); ++j) {
    if (j) s += ",";
    s += "\"" + std::string(kind_name(kinds_[j])) + "\"";
  }
  return s + "]";
}

LegendreFunction LegendreFunction::conjugate() const {
  std::vector<Kind> out;
  out.reserve(kinds_.size());
  for (Kind k : kinds_) out.push_back(conjugate_kind(k));
  return LegendreFunction(std::move(out));
}

bool LegendreFunction::in_interior(const Vector& x) const {
  return x.dim() == dim() && !interior_violation(x);
}

bool LegendreFunction::in_domain(const Vector& x) const {
  if (x.dim() != dim()) return false;
  for (std::size_t j = 0; j < dim(); ++j) {
    if (!scalar::in_domain(kinds_[j], x[j])) return false;
  }
  return true;
}

std::optional<std::size_t> LegendreFunction::interior_violation(const Vector& x) const {
  for (std::size_t j = 0; j < dim(); ++j) {
    if (!scalar::in_interior(kinds_[j], x[j])) return j;
  }
  return std::nullopt;
}

void LegendreFunction::require_interior(const Vector& x) const {
  require_dim(x, dim());
  if (auto j = interior_violation(x)) {
    throw DomainError(*j, x[*j], "point outside int dom " + name());
  }
}

double LegendreFunction::value(const Vector& x) const {
  require_dim(x, dim());
  double s = 0.0;
  for (std::size_t j = 0; j < dim(); ++j) {
    const double v = scalar::value(kinds_[j], x[j]);
    if (v == kInf) return kInf;
    s += v;
  }
  return s;
}

double LegendreFunction::conjugate_value(const Vector& y) const {
  require_dim(y, dim());
  double s = 0.0;
  for (std::size_t j = 0; j < dim(); ++j) {
    const double v = scalar::value(conjugate_kind(kinds_[j]), y[j]);
    if (v == kInf) return kInf;
    s += v;
  }
  return s;
}

Vector LegendreFunction::gradient(const Vector& x) const {
  require_interior(x);
  Vector g(dim());
  for (std::size_t j = 0; j < dim(); ++j) g[j] = scalar::derivative(kinds_[j], x[j]);
  return g;
}

Vector LegendreFunction::conjugate_gradient(const Vector& y) const {
  require_dim(y, dim());
  Vector g(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const Kind k = conjugate_kind(kinds_[j]);
    if (!scalar::in_interior(k, y[j])) {
      throw DomainError(j, y[j], "point outside int dom of the conjugate of " + name());
    }
    g[j] = scalar::derivative(k, y[j]);
  }
  return g;
}

Vector LegendreFunction::second_derivative(const Vector& x) const {
  require_interior(x);
  Vector h(dim());
  for (std::size_t j = 0; j < dim(); ++j) h[j] = scalar::second_derivative(kinds_[j], x[j]);
  return h;
}

}  // namespace bregman
