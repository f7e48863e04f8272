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

#include "bregman/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "bregman/errors.hpp"

namespace bregman::json_io {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string field(const std::string& path, const std::string& key) { return path + "." + key; }

const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(field(path, key), "missing field");
  return *it;
}

const Json& only_key(const Json& j, const std::string& path, std::string& key) {
  if (!j.is_object() || j.size() != 1) throw ParseError(path, "expected an object with exactly one key");
  key = j.begin().key();
  return j.begin().value();
}

std::vector<Vector> parse_points(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ParseError(path, "expected a nonempty array of points");
  std::vector<Vector> pts;
  for (std::size_t i = 0; i < j.size(); ++i) pts.push_back(parse_vector(j[i], at(path, i)));
  return pts;
}

// Set constructors report bad data as InvalidArgument / DomainError; inside
// parsing those become located ParseErrors.
template <class F>
auto located(const std::string& path, F&& make) {
  try {
    return make();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
}

prox::Piece parse_piece(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  const double lo = j.contains("lo") && !j["lo"].is_null() ? parse_number(j["lo"], field(path, "lo")) : -kInf;
  const double hi = j.contains("hi") && !j["hi"].is_null() ? parse_number(j["hi"], field(path, "hi")) : kInf;
  const std::string form = j.value("form", std::string("quadratic"));
  prox::Piece p{};
  if (form == "quadratic") {
    auto coeff = [&](const char* k) { return j.contains(k) ? parse_number(j[k], field(path, k)) : 0.0; };
    p = prox::Piece::quadratic(lo, hi, coeff("c2"), coeff("c1"), coeff("c0"));
  } else if (form == "constant") {
    p = prox::Piece::constant(lo, hi, parse_number(member(j, "level", path), field(path, "level")));
  } else if (form == "indicator") {
    p = prox::Piece::indicator(lo, hi);
  } else {
    throw ParseError(field(path, "form"), "unknown piece form '" + form + "'");
  }
  for (const char* k : {"lo_closed", "hi_closed"}) {
    if (!j.contains(k)) continue;
    if (!j[k].is_boolean()) throw ParseError(field(path, k), "expected a boolean");
  }
  if (j.contains("lo_closed")) p.lo_closed = j["lo_closed"].get<bool>();
  if (j.contains("hi_closed")) p.hi_closed = j["hi_closed"].get<bool>();
  return p;
}

std::pair<double, double> parse_pair(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw ParseError(path, "expected [a, b]");
  return {parse_number(j[0], at(path, 0)), parse_number(j[1], at(path, 1))};
}

}  // namespace

Json parse_text(std::string_view text, const std::string& path) {
  Json j = Json::parse(text, nullptr, false);
  if (!j.is_discarded()) return j;
  const std::string s(text);
  const bool bare_word = !s.empty() && s.find_first_of("{}[]\",:") == std::string::npos;
  if (bare_word) return Json(s);
  throw ParseError(path, "invalid JSON");
}

double parse_number(const Json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  throw ParseError(path, "expected a number");
}

Vector parse_vector(const Json& j, const std::string& path) {
  if (j.is_number()) return Vector{j.get<double>()};
  if (!j.is_array() || j.empty()) throw ParseError(path, "expected a number or a nonempty array of numbers");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[i] = parse_number(j[i], at(path, i));
    if (!std::isfinite(v[i])) throw ParseError(at(path, i), "expected a finite number");
  }
  return v;
}

LegendreFunction parse_function(const Json& j, std::size_t dim, const std::string& path) {
  auto kind = [&](const Json& name, const std::string& p) {
    if (!name.is_string()) throw ParseError(p, "expected a function name");
    const auto k = kind_from_name(name.get_ref<const std::string&>());
    if (!k) throw ParseError(p, "unknown function '" + name.get<std::string>() + "'");
    return *k;
  };
  if (j.is_string()) {
    if (dim == 0) dim = 1;
    return LegendreFunction(kind(j, path), dim);
  }
  if (!j.is_array() || j.empty()) throw ParseError(path, "expected a name or a list of names");
  std::vector<Kind> kinds;
  for (std::size_t i = 0; i < j.size(); ++i) kinds.push_back(kind(j[i], at(path, i)));
  if (dim != 0 && kinds.size() != dim) {
    throw ParseError(path, "function has " + std::to_string(kinds.size()) + " coordinates, problem has " +
                               std::to_string(dim));
  }
  return LegendreFunction(std::move(kinds));
}

std::size_t set_dim(const Json& j) {
  if (!j.is_object() || j.size() != 1) return 0;
  const std::string key = j.begin().key();
  const Json& v = j.begin().value();
  auto vec_dim = [](const Json& x) -> std::size_t {
    if (x.is_number()) return 1;
    return x.is_array() ? x.size() : 0;
  };
  if (key == "finite" && v.is_array() && !v.empty()) return vec_dim(v[0]);
  if (key == "interval") return 1;
  if (key == "box" && v.is_object() && v.contains("lo")) return vec_dim(v["lo"]);
  if (key == "segment" && v.is_object() && v.contains("c0")) return vec_dim(v["c0"]);
  return 0;
}

CompactSet parse_set(const Json& j, const LegendreFunction& fn, const std::string& path) {
  std::string key;
  const Json& v = only_key(j, path, key);
  const std::string p = field(path, key);
  if (key == "finite") {
    auto pts = parse_points(v, p);
    return located(p, [&] { return CompactSet::finite(fn, std::move(pts)); });
  }
  if (key == "interval") {
    const auto [a, b] = parse_pair(v, p);
    return located(p, [&] { return CompactSet::interval(fn, a, b); });
  }
  if (key == "box") {
    Vector lo = parse_vector(member(v, "lo", p), field(p, "lo"));
    Vector hi = parse_vector(member(v, "hi", p), field(p, "hi"));
    return located(p, [&] { return CompactSet::box(fn, std::move(lo), std::move(hi)); });
  }
  if (key == "segment") {
    Vector c0 = parse_vector(member(v, "c0", p), field(p, "c0"));
    Vector c1 = parse_vector(member(v, "c1", p), field(p, "c1"));
    return located(p, [&] { return CompactSet::segment(fn, std::move(c0), std::move(c1)); });
  }
  throw ParseError(path, "unknown set kind '" + key + "'");
}

prox::PiecewiseFunction parse_piecewise(const Json& j, const std::string& path) {
  if (j.is_string()) {
    const auto& name = j.get_ref<const std::string&>();
    if (name == "q") return prox::PiecewiseFunction::halved_square();
    if (name == "indicator01") return prox::PiecewiseFunction::indicator(0.0, 1.0);
    if (name == "step01") return prox::PiecewiseFunction::step(0.0, 1.0);
    throw ParseError(path, "unknown preset '" + name + "'");
  }
  std::string key;
  const Json& v = only_key(j, path, key);
  const std::string p = field(path, key);
  if (key == "indicator") {
    const auto [a, b] = parse_pair(v, p);
    return located(p, [&] { return prox::PiecewiseFunction::indicator(a, b); });
  }
  if (key == "step") {
    if (v.is_array()) {
      const auto [a, b] = parse_pair(v, p);
      return located(p, [&] { return prox::PiecewiseFunction::step(a, b); });
    }
    const double a = parse_number(member(v, "a", p), field(p, "a"));
    const double b = parse_number(member(v, "b", p), field(p, "b"));
    const double level = v.contains("level") ? parse_number(v["level"], field(p, "level")) : 1.0;
    return located(p, [&] { return prox::PiecewiseFunction::step(a, b, level); });
  }
  if (key == "pieces") {
    if (!v.is_array() || v.empty()) throw ParseError(p, "expected a nonempty array of pieces");
    std::vector<prox::Piece> pieces;
    for (std::size_t i = 0; i < v.size(); ++i) pieces.push_back(parse_piece(v[i], at(p, i)));
    return located(p, [&] { return prox::PiecewiseFunction(std::move(pieces)); });
  }
  throw ParseError(path, "unknown function description '" + key + "'");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

Json number(double v) {
  if (!std::isfinite(v)) return format_double(v);
  return std::stod(format_double(v));
}

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

Json to_json(const MapResult& r) {
  Json j;
  j["value"] = number(r.value);
  j["attainers"] = Json::array();
  for (const Vector& a : r.attainers) j["attainers"].push_back(to_json(a));
  j["ties"] = r.tied();
  j["tie_tol"] = number(r.tie_tol);
  return j;
}

Json to_json(const CenterResult& r) {
  Json j;
  j["center"] = to_json(r.center);
  j["radius"] = number(r.radius);
  Json cert;
  cert["points"] = Json::array();
  for (const Vector& p : r.certificate.points) cert["points"].push_back(to_json(p));
  cert["weights"] = Json::array();
  for (double w : r.certificate.weights) cert["weights"].push_back(number(w));
  cert["residual"] = number(r.certificate.residual);
  j["certificate"] = std::move(cert);
  Json trace;
  trace["method"] = r.trace.method;
  trace["iterations"] = r.trace.iterations;
  trace["final_step"] = number(r.trace.final_step);
  trace["converged"] = r.trace.converged;
  j["trace"] = std::move(trace);
  return j;
}

Json to_json(const prox::Thresholds& t) {
  Json j;
  j["lambda_g"] = number(t.lambda_g);
  j["mu_g"] = number(t.mu_g);
  return j;
}

Json to_json(const prox::ChebyshevPoint& c) {
  Json j;
  j["point"] = number(c.point);
  j["farthest"] = to_json(c.farthest);
  j["weights"] = Json::array();
  for (double w : c.weights) j["weights"].push_back(number(w));
  j["residual"] = number(c.residual);
  j["iterations"] = c.iterations;
  return j;
}

Json to_json(const probe::ProbeReport& r) {
  Json j;
  j["probe"] = r.probe;
  Json grid;
  grid["lo"] = to_json(r.grid.lo);
  grid["hi"] = to_json(r.grid.hi);
  grid["resolution"] = r.grid.resolution;
  j["grid"] = std::move(grid);
  j["tie_tol"] = number(r.tie_tol);
  j["total"] = r.total;
  j["maps"] = Json::array();
  for (const auto& t : r.tallies) {
    Json m;
    m["map"] = std::string(map_kind_name(t.map));
    m["single_valued"] = t.single_valued;
    m["tied"] = t.tied;
    m["tie_fraction"] = number(t.tie_fraction());
    j["maps"].push_back(std::move(m));
  }
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) {
    Json wj;
    wj["map"] = std::string(map_kind_name(w.map));
    wj["point"] = to_json(w.point);
    wj["attainers"] = Json::array();
    for (const Vector& a : w.attainers) wj["attainers"].push_back(to_json(a));
    wj["gap"] = number(w.gap);
    j["witnesses"].push_back(std::move(wj));
  }
  j["evaluations"] = r.evaluations;
  Json metrics = Json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = number(v);
  j["metrics"] = std::move(metrics);
  return j;
}

std::string probe_csv(const probe::ProbeReport& r) {
  std::ostringstream os;
  os << "# bregman probe csv " << kCsvVersion << "\n";
  os << "map";
  for (std::size_t j = 0; j < r.grid.dim(); ++j) os << ",x" << j;
  os << ",value,tie\n";
  for (const auto& row : r.rows) {
    os << map_kind_name(row.map);
    for (double x : row.point) os << ',' << format_double(x);
    os << ',' << format_double(row.value) << ',' << (row.tie ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace bregman::json_io
