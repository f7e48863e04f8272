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

// JSON ingestion and emission for problem data and results. Parse failures
// raise ParseError with a field path such as "set.box.lo[1]".
//
// Output conventions: finite doubles are rounded to 12 significant digits;
// infinities and NaN are written as the strings "inf", "-inf", "nan"; object
// keys keep a fixed order so identical results serialize byte-identically.

#include <string>
#include <string_view>

#include "json.hpp"

#include "bregman/centers.hpp"
#include "bregman/legendre.hpp"
#include "bregman/map_result.hpp"
#include "bregman/probes.hpp"
#include "bregman/proxlab.hpp"
#include "bregman/sets.hpp"
#include "bregman/vector.hpp"

namespace bregman::json_io {

using Json = nlohmann::ordered_json;

/// Parses `text` as JSON; bare words that are not JSON become strings, so
/// `--fn entropy` and `--fn '"entropy"'` are equivalent.
Json parse_text(std::string_view text, const std::string& path);

/// Reads a number, or one of the strings "inf", "-inf".
double parse_number(const Json& j, const std::string& path);
/// A number is read as a one-dimensional vector.
Vector parse_vector(const Json& j, const std::string& path);

/// "energy" | "entropy" | "neglog" (dimension from `dim`), or a list of names.
LegendreFunction parse_function(const Json& j, std::size_t dim, const std::string& path);

/// Dimension implied by a set description (0 when it cannot be determined).
std::size_t set_dim(const Json& j);
CompactSet parse_set(const Json& j, const LegendreFunction& fn, const std::string& path);

/// Presets "q", "indicator01", "step01"; {"indicator":[a,b]};
/// {"step":[a,b]} or {"step":{"a","b","level"}}; {"pieces":[...]}.
prox::PiecewiseFunction parse_piecewise(const Json& j, const std::string& path);

Json number(double v);
Json to_json(const Vector& v);
Json to_json(const MapResult& r);
Json to_json(const CenterResult& r);
Json to_json(const prox::Thresholds& t);
Json to_json(const prox::ChebyshevPoint& c);
Json to_json(const probe::ProbeReport& r);

/// Version tag of the probe CSV layout.
inline constexpr std::string_view kCsvVersion = "v1";
/// Header `map,x0,...,x{n-1},value,tie` and one line per grid row.
std::string probe_csv(const probe::ProbeReport& r);

/// Compact single-line JSON followed by a newline.
std::string dump(const Json& j);
/// Formats a double with 12 significant digits ("inf"/"-inf"/"nan" otherwise).
std::string format_double(double v);

}  // namespace bregman::json_io
