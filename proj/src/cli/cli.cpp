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

#include "bregman/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "bregman/acceptance.hpp"
#include "bregman/centers.hpp"
#include "bregman/distance.hpp"
#include "bregman/errors.hpp"
#include "bregman/json_io.hpp"
#include "bregman/maps.hpp"
#include "bregman/probes.hpp"
#include "bregman/proxlab.hpp"

namespace bregman::cli {
namespace {

using json_io::Json;

// Raw flag values; empty strings mean "not given".
struct Flags {
  std::string fn;
  std::string set;
  std::string g;
  std::string x;
  std::string y;
  std::string point;
  std::string side = "left";
  std::string op;
  std::string kind;
  std::string grid;
  std::string format = "json";
  double tie_tol = kDefaultTieTol;
  double tol = 1e-6;
  double mu = 0.0;
  double lambda = 0.0;
  std::size_t jobs = 0;
  std::size_t segment_samples = kDefaultSegmentSamples;
  std::size_t resolution = 10000;
  std::size_t max_witnesses = 8;
  std::uint64_t seed = acceptance::AcceptanceOptions{}.seed;
};

[[noreturn]] void fail_parse(const std::string& path, const std::string& reason) { throw ParseError(path, reason); }

// Fills options the user did not pass on the command line from the JSON file
// named by BREGMAN_CONFIG: top-level keys first, then the subcommand's own
// object (e.g. {"tie_tol": 1e-6, "probe": {"jobs": 2}}).
void apply_config(CLI::App* sub) {
  const char* path = std::getenv("BREGMAN_CONFIG");
  if (path == nullptr || *path == '\0') return;
  std::ifstream in(path);
  if (!in) fail_parse("BREGMAN_CONFIG", std::string("cannot read ") + path);
  const Json cfg = Json::parse(in, nullptr, false);
  if (cfg.is_discarded() || !cfg.is_object()) fail_parse("BREGMAN_CONFIG", "expected a JSON object");

  std::vector<const CLI::Option*> from_flags;
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() > 0) from_flags.push_back(opt);
  }
  auto apply = [&](const Json& obj, const std::string& prefix) {
    for (const auto& [key, value] : obj.items()) {
      if (value.is_object()) continue;
      const std::string flag = "--" + [&] {
        std::string k = key;
        std::replace(k.begin(), k.end(), '_', '-');
        return k;
      }();
      CLI::Option* opt = nullptr;
      try {
        opt = sub->get_option(flag);
      } catch (const CLI::OptionNotFound&) {
        continue;  // keys for other subcommands
      }
      if (std::find(from_flags.begin(), from_flags.end(), opt) != from_flags.end()) continue;
      const std::string p = prefix + key;
      std::string text;
      if (value.is_string()) {
        text = value.get<std::string>();
      } else if (value.is_number_integer() || value.is_number_unsigned()) {
        text = std::to_string(value.get<long long>());
      } else if (value.is_number()) {
        std::ostringstream os;
        os.precision(17);
        os << value.get<double>();
        text = os.str();
      } else {
        text = value.dump();
      }
      try {
        opt->clear();
        opt->add_result(text);
        opt->run_callback();
      } catch (const CLI::Error& e) {
        fail_parse(p, e.what());
      }
    }
  };
  apply(cfg, "BREGMAN_CONFIG.");
  const auto it = cfg.find(sub->get_name());
  if (it != cfg.end() && it->is_object()) apply(*it, "BREGMAN_CONFIG." + sub->get_name() + ".");
}

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

Json parse_flag(const std::string& text, const std::string& path) {
  if (text.empty()) fail_parse(path, "required");
  return json_io::parse_text(text, path);
}

struct Problem {
  LegendreFunction fn;
  CompactSet set;
};

Problem parse_problem(const Flags& f) {
  const Json sj = parse_flag(f.set, "set");
  const LegendreFunction fn = json_io::parse_function(parse_flag(f.fn, "fn"), json_io::set_dim(sj), "fn");
  return {fn, json_io::parse_set(sj, fn, "set")};
}

Vector parse_point(const std::string& text, std::size_t dim, const std::string& path) {
  Vector v = json_io::parse_vector(parse_flag(text, path), path);
  if (v.dim() != dim) {
    fail_parse(path, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(v.dim()));
  }
  return v;
}

void require_side(const std::string& side) {
  if (side != "left" && side != "right") fail_parse("side", "expected left or right");
}

int cmd_distance(const Flags& f, std::ostream& out) {
  const Json xj = parse_flag(f.x, "x");
  const Vector x = json_io::parse_vector(xj, "x");
  const LegendreFunction fn = json_io::parse_function(parse_flag(f.fn, "fn"), x.dim(), "fn");
  const Vector y = parse_point(f.y, fn.dim(), "y");
  if (x.dim() != fn.dim()) fail_parse("x", "expected " + std::to_string(fn.dim()) + " coordinates");
  Json j;
  j["fn"] = fn.name();
  j["x"] = json_io::to_json(x);
  j["y"] = json_io::to_json(y);
  j["value"] = json_io::number(distance(fn, x, y));
  out << json_io::dump(j);
  return 0;
}

int cmd_map(const Flags& f, bool farthest, std::ostream& out) {
  require_side(f.side);
  const Problem p = parse_problem(f);
  const Vector z = parse_point(f.point, p.fn.dim(), "point");
  const bool left = f.side == "left";
  const MapKind kind = farthest ? (left ? MapKind::LeftFarthest : MapKind::RightFarthest)
                                : (left ? MapKind::LeftNearest : MapKind::RightNearest);
  MapOptions mo;
  mo.tie_tol = f.tie_tol;
  mo.segment_samples = f.segment_samples;
  Json j;
  j["map"] = std::string(map_kind_name(kind));
  merge(j, json_io::to_json(compute_map(kind, p.fn, p.set, z, mo)));
  out << json_io::dump(j);
  return 0;
}

int cmd_center(const Flags& f, std::ostream& out, std::ostream& err) {
  require_side(f.side);
  const Problem p = parse_problem(f);
  CenterOptions co;
  co.tol = f.tol;
  co.map.segment_samples = f.segment_samples;
  const CenterResult r = f.side == "left" ? left_center(p.fn, p.set, co) : right_center(p.fn, p.set, co);
  Json j;
  j["side"] = f.side;
  merge(j, json_io::to_json(r));
  out << json_io::dump(j);
  if (!r.trace.converged) {
    Json e;
    e["error"] = {{"kind", "nonconvergence"},
                  {"message", "certificate residual " + json_io::format_double(r.certificate.residual) +
                                  " above tolerance " + json_io::format_double(f.tol)}};
    err << json_io::dump(e);
    return kExitNonconvergence;
  }
  return 0;
}

int cmd_proxpoint(const Flags& f, std::ostream& out) {
  const prox::PiecewiseFunction g = json_io::parse_piecewise(parse_flag(f.g, "g"), "g");
  static const std::vector<std::string> ops = {"env", "prox", "phi", "Q", "cheb", "thresholds"};
  if (std::find(ops.begin(), ops.end(), f.op) == ops.end()) {
    fail_parse("op", "expected one of env, prox, phi, Q, cheb, thresholds");
  }
  const bool uses_lambda = f.op == "env" || f.op == "prox";
  const bool uses_x = f.op != "cheb" && f.op != "thresholds";
  if (uses_lambda && !(f.lambda > 0.0)) fail_parse("lambda", "required and positive for --op " + f.op);
  if (!uses_lambda && f.op != "thresholds" && !(f.mu > 0.0)) {
    fail_parse("mu", "required and positive for --op " + f.op);
  }
  double x = 0.0;
  if (uses_x) x = parse_point(f.x, 1, "x")[0];

  Json j;
  j["op"] = f.op;
  if (uses_lambda) j["lambda"] = json_io::number(f.lambda);
  if (!uses_lambda && f.op != "thresholds") j["mu"] = json_io::number(f.mu);
  if (uses_x) j["x"] = json_io::number(x);
  if (f.op == "env") {
    j["value"] = json_io::number(prox::moreau_envelope(g, f.lambda, x));
  } else if (f.op == "prox") {
    merge(j, json_io::to_json(prox::prox(g, f.lambda, x, f.tie_tol)));
  } else if (f.op == "phi") {
    j["value"] = json_io::number(prox::farthest_envelope(g, f.mu, x));
  } else if (f.op == "Q") {
    merge(j, json_io::to_json(prox::farthest_map(g, f.mu, x, f.tie_tol)));
  } else if (f.op == "cheb") {
    merge(j, json_io::to_json(prox::chebyshev_point(g, f.mu)));
  } else {
    merge(j, json_io::to_json(prox::thresholds(g)));
  }
  out << json_io::dump(j);
  return 0;
}

probe::Grid parse_grid(const std::string& text, std::size_t dim) {
  const Json j = parse_flag(text, "grid");
  if (!j.is_object()) fail_parse("grid", "expected {\"lo\":..., \"hi\":..., \"resolution\":n}");
  probe::Grid g;
  if (!j.contains("lo")) fail_parse("grid.lo", "missing field");
  if (!j.contains("hi")) fail_parse("grid.hi", "missing field");
  g.lo = json_io::parse_vector(j["lo"], "grid.lo");
  g.hi = json_io::parse_vector(j["hi"], "grid.hi");
  if (g.lo.dim() != dim) fail_parse("grid.lo", "expected " + std::to_string(dim) + " coordinates");
  if (g.hi.dim() != dim) fail_parse("grid.hi", "expected " + std::to_string(dim) + " coordinates");
  if (j.contains("resolution")) {
    if (!j["resolution"].is_number_unsigned() || j["resolution"].get<std::size_t>() == 0) {
      fail_parse("grid.resolution", "expected a positive integer");
    }
    g.resolution = j["resolution"].get<std::size_t>();
  }
  return g;
}

int cmd_probe(const Flags& f, std::ostream& out) {
  if (f.format != "json" && f.format != "csv") fail_parse("format", "expected json or csv");
  probe::ProbeOptions po;
  po.tie_tol = f.tie_tol;
  po.jobs = f.jobs;
  po.keep_rows = f.format == "csv";
  po.max_witnesses = f.max_witnesses;
  po.map.segment_samples = f.segment_samples;
  probe::ProbeReport r;
  if (f.kind == "curious") {
    const probe::Grid grid = f.grid.empty() ? probe::Grid{Vector{0.5, 0.5}, Vector{8.0, 8.0}, 100}
                                            : parse_grid(f.grid, 2);
    r = probe::curious_set_probe(f.resolution, grid, 1.0, po);
  } else if (f.kind == "chebyshev" || f.kind == "klee" || f.kind == "scan") {
    const Problem p = parse_problem(f);
    const probe::Grid grid = parse_grid(f.grid, p.fn.dim());
    if (f.kind == "chebyshev") {
      r = probe::chebyshev_probe(p.fn, p.set, grid, po);
    } else if (f.kind == "klee") {
      r = probe::klee_probe(p.fn, p.set, grid, po);
    } else {
      r = probe::single_valuedness_scan(p.fn, p.set, grid, po);
    }
  } else {
    fail_parse("kind", "expected chebyshev, klee, curious or scan");
  }
  if (f.format == "csv") {
    out << json_io::probe_csv(r);
  } else {
    out << json_io::dump(json_io::to_json(r));
  }
  return 0;
}

int cmd_selftest(const Flags& f, std::ostream& out) {
  if (f.format != "json" && f.format != "table") fail_parse("format", "expected json or table");
  acceptance::AcceptanceOptions ao;
  ao.seed = f.seed;
  ao.jobs = f.jobs;
  const auto results = acceptance::run_all(ao);
  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  if (f.format == "table") {
    for (const auto& r : results) out << acceptance::format_line(r) << "\n";
    out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  } else {
    Json j;
    j["pass"] = all;
    j["criteria"] = Json::array();
    for (const auto& r : results) {
      // timings are left out so that the document is reproducible
      j["criteria"].push_back({{"id", r.id},
                               {"name", r.name},
                               {"pass", r.pass},
                               {"worst", json_io::number(r.worst)},
                               {"limit", json_io::number(r.limit)}});
    }
    out << json_io::dump(j);
  }
  return all ? 0 : 1;
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message,
                const std::string& path = {}) {
  Json e;
  e["error"]["kind"] = kind;
  if (!path.empty()) e["error"]["path"] = path;
  e["error"]["message"] = message;
  err << json_io::dump(e);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bregman distance geometry toolkit", "bregman"};
  app.require_subcommand(1);
  Flags f;

  auto add_fn = [&](CLI::App* s) { s->add_option("--fn", f.fn, "energy | entropy | neglog, or a JSON list"); };
  auto add_set = [&](CLI::App* s) { s->add_option("--set", f.set, "JSON set description"); };
  auto add_tie = [&](CLI::App* s) { s->add_option("--tie-tol", f.tie_tol, "absolute tie tolerance on values"); };
  auto add_samples = [&](CLI::App* s) {
    s->add_option("--segment-samples", f.segment_samples, "samples of segment dual images")->check(CLI::Range(2, 1000000));
  };

  CLI::App* distance_cmd = app.add_subcommand("distance", "Bregman distance D(x, y)");
  add_fn(distance_cmd);
  distance_cmd->add_option("--x", f.x, "point (number or JSON array)");
  distance_cmd->add_option("--y", f.y, "point (number or JSON array)");

  CLI::App* project_cmd = app.add_subcommand("project", "nearest-point map");
  CLI::App* farthest_cmd = app.add_subcommand("farthest", "farthest-point map");
  for (CLI::App* s : {project_cmd, farthest_cmd}) {
    add_fn(s);
    add_set(s);
    add_tie(s);
    add_samples(s);
    s->add_option("--side", f.side, "left: argmin/argmax of D(., y); right: of D(x, .)");
    s->add_option("--point", f.point, "query point");
  }

  CLI::App* center_cmd = app.add_subcommand("center", "Chebyshev center with certificate");
  add_fn(center_cmd);
  add_set(center_cmd);
  add_samples(center_cmd);
  center_cmd->add_option("--side", f.side, "left or right");
  center_cmd->add_option("--tol", f.tol, "certificate residual tolerance");

  CLI::App* prox_cmd = app.add_subcommand("proxpoint", "envelopes, proximal and farthest maps in 1-D");
  prox_cmd->add_option("--g", f.g, "preset (q, indicator01, step01) or JSON piecewise function");
  prox_cmd->add_option("--mu", f.mu, "farthest parameter");
  prox_cmd->add_option("--lambda", f.lambda, "proximal parameter");
  prox_cmd->add_option("--op", f.op, "env | prox | phi | Q | cheb | thresholds")->required();
  prox_cmd->add_option("--x", f.x, "query point");
  add_tie(prox_cmd);

  CLI::App* probe_cmd = app.add_subcommand("probe", "tie searches and single-valuedness scans");
  probe_cmd->add_option("--kind", f.kind, "chebyshev | klee | curious | scan")->required();
  add_fn(probe_cmd);
  add_set(probe_cmd);
  add_tie(probe_cmd);
  add_samples(probe_cmd);
  probe_cmd->add_option("--grid", f.grid, "JSON {\"lo\":[...], \"hi\":[...], \"resolution\":n}");
  probe_cmd->add_option("--format", f.format, "json | csv");
  probe_cmd->add_option("--jobs", f.jobs, "worker threads (0: all cores)");
  probe_cmd->add_option("--resolution", f.resolution, "curve samples for the curious probe")->check(CLI::PositiveNumber);
  probe_cmd->add_option("--max-witnesses", f.max_witnesses, "witnesses to report");

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "closed-form acceptance suite");
  selftest_cmd->add_option("--format", f.format, "json | table");
  selftest_cmd->add_option("--seed", f.seed, "random seed");
  selftest_cmd->add_option("--jobs", f.jobs, "worker threads for the probe checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "parse", e.what());
    return kExitParse;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    apply_config(sub);
    if (sub == distance_cmd) return cmd_distance(f, out);
    if (sub == project_cmd) return cmd_map(f, false, out);
    if (sub == farthest_cmd) return cmd_map(f, true, out);
    if (sub == center_cmd) return cmd_center(f, out, err);
    if (sub == prox_cmd) return cmd_proxpoint(f, out);
    if (sub == probe_cmd) return cmd_probe(f, out);
    return cmd_selftest(f, out);
  } catch (const ParseError& e) {
    emit_error(err, "parse", e.what(), e.path());
    return kExitParse;
  } catch (const ConvergenceError& e) {
    emit_error(err, "nonconvergence", e.what());
    return kExitNonconvergence;
  } catch (const Error& e) {
    emit_error(err, "domain", e.what());
    return kExitDomain;
  }
}

}  // namespace bregman::cli
