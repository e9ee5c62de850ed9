// Copyright 2026 The ppfix Authors
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

#include "ppfix/cli/scenario.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "ppfix/cli/report_json.hpp"
#include "ppfix/error.hpp"
#include "ppfix/fspace/io.hpp"
#include "ppfix/fspace/razumikhin.hpp"
#include "ppfix/gallery/operator_spec.hpp"
#include "ppfix/ppf/solvers.hpp"

namespace ppfix::cli {

using nlohmann::json;

namespace {

struct ModeName {
  Mode mode;
  const char* name;
};

constexpr ModeName kModeNames[] = {
    {Mode::banach, "banach"},
    {Mode::svv, "svv"},
    {Mode::ppf_constant, "ppf-constant"},
    {Mode::ppf_existential, "ppf-existential"},
    {Mode::aks, "aks"},
    {Mode::check_razumikhin, "check-razumikhin"},
    {Mode::aclosed_witness, "aclosed-witness"},
    {Mode::blr_bounds, "blr-bounds"},
};

// Number of random pairs used to estimate a modulus that was not declared.
constexpr std::size_t kModulusSamples = 100;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

bool is_check(Mode mode) {
  return mode == Mode::check_razumikhin || mode == Mode::aclosed_witness;
}

std::optional<double> parse_number(const std::string& text) {
  if (text.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<Point> parse_coords(const std::string& text) {
  std::vector<double> coords;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto v = parse_number(part);
    if (!v) return std::nullopt;
    coords.push_back(*v);
  }
  if (coords.empty() || (!text.empty() && text.back() == ',')) return std::nullopt;
  return Point(std::move(coords));
}

std::string require(const std::optional<std::string>& value, const char* flag) {
  if (!value) throw InvalidInput(std::string("missing required ") + flag);
  return *value;
}

void apply_k_override(gallery::OperatorSpec& spec, std::optional<double> k,
                      Norm norm) {
  if (!k) return;
  if (!(*k >= 0.0 && *k < 1.0)) throw InvalidInput("--k must lie in [0, 1)");
  const double modulus = gallery::lipschitz_constant(spec, norm);
  if (*k + 1e-12 < modulus) {
    throw ContractionViolation("declared k = " + fmt(*k) +
                               " is below the operator modulus " + fmt(modulus));
  }
  spec.k = *k;
}

int exit_for(Status status, bool certificates_pass) {
  switch (status) {
    case Status::converged: return certificates_pass ? kExitOk : kExitViolated;
    case Status::max_iter: return kExitMaxIter;
    case Status::diverging: return kExitViolated;
  }
  return kExitViolated;
}

gallery::OperatorSpec load_selfmap_spec(const ScenarioConfig& cfg) {
  gallery::OperatorSpec spec = gallery::load_operator(require(cfg.op_path, "--op"), cfg.norm);
  if (!spec.is_selfmap()) {
    throw InvalidInput("mode " + to_string(cfg.mode) +
                       " needs a selfmap_affine operator; nonself operators "
                       "run under ppf-constant, ppf-existential or aks");
  }
  apply_k_override(spec, cfg.k, cfg.norm);
  return spec;
}

Point start_point(const ScenarioConfig& cfg, const std::optional<std::string>& raw,
                  const char* flag, std::optional<std::size_t> dim) {
  const auto p = parse_coords(require(raw, flag));
  if (!p) throw InvalidInput(std::string(flag) + " must be comma-separated coordinates");
  if (dim && p->dim() != *dim) {
    throw InvalidInput(std::string(flag) + " has dimension " + std::to_string(p->dim()) +
                       ", operator has dimension " + std::to_string(*dim));
  }
  (void)cfg;
  return *p;
}

AlphaMap resolve_alpha(const ScenarioConfig& cfg, const gallery::OperatorSpec& spec) {
  if (cfg.alpha_path) return gallery::load_alpha(*cfg.alpha_path);
  if (spec.alpha) return *spec.alpha;
  throw InvalidInput("mode " + to_string(cfg.mode) +
                     " needs an alpha map (--alpha or an 'alpha' field in the operator)");
}

struct NonselfSetup {
  gallery::OperatorSpec spec;
  fspace::Interval interval;
  fspace::EvalAnchor anchor;
};

NonselfSetup load_nonself(const ScenarioConfig& cfg) {
  gallery::OperatorSpec spec = gallery::load_operator(require(cfg.op_path, "--op"), cfg.norm);
  if (spec.is_selfmap()) {
    throw InvalidInput("mode " + to_string(cfg.mode) +
                       " needs a nonself_* operator; selfmap_affine runs under "
                       "banach or svv");
  }
  apply_k_override(spec, cfg.k, cfg.norm);
  if (!spec.k) {
    throw ContractionViolation(
        "(b03) k-contractive condition: operator modulus " +
        fmt(gallery::lipschitz_constant(spec, cfg.norm)) + " is not < 1");
  }
  fspace::Interval interval = fspace::parse_interval(require(cfg.interval, "--interval"));
  if (!cfg.c) throw InvalidInput("missing required --c");
  fspace::EvalAnchor anchor = fspace::make_anchor(interval, *cfg.c);
  return {std::move(spec), interval, anchor};
}

// Dimension for operators whose parameters do not fix it.
std::optional<std::size_t> dim_hint(const gallery::OperatorSpec& spec,
                                    const std::optional<std::string>& start) {
  if (spec.dim()) return spec.dim();
  if (start) {
    if (auto p = parse_coords(*start)) return p->dim();
    return fspace::load_grid_function(*start).dim();
  }
  return std::nullopt;
}

IterationControl control_of(const ScenarioConfig& cfg) {
  return IterationControl{cfg.effective_tol(), cfg.max_iter, cfg.norm};
}

void run_banach(const ScenarioConfig& cfg, RunResult& result) {
  const gallery::OperatorSpec spec = load_selfmap_spec(cfg);
  const Point x0 = start_point(cfg, cfg.start, "--start", spec.dim());
  const Selfmap map = gallery::make_selfmap(spec);
  if (!spec.k) {
    const ModulusEstimate est = contraction_modulus_estimate(
        map, sample_pairs(x0.dim(), kModulusSamples, cfg.seed), cfg.norm);
    result.report["modulus_estimate"] = est.k_hat;
    if (!(est.k_hat < 1.0)) {
      throw ContractionViolation("(a01) contraction condition: estimated modulus " +
                                 fmt(est.k_hat) + " is not < 1");
    }
  }
  const FixedPointReport rep = banach_solve(map, x0, spec.k, control_of(cfg));
  json j = to_json(rep, to_string(cfg.mode));
  if (result.report.contains("modulus_estimate")) {
    j["modulus_estimate"] = result.report["modulus_estimate"];
  }
  result.report = std::move(j);
  result.csv = trace_csv(rep);
  result.exit_code = exit_for(rep.status, all_pass(rep.certificates));
}

void run_svv(const ScenarioConfig& cfg, RunResult& result) {
  const gallery::OperatorSpec spec = load_selfmap_spec(cfg);
  if (!spec.k) {
    throw InvalidInput("(c02) svv mode needs a declared contraction modulus (--k or 'k')");
  }
  const AlphaMap alpha = resolve_alpha(cfg, spec);
  const Point x0 = start_point(cfg, cfg.start, "--start", spec.dim());
  const FixedPointReport rep =
      svv_solve(gallery::make_selfmap(spec), alpha, x0, *spec.k, control_of(cfg));
  result.report = to_json(rep, to_string(cfg.mode));
  result.csv = trace_csv(rep);
  result.exit_code = exit_for(rep.status, all_pass(rep.certificates));
}

void finish_ppf(const ScenarioConfig& cfg, const ppf::PPFReport& rep, RunResult& result) {
  result.report = to_json(rep, to_string(cfg.mode));
  result.csv = trace_csv(rep.inner);
  CertificateList all = rep.inner.certificates;
  all.insert(all.end(), rep.certificates.begin(), rep.certificates.end());
  result.exit_code = exit_for(rep.status, all_pass(all));
}

void run_ppf_constant(const ScenarioConfig& cfg, RunResult& result) {
  NonselfSetup s = load_nonself(cfg);
  const std::string raw = require(cfg.start, "--start");
  const auto op = gallery::make_nonself(s.spec, s.interval, s.anchor, dim_hint(s.spec, cfg.start));
  Point u0 = [&] {
    if (auto p = parse_coords(raw)) return *p;
    const fspace::GridFunction phi0 = fspace::load_grid_function(raw);
    if (!fspace::is_constant(phi0, 0.0, cfg.norm)) {
      throw InvalidInput("start function is not constant; ppf-constant iterates in the "
                         "constant class (use aks for a non-constant start)");
    }
    return phi0[0];
  }();
  finish_ppf(cfg, ppf::constant_blr_solve(op, u0, s.anchor, control_of(cfg)), result);
}

void run_ppf_existential(const ScenarioConfig& cfg, RunResult& result) {
  NonselfSetup s = load_nonself(cfg);
  const auto op = gallery::make_nonself(s.spec, s.interval, s.anchor, dim_hint(s.spec, cfg.start));
  finish_ppf(cfg,
             ppf::existential_blr_solve(op, s.anchor, control_of(cfg), cfg.assert_aclosed),
             result);
}

void run_aks(const ScenarioConfig& cfg, RunResult& result) {
  NonselfSetup s = load_nonself(cfg);
  const AlphaMap alpha = resolve_alpha(cfg, s.spec);
  const std::string raw = require(cfg.start, "--start");
  const auto op = gallery::make_nonself(s.spec, s.interval, s.anchor, dim_hint(s.spec, cfg.start));
  ppf::AksStart start = [&]() -> ppf::AksStart {
    if (auto p = parse_coords(raw)) return *p;
    return fspace::load_grid_function(raw);
  }();
  finish_ppf(cfg, ppf::aks_solve(op, alpha, start, s.anchor, control_of(cfg)), result);
}

void run_blr(const ScenarioConfig& cfg, RunResult& result) {
  NonselfSetup s = load_nonself(cfg);
  const auto op = gallery::make_nonself(s.spec, s.interval, s.anchor, dim_hint(s.spec, cfg.start));
  const Point u0 = start_point(cfg, cfg.start, "--start", op.dim);
  const Point v0 = start_point(cfg, cfg.start2, "--start2", op.dim);
  const ppf::BLRPairReport rep = ppf::blr_pair_bounds(op, u0, v0, s.anchor, cfg.steps, cfg.norm);
  result.report = to_json(rep, to_string(cfg.mode));
  result.csv = blr_csv(rep);
  result.exit_code = rep.all_pass() ? kExitOk : kExitViolated;
}

void run_razumikhin(const ScenarioConfig& cfg, RunResult& result) {
  const fspace::GridFunction phi = fspace::load_grid_function(require(cfg.fn_path, "--fn"));
  if (!cfg.c) throw InvalidInput("missing required --c");
  const fspace::EvalAnchor anchor = fspace::make_anchor(phi.interval(), *cfg.c);
  const double tol = cfg.effective_tol();
  const auto verdict = fspace::razumikhin_member(phi, anchor, cfg.norm, tol);
  json& r = result.report;
  r["status"] = verdict.is_member ? "member" : "not_member";
  r["residual"] = verdict.gap;
  r["verdict"] = to_json(verdict);
  r["anchor"] = json{{"c", anchor.c}, {"node_index", anchor.node_index}};
  r["tol"] = tol;
  r["certificates"] = to_json(CertificateList{
      Certificate{"razumikhin_gap", 0, verdict.gap, tol, verdict.is_member}});
  result.exit_code = verdict.is_member ? kExitOk : kExitViolated;
}

void run_aclosed_witness(const ScenarioConfig& cfg, RunResult& result) {
  const fspace::GridFunction phi = fspace::load_grid_function(require(cfg.fn_path, "--fn"));
  if (!cfg.c) throw InvalidInput("missing required --c");
  const fspace::EvalAnchor anchor = fspace::make_anchor(phi.interval(), *cfg.c);
  const double tol = cfg.effective_tol();
  const auto outcome = fspace::aclosed_witness(phi, anchor, cfg.norm, tol);
  json& r = result.report;
  r["anchor"] = json{{"c", anchor.c}, {"node_index", anchor.node_index}};
  r["tol"] = tol;
  if (const auto* w = std::get_if<fspace::CollapseWitness>(&outcome)) {
    r["status"] = "witness";
    r["residual"] = w->verdict.gap;
    r["delta_verdict"] = to_json(w->verdict);
    r["delta"] = fspace::to_json(w->delta);
    r["certificates"] = to_json(CertificateList{
        Certificate{"delta_not_member", 0, tol, w->verdict.gap, !w->verdict.is_member}});
    r["notes"] = json::array({"phi and H[phi(c)] are both members but their "
                              "difference is not: the Razumikhin class is not "
                              "closed under differences on this sample"});
    result.exit_code = w->verdict.is_member ? kExitViolated : kExitOk;
  } else {
    r["status"] = "constant";
    r["notes"] = json::array({"function is constant within tol; no witness exists"});
    result.exit_code = kExitOk;
  }
}

void fail(RunResult& result, int code, const std::string& status, const Error& e) {
  result.exit_code = code;
  result.message = e.what();
  result.report["status"] = status;
  result.report["error"] = e.what();
  json certs = result.report.value("certificates", json::array());
  for (const Certificate& c : e.certificates()) certs.push_back(to_json(c));
  result.report["certificates"] = std::move(certs);
}

}  // namespace

std::string to_string(Mode mode) {
  for (const auto& m : kModeNames) {
    if (m.mode == mode) return m.name;
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  for (const auto& m : kModeNames) {
    if (name == m.name) return m.mode;
  }
  throw InvalidInput("unknown mode '" + std::string(name) + "'");
}

double default_solver_tol() {
  const char* env = std::getenv("PPF_DEFAULT_TOL");
  if (!env || !*env) return kDefaultSolverTol;
  const auto v = parse_number(env);
  if (!v || !(*v > 0.0)) {
    throw InvalidInput(std::string("PPF_DEFAULT_TOL must be a positive number, got '") +
                       env + "'");
  }
  return *v;
}

double ScenarioConfig::effective_tol() const {
  if (tol) return *tol;
  return is_check(mode) ? kDefaultCheckTol : default_solver_tol();
}

void validate(const ScenarioConfig& cfg) {
  auto need = [](bool present, const char* flag) {
    if (!present) throw InvalidInput(std::string("missing required ") + flag);
  };
  if (cfg.tol && !(*cfg.tol > 0.0 && std::isfinite(*cfg.tol))) {
    throw InvalidInput("--tol must be a positive finite number");
  }
  switch (cfg.mode) {
    case Mode::banach:
    case Mode::svv:
      need(cfg.op_path.has_value(), "--op");
      need(cfg.start.has_value(), "--start");
      break;
    case Mode::ppf_constant:
    case Mode::aks:
      need(cfg.op_path.has_value(), "--op");
      need(cfg.interval.has_value(), "--interval");
      need(cfg.c.has_value(), "--c");
      need(cfg.start.has_value(), "--start");
      break;
    case Mode::ppf_existential:
      need(cfg.op_path.has_value(), "--op");
      need(cfg.interval.has_value(), "--interval");
      need(cfg.c.has_value(), "--c");
      break;
    case Mode::blr_bounds:
      need(cfg.op_path.has_value(), "--op");
      need(cfg.interval.has_value(), "--interval");
      need(cfg.c.has_value(), "--c");
      need(cfg.start.has_value(), "--start");
      need(cfg.start2.has_value(), "--start2");
      break;
    case Mode::check_razumikhin:
    case Mode::aclosed_witness:
      need(cfg.fn_path.has_value(), "--fn");
      need(cfg.c.has_value(), "--c");
      break;
  }
}

ScenarioConfig scenario_from_json(const json& doc, const std::string& base_dir) {
  if (!doc.is_object()) throw ParseError("", "scenario must be a JSON object");
  static const std::set<std::string> kKeys = {
      "mode", "op",    "alpha", "interval", "c",    "start", "start2",
      "fn",   "k",     "tol",   "max_iter", "steps", "norm", "out",
      "csv",  "seed",  "assert_aclosed"};
  for (const auto& [key, value] : doc.items()) {
    if (!kKeys.count(key)) throw ParseError("/" + key, "unknown field");
  }

  auto resolve = [&base_dir](const std::string& p) {
    if (base_dir.empty() || std::filesystem::path(p).is_absolute()) return p;
    return (std::filesystem::path(base_dir) / p).string();
  };
  auto string_at = [&](const char* key) -> std::optional<std::string> {
    if (!doc.contains(key)) return std::nullopt;
    if (!doc.at(key).is_string()) throw ParseError(std::string("/") + key, "expected a string");
    return doc.at(key).get<std::string>();
  };
  auto number_at = [&](const char* key) -> std::optional<double> {
    if (!doc.contains(key)) return std::nullopt;
    if (!doc.at(key).is_number()) throw ParseError(std::string("/") + key, "expected a number");
    return doc.at(key).get<double>();
  };
  auto count_at = [&](const char* key) -> std::optional<std::size_t> {
    if (!doc.contains(key)) return std::nullopt;
    const json& v = doc.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw ParseError(std::string("/") + key, "expected a nonnegative integer");
    }
    return v.get<std::size_t>();
  };
  // A start is an array of coordinates, a coordinate string, or a file path.
  auto start_at = [&](const char* key) -> std::optional<std::string> {
    if (!doc.contains(key)) return std::nullopt;
    const json& v = doc.at(key);
    if (v.is_number()) return fmt(v.get<double>());
    if (v.is_array()) {
      std::string joined;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number()) {
          throw ParseError(std::string("/") + key + "/" + std::to_string(i), "expected a number");
        }
        if (i) joined += ",";
        joined += fmt(v[i].get<double>());
      }
      return joined;
    }
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      return parse_coords(s) ? s : resolve(s);
    }
    throw ParseError(std::string("/") + key, "expected coordinates or a file path");
  };

  ScenarioConfig cfg;
  const auto mode = string_at("mode");
  if (!mode) throw ParseError("/mode", "missing field");
  try {
    cfg.mode = parse_mode(*mode);
  } catch (const InvalidInput& e) {
    throw ParseError("/mode", e.what());
  }
  if (auto v = string_at("op")) cfg.op_path = resolve(*v);
  if (auto v = string_at("alpha")) cfg.alpha_path = resolve(*v);
  if (doc.contains("interval")) {
    const json& iv = doc.at("interval");
    if (iv.is_string()) {
      cfg.interval = iv.get<std::string>();
    } else {
      const fspace::Interval parsed = fspace::interval_from_json(iv);
      cfg.interval = fmt(parsed.a()) + "," + fmt(parsed.b()) + "," +
                     std::to_string(parsed.node_count());
    }
  }
  cfg.c = number_at("c");
  cfg.start = start_at("start");
  cfg.start2 = start_at("start2");
  if (auto v = string_at("fn")) cfg.fn_path = resolve(*v);
  cfg.k = number_at("k");
  cfg.tol = number_at("tol");
  if (auto v = count_at("max_iter")) cfg.max_iter = *v;
  if (auto v = count_at("steps")) cfg.steps = *v;
  if (auto v = string_at("norm")) {
    try {
      cfg.norm = parse_norm(*v);
    } catch (const InvalidInput& e) {
      throw ParseError("/norm", e.what());
    }
  }
  if (auto v = string_at("out")) cfg.out_path = resolve(*v);
  if (auto v = string_at("csv")) cfg.csv_path = resolve(*v);
  if (auto v = count_at("seed")) cfg.seed = *v;
  if (doc.contains("assert_aclosed")) {
    if (!doc.at("assert_aclosed").is_boolean()) {
      throw ParseError("/assert_aclosed", "expected a boolean");
    }
    cfg.assert_aclosed = doc.at("assert_aclosed").get<bool>();
  }
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed scenario JSON: ") + e.what());
  }
  return scenario_from_json(doc, std::filesystem::path(path).parent_path().string());
}

RunResult execute(const ScenarioConfig& cfg) {
  RunResult result;
  result.report = empty_report(to_string(cfg.mode));
  try {
    validate(cfg);
    switch (cfg.mode) {
      case Mode::banach: run_banach(cfg, result); break;
      case Mode::svv: run_svv(cfg, result); break;
      case Mode::ppf_constant: run_ppf_constant(cfg, result); break;
      case Mode::ppf_existential: run_ppf_existential(cfg, result); break;
      case Mode::aks: run_aks(cfg, result); break;
      case Mode::blr_bounds: run_blr(cfg, result); break;
      case Mode::check_razumikhin: run_razumikhin(cfg, result); break;
      case Mode::aclosed_witness: run_aclosed_witness(cfg, result); break;
    }
  } catch (const AdmissibilityViolation& e) {
    fail(result, kExitViolated, "admissibility_violated", e);
  } catch (const ContractionViolation& e) {
    fail(result, kExitViolated, "contraction_violated", e);
  } catch (const NumericError& e) {
    fail(result, kExitViolated, "numeric_error", e);
  } catch (const PreconditionError& e) {
    fail(result, kExitInvalidInput, "precondition_failed", e);
  } catch (const IoError& e) {
    fail(result, kExitIo, "io_error", e);
  } catch (const Error& e) {
    fail(result, kExitInvalidInput, "invalid_input", e);
  } catch (const std::exception& e) {
    fail(result, kExitInvalidInput, "invalid_input", Error(e.what()));
  }
  return result;
}

}  // namespace ppfix::cli
