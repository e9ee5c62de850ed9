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

#include "ppfix/cli/report_json.hpp"

#include <cmath>
#include <sstream>

#include "ppfix/fspace/io.hpp"

namespace ppfix::cli {

using nlohmann::json;

namespace {

std::string cell(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

json point_json(const std::optional<Point>& p) {
  return p ? json(p->vec()) : json(nullptr);
}

const Certificate* find_certificate(const CertificateList& certs,
                                    const std::string& name, std::size_t n) {
  for (const Certificate& c : certs) {
    if (c.name == name && c.n == n) return &c;
  }
  return nullptr;
}

}  // namespace

json to_json(const Certificate& c) {
  return json{{"name", c.name}, {"n", c.n}, {"lhs", c.lhs}, {"rhs", c.rhs},
              {"pass", c.pass}};
}

json to_json(const CertificateList& certificates) {
  json out = json::array();
  for (const Certificate& c : certificates) out.push_back(to_json(c));
  return out;
}

json to_json(const fspace::RazumikhinVerdict& v) {
  return json{{"is_member", v.is_member},
              {"sup_norm", v.sup_norm},
              {"anchor_norm", v.anchor_norm},
              {"gap", v.gap}};
}

json empty_report(const std::string& mode) {
  return json{{"mode", mode},
              {"status", "error"},
              {"iterations", 0},
              {"solution", nullptr},
              {"residual", nullptr},
              {"certificates", json::array()},
              {"notes", json::array()}};
}

json to_json(const FixedPointReport& r, const std::string& mode) {
  json out = empty_report(mode);
  out["status"] = to_string(r.status);
  out["iterations"] = r.iterations;
  out["solution"] = point_json(r.solution);
  out["residual"] = r.final_residual;
  out["certificates"] = to_json(r.certificates);
  out["notes"] = r.notes;
  out["tol"] = r.tol;
  out["k"] = r.k ? json(*r.k) : json(nullptr);
  out["trace_length"] = r.trace.points.size();
  return out;
}

json to_json(const ppf::PPFReport& r, const std::string& mode) {
  json out = empty_report(mode);
  out["status"] = to_string(r.status);
  out["iterations"] = r.inner.iterations;
  out["solution"] = point_json(r.point);
  out["residual"] = r.solution ? json(r.residual) : json(nullptr);
  out["solution_in_constant_class"] =
      r.solution ? json(fspace::is_constant(*r.solution)) : json(nullptr);

  CertificateList all = r.inner.certificates;
  all.insert(all.end(), r.certificates.begin(), r.certificates.end());
  out["certificates"] = to_json(all);

  std::vector<std::string> notes = r.inner.notes;
  notes.insert(notes.end(), r.notes.begin(), r.notes.end());
  out["notes"] = notes;

  out["anchor"] = json{{"c", r.anchor.c}, {"node_index", r.anchor.node_index}};
  out["start"] = point_json(r.start);
  out["tol"] = r.inner.tol;
  out["k"] = r.inner.k ? json(*r.inner.k) : json(nullptr);
  out["selfmap_residual"] = r.inner.final_residual;
  return out;
}

json to_json(const ppf::BLRPairReport& r, const std::string& mode) {
  json out = empty_report(mode);
  out["status"] = r.all_pass() ? "passed" : "failed";
  out["iterations"] = r.rows.empty() ? 0 : r.rows.back().n;
  out["k"] = r.k;

  CertificateList all;
  for (const ppf::BLRRow& row : r.rows) {
    all.push_back(Certificate{"pair_distance_bound", row.n, row.distance,
                              row.bound, row.pass});
    if (row.same_start_bound) {
      all.push_back(Certificate{"same_start_bound", row.n, row.distance,
                                *row.same_start_bound, *row.same_start_pass});
    }
  }
  all.insert(all.end(), r.certificates.begin(), r.certificates.end());
  out["certificates"] = to_json(all);

  json rows = json::array();
  for (const ppf::BLRRow& row : r.rows) {
    json j{{"n", row.n},
           {"phi", r.phi_points[row.n].vec()},
           {"xi", r.xi_points[row.n].vec()},
           {"distance", row.distance},
           {"bound", row.bound},
           {"pass", row.pass}};
    if (row.same_start_bound) {
      j["same_start_bound"] = *row.same_start_bound;
      j["same_start_pass"] = *row.same_start_pass;
    }
    rows.push_back(std::move(j));
  }
  out["rows"] = std::move(rows);
  return out;
}

std::string trace_csv(const FixedPointReport& r) {
  const auto& pts = r.trace.points;
  std::ostringstream os;
  os << "n";
  for (std::size_t j = 0; j < pts.front().dim(); ++j) os << ",x" << j + 1;
  os << ",step_distance,bound_rhs,pass\n";
  const double first = r.trace.step_distances.empty() ? 0.0 : r.trace.step_distances[0];
  for (std::size_t n = 0; n < pts.size(); ++n) {
    os << n;
    for (double c : pts[n].coords()) os << "," << cell(c);
    os << ",";
    if (n < r.trace.step_distances.size()) os << cell(r.trace.step_distances[n]);
    os << ",";
    const Certificate* cert = find_certificate(r.certificates, "apriori_step", n);
    if (r.k && n < r.trace.step_distances.size()) {
      os << cell(std::pow(*r.k, static_cast<double>(n)) * first);
    }
    os << ",";
    if (cert) os << (cert->pass ? "true" : "false");
    os << "\n";
  }
  return os.str();
}

std::string blr_csv(const ppf::BLRPairReport& r) {
  const std::size_t m = r.phi_points.front().dim();
  std::ostringstream os;
  os << "n";
  for (std::size_t j = 0; j < m; ++j) os << ",x" << j + 1;
  for (std::size_t j = 0; j < m; ++j) os << ",y" << j + 1;
  os << ",step_distance,bound_rhs,pass\n";
  for (const ppf::BLRRow& row : r.rows) {
    os << row.n;
    for (double c : r.phi_points[row.n].coords()) os << "," << cell(c);
    for (double c : r.xi_points[row.n].coords()) os << "," << cell(c);
    os << "," << cell(row.distance) << "," << cell(row.bound) << ","
       << (row.pass ? "true" : "false") << "\n";
  }
  return os.str();
}

}  // namespace ppfix::cli
