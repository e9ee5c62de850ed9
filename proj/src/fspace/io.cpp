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

#include "ppfix/fspace/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "ppfix/error.hpp"

namespace ppfix::fspace {

namespace {

using nlohmann::json;

const json& field(const json& doc, const char* key, const std::string& path) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ParseError(path + "/" + key, "missing field");
  }
  return doc.at(key);
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ParseError(path, "expected a number");
  return v.get<double>();
}

std::size_t count(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(path, "expected a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::optional<double> parse_double(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    return std::nullopt;
  }
  return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

json to_json(const Interval& interval) {
  return json{{"a", interval.a()}, {"b", interval.b()}, {"n", interval.node_count()}};
}

Interval interval_from_json(const json& doc) {
  try {
    return Interval(number(field(doc, "a", "/interval"), "/interval/a"),
                    number(field(doc, "b", "/interval"), "/interval/b"),
                    count(field(doc, "n", "/interval"), "/interval/n"));
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ParseError("/interval", e.what());
  }
}

Interval parse_interval(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw InvalidInput("interval must be given as a,b,n");
  const auto a = parse_double(parts[0]);
  const auto b = parse_double(parts[1]);
  const auto n = parse_double(parts[2]);
  if (!a || !b || !n || *n < 2 || *n != std::floor(*n)) {
    throw InvalidInput("interval must be given as a,b,n with integer n >= 2");
  }
  return Interval(*a, *b, static_cast<std::size_t>(*n));
}

json to_json(const GridFunction& phi) {
  json values = json::array();
  for (const Point& v : phi.values()) values.push_back(v.vec());
  return json{{"interval", to_json(phi.interval())},
              {"dim", phi.dim()},
              {"values", std::move(values)}};
}

GridFunction grid_function_from_json(const json& doc) {
  const Interval interval = interval_from_json(field(doc, "interval", ""));
  const std::size_t dim = count(field(doc, "dim", ""), "/dim");
  const json& values = field(doc, "values", "");
  if (!values.is_array()) throw ParseError("/values", "expected an array");
  if (values.size() != interval.node_count()) {
    throw ParseError("/values", "expected " +
                                    std::to_string(interval.node_count()) +
                                    " rows, found " +
                                    std::to_string(values.size()));
  }
  std::vector<Point> points;
  points.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string path = "/values/" + std::to_string(i);
    const json& row = values[i];
    if (!row.is_array() || row.size() != dim) {
      throw ParseError(path, "expected an array of " + std::to_string(dim) +
                                 " numbers");
    }
    std::vector<double> coords;
    coords.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      coords.push_back(number(row[j], path + "/" + std::to_string(j)));
    }
    try {
      points.emplace_back(std::move(coords));
    } catch (const Error& e) {
      throw ParseError(path, e.what());
    }
  }
  return GridFunction(interval, std::move(points));
}

std::string to_csv(const GridFunction& phi) {
  std::ostringstream os;
  os << "t";
  for (std::size_t j = 0; j < phi.dim(); ++j) os << ",v" << j + 1;
  os << "\n";
  for (std::size_t i = 0; i < phi.size(); ++i) {
    os << format_number(phi.interval().node(i));
    for (double c : phi[i].coords()) os << "," << format_number(c);
    os << "\n";
  }
  return os.str();
}

GridFunction grid_function_from_csv(std::string_view text) {
  std::vector<double> ts;
  std::vector<Point> points;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    const auto cells = split(line, ',');
    std::vector<double> row;
    row.reserve(cells.size());
    bool numeric = true;
    for (auto cell : cells) {
      const auto v = parse_double(cell);
      if (!v) {
        numeric = false;
        break;
      }
      row.push_back(*v);
    }
    const std::string where = "line " + std::to_string(line_no);
    if (!numeric) {
      if (ts.empty()) continue;  // header
      throw ParseError(where, "non-numeric cell");
    }
    if (row.size() < 2) throw ParseError(where, "expected t and at least one value");
    try {
      points.emplace_back(std::vector<double>(row.begin() + 1, row.end()));
    } catch (const Error& e) {
      throw ParseError(where, e.what());
    }
    ts.push_back(row.front());
  }
  if (ts.size() < 2) throw ParseError("", "CSV function needs at least 2 rows");

  Interval interval = [&] {
    try {
      return Interval(ts.front(), ts.back(), ts.size());
    } catch (const InvalidInput& e) {
      throw ParseError("t", e.what());
    }
  }();
  const double h = interval.spacing();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (std::abs(ts[i] - interval.node(i)) > 1e-9 * h) {
      throw ParseError("t", "column is not a uniform grid at row " +
                                std::to_string(i + 1));
    }
  }
  return GridFunction(interval, std::move(points));
}

GridFunction load_grid_function(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open function file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const bool is_csv = path.size() >= 4 && path.substr(path.size() - 4) == ".csv";
  if (is_csv) return grid_function_from_csv(text);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  return grid_function_from_json(doc);
}

}  // namespace ppfix::fspace
