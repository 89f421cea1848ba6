// Copyright 2026 The minmotion Authors
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

#include "minmotion/cli/files.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace minmotion::cli {

namespace {

using nlohmann::json;

json rational_json(const Rational& r) { return r.to_string(); }

json poly_json(const RealPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(rational_json(c));
  return arr;
}

json quat_poly_json(const QuatPoly& p) {
  json arr = json::array();
  for (const auto& q : p.coefficients()) {
    arr.push_back(json::array({rational_json(q.w), rational_json(q.x), rational_json(q.y), rational_json(q.z)}));
  }
  return arr;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

/// Field path for diagnostics, e.g. "transform.moebius[1][0]".
std::string index_path(const std::string& base, std::size_t idx) { return base + "[" + std::to_string(idx) + "]"; }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column), "invalid JSON");
  }
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw ParseError(path.empty() ? key : path + "." + key, "unknown field");
  }
}

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path.empty() ? "document" : path, "expected an object");
}

const json& require_array(const json& j, const std::string& path, std::optional<std::size_t> size = std::nullopt) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  if (size && j.size() != *size) {
    throw ParseError(path, "expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
  }
  return j;
}

Rational parse_rational(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a rational string such as \"-3/4\"");
  const std::string s = j.get<std::string>();
  const auto r = Rational::parse(s);
  if (!r) throw ParseError(path, "malformed rational \"" + s + "\"");
  return *r;
}

int parse_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<int>();
}

bool parse_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw ParseError(path, "expected true or false");
  return j.get<bool>();
}

RealPoly parse_poly(const json& j, const std::string& path) {
  require_array(j, path);
  std::vector<Rational> coeffs;
  for (std::size_t k = 0; k < j.size(); ++k) coeffs.push_back(parse_rational(j[k], index_path(path, k)));
  return RealPoly(std::move(coeffs));
}

QuatPoly parse_quat_poly(const json& j, const std::string& path) {
  require_array(j, path);
  std::vector<Quaternion> coeffs;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string entry = index_path(path, k);
    const json& q = require_array(j[k], entry, 4);
    coeffs.push_back({parse_rational(q[0], index_path(entry, 0)), parse_rational(q[1], index_path(entry, 1)),
                      parse_rational(q[2], index_path(entry, 2)), parse_rational(q[3], index_path(entry, 3))});
  }
  return QuatPoly(std::move(coeffs));
}

void check_header(const json& doc, std::string_view schema) {
  const json& s = require(doc, "schema", "");
  if (!s.is_string() || s.get<std::string>() != schema) {
    throw ParseError("schema", "expected \"" + std::string(schema) + "\"");
  }
  if (parse_int(require(doc, "version", ""), "version") != kFormatVersion) {
    throw ParseError("version", "unsupported version (expected " + std::to_string(kFormatVersion) + ")");
  }
}

}  // namespace

std::string serialize(const CurveFile& f) {
  json doc = json::object();
  doc["schema"] = kCurveSchema;
  doc["version"] = kFormatVersion;
  for (int idx = 0; idx < 4; ++idx) doc["x" + std::to_string(idx)] = poly_json(f.components[static_cast<std::size_t>(idx)]);
  if (f.name || f.source) {
    json meta = json::object();
    if (f.name) meta["name"] = *f.name;
    if (f.source) meta["source"] = *f.source;
    doc["metadata"] = meta;
  }
  return dump(doc);
}

std::string serialize(const MotionFile& f) {
  json doc = json::object();
  doc["schema"] = kMotionSchema;
  doc["version"] = kFormatVersion;
  doc["primal"] = quat_poly_json(f.motion.primal);
  doc["dual"] = quat_poly_json(f.motion.dual);
  const Moebius& m = f.transform.moebius;
  doc["transform"] = {
      {"moebius", json::array({json::array({rational_json(m.a), rational_json(m.b)}),
                               json::array({rational_json(m.c), rational_json(m.d)})})},
      {"translation", json::array({rational_json(f.transform.translation[0]), rational_json(f.transform.translation[1]),
                                   rational_json(f.transform.translation[2])})},
      {"scale", rational_json(f.transform.scale)},
  };
  const DegreeReport& r = f.report;
  doc["report"] = {{"n", r.n},
                   {"m", r.m},
                   {"d", r.d},
                   {"c", r.c},
                   {"reduced", r.reduced},
                   {"degree_tight", r.degree_tight},
                   {"circularity_tight", r.circularity_tight},
                   {"minimal", r.minimal}};
  return dump(doc);
}

CurveFile parse_curve_file(std::string_view text) {
  const json doc = parse_json(text);
  require_object(doc, "");
  reject_unknown(doc, {"schema", "version", "x0", "x1", "x2", "x3", "metadata"}, "");
  check_header(doc, kCurveSchema);
  CurveFile f;
  for (int idx = 0; idx < 4; ++idx) {
    const std::string key = "x" + std::to_string(idx);
    f.components[static_cast<std::size_t>(idx)] = parse_poly(require(doc, key, ""), key);
  }
  if (const auto it = doc.find("metadata"); it != doc.end()) {
    require_object(*it, "metadata");
    reject_unknown(*it, {"name", "source"}, "metadata");
    for (const char* key : {"name", "source"}) {
      const auto field = it->find(key);
      if (field == it->end()) continue;
      if (!field->is_string()) throw ParseError(std::string("metadata.") + key, "expected a string");
      (std::string_view(key) == "name" ? f.name : f.source) = field->get<std::string>();
    }
  }
  return f;
}

MotionFile parse_motion_file(std::string_view text) {
  const json doc = parse_json(text);
  require_object(doc, "");
  reject_unknown(doc, {"schema", "version", "primal", "dual", "transform", "report"}, "");
  check_header(doc, kMotionSchema);
  MotionFile f;
  f.motion.primal = parse_quat_poly(require(doc, "primal", ""), "primal");
  f.motion.dual = parse_quat_poly(require(doc, "dual", ""), "dual");

  const json& tr = require(doc, "transform", "");
  require_object(tr, "transform");
  reject_unknown(tr, {"moebius", "translation", "scale"}, "transform");
  const json& mo = require_array(require(tr, "moebius", "transform"), "transform.moebius", 2);
  const json& row0 = require_array(mo[0], "transform.moebius[0]", 2);
  const json& row1 = require_array(mo[1], "transform.moebius[1]", 2);
  f.transform.moebius = {parse_rational(row0[0], "transform.moebius[0][0]"),
                         parse_rational(row0[1], "transform.moebius[0][1]"),
                         parse_rational(row1[0], "transform.moebius[1][0]"),
                         parse_rational(row1[1], "transform.moebius[1][1]")};
  if (f.transform.moebius.determinant().is_zero()) throw ParseError("transform.moebius", "singular matrix");
  const json& v = require_array(require(tr, "translation", "transform"), "transform.translation", 3);
  for (std::size_t k = 0; k < 3; ++k) f.transform.translation[k] = parse_rational(v[k], index_path("transform.translation", k));
  f.transform.scale = parse_rational(require(tr, "scale", "transform"), "transform.scale");
  if (f.transform.scale.is_zero()) throw ParseError("transform.scale", "scale must be nonzero");

  const json& rep = require(doc, "report", "");
  require_object(rep, "report");
  reject_unknown(rep, {"n", "m", "d", "c", "reduced", "degree_tight", "circularity_tight", "minimal"}, "report");
  DegreeReport& r = f.report;
  r.n = parse_int(require(rep, "n", "report"), "report.n");
  r.m = parse_int(require(rep, "m", "report"), "report.m");
  r.d = parse_int(require(rep, "d", "report"), "report.d");
  r.c = parse_int(require(rep, "c", "report"), "report.c");
  r.reduced = parse_bool(require(rep, "reduced", "report"), "report.reduced");
  r.degree_tight = parse_bool(require(rep, "degree_tight", "report"), "report.degree_tight");
  r.circularity_tight = parse_bool(require(rep, "circularity_tight", "report"), "report.circularity_tight");
  r.minimal = parse_bool(require(rep, "minimal", "report"), "report.minimal");
  return f;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError(path, "cannot open file for writing");
  out << text;
  if (!out) throw ParseError(path, "write failed");
}

}  // namespace minmotion::cli
