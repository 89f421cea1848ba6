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

#include "minmotion/cli/commands.hpp"

#include <ostream>
#include <sstream>

#include "json.hpp"

namespace minmotion::cli {

namespace {

using nlohmann::ordered_json;

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string vec3(const std::array<Rational, 3>& v) {
  return "(" + v[0].to_string() + ", " + v[1].to_string() + ", " + v[2].to_string() + ")";
}

std::string moebius_text(const Moebius& m) {
  return "[[" + m.a.to_string() + ", " + m.b.to_string() + "], [" + m.c.to_string() + ", " + m.d.to_string() + "]]";
}

std::string report_text(const DegreeReport& r) {
  std::ostringstream os;
  os << "n=" << r.n << " m=" << r.m << " d=" << r.d << " c=" << r.c << " reduced=" << yes_no(r.reduced)
     << " degree_tight=" << yes_no(r.degree_tight) << " circularity_tight=" << yes_no(r.circularity_tight)
     << " minimal=" << yes_no(r.minimal);
  return os.str();
}

std::string checks_text(const VerificationReport& rep) {
  std::ostringstream os;
  for (const auto& c : rep.checks) {
    os << "check " << c.name << ": " << (c.passed ? "pass" : "fail");
    if (!c.passed) os << " [" << c.failure << "]";
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

/// Maps library and file errors to exit codes.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::kDegenerate:
        err << "error: " << e.what() << "\n";
        return kExitDegenerate;
      case ErrorKind::kPrecondition:
        err << "error: invalid input: " << e.what() << "\n";
        return kExitParseError;
      default:
        err << "error: " << e.what() << "\n";
        return kExitInternalError;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}

}  // namespace

std::optional<Rational> parse_number(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational::parse(text);
  std::string_view whole = text.substr(0, dot);
  const std::string_view frac = text.substr(dot + 1);
  bool negative = false;
  if (!whole.empty() && whole.front() == '-') {
    negative = true;
    whole.remove_prefix(1);
  }
  if (whole.empty() && frac.empty()) return std::nullopt;
  for (std::string_view part : {whole, frac}) {
    for (char ch : part) {
      if (ch < '0' || ch > '9') return std::nullopt;
    }
  }
  const std::string digits = std::string(whole) + std::string(frac);
  mpz_class num(digits.empty() ? "0" : digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  if (negative) num = -num;
  return Rational(num, den);
}

std::optional<std::array<Rational, 3>> parse_point(std::string_view text) {
  std::array<Rational, 3> out;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto comma = text.find(',');
    if ((k < 2) == (comma == std::string_view::npos)) return std::nullopt;
    const auto value = parse_number(text.substr(0, comma));
    if (!value) return std::nullopt;
    out[k] = *value;
    text = k < 2 ? text.substr(comma + 1) : std::string_view();
  }
  return out;
}

std::string analyze(const CurveFile& file, bool as_json) {
  const RationalCurve x = RationalCurve::reduce(file.components);
  const bool reduced_input = x.components() == file.components;
  const int d = x.degree();
  const int c = circularity(x);
  const NormalizedCurve norm = normalize_at_infinity(x);

  ordered_json j;
  if (file.name) j["name"] = *file.name;
  j["degree"] = d;
  j["circularity"] = c;
  j["entirely_circular"] = is_entirely_circular(x);
  j["reduced_input"] = reduced_input;
  j["normalized"] = to_string(norm.curve);
  j["transform.moebius"] = moebius_text(norm.transform.moebius);
  j["transform.translation"] = vec3(norm.transform.translation);
  j["transform.scale"] = norm.transform.scale.to_string();
  j["minimal_motion_degree"] = d - c;
  if (as_json) return j.dump() + "\n";

  std::ostringstream os;
  for (const auto& [key, value] : j.items()) {
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  return os.str();
}

SynthesisOutput synthesize_file(const CurveFile& file) {
  const RationalCurve x = RationalCurve::reduce(file.components);
  const SynthesisResult r = synthesize(x);
  SynthesisOutput out;
  out.motion = MotionFile{r.motion.poly(), r.transform, r.report};
  out.verification = verify_minimal(r, x);

  std::ostringstream os;
  if (file.name) os << "name: " << *file.name << "\n";
  os << "motion: " << to_string(r.motion) << "\n";
  os << "normalized_motion: " << to_string(r.normalized_motion) << "\n";
  os << "degree: " << r.motion.degree() << "\n";
  os << "spherical_defect: " << r.report.m << "\n";
  os << "report: " << report_text(r.report) << "\n";
  os << checks_text(out.verification);
  os << "result: " << (out.verification.passed() ? "pass" : "fail") << "\n";
  out.summary = os.str();
  return out;
}

VerifyOutput verify_files(const CurveFile& curve, const MotionFile& motion) {
  const RationalCurve x = RationalCurve::reduce(curve.components);
  VerificationReport rep = verify_minimal(motion.motion, motion.transform, x);

  std::optional<DegreeReport> computed;
  std::string report_problem;
  try {
    const MotionPoly normalized = to_normalized_frame(MotionPoly(motion.motion), motion.transform);
    computed = degree_report(normalized, ProjectivePoint::origin());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInternal) throw;
    report_problem = e.what();
  }
  const bool recorded_ok = computed && *computed == motion.report;
  rep.checks.push_back({"recorded_report", recorded_ok, recorded_ok ? "" : "recorded report mismatch",
                        computed ? "" : report_problem});

  VerifyOutput out;
  out.passed = rep.passed();
  std::ostringstream os;
  os << checks_text(rep);
  os << "report: " << (computed ? report_text(*computed) : "unavailable (" + report_problem + ")") << "\n";
  if (const CheckResult* f = rep.first_failure()) out.first_failure = f->name + ": " + f->failure;
  os << "result: " << (out.passed ? "pass" : "fail [" + out.first_failure + "]") << "\n";
  out.text = os.str();
  return out;
}

std::string sample_csv(const MotionFile& motion, const SampleOptions& options) {
  if (options.count < 2) throw ParseError("--count", "need at least 2 samples");
  if (options.digits < 1 || options.digits > 100) throw ParseError("--digits", "must lie in 1..100");
  const MotionPoly c(motion.motion);
  const std::array<ProjectivePoint, 4> points{
      ProjectivePoint::affine(options.point[0], options.point[1], options.point[2]),
      ProjectivePoint::affine(1, 0, 0), ProjectivePoint::affine(0, 1, 0), ProjectivePoint::affine(0, 0, 1)};
  std::array<RationalCurve, 4> paths{trajectory(c, points[0]), trajectory(c, points[1]), trajectory(c, points[2]),
                                     trajectory(c, points[3])};

  std::ostringstream os;
  os << "t,x,y,z,e1_x,e1_y,e1_z,e2_x,e2_y,e2_z,e3_x,e3_y,e3_z,at_infinity\n";
  const Rational step = (options.to - options.from) / Rational(options.count - 1);
  for (int k = 0; k < options.count; ++k) {
    const Rational t = k == options.count - 1 ? options.to : options.from + step * Rational(k);
    os << t.to_decimal(options.digits);
    bool at_infinity = false;
    for (const auto& path : paths) {
      const auto coords = curve_eval(path, t).affine_coords();
      for (int idx = 0; idx < 3; ++idx) {
        os << ",";
        if (coords) os << (*coords)[static_cast<std::size_t>(idx)].to_decimal(options.digits);
      }
      at_infinity = at_infinity || !coords;
    }
    os << "," << (at_infinity ? 1 : 0) << "\n";
  }
  return os.str();
}

int cmd_analyze(const std::string& curve_path, bool as_json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << analyze(parse_curve_file(read_text_file(curve_path)), as_json);
    return kExitOk;
  });
}

int cmd_synthesize(const std::string& curve_path, const std::string& motion_path, std::ostream& out,
                   std::ostream& err) {
  return guarded(err, [&] {
    const SynthesisOutput s = synthesize_file(parse_curve_file(read_text_file(curve_path)));
    write_text_file(motion_path, serialize(s.motion));
    out << s.summary;
    if (!s.verification.passed()) {
      const CheckResult* f = s.verification.first_failure();
      err << "verification failed: " << f->name << ": " << f->failure << "\n";
      return kExitVerificationFailed;
    }
    return kExitOk;
  });
}

int cmd_verify(const std::string& curve_path, const std::string& motion_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CurveFile curve = parse_curve_file(read_text_file(curve_path));
    const MotionFile motion = parse_motion_file(read_text_file(motion_path));
    const VerifyOutput v = verify_files(curve, motion);
    out << v.text;
    if (!v.passed) {
      err << "verification failed: " << v.first_failure << "\n";
      return kExitVerificationFailed;
    }
    return kExitOk;
  });
}

int cmd_sample(const std::string& motion_path, const SampleOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << sample_csv(parse_motion_file(read_text_file(motion_path)), options);
    return kExitOk;
  });
}

}  // namespace minmotion::cli
