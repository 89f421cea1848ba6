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

#include "minmotion/synthesis.hpp"

#include <algorithm>
#include <optional>

#include "minmotion/error.hpp"

namespace minmotion {

namespace {

RationalCurve negate_vector_part(const RationalCurve& x) {
  CurveComponents comps = x.components();
  for (int idx = 1; idx < 4; ++idx) comps[static_cast<std::size_t>(idx)] = -comps[static_cast<std::size_t>(idx)];
  return RationalCurve::reduce(std::move(comps));
}

}  // namespace

SynthesisDecomposition decompose(const RationalCurve& x) {
  if (!is_normalized(x)) {
    fail(ErrorKind::kNotNormalized,
         "curve must have monic x0 of top degree and x(inf) = (1:0:0:0); apply normalize_at_infinity first");
  }
  SynthesisDecomposition dec;
  dec.D = x.vector_part();
  if (dec.D.is_zero()) fail(ErrorKind::kDegenerate, "degenerate: curve lies on the real axis of the model");

  const RealPoly sos = x.sum_of_squares();
  dec.g = poly_gcd(x.x(0), sos);
  dec.w = exact_div(x.x(0), dec.g);
  dec.y = exact_div(sos, dec.g);
  check_internal(norm_poly(dec.D) == dec.g * dec.y, "D conj(D) != g y");
  check_internal(poly_gcd(dec.w, dec.y).is_constant(), "w and y are not coprime");
  check_internal(poly_gcd(dec.g, mrpf(dec.D)).is_constant(), "g shares a real factor with D");

  NormFactors f = norm_factor(dec.D, dec.g);
  dec.P0 = std::move(f.left);
  dec.Q0 = f.right.conj();
  check_internal(dec.P0 * dec.Q0.conj() == dec.D, "P0 conj(Q0) != D");
  return dec;
}

SynthesisResult synthesize_normalized(const RationalCurve& x) {
  SynthesisDecomposition dec = decompose(x);
  const QuatPoly primal = dec.w * dec.P0;
  QuatPoly dual = dec.Q0 * Rational(1, 2);
  check_internal(satisfies_study_condition(primal, dual), "synthesized polynomial violates the Study condition");

  bool flipped = false;
  std::optional<MotionPoly> c;
  c.emplace(primal, dual);
  const RationalCurve traj = trajectory(*c, ProjectivePoint::origin());
  if (!curves_equal_projective(traj, x)) {
    check_internal(curves_equal_projective(traj, negate_vector_part(x)),
                   "origin trajectory differs from the input curve");
    flipped = true;
    dual = -dual;
    dec.Q0 = -dec.Q0;
    c.emplace(primal, dual);
  }

  const int d = x.degree();
  const int circ = circularity(x);
  check_internal(c->degree() == d - circ, "motion degree differs from d - c");
  check_internal(spherical_defect(*c) == d - 2 * circ, "spherical defect differs from d - 2c");
  check_internal(c->leading() == DualQuaternion::identity(), "motion is not monic with C(inf) = 1");

  DegreeReport report = degree_report(*c, ProjectivePoint::origin());
  check_internal(report.minimal, "degree report does not confirm minimality");
  return SynthesisResult{*c, *c, std::move(dec), report, CurveTransform{}, flipped};
}

MotionPoly to_original_frame(const MotionPoly& normalized, const CurveTransform& transform) {
  const std::array<Rational, 3> v{-transform.translation[0], -transform.translation[1],
                                  -transform.translation[2]};
  MotionPoly m = change_coordinates(normalized, translation_for(v), CoordinateChange::kLeftCompose);
  if (!transform.moebius.is_identity()) m = reparameterise(m, transform.moebius.inverse());
  // fix the projective scale: first nonzero component of the top primal coefficient is 1
  if (!m.primal().is_zero()) {
    const Quaternion& lead = m.primal().leading();
    for (int idx = 0; idx < 4; ++idx) {
      if (lead[idx].is_zero()) continue;
      const Rational s = lead[idx].inverse();
      m = MotionPoly(m.primal() * s, m.dual() * s);
      break;
    }
  }
  return m;
}

MotionPoly to_normalized_frame(const MotionPoly& motion, const CurveTransform& transform) {
  MotionPoly m = motion;
  if (!transform.moebius.is_identity()) m = reparameterise(m, transform.moebius);
  m = change_coordinates(m, translation_for(transform.translation), CoordinateChange::kLeftCompose);
  const Quaternion lead = m.leading().primal;
  if (lead.is_real() && !lead.is_zero()) {
    const Rational s = lead.w.inverse();
    m = MotionPoly(m.primal() * s, m.dual() * s);
  }
  return m;
}

SynthesisResult synthesize(const RationalCurve& x) {
  NormalizedCurve norm = normalize_at_infinity(x);
  SynthesisResult result = synthesize_normalized(norm.curve);
  result.transform = norm.transform;
  result.motion = to_original_frame(result.normalized_motion, norm.transform);
  check_internal(curves_equal_projective(trajectory(result.motion, ProjectivePoint::origin()), x),
                 "back-transformed motion does not trace the input curve");
  return result;
}

SynthesisResult synthesize(const CurveComponents& raw) { return synthesize(RationalCurve::reduce(raw)); }

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

VerificationReport verify_minimal(const DualQuatPoly& motion, const CurveTransform& transform,
                                  const RationalCurve& x) {
  VerificationReport report;
  auto add = [&](std::string name, bool ok, std::string failure, std::string detail) {
    report.checks.push_back({std::move(name), ok, ok ? std::string() : std::move(failure), std::move(detail)});
  };

  const int d = x.degree();
  const int circ = circularity(x);

  std::optional<MotionPoly> c;
  if (!motion.is_zero() && satisfies_study_condition(motion.primal, motion.dual)) c.emplace(motion);

  if (!c) {
    add("trajectory", false, "trajectory mismatch", "motion is not on the Study quadric");
  } else {
    const RationalCurve traj = trajectory(*c, ProjectivePoint::origin());
    add("trajectory", curves_equal_projective(traj, x), "trajectory mismatch",
        "origin trajectory " + to_string(traj));
  }

  const int n = motion.is_zero() ? -1 : motion.degree().value();
  add("degree", n == d - circ, n > d - circ ? "degree not minimal" : "degree below d - c",
      "deg C = " + std::to_string(n) + ", d - c = " + std::to_string(d - circ));

  std::optional<MotionPoly> normalized;
  if (c) {
    try {
      normalized.emplace(to_normalized_frame(*c, transform));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kInternal) throw;
    }
  }
  if (normalized && !normalized->primal().is_zero()) {
    const int m = spherical_defect(*normalized);
    add("spherical_defect", m == d - 2 * circ, "spherical defect mismatch",
        "m = " + std::to_string(m) + ", d - 2c = " + std::to_string(d - 2 * circ));
    const bool monic = normalized->leading() == DualQuaternion::identity() &&
                       normalized->primal().degree() > normalized->dual().degree();
    add("normal_form", monic, "not monic at infinity",
        "C(inf) = " + to_string(normalized->leading()));
  } else {
    add("spherical_defect", false, "spherical defect mismatch", "no normalized motion");
    add("normal_form", false, "not monic at infinity", "no normalized motion");
  }

  bool same = false;
  std::string detail;
  try {
    const SynthesisResult again = synthesize(x);
    same = again.motion.poly() == motion && again.transform == transform;
    detail = same ? "re-synthesis identical" : "re-synthesis gives " + to_string(again.motion);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInternal) throw;
    detail = e.what();
  }
  add("uniqueness", same, "motion differs from the unique minimal motion", detail);
  return report;
}

VerificationReport verify_minimal(const SynthesisResult& result, const RationalCurve& x) {
  VerificationReport report = verify_minimal(result.motion.poly(), result.transform, x);
  const SynthesisResult again = synthesize(x);
  const bool identical = again.motion == result.motion &&
                         again.normalized_motion == result.normalized_motion &&
                         again.decomposition == result.decomposition;
  report.checks.push_back({"determinism", identical,
                           identical ? "" : "synthesis is not deterministic", ""});
  return report;
}

}  // namespace minmotion
