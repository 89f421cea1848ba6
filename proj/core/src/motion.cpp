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

#include "minmotion/motion.hpp"

#include "minmotion/error.hpp"

namespace minmotion {

bool satisfies_study_condition(const QuatPoly& primal, const QuatPoly& dual) {
  return (primal * dual.conj() + dual * primal.conj()).is_zero();
}

MotionPoly::MotionPoly(QuatPoly primal, QuatPoly dual)
    : poly_{std::move(primal), std::move(dual)} {
  if (poly_.is_zero()) fail(ErrorKind::kPrecondition, "zero motion polynomial");
  if (!satisfies_study_condition(poly_.primal, poly_.dual)) {
    fail(ErrorKind::kPrecondition, "not on Study quadric: P conj(Q) + Q conj(P) != 0");
  }
}

MotionCheck is_motion_polynomial(const QuatPoly& primal, const QuatPoly& dual) {
  MotionCheck check;
  check.study_condition = satisfies_study_condition(primal, dual);
  if (!check.study_condition) check.diagnostics.emplace_back("P conj(Q) + Q conj(P) != 0");
  const DualQuatPoly c{primal, dual};
  check.leading_invertible = !c.is_zero() && c.leading().is_invertible();
  if (!check.leading_invertible) check.diagnostics.emplace_back("leading coefficient not invertible");
  return check;
}

bool is_reduced(const MotionPoly& c) {
  const RealPoly a = c.primal().is_zero() ? RealPoly() : mrpf(c.primal());
  const RealPoly b = c.dual().is_zero() ? RealPoly() : mrpf(c.dual());
  return poly_gcd(a, b).is_constant();
}

QuatPoly trajectory_poly(const DualQuatPoly& c, const ProjectivePoint& pt) {
  const QuatPoly& p = c.primal;
  return p * QuatPoly(pt.as_quaternion()) * p.conj() + (2 * pt[0]) * (p * c.dual.conj());
}

RationalCurve trajectory(const MotionPoly& c, const ProjectivePoint& pt) {
  const QuatPoly raw = trajectory_poly(c.poly(), pt);
  check_internal(!raw.is_zero(), "trajectory vanishes identically");
  return RationalCurve::reduce(raw.components()).canonical();
}

int spherical_defect(const MotionPoly& c) {
  if (c.primal().is_zero()) fail(ErrorKind::kPrecondition, "spherical defect of zero primal part");
  return mrpf(c.primal()).deg();
}

BoundCheck check_trajectory_bounds(int n, int m, int d, int c) {
  return {d <= 2 * n - m, 2 * c >= d - m, d == 2 * n - m, 2 * c == d - m};
}

DegreeReport degree_report(const MotionPoly& c, const ProjectivePoint& pt) {
  const MotionCheck check = is_motion_polynomial(c.primal(), c.dual());
  if (!check) fail(ErrorKind::kPrecondition, "degree report needs a motion polynomial with invertible leading coefficient");
  if (!is_reduced(c)) fail(ErrorKind::kPrecondition, "degree report needs a reduced motion polynomial");
  DegreeReport r;
  r.n = c.degree();
  r.m = spherical_defect(c);
  const RationalCurve traj = trajectory(c, pt);
  r.d = traj.degree();
  r.c = circularity(traj);
  r.reduced = true;
  const BoundCheck b = check_trajectory_bounds(r.n, r.m, r.d, r.c);
  check_internal(b.degree_bound, "trajectory degree exceeds 2n - m");
  check_internal(b.circularity_bound, "trajectory circularity below (d - m)/2");
  r.degree_tight = b.degree_tight;
  r.circularity_tight = b.circularity_tight;
  r.minimal = r.n == r.d - r.c;
  return r;
}

DualQuaternion translation_for(const std::array<Rational, 3>& v) {
  // act(1 + eps q, origin) = 1 + 2 conj(q), so q = -v/2 for a pure vector q
  const Rational half(1, 2);
  return {Quaternion::real(1), Quaternion::vector(-v[0] * half, -v[1] * half, -v[2] * half)};
}

MotionPoly change_coordinates(const MotionPoly& c, const DualQuaternion& h, CoordinateChange mode) {
  if (!h.is_invertible()) fail(ErrorKind::kPrecondition, "coordinate change by non-invertible dual quaternion");
  const DualQuatPoly hp = DualQuatPoly::constant(h);
  switch (mode) {
    case CoordinateChange::kConjugate:
      return MotionPoly(DualQuatPoly::constant(h.conj()) * c.poly() * hp);
    case CoordinateChange::kLeftCompose:
      return MotionPoly(hp * c.poly());
    case CoordinateChange::kRightCompose:
      return MotionPoly(c.poly() * hp);
  }
  fail(ErrorKind::kPrecondition, "unknown coordinate change");
}

MotionPoly reparameterise(const MotionPoly& c, const Moebius& m) {
  if (m.determinant().is_zero()) fail(ErrorKind::kPrecondition, "singular Moebius transformation");
  const int n = c.degree();
  auto substitute = [&](const QuatPoly& p) {
    std::array<RealPoly, 4> parts;
    for (int idx = 0; idx < 4; ++idx) {
      parts[static_cast<std::size_t>(idx)] = moebius_substitute(p.component(idx), m.a, m.b, m.c, m.d, n);
    }
    return QuatPoly(parts[0], parts[1], parts[2], parts[3]);
  };
  return MotionPoly(substitute(c.primal()), substitute(c.dual()));
}

std::string to_string(const MotionPoly& c) { return to_string(c.poly()); }

}  // namespace minmotion
