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

#pragma once

#include <array>
#include <string>
#include <vector>

#include "minmotion/curve.hpp"
#include "minmotion/quat_poly.hpp"
#include "minmotion/quaternion.hpp"

namespace minmotion {

/// C = P + eps Q with P conj(Q) + Q conj(P) = 0, i.e. a rational curve on the
/// Study quadric. The leading coefficient is not required to be invertible
/// here (a polynomial translation along a line has deg Q > deg P);
/// is_motion_polynomial reports that condition separately.
class MotionPoly {
 public:
  /// Throws kPrecondition if the Study condition fails or both parts are zero.
  MotionPoly(QuatPoly primal, QuatPoly dual);
  explicit MotionPoly(DualQuatPoly poly) : MotionPoly(std::move(poly.primal), std::move(poly.dual)) {}
  static MotionPoly constant(const DualQuaternion& h) { return MotionPoly(h.primal, h.dual); }
  static MotionPoly identity() { return constant(DualQuaternion::identity()); }

  const QuatPoly& primal() const { return poly_.primal; }
  const QuatPoly& dual() const { return poly_.dual; }
  const DualQuatPoly& poly() const { return poly_; }
  int degree() const { return poly_.degree().value(); }
  DualQuaternion leading() const { return poly_.leading(); }

  friend MotionPoly operator*(const MotionPoly& a, const MotionPoly& b) {
    return MotionPoly(a.poly_ * b.poly_);
  }
  friend bool operator==(const MotionPoly&, const MotionPoly&) = default;

 private:
  DualQuatPoly poly_;
};

/// P conj(Q) + Q conj(P) == 0
bool satisfies_study_condition(const QuatPoly& primal, const QuatPoly& dual);

struct MotionCheck {
  bool study_condition = false;
  bool leading_invertible = false;
  std::vector<std::string> diagnostics;

  explicit operator bool() const { return study_condition && leading_invertible; }
};

MotionCheck is_motion_polynomial(const QuatPoly& primal, const QuatPoly& dual);

/// No real polynomial of positive degree divides both P and Q.
bool is_reduced(const MotionPoly& c);

/// P x conj(P) + 2 x0 P conj(Q) without reduction. Works on any dual
/// quaternion polynomial; only meaningful on the Study quadric.
QuatPoly trajectory_poly(const DualQuatPoly& c, const ProjectivePoint& pt);

/// Trajectory of pt, reduced and in canonical form.
RationalCurve trajectory(const MotionPoly& c, const ProjectivePoint& pt);

/// deg mrpf(P). Throws kPrecondition for P = 0.
int spherical_defect(const MotionPoly& c);

struct BoundCheck {
  bool degree_bound = false;        // d <= 2n - m
  bool circularity_bound = false;   // 2c >= d - m
  bool degree_tight = false;        // d == 2n - m
  bool circularity_tight = false;   // 2c == d - m
};

BoundCheck check_trajectory_bounds(int n, int m, int d, int c);

struct DegreeReport {
  int n = 0;  // motion degree
  int m = 0;  // spherical degree defect
  int d = 0;  // trajectory degree
  int c = 0;  // trajectory circularity
  bool reduced = false;
  bool degree_tight = false;
  bool circularity_tight = false;
  bool minimal = false;  // n == d - c

  friend bool operator==(const DegreeReport&, const DegreeReport&) = default;
};

/// Degrees of a reduced motion polynomial and the trajectory of pt. A
/// violated bound d <= 2n - m or c >= (d - m)/2 raises kInternal.
DegreeReport degree_report(const MotionPoly& c, const ProjectivePoint& pt);

/// The displacement T with act_on_point(T, origin) == affine point v.
DualQuaternion translation_for(const std::array<Rational, 3>& v);

enum class CoordinateChange {
  kConjugate,     // conj(h) C h
  kLeftCompose,   // h C
  kRightCompose,  // C h
};

MotionPoly change_coordinates(const MotionPoly& c, const DualQuaternion& h, CoordinateChange mode);

/// Substitutes t = m(s) and multiplies through by (c s + d)^deg C.
MotionPoly reparameterise(const MotionPoly& c, const Moebius& m);

std::string to_string(const MotionPoly& c);

}  // namespace minmotion
