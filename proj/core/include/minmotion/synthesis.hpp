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

#include <string>
#include <vector>

#include "minmotion/curve.hpp"
#include "minmotion/motion.hpp"
#include "minmotion/quat_poly.hpp"
#include "minmotion/real_poly.hpp"

namespace minmotion {

/// Factorisation data for a normalized curve x:
///   x0 = g w,  x1^2 + x2^2 + x3^2 = g y,  D = x1 i + x2 j + x3 k,
///   P0 conj(P0) = g,  P0 conj(Q0) = D.
struct SynthesisDecomposition {
  RealPoly g;   // monic, degree 2c
  RealPoly w;   // monic, degree d - 2c
  RealPoly y;   // degree < 2(d - c), coprime to w
  QuatPoly D;
  QuatPoly P0;  // monic left gcd of D and g
  QuatPoly Q0;

  friend bool operator==(const SynthesisDecomposition&, const SynthesisDecomposition&) = default;
};

struct SynthesisResult {
  MotionPoly motion;             // origin trajectory is the input curve
  MotionPoly normalized_motion;  // monic, C(inf) = 1, in the normalized frame
  SynthesisDecomposition decomposition;
  DegreeReport report;           // of normalized_motion and the origin
  CurveTransform transform;      // identity when the input was already normalized
  bool q_sign_flipped = false;
};

/// Requires a normalized curve (see normalize_at_infinity); otherwise throws
/// kNotNormalized.
SynthesisDecomposition decompose(const RationalCurve& x);

/// The unique monic minimal motion C = w P0 + eps Q0/2 with C(inf) = 1 whose
/// origin trajectory is x.
SynthesisResult synthesize_normalized(const RationalCurve& x);

/// Minimal motion for an arbitrary curve: reduce, normalize, synthesize, and
/// map the motion back so that its origin trajectory is the input curve.
SynthesisResult synthesize(const RationalCurve& x);
SynthesisResult synthesize(const CurveComponents& raw);

/// T_v C_n with the parameter change undone; v is the translation removed by
/// the normalization.
MotionPoly to_original_frame(const MotionPoly& normalized, const CurveTransform& transform);
/// Inverse of to_original_frame, scaled so the leading primal coefficient is 1
/// when it is real.
MotionPoly to_normalized_frame(const MotionPoly& motion, const CurveTransform& transform);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string failure;  // short reason, empty when passed
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// First failed check, or nullptr.
  const CheckResult* first_failure() const;
};

/// Checks, in order: trajectory equality, deg C = d - c, spherical defect
/// d - 2c in the normalized frame, C monic with C(inf) = 1 in the normalized
/// frame, and that re-running synthesis reproduces the motion.
VerificationReport verify_minimal(const DualQuatPoly& motion, const CurveTransform& transform,
                                  const RationalCurve& x);
VerificationReport verify_minimal(const SynthesisResult& result, const RationalCurve& x);

}  // namespace minmotion
