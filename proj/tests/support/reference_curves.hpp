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

#include "minmotion/minmotion.hpp"

namespace minmotion::testing {

inline RealPoly T() { return RealPoly::t(); }

inline Quaternion I() { return Quaternion::i(); }
inline Quaternion J() { return Quaternion::j(); }
inline Quaternion K() { return Quaternion::k(); }

/// Degree-5 curve of circularity two.
inline CurveComponents quintic_components() {
  const RealPoly t = T();
  const RealPoly a = t * t + 2 * t + 2;
  const RealPoly b = t * t + 2 * t + 5;
  return {a * b * (t + 1), 2 * (t * t - 5) * a, -4 * (t + 5) * (t + 1) * (t + 1),
          -2 * t * (t + 2) * (t + 5) * (t + 1)};
}

inline RationalCurve quintic_curve() { return RationalCurve::reduce(quintic_components()); }

inline QuatPoly quintic_P0() {
  const RealPoly t = T();
  return QuatPoly(t * t + 2 * t + 1, -(t + 1), 2 * t + 2, RealPoly(-2));
}

inline QuatPoly quintic_Q0() {
  const RealPoly t = T();
  return QuatPoly(-2 * t - 2, -(2 * t * t + 4 * t + 2), 2 * t + 6, 2 * t * t + 8 * t + 6);
}

/// Viviani curve on the unit sphere.
inline CurveComponents viviani_components() {
  const RealPoly t = T();
  const RealPoly u = 1 + t * t;
  const RealPoly v = (1 - t) * (1 + t);
  return {u * u, v * v, 2 * t * v, 2 * t * u};
}

inline RationalCurve viviani_curve() { return RationalCurve::reduce(viviani_components()); }

/// The Viviani curve translated by (-1, 0, 0).
inline RationalCurve viviani_normalized() {
  const RealPoly t = T();
  const RealPoly u = 1 + t * t;
  return RationalCurve::reduce({u * u, -4 * t * t, 2 * t * (1 - t) * (1 + t), 2 * t * u});
}

/// t^2 - t(j + k) - i
inline QuatPoly viviani_P0() {
  const RealPoly t = T();
  return QuatPoly(t * t, RealPoly(-1), -t, -t);
}

inline RationalCurve unit_circle() {
  const RealPoly t = T();
  return RationalCurve::reduce({t * t + 1, t * t - 1, -2 * t, RealPoly()});
}

inline RationalCurve line_curve() { return RationalCurve::reduce({RealPoly(1), T(), RealPoly(), RealPoly()}); }

}  // namespace minmotion::testing
