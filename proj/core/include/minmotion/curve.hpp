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

#include "minmotion/quat_poly.hpp"
#include "minmotion/quaternion.hpp"
#include "minmotion/real_poly.hpp"

namespace minmotion {

using CurveComponents = std::array<RealPoly, 4>;

/// Parameter change t = (a s + b) / (c s + d) with ad - bc != 0.
struct Moebius {
  Rational a{1}, b{0}, c{0}, d{1};

  static Moebius identity() { return {}; }
  Rational determinant() const { return a * d - b * c; }
  bool is_identity() const { return a == Rational(1) && b.is_zero() && c.is_zero() && d == Rational(1); }
  /// The adjugate, which represents the inverse map projectively.
  Moebius inverse() const { return {d, -b, -c, a}; }

  friend bool operator==(const Moebius&, const Moebius&) = default;
};

/// Rational curve x0 + x1 i + x2 j + x3 k in P^3, stored reduced (the four
/// components have no common factor of positive degree).
class RationalCurve {
 public:
  /// Divides the components by their monic gcd. All-zero input is kDegenerate.
  static RationalCurve reduce(CurveComponents raw);

  const RealPoly& x(int idx) const { return comps_.at(static_cast<std::size_t>(idx)); }
  const CurveComponents& components() const { return comps_; }
  int degree() const;

  /// Same curve scaled so the first nonzero component is monic.
  RationalCurve canonical() const;
  /// x1 i + x2 j + x3 k
  QuatPoly vector_part() const { return QuatPoly({}, comps_[1], comps_[2], comps_[3]); }
  /// x1^2 + x2^2 + x3^2
  RealPoly sum_of_squares() const;
  bool is_single_point() const { return degree() == 0; }

  friend bool operator==(const RationalCurve&, const RationalCurve&) = default;

 private:
  explicit RationalCurve(CurveComponents comps) : comps_(std::move(comps)) {}
  CurveComponents comps_;
};

inline RationalCurve reduce_curve(CurveComponents raw) { return RationalCurve::reduce(std::move(raw)); }

/// Half the degree of gcd(x0, x1^2 + x2^2 + x3^2). An odd gcd degree means
/// the input was not reduced and raises kInternal.
int circularity(const RationalCurve& c);
inline bool is_entirely_circular(const RationalCurve& c) { return 2 * circularity(c) == c.degree(); }

ProjectivePoint curve_eval(const RationalCurve& c, const Rational& t);
/// The coefficient vector of t^d.
ProjectivePoint curve_eval_at_infinity(const RationalCurve& c);

bool curves_equal_projective(const RationalCurve& a, const RationalCurve& b);

/// Substitutes t = m(s) and clears denominators with (c s + d)^deg.
RationalCurve reparameterise(const RationalCurve& curve, const Moebius& m);
/// x0 kept, xi -> xi + v_i x0: the affine translation by v.
RationalCurve translate(const RationalCurve& curve, const std::array<Rational, 3>& v);

/// How a curve was brought into normal form:
///   normalized = scale * translate(reparameterise(curve, moebius), translation)
struct CurveTransform {
  Moebius moebius;
  std::array<Rational, 3> translation{};
  Rational scale{1};

  bool is_identity() const;
  friend bool operator==(const CurveTransform&, const CurveTransform&) = default;
};

RationalCurve apply_transform(const RationalCurve& curve, const CurveTransform& t);
RationalCurve invert_transform(const RationalCurve& normalized, const CurveTransform& t);

struct NormalizedCurve {
  RationalCurve curve;
  CurveTransform transform;
};

/// Brings a curve into the form deg x0 > deg xi, x0 monic, x(inf) = (1:0:0:0).
/// When x(inf) is not affine the parameter is first changed to t = t0 + 1/s
/// with t0 the first of 0, 1, -1, 2, -2, ... where x0(t0) != 0.
NormalizedCurve normalize_at_infinity(const RationalCurve& c);

bool is_normalized(const RationalCurve& c);

std::string to_string(const RationalCurve& c);

}  // namespace minmotion
