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

#include "minmotion/curve.hpp"

#include <algorithm>

#include "minmotion/error.hpp"

namespace minmotion {

RationalCurve RationalCurve::reduce(CurveComponents raw) {
  RealPoly g;
  for (const auto& p : raw) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p.monic() : poly_gcd(g, p);
  }
  if (g.is_zero()) fail(ErrorKind::kDegenerate, "curve with all components zero");
  if (!g.is_constant()) {
    for (auto& p : raw) p = exact_div(p, g);
  }
  return RationalCurve(std::move(raw));
}

int RationalCurve::degree() const {
  int d = 0;
  for (const auto& p : comps_) {
    if (!p.is_zero()) d = std::max(d, p.deg());
  }
  return d;
}

RationalCurve RationalCurve::canonical() const {
  for (const auto& p : comps_) {
    if (p.is_zero()) continue;
    const Rational s = p.leading().inverse();
    CurveComponents scaled = comps_;
    for (auto& q : scaled) q *= s;
    return RationalCurve(std::move(scaled));
  }
  fail(ErrorKind::kInternal, "internal error: stored curve is zero");
}

RealPoly RationalCurve::sum_of_squares() const {
  return comps_[1] * comps_[1] + comps_[2] * comps_[2] + comps_[3] * comps_[3];
}

int circularity(const RationalCurve& c) {
  const RealPoly g = poly_gcd(c.x(0), c.sum_of_squares());
  const int deg = g.deg();
  if (deg % 2 != 0) fail(ErrorKind::kInternal, "input not reduced: circularity gcd has odd degree");
  return deg / 2;
}

ProjectivePoint curve_eval(const RationalCurve& c, const Rational& t) {
  const auto& x = c.components();
  return ProjectivePoint(poly_eval(x[0], t), poly_eval(x[1], t), poly_eval(x[2], t),
                         poly_eval(x[3], t));
}

ProjectivePoint curve_eval_at_infinity(const RationalCurve& c) {
  const int d = c.degree();
  const auto& x = c.components();
  return ProjectivePoint(x[0].coeff(d), x[1].coeff(d), x[2].coeff(d), x[3].coeff(d));
}

bool curves_equal_projective(const RationalCurve& a, const RationalCurve& b) {
  return a.canonical() == b.canonical();
}

RationalCurve reparameterise(const RationalCurve& curve, const Moebius& m) {
  if (m.determinant().is_zero()) fail(ErrorKind::kPrecondition, "singular Moebius transformation");
  const int n = curve.degree();
  CurveComponents out;
  for (int idx = 0; idx < 4; ++idx) {
    out[static_cast<std::size_t>(idx)] = moebius_substitute(curve.x(idx), m.a, m.b, m.c, m.d, n);
  }
  return RationalCurve::reduce(std::move(out));
}

RationalCurve translate(const RationalCurve& curve, const std::array<Rational, 3>& v) {
  CurveComponents out = curve.components();
  for (int idx = 1; idx < 4; ++idx) out[static_cast<std::size_t>(idx)] += v[static_cast<std::size_t>(idx - 1)] * out[0];
  return RationalCurve::reduce(std::move(out));
}

namespace {

RationalCurve scaled(const RationalCurve& curve, const Rational& s) {
  if (s.is_zero()) fail(ErrorKind::kPrecondition, "zero curve scale");
  CurveComponents out = curve.components();
  for (auto& p : out) p *= s;
  return RationalCurve::reduce(std::move(out));
}

}  // namespace

bool CurveTransform::is_identity() const {
  return moebius.is_identity() && scale == Rational(1) &&
         std::all_of(translation.begin(), translation.end(), [](const Rational& r) { return r.is_zero(); });
}

RationalCurve apply_transform(const RationalCurve& curve, const CurveTransform& t) {
  return scaled(translate(reparameterise(curve, t.moebius), t.translation), t.scale);
}

RationalCurve invert_transform(const RationalCurve& normalized, const CurveTransform& t) {
  const std::array<Rational, 3> back{-t.translation[0], -t.translation[1], -t.translation[2]};
  return reparameterise(translate(scaled(normalized, t.scale.inverse()), back), t.moebius.inverse());
}

bool is_normalized(const RationalCurve& c) {
  const int d = c.degree();
  if (c.x(0).is_zero() || c.x(0).deg() != d || !c.x(0).is_monic()) return false;
  for (int idx = 1; idx < 4; ++idx) {
    if (!c.x(idx).is_zero() && c.x(idx).deg() >= d) return false;
  }
  return true;
}

NormalizedCurve normalize_at_infinity(const RationalCurve& c) {
  if (c.is_single_point()) fail(ErrorKind::kDegenerate, "curve is a single point");
  if (c.x(0).is_zero()) fail(ErrorKind::kDegenerate, "curve lies in the plane at infinity");
  CurveTransform transform;
  RationalCurve current = c;
  const int d = c.degree();
  if (c.x(0).is_zero() || c.x(0).deg() < d) {
    // x(inf) lies in the plane at infinity: move an affine point to s = inf
    const RealPoly& x0 = c.x(0);
    Rational t0;
    for (int step = 1; poly_eval(x0, t0).is_zero(); ++step) {
      // x0 has finitely many roots, so this terminates; order 0, 1, -1, 2, -2, ...
      t0 = Rational((step + 1) / 2) * Rational(step % 2 == 1 ? 1 : -1);
    }
    transform.moebius = {t0, 1, 1, 0};  // t = t0 + 1/s
    current = reparameterise(current, transform.moebius);
  }
  const auto at_inf = curve_eval_at_infinity(current).affine_coords();
  check_internal(at_inf.has_value(), "normalization left x(inf) at infinity");
  transform.translation = {-(*at_inf)[0], -(*at_inf)[1], -(*at_inf)[2]};
  current = translate(current, transform.translation);
  transform.scale = current.x(0).leading().inverse();
  current = scaled(current, transform.scale);
  check_internal(is_normalized(current), "normalized curve violates x(inf) = 1 with monic x0");
  return {std::move(current), transform};
}

std::string to_string(const RationalCurve& c) {
  return "(" + to_string(c.x(0)) + " : " + to_string(c.x(1)) + " : " + to_string(c.x(2)) + " : " +
         to_string(c.x(3)) + ")";
}

}  // namespace minmotion
