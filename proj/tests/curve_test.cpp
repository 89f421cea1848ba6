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

#include <gtest/gtest.h>

#include "minmotion/curve.hpp"
#include "minmotion/error.hpp"
#include "support/oracles.hpp"
#include "support/reference_curves.hpp"
#include "support/random_objects.hpp"

namespace minmotion {
namespace {

using testing::T;

TEST(ReduceCurveTest, DividesCommonFactor) {
  const RealPoly t = T();
  const RationalCurve c = reduce_curve({t * (t * t + 1), t * t, t, RealPoly()});
  EXPECT_EQ(c.x(0), t * t + 1);
  EXPECT_EQ(c.x(1), t);
  EXPECT_EQ(c.x(2), RealPoly(1));
  EXPECT_TRUE(c.x(3).is_zero());
  EXPECT_EQ(c.degree(), 2);
}

TEST(ReduceCurveTest, RejectsZero) {
  try {
    reduce_curve({});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegenerate);
  }
}

TEST(CircularityTest, Examples) {
  EXPECT_EQ(circularity(testing::quintic_curve()), 2);
  EXPECT_EQ(circularity(testing::viviani_curve()), 2);
  EXPECT_EQ(circularity(testing::unit_circle()), 1);
  EXPECT_TRUE(is_entirely_circular(testing::unit_circle()));
  EXPECT_FALSE(is_entirely_circular(testing::quintic_curve()));
  const RealPoly t = T();
  EXPECT_EQ(circularity(reduce_curve({RealPoly(1), t, t * t, t * t * t})), 0);
}

TEST(CurveEvalTest, Examples) {
  const RationalCurve v = testing::viviani_curve();
  EXPECT_EQ(curve_eval(v, Rational(0)), ProjectivePoint(1, 1, 0, 0));
  EXPECT_EQ(curve_eval(v, Rational(1)), ProjectivePoint(4, 0, 0, 4));
  EXPECT_EQ(curve_eval_at_infinity(v), ProjectivePoint(1, 1, 0, 0));
  EXPECT_EQ(curve_eval_at_infinity(testing::line_curve()), ProjectivePoint(0, 1, 0, 0));
  EXPECT_TRUE(curve_eval_at_infinity(testing::line_curve()).is_at_infinity());
}

TEST(CurveEqualityTest, Projective) {
  const RealPoly t = T();
  const RationalCurve a = reduce_curve({2 * t * t + 2, t, RealPoly(3), RealPoly()});
  const RationalCurve b = reduce_curve({t * t + 1, Rational(1, 2) * t, Rational(3, 2), RealPoly()});
  EXPECT_NE(a, b);
  EXPECT_TRUE(curves_equal_projective(a, b));
  const RationalCurve c = reduce_curve({t * t + 1, -Rational(1, 2) * t, Rational(3, 2), RealPoly()});
  EXPECT_FALSE(curves_equal_projective(a, c));
}

TEST(NormalizeTest, VivianiIsTranslated) {
  const NormalizedCurve n = normalize_at_infinity(testing::viviani_curve());
  EXPECT_EQ(n.curve, testing::viviani_normalized());
  EXPECT_TRUE(n.transform.moebius.is_identity());
  EXPECT_EQ(n.transform.translation, (std::array<Rational, 3>{-1, 0, 0}));
  EXPECT_EQ(n.transform.scale, Rational(1));
}

TEST(NormalizeTest, AlreadyNormalizedIsIdentity) {
  const RationalCurve x = testing::viviani_normalized();
  ASSERT_TRUE(is_normalized(x));
  const NormalizedCurve n = normalize_at_infinity(x);
  EXPECT_EQ(n.curve, x);
  EXPECT_TRUE(n.transform.is_identity());
}

TEST(NormalizeTest, LineNeedsParameterChange) {
  const RationalCurve line = testing::line_curve();
  EXPECT_FALSE(is_normalized(line));
  const NormalizedCurve n = normalize_at_infinity(line);
  const RealPoly s = T();
  // t = 1/s maps (1, t, 0, 0) to (s, 1, 0, 0)
  EXPECT_EQ(n.curve, reduce_curve({s, RealPoly(1), RealPoly(), RealPoly()}));
  EXPECT_EQ(n.transform.moebius, (Moebius{0, 1, 1, 0}));
  EXPECT_TRUE(curves_equal_projective(invert_transform(n.curve, n.transform), line));
}

TEST(NormalizeTest, SkipsRootsOfX0) {
  const RealPoly t = T();
  // x0 = t has a root at 0, so the parameter change starts at t0 = 1
  const RationalCurve x = reduce_curve({t, t * t, RealPoly(1), RealPoly()});
  const NormalizedCurve n = normalize_at_infinity(x);
  EXPECT_EQ(n.transform.moebius, (Moebius{1, 1, 1, 0}));
  EXPECT_TRUE(is_normalized(n.curve));
}

TEST(NormalizeTest, Degenerate) {
  const RealPoly t = T();
  EXPECT_THROW(normalize_at_infinity(reduce_curve({RealPoly(2), RealPoly(1), RealPoly(), RealPoly()})), Error);
  EXPECT_THROW(normalize_at_infinity(reduce_curve({RealPoly(), t, RealPoly(1), RealPoly()})), Error);
}

namespace {

RationalCurve random_curve(testing::RandomObjects& rnd, int max_degree) {
  while (true) {
    CurveComponents raw;
    const int d = rnd.uniform(1, max_degree);
    raw[0] = rnd.real_poly(d);
    for (int idx = 1; idx < 4; ++idx) raw[static_cast<std::size_t>(idx)] = rnd.real_poly(rnd.uniform(0, d));
    RationalCurve c = reduce_curve(raw);
    if (!c.is_single_point()) return c;
  }
}

/// Curve whose circularity is at least deg h, built from x = P x' conj(P).
RationalCurve random_circular_curve(testing::RandomObjects& rnd) {
  const QuatPoly p = rnd.quat_poly(rnd.uniform(1, 2));
  const RealPoly x0 = rnd.real_poly(rnd.uniform(0, 2));
  const QuatPoly v = rnd.vector_poly(rnd.uniform(0, 2));
  const QuatPoly traj = p * (QuatPoly::lift(x0) + v) * p.conj();
  auto comps = traj.components();
  return reduce_curve({comps[0], comps[1], comps[2], comps[3]});
}

}  // namespace

TEST(CurveProperty, CircularityIsMoebiusInvariant) {
  testing::RandomObjects rnd(41);
  for (int iter = 0; iter < 60; ++iter) {
    const RationalCurve x = iter % 2 == 0 ? random_curve(rnd, 4) : random_circular_curve(rnd);
    if (x.is_single_point()) continue;
    Moebius m{rnd.coefficient(), rnd.coefficient(), rnd.coefficient(), rnd.coefficient()};
    if (m.determinant().is_zero()) continue;
    const RationalCurve y = reparameterise(x, m);
    EXPECT_EQ(y.degree(), x.degree());
    EXPECT_EQ(circularity(y), circularity(x));
  }
}

TEST(CurveProperty, CircularityBounds) {
  testing::RandomObjects rnd(42);
  for (int iter = 0; iter < 100; ++iter) {
    const RationalCurve x = iter % 2 == 0 ? random_curve(rnd, 5) : random_circular_curve(rnd);
    const int c = circularity(x);
    EXPECT_GE(c, 0);
    EXPECT_LE(2 * c, x.degree());
  }
}

TEST(CurveProperty, CircularityGcdHasNoRealRoots) {
  testing::RandomObjects rnd(43);
  for (int iter = 0; iter < 100; ++iter) {
    const RationalCurve x = random_circular_curve(rnd);
    const RealPoly g = poly_gcd(x.x(0), x.sum_of_squares());
    EXPECT_EQ(testing::count_real_roots(g), 0) << to_string(g);
  }
}

TEST(CurveProperty, NormalizeRoundTrip) {
  testing::RandomObjects rnd(44);
  for (int iter = 0; iter < 100; ++iter) {
    const RationalCurve x = iter % 2 == 0 ? random_curve(rnd, 4) : random_circular_curve(rnd);
    if (x.is_single_point() || x.x(0).is_zero()) continue;
    const NormalizedCurve n = normalize_at_infinity(x);
    EXPECT_TRUE(is_normalized(n.curve));
    EXPECT_EQ(n.curve.degree(), x.degree());
    EXPECT_EQ(circularity(n.curve), circularity(x));
    EXPECT_EQ(apply_transform(x, n.transform), n.curve);
    EXPECT_TRUE(curves_equal_projective(invert_transform(n.curve, n.transform), x));
  }
}

}  // namespace
}  // namespace minmotion
