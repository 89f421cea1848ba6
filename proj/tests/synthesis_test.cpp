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

#include "minmotion/error.hpp"
#include "minmotion/synthesis.hpp"
#include "support/reference_curves.hpp"
#include "support/random_objects.hpp"

namespace minmotion {
namespace {

using testing::I;
using testing::J;
using testing::K;
using testing::T;

const Quaternion kOne = Quaternion::real(1);

/// The unit circle translated so that x(inf) is the origin.
RationalCurve translated_circle() {
  const RealPoly t = T();
  return reduce_curve({t * t + 1, RealPoly(-2), -2 * t, RealPoly()});
}

TEST(DecomposeTest, Quintic) {
  const RealPoly t = T();
  const RationalCurve x = testing::quintic_curve();
  ASSERT_TRUE(is_normalized(x));
  const SynthesisDecomposition dec = decompose(x);
  EXPECT_EQ(dec.g, (t * t + 2 * t + 2) * (t * t + 2 * t + 5));
  EXPECT_EQ(dec.w, t + 1);
  EXPECT_EQ(dec.y, 8 * (t * t + 4 * t + 5) * (t * t + 2 * t + 2));
  EXPECT_EQ(dec.P0, testing::quintic_P0());
  EXPECT_EQ(dec.Q0, testing::quintic_Q0());
}

TEST(DecomposeTest, Viviani) {
  const RealPoly t = T();
  const SynthesisDecomposition dec = decompose(testing::viviani_normalized());
  EXPECT_EQ(dec.g, (1 + t * t) * (1 + t * t));
  EXPECT_EQ(dec.w, RealPoly(1));
  EXPECT_EQ(dec.y, 8 * t * t);
  EXPECT_EQ(dec.P0, testing::viviani_P0());
  EXPECT_EQ(dec.Q0, QuatPoly({{}, (J() - K()) * Rational(2)}));
}

TEST(DecomposeTest, TranslatedCircle) {
  const RealPoly t = T();
  const SynthesisDecomposition dec = decompose(translated_circle());
  EXPECT_EQ(dec.g, t * t + 1);
  EXPECT_EQ(dec.w, RealPoly(1));
  EXPECT_EQ(dec.y, RealPoly(4));
  EXPECT_EQ(dec.P0, QuatPoly({-K(), kOne}));
}

TEST(DecomposeTest, Errors) {
  try {
    decompose(testing::viviani_curve());
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotNormalized);
  }
  try {
    decompose(reduce_curve({T(), RealPoly(), RealPoly(), RealPoly()}));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegenerate);
  }
}

TEST(SynthesizeNormalizedTest, Quintic) {
  const RealPoly t = T();
  const SynthesisResult r = synthesize_normalized(testing::quintic_curve());
  EXPECT_EQ(r.motion.primal(), (t + 1) * testing::quintic_P0());
  EXPECT_EQ(r.motion.dual(), testing::quintic_Q0() * Rational(1, 2));
  EXPECT_EQ(r.motion.degree(), 3);
  EXPECT_FALSE(r.q_sign_flipped);
  EXPECT_TRUE(r.report.minimal);
  EXPECT_EQ(r.report.m, 1);
}

TEST(SynthesizeNormalizedTest, Viviani) {
  const SynthesisResult r = synthesize_normalized(testing::viviani_normalized());
  EXPECT_EQ(r.motion.primal(), testing::viviani_P0());
  EXPECT_EQ(r.motion.dual(), QuatPoly({{}, J() - K()}));
  EXPECT_EQ(r.motion.degree(), 2);
  EXPECT_EQ(r.report.m, 0);
}

TEST(SynthesizeNormalizedTest, TranslatedCircleIsRotation) {
  const SynthesisResult r = synthesize_normalized(translated_circle());
  EXPECT_EQ(r.motion.primal(), QuatPoly({-K(), kOne}));
  EXPECT_EQ(r.motion.dual(), QuatPoly(J()));
  EXPECT_EQ(r.motion.degree(), 1);
}

TEST(SynthesizeTest, VivianiOriginalFrame) {
  const RationalCurve x = testing::viviani_curve();
  const SynthesisResult r = synthesize(x);
  EXPECT_EQ(r.transform.translation, (std::array<Rational, 3>{-1, 0, 0}));
  EXPECT_EQ(r.normalized_motion.primal(), testing::viviani_P0());
  EXPECT_TRUE(curves_equal_projective(trajectory(r.motion, ProjectivePoint::origin()), x));
  EXPECT_EQ(r.motion.degree(), 2);
}

TEST(SynthesizeTest, UnitCircleGivesRotation) {
  const SynthesisResult r = synthesize(testing::unit_circle());
  EXPECT_EQ(r.motion.degree(), 1);
  EXPECT_TRUE(curves_equal_projective(trajectory(r.motion, ProjectivePoint::origin()), testing::unit_circle()));
  EXPECT_TRUE(verify_minimal(r, testing::unit_circle()).passed());
}

TEST(SynthesizeTest, LineIsTranslation) {
  const RationalCurve line = testing::line_curve();
  const SynthesisResult r = synthesize(line);
  EXPECT_EQ(r.motion.degree(), 1);
  EXPECT_EQ(r.motion.primal(), QuatPoly(kOne));
  EXPECT_EQ(r.motion.dual(), QuatPoly({{}, I() * Rational(-1, 2)}));
  EXPECT_TRUE(curves_equal_projective(trajectory(r.motion, ProjectivePoint::origin()), line));
  EXPECT_TRUE(verify_minimal(r, line).passed());
}

TEST(SynthesizeTest, NonCircularHasRealPrimalPart) {
  const RealPoly t = T();
  const RationalCurve twisted = reduce_curve({t * t * t + 2, t, t * t, RealPoly(1)});
  ASSERT_EQ(circularity(twisted), 0);
  const SynthesisResult r = synthesize_normalized(twisted);
  EXPECT_TRUE(r.motion.primal().is_real());
  EXPECT_EQ(r.motion.degree(), 3);
  EXPECT_EQ(r.decomposition.g, RealPoly(1));
  EXPECT_EQ(r.decomposition.P0, QuatPoly(kOne));
}

TEST(SynthesizeTest, SinglePointIsDegenerate) {
  try {
    synthesize(CurveComponents{RealPoly(1), RealPoly(2), RealPoly(), RealPoly()});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegenerate);
  }
}

TEST(VerifyMinimalTest, AcceptsSynthesizedMotion) {
  const RationalCurve x = testing::quintic_curve();
  const VerificationReport rep = verify_minimal(synthesize(x), x);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.first_failure(), nullptr);
  EXPECT_EQ(rep.checks.size(), 6u);
}

TEST(VerifyMinimalTest, InflatedMotionFailsDegree) {
  const RealPoly t = T();
  const RationalCurve x = testing::viviani_normalized();
  const SynthesisResult r = synthesize(x);
  const RealPoly f = t * t + 1;
  const DualQuatPoly inflated{f * r.motion.primal(), f * r.motion.dual()};
  const VerificationReport rep = verify_minimal(inflated, r.transform, x);
  ASSERT_NE(rep.first_failure(), nullptr);
  EXPECT_EQ(rep.first_failure()->name, "degree");
  EXPECT_EQ(rep.first_failure()->failure, "degree not minimal");
}

TEST(VerifyMinimalTest, PerturbedDualPartFailsTrajectory) {
  const RationalCurve x = testing::viviani_normalized();
  const SynthesisResult r = synthesize(x);
  const DualQuatPoly perturbed{r.motion.primal(), r.motion.dual() + QuatPoly(J())};
  const VerificationReport rep = verify_minimal(perturbed, r.transform, x);
  ASSERT_NE(rep.first_failure(), nullptr);
  EXPECT_EQ(rep.first_failure()->name, "trajectory");
  EXPECT_EQ(rep.first_failure()->failure, "trajectory mismatch");
}

TEST(SynthesisProperty, RoundTrip) {
  testing::RandomObjects rnd(61);
  for (int iter = 0; iter < 100; ++iter) {
    const RationalCurve x = rnd.curve();
    const SynthesisResult r = synthesize(x);
    EXPECT_TRUE(curves_equal_projective(trajectory(r.motion, ProjectivePoint::origin()), x)) << to_string(x);
    EXPECT_EQ(r.motion.degree(), x.degree() - circularity(x));
    EXPECT_EQ(spherical_defect(r.normalized_motion), x.degree() - 2 * circularity(x));
  }
}

TEST(SynthesisProperty, RecoversConstructedMinimalMotion) {
  testing::RandomObjects rnd(62);
  int recovered = 0;
  for (int attempt = 0; attempt < 2000 && recovered < 40; ++attempt) {
    const auto c = rnd.minimal_motion();
    if (!c) continue;
    const RationalCurve x = trajectory(*c, ProjectivePoint::origin());
    ASSERT_TRUE(is_normalized(x)) << to_string(x);
    EXPECT_EQ(synthesize_normalized(x).motion, *c) << to_string(*c);
    ++recovered;
  }
  EXPECT_GE(recovered, 20);
}

TEST(SynthesisProperty, RotationCommutesWithSynthesis) {
  testing::RandomObjects rnd(63);
  for (int iter = 0; iter < 40; ++iter) {
    const RationalCurve x = normalize_at_infinity(rnd.curve()).curve;
    const Quaternion r = rnd.nonzero_quaternion();
    const QuatPoly rotated = QuatPoly(r) * (QuatPoly::lift(x.x(0)) + x.vector_part()) * QuatPoly(r.inverse());
    const RationalCurve y = reduce_curve({rotated.component(0), rotated.component(1), rotated.component(2),
                                          rotated.component(3)});
    ASSERT_TRUE(is_normalized(y));
    const MotionPoly c = synthesize_normalized(x).motion;
    const MotionPoly expected(QuatPoly(r) * c.primal() * QuatPoly(r.inverse()),
                              QuatPoly(r) * c.dual() * QuatPoly(r.inverse()));
    EXPECT_EQ(synthesize_normalized(y).motion, expected);
  }
}

TEST(SynthesisProperty, Deterministic) {
  testing::RandomObjects rnd(64);
  for (int iter = 0; iter < 20; ++iter) {
    const RationalCurve x = rnd.curve();
    const SynthesisResult a = synthesize(x);
    const SynthesisResult b = synthesize(x);
    EXPECT_EQ(a.motion, b.motion);
    EXPECT_EQ(a.decomposition, b.decomposition);
    EXPECT_EQ(a.transform, b.transform);
  }
}

}  // namespace
}  // namespace minmotion
