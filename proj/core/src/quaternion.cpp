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

#include "minmotion/quaternion.hpp"

#include "minmotion/error.hpp"

namespace minmotion {

Quaternion Quaternion::inverse() const {
  if (is_zero()) fail(ErrorKind::kDivisionByZero, "inverse of zero quaternion");
  return conj() * norm().inverse();
}

const Rational& Quaternion::operator[](int idx) const {
  switch (idx) {
    case 0: return w;
    case 1: return x;
    case 2: return y;
    case 3: return z;
    default: fail(ErrorKind::kPrecondition, "quaternion component index out of range");
  }
}

Rational& Quaternion::operator[](int idx) {
  return const_cast<Rational&>(static_cast<const Quaternion&>(*this)[idx]);
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  w += o.w;
  x += o.x;
  y += o.y;
  z += o.z;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  w -= o.w;
  x -= o.x;
  y -= o.y;
  z -= o.z;
  return *this;
}

Quaternion& Quaternion::operator*=(const Rational& s) {
  w *= s;
  x *= s;
  y *= s;
  z *= s;
  return *this;
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

std::string to_string(const Quaternion& q) {
  static const char* const kUnits[] = {"", "i", "j", "k"};
  std::string out;
  for (int idx = 0; idx < 4; ++idx) {
    const Rational& c = q[idx];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (idx == 0) {
      out += mag.to_string();
    } else {
      if (mag != Rational(1)) out += mag.to_string() + "*";
      out += kUnits[idx];
    }
  }
  return out.empty() ? "0" : out;
}

DualQuaternion DualQuaternion::inverse() const {
  if (!is_invertible()) fail(ErrorKind::kDivisionByZero, "dual quaternion with zero primal part");
  // (p + eps q)^-1 = p^-1 - eps p^-1 q p^-1
  const Quaternion pinv = primal.inverse();
  return {pinv, -(pinv * dual * pinv)};
}

bool DualQuaternion::satisfies_study_condition() const {
  return (primal * dual.conj() + dual * primal.conj()).is_zero();
}

DualNumber dq_norm(const DualQuaternion& h) {
  const DualQuaternion n = h * h.conj();
  check_internal(n.primal.is_real() && n.dual.is_real(), "dual quaternion norm is not a dual number");
  return {n.primal.w, n.dual.w};
}

std::string to_string(const DualQuaternion& h) {
  if (h.dual.is_zero()) return to_string(h.primal);
  return to_string(h.primal) + " + eps*(" + to_string(h.dual) + ")";
}

ProjectivePoint::ProjectivePoint(Rational x0, Rational x1, Rational x2, Rational x3)
    : coords_{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {
  mpz_class den_lcm = 1;
  for (const auto& c : coords_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& c : coords_) {
    const mpz_class scaled = c.numerator() * (den_lcm / c.denominator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) fail(ErrorKind::kDegenerate, "projective point with all coordinates zero");
  int lead_sign = 0;
  for (const auto& c : coords_) {
    if (c.sign() != 0) {
      lead_sign = c.sign();
      break;
    }
  }
  const Rational factor(mpz_class(den_lcm * lead_sign), num_gcd);
  for (auto& c : coords_) c *= factor;
}

std::optional<std::array<Rational, 3>> ProjectivePoint::affine_coords() const {
  if (is_at_infinity()) return std::nullopt;
  return std::array<Rational, 3>{coords_[1] / coords_[0], coords_[2] / coords_[0],
                                 coords_[3] / coords_[0]};
}

std::string to_string(const ProjectivePoint& p) {
  return "(" + p[0].to_string() + ":" + p[1].to_string() + ":" + p[2].to_string() + ":" +
         p[3].to_string() + ")";
}

ProjectivePoint act_on_point(const DualQuaternion& h, const ProjectivePoint& pt) {
  if (!h.is_invertible()) fail(ErrorKind::kPrecondition, "not a displacement: primal part is zero");
  if (!h.satisfies_study_condition()) fail(ErrorKind::kPrecondition, "not on Study quadric");
  const Quaternion x = pt.as_quaternion();
  const Quaternion image = h.primal * x * h.primal.conj() + h.primal * h.dual.conj() * (2 * pt[0]);
  return ProjectivePoint::from_quaternion(image);
}

}  // namespace minmotion
