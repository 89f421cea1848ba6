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
#include <optional>
#include <ostream>
#include <string>

#include "minmotion/rational.hpp"

namespace minmotion {

/// w + x i + y j + z k with ij = k, jk = i, ki = j.
struct Quaternion {
  Rational w, x, y, z;

  static Quaternion real(Rational r) { return {std::move(r), 0, 0, 0}; }
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }
  static Quaternion vector(Rational vx, Rational vy, Rational vz) {
    return {0, std::move(vx), std::move(vy), std::move(vz)};
  }

  bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
  bool is_real() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
  bool is_vector() const { return w.is_zero(); }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  /// q * conj(q), the sum of squared coefficients.
  Rational norm() const { return w * w + x * x + y * y + z * z; }
  Quaternion inverse() const;

  const Rational& operator[](int idx) const;
  Rational& operator[](int idx);

  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const Rational& s);

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(Quaternion a, const Rational& s) { return a *= s; }
  friend Quaternion operator*(const Rational& s, Quaternion a) { return a *= s; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

std::string to_string(const Quaternion& q);
inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << to_string(q); }

/// primal + eps * dual with eps^2 = 0.
struct DualNumber {
  Rational primal;
  Rational dual;
  friend bool operator==(const DualNumber&, const DualNumber&) = default;
};

/// h = p + eps q. eps commutes with i, j, k and squares to zero.
struct DualQuaternion {
  Quaternion primal;
  Quaternion dual;

  static DualQuaternion identity() { return {Quaternion::real(1), {}}; }

  bool is_invertible() const { return !primal.is_zero(); }
  DualQuaternion conj() const { return {primal.conj(), dual.conj()}; }
  DualQuaternion inverse() const;
  /// p conj(q) + q conj(p) = 0
  bool satisfies_study_condition() const;

  DualQuaternion operator-() const { return {-primal, -dual}; }
  friend DualQuaternion operator+(const DualQuaternion& a, const DualQuaternion& b) {
    return {a.primal + b.primal, a.dual + b.dual};
  }
  friend DualQuaternion operator-(const DualQuaternion& a, const DualQuaternion& b) {
    return {a.primal - b.primal, a.dual - b.dual};
  }
  friend DualQuaternion operator*(const DualQuaternion& a, const DualQuaternion& b) {
    return {a.primal * b.primal, a.primal * b.dual + a.dual * b.primal};
  }
  friend bool operator==(const DualQuaternion&, const DualQuaternion&) = default;
};

inline DualQuaternion dq_mul(const DualQuaternion& a, const DualQuaternion& b) { return a * b; }
inline DualQuaternion dq_conj(const DualQuaternion& h) { return h.conj(); }
/// h conj(h). The product never has i, j or k components.
DualNumber dq_norm(const DualQuaternion& h);

std::string to_string(const DualQuaternion& h);

/// Point of P^3 as (x0 : x1 : x2 : x3), x0 the homogenising coordinate.
/// Stored canonically: integer coordinates with gcd 1 and the first nonzero
/// coordinate positive, so projective equality is plain equality.
class ProjectivePoint {
 public:
  ProjectivePoint(Rational x0, Rational x1, Rational x2, Rational x3);
  static ProjectivePoint affine(const Rational& x, const Rational& y, const Rational& z) {
    return ProjectivePoint(1, x, y, z);
  }
  static ProjectivePoint origin() { return ProjectivePoint(1, 0, 0, 0); }
  static ProjectivePoint from_quaternion(const Quaternion& q) {
    return ProjectivePoint(q.w, q.x, q.y, q.z);
  }

  const Rational& operator[](int idx) const { return coords_.at(static_cast<std::size_t>(idx)); }
  const std::array<Rational, 4>& coords() const { return coords_; }
  Quaternion as_quaternion() const { return {coords_[0], coords_[1], coords_[2], coords_[3]}; }

  bool is_at_infinity() const { return coords_[0].is_zero(); }
  /// Affine coordinates (x1/x0, x2/x0, x3/x0), empty for points at infinity.
  std::optional<std::array<Rational, 3>> affine_coords() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  std::array<Rational, 4> coords_;
};

std::string to_string(const ProjectivePoint& p);
inline std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p) {
  return os << to_string(p);
}

/// p x conj(p) + 2 x0 p conj(q) for h = p + eps q on the Study quadric.
/// Throws kPrecondition if p = 0 or the Study condition fails.
ProjectivePoint act_on_point(const DualQuaternion& h, const ProjectivePoint& pt);

}  // namespace minmotion
