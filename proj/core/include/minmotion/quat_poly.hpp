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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "minmotion/quaternion.hpp"
#include "minmotion/real_poly.hpp"

namespace minmotion {

/// Polynomial in t with quaternion coefficients written to the left of t.
/// t commutes with all coefficients; coefficients do not commute with each
/// other.
class QuatPoly {
 public:
  QuatPoly() = default;
  QuatPoly(Quaternion constant);  // NOLINT(google-explicit-constructor)
  explicit QuatPoly(std::vector<Quaternion> ascending);
  QuatPoly(std::initializer_list<Quaternion> ascending);
  /// p0 + p1 i + p2 j + p3 k
  QuatPoly(const RealPoly& p0, const RealPoly& p1, const RealPoly& p2, const RealPoly& p3);
  /// Real polynomial lifted into H[t].
  static QuatPoly lift(const RealPoly& p) { return QuatPoly(p, {}, {}, {}); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_real() const;
  bool is_monic() const { return !is_zero() && leading() == Quaternion::real(1); }
  Degree degree() const;
  int deg() const { return degree().value(); }

  const Quaternion& coeff(int k) const;
  const Quaternion& leading() const;
  std::span<const Quaternion> coefficients() const { return coeffs_; }

  /// Real component polynomial (0 = scalar, 1..3 = i, j, k).
  RealPoly component(int idx) const;
  std::array<RealPoly, 4> components() const;

  QuatPoly conj() const;
  /// Right-multiplies by the inverse of the leading coefficient.
  QuatPoly monic() const;
  Quaternion eval(const Rational& t) const;

  QuatPoly operator-() const;
  QuatPoly& operator+=(const QuatPoly& o);
  QuatPoly& operator-=(const QuatPoly& o);
  QuatPoly& operator*=(const Rational& s);

  friend QuatPoly operator+(QuatPoly a, const QuatPoly& b) { return a += b; }
  friend QuatPoly operator-(QuatPoly a, const QuatPoly& b) { return a -= b; }
  friend QuatPoly operator*(QuatPoly a, const Rational& s) { return a *= s; }
  friend QuatPoly operator*(const Rational& s, QuatPoly a) { return a *= s; }
  friend QuatPoly operator*(const QuatPoly& a, const QuatPoly& b);
  friend QuatPoly operator*(const RealPoly& a, const QuatPoly& b) { return QuatPoly::lift(a) * b; }
  friend QuatPoly operator*(const QuatPoly& a, const RealPoly& b) { return a * QuatPoly::lift(b); }

  friend bool operator==(const QuatPoly&, const QuatPoly&) = default;

 private:
  void trim();
  std::vector<Quaternion> coeffs_;
};

inline QuatPoly qp_mul(const QuatPoly& a, const QuatPoly& b) { return a * b; }

/// C + eps D over H[t]. Degree is max(deg primal, deg dual).
struct DualQuatPoly {
  QuatPoly primal;
  QuatPoly dual;

  static DualQuatPoly constant(const DualQuaternion& h) { return {h.primal, h.dual}; }

  bool is_zero() const { return primal.is_zero() && dual.is_zero(); }
  Degree degree() const { return std::max(primal.degree(), dual.degree()); }
  DualQuaternion coeff(int k) const { return {primal.coeff(k), dual.coeff(k)}; }
  /// Coefficient at the top degree (C(infinity)).
  DualQuaternion leading() const;
  DualQuaternion eval(const Rational& t) const { return {primal.eval(t), dual.eval(t)}; }
  DualQuatPoly conj() const { return {primal.conj(), dual.conj()}; }

  friend DualQuatPoly operator+(const DualQuatPoly& a, const DualQuatPoly& b) {
    return {a.primal + b.primal, a.dual + b.dual};
  }
  friend DualQuatPoly operator*(const DualQuatPoly& a, const DualQuatPoly& b) {
    return {a.primal * b.primal, a.primal * b.dual + a.dual * b.primal};
  }
  friend bool operator==(const DualQuatPoly&, const DualQuatPoly&) = default;
};

inline DualQuatPoly qp_mul(const DualQuatPoly& a, const DualQuatPoly& b) { return a * b; }

/// A conj(A) as a real polynomial.
RealPoly norm_poly(const QuatPoly& a);

struct QuatDivRem {
  QuatPoly quotient;
  QuatPoly remainder;
};

/// Right division: dividend = divisor * quotient + remainder with
/// deg remainder < deg divisor. Note the factor order divisor * quotient.
QuatDivRem right_divrem(const QuatPoly& dividend, const QuatPoly& divisor);

/// Q with a = b Q; a nonzero remainder is an internal error.
QuatPoly exact_right_quotient(const QuatPoly& a, const QuatPoly& b);

/// True iff there is Q with a = d Q.
bool left_divides(const QuatPoly& d, const QuatPoly& a);

/// Remainder sequence R0, R1, R2, ... of the Euclidean algorithm, starting
/// with the higher-degree input and ending with the last nonzero remainder
/// (made monic). Degrees from R1 on strictly decrease.
std::vector<QuatPoly> euclidean_remainders(const QuatPoly& f, const QuatPoly& g);

/// Monic greatest common left divisor. Both inputs zero is an error.
QuatPoly left_gcd(const QuatPoly& f, const QuatPoly& g);

/// Maximal real polynomial factor: monic gcd of the four components.
RealPoly mrpf(const QuatPoly& p);

struct NormFactors {
  QuatPoly left;   // monic, left * conj(left) == r
  QuatPoly right;  // left * right == c
};

/// Splits c = P Q with P the monic left gcd of c and r and P conj(P) = r,
/// for a monic real r dividing c conj(c) with gcd(r, mrpf(c)) = 1.
NormFactors norm_factor(const QuatPoly& c, const RealPoly& r);

std::string to_string(const QuatPoly& p, const std::string& var = "t");
std::string to_string(const DualQuatPoly& p, const std::string& var = "t");

}  // namespace minmotion
