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

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "minmotion/rational.hpp"

namespace minmotion {

/// Polynomial degree with a distinguished value for the zero polynomial that
/// orders below every finite degree. There is no arithmetic on it.
class Degree {
 public:
  constexpr Degree(int value) : value_(value), finite_(true) {}  // NOLINT
  static constexpr Degree neg_infinity() { return Degree(); }

  constexpr bool is_neg_infinity() const { return !finite_; }
  /// Throws for the zero polynomial's degree.
  int value() const;

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.finite_ && b.finite_) return a.value_ <=> b.value_;
    if (a.finite_ == b.finite_) return std::strong_ordering::equal;
    return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }

 private:
  constexpr Degree() : value_(0), finite_(false) {}
  int value_;
  bool finite_;
};

std::string to_string(Degree d);

/// Univariate polynomial with Rational coefficients in ascending order.
/// Trailing zeros are always stripped, so the leading coefficient of a
/// nonzero polynomial is nonzero.
class RealPoly {
 public:
  RealPoly() = default;
  RealPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  RealPoly(std::int64_t constant) : RealPoly(Rational(constant)) {}  // NOLINT
  explicit RealPoly(std::vector<Rational> ascending);
  RealPoly(std::initializer_list<Rational> ascending);

  static RealPoly monomial(Rational coeff, int power);
  /// The indeterminate t.
  static RealPoly t() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !is_zero() && leading() == Rational(1); }
  Degree degree() const;
  /// Degree for a polynomial known to be nonzero; throws otherwise.
  int deg() const { return degree().value(); }

  /// Coefficient of t^k; zero outside the stored range.
  const Rational& coeff(int k) const;
  const Rational& leading() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Divides by the leading coefficient. The zero polynomial stays zero.
  RealPoly monic() const;

  RealPoly operator-() const;
  RealPoly& operator+=(const RealPoly& o);
  RealPoly& operator-=(const RealPoly& o);
  RealPoly& operator*=(const RealPoly& o);
  RealPoly& operator*=(const Rational& s);

  friend RealPoly operator+(RealPoly a, const RealPoly& b) { return a += b; }
  friend RealPoly operator-(RealPoly a, const RealPoly& b) { return a -= b; }
  friend RealPoly operator*(RealPoly a, const RealPoly& b) { return a *= b; }

  friend bool operator==(const RealPoly&, const RealPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct PolyDivRem {
  RealPoly quotient;
  RealPoly remainder;
};

/// a = b*q + r with deg r < deg b. Throws kDivisionByZero for b = 0.
PolyDivRem poly_divrem(const RealPoly& a, const RealPoly& b);

/// Quotient of a division known to be exact; a nonzero remainder is an
/// internal error.
RealPoly exact_div(const RealPoly& a, const RealPoly& b);

bool divides(const RealPoly& divisor, const RealPoly& a);

/// Monic gcd. gcd(a, 0) = monic(a); both zero is a precondition error.
RealPoly poly_gcd(const RealPoly& a, const RealPoly& b);

Rational poly_eval(const RealPoly& a, const Rational& t);

/// Homogenised substitution t = (a s + b) / (c s + d), multiplied through by
/// (c s + d)^n. Requires n >= deg p.
RealPoly moebius_substitute(const RealPoly& p, const Rational& a, const Rational& b,
                            const Rational& c, const Rational& d, int n);

/// Human-readable form such as "t^2 - 2*t + 1/3".
std::string to_string(const RealPoly& p, const std::string& var = "t");

}  // namespace minmotion
