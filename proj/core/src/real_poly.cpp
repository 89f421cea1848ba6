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

#include "minmotion/real_poly.hpp"

#include <algorithm>
#include <utility>

#include "minmotion/error.hpp"

namespace minmotion {

int Degree::value() const {
  if (!finite_) fail(ErrorKind::kPrecondition, "degree of the zero polynomial is -infinity");
  return value_;
}

std::string to_string(Degree d) {
  return d.is_neg_infinity() ? std::string("-inf") : std::to_string(d.value());
}

RealPoly::RealPoly(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

RealPoly::RealPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

RealPoly::RealPoly(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

RealPoly RealPoly::monomial(Rational coeff, int power) {
  if (power < 0) fail(ErrorKind::kPrecondition, "negative monomial power");
  std::vector<Rational> c(static_cast<std::size_t>(power) + 1);
  c.back() = std::move(coeff);
  return RealPoly(std::move(c));
}

void RealPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree RealPoly::degree() const {
  if (coeffs_.empty()) return Degree::neg_infinity();
  return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& RealPoly::coeff(int k) const {
  static const Rational kZero;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& RealPoly::leading() const {
  if (coeffs_.empty()) fail(ErrorKind::kPrecondition, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

RealPoly RealPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

RealPoly RealPoly::operator-() const {
  RealPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RealPoly& RealPoly::operator+=(const RealPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

RealPoly& RealPoly::operator-=(const RealPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

RealPoly& RealPoly::operator*=(const RealPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RealPoly& RealPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

PolyDivRem poly_divrem(const RealPoly& a, const RealPoly& b) {
  if (b.is_zero()) fail(ErrorKind::kDivisionByZero, "polynomial division by zero");
  const int db = b.deg();
  const Rational inv_lead = b.leading().inverse();
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  const int da = static_cast<int>(rem.size()) - 1;
  std::vector<Rational> quot(da >= db ? static_cast<std::size_t>(da - db + 1) : 0);
  for (int k = da; k >= db; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    const Rational factor = top * inv_lead;
    quot[static_cast<std::size_t>(k - db)] = factor;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(std::max(0, std::min(da + 1, db))));
  return {RealPoly(std::move(quot)), RealPoly(std::move(rem))};
}

RealPoly exact_div(const RealPoly& a, const RealPoly& b) {
  auto [q, r] = poly_divrem(a, b);
  check_internal(r.is_zero(), "polynomial division expected to be exact");
  return q;
}

bool divides(const RealPoly& divisor, const RealPoly& a) {
  return poly_divrem(a, divisor).remainder.is_zero();
}

RealPoly poly_gcd(const RealPoly& a, const RealPoly& b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorKind::kPrecondition, "gcd of two zero polynomials");
  RealPoly r0 = a.monic();
  RealPoly r1 = b.monic();
  while (!r1.is_zero()) {
    RealPoly r2 = poly_divrem(r0, r1).remainder.monic();
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0;
}

Rational poly_eval(const RealPoly& a, const Rational& t) {
  Rational acc;
  const auto c = a.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RealPoly moebius_substitute(const RealPoly& p, const Rational& a, const Rational& b,
                            const Rational& c, const Rational& d, int n) {
  if (!p.is_zero() && p.deg() > n) {
    fail(ErrorKind::kPrecondition, "homogenising degree below polynomial degree");
  }
  const RealPoly num{b, a};
  const RealPoly den{d, c};
  // powers of the numerator and denominator up to n
  std::vector<RealPoly> num_pow{RealPoly(1)};
  std::vector<RealPoly> den_pow{RealPoly(1)};
  for (int k = 1; k <= n; ++k) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  RealPoly out;
  for (int k = 0; k <= n; ++k) {
    const Rational& ck = p.coeff(k);
    if (ck.is_zero()) continue;
    out += ck * (num_pow[static_cast<std::size_t>(k)] * den_pow[static_cast<std::size_t>(n - k)]);
  }
  return out;
}

std::string to_string(const RealPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.deg(); k >= 0; --k) {
    const Rational& c = p.coeff(k);
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (k == 0) {
      out += mag.to_string();
      continue;
    }
    if (!unit) out += mag.to_string() + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace minmotion
