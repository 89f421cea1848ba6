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

#include "minmotion/quat_poly.hpp"

#include <algorithm>
#include <utility>

#include "minmotion/error.hpp"

namespace minmotion {

QuatPoly::QuatPoly(Quaternion constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

QuatPoly::QuatPoly(std::vector<Quaternion> ascending) : coeffs_(std::move(ascending)) { trim(); }

QuatPoly::QuatPoly(std::initializer_list<Quaternion> ascending) : coeffs_(ascending) { trim(); }

QuatPoly::QuatPoly(const RealPoly& p0, const RealPoly& p1, const RealPoly& p2,
                   const RealPoly& p3) {
  const RealPoly* parts[] = {&p0, &p1, &p2, &p3};
  int top = -1;
  for (const RealPoly* p : parts) {
    if (!p->is_zero()) top = std::max(top, p->deg());
  }
  coeffs_.resize(static_cast<std::size_t>(top + 1));
  for (int k = 0; k <= top; ++k) {
    auto& q = coeffs_[static_cast<std::size_t>(k)];
    for (int idx = 0; idx < 4; ++idx) q[idx] = parts[idx]->coeff(k);
  }
  trim();
}

void QuatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool QuatPoly::is_real() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Quaternion& q) { return q.is_real(); });
}

Degree QuatPoly::degree() const {
  if (coeffs_.empty()) return Degree::neg_infinity();
  return static_cast<int>(coeffs_.size()) - 1;
}

const Quaternion& QuatPoly::coeff(int k) const {
  static const Quaternion kZero{};
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Quaternion& QuatPoly::leading() const {
  if (coeffs_.empty()) fail(ErrorKind::kPrecondition, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

RealPoly QuatPoly::component(int idx) const {
  std::vector<Rational> c;
  c.reserve(coeffs_.size());
  for (const auto& q : coeffs_) c.push_back(q[idx]);
  return RealPoly(std::move(c));
}

std::array<RealPoly, 4> QuatPoly::components() const {
  return {component(0), component(1), component(2), component(3)};
}

QuatPoly QuatPoly::conj() const {
  QuatPoly r = *this;
  for (auto& q : r.coeffs_) q = q.conj();
  return r;
}

QuatPoly QuatPoly::monic() const {
  if (is_zero()) return *this;
  const Quaternion inv = leading().inverse();
  QuatPoly r = *this;
  for (auto& q : r.coeffs_) q = q * inv;
  r.coeffs_.back() = Quaternion::real(1);
  return r;
}

Quaternion QuatPoly::eval(const Rational& t) const {
  Quaternion acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

QuatPoly QuatPoly::operator-() const {
  QuatPoly r = *this;
  for (auto& q : r.coeffs_) q = -q;
  return r;
}

QuatPoly& QuatPoly::operator+=(const QuatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

QuatPoly& QuatPoly::operator-=(const QuatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

QuatPoly& QuatPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& q : coeffs_) q *= s;
  return *this;
}

QuatPoly operator*(const QuatPoly& a, const QuatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Quaternion> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QuatPoly(std::move(out));
}

DualQuaternion DualQuatPoly::leading() const {
  if (is_zero()) fail(ErrorKind::kPrecondition, "leading coefficient of zero polynomial");
  return coeff(degree().value());
}

RealPoly norm_poly(const QuatPoly& a) {
  const QuatPoly n = a * a.conj();
  check_internal(n.is_real(), "norm polynomial has vector part");
  return n.component(0);
}

QuatDivRem right_divrem(const QuatPoly& dividend, const QuatPoly& divisor) {
  if (divisor.is_zero()) fail(ErrorKind::kDivisionByZero, "quaternion polynomial division by zero");
  const int db = divisor.deg();
  const Quaternion inv_lead = divisor.leading().inverse();
  std::vector<Quaternion> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  const int da = static_cast<int>(rem.size()) - 1;
  std::vector<Quaternion> quot(da >= db ? static_cast<std::size_t>(da - db + 1) : 0);
  for (int k = da; k >= db; --k) {
    const Quaternion& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    // divisor * (factor t^(k-db)) cancels the top term: lead(divisor) * factor = top
    const Quaternion factor = inv_lead * top;
    quot[static_cast<std::size_t>(k - db)] = factor;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= divisor.coeff(j) * factor;
    }
  }
  rem.resize(static_cast<std::size_t>(std::max(0, std::min(da + 1, db))));
  return {QuatPoly(std::move(quot)), QuatPoly(std::move(rem))};
}

QuatPoly exact_right_quotient(const QuatPoly& a, const QuatPoly& b) {
  auto [q, r] = right_divrem(a, b);
  check_internal(r.is_zero(), "right division expected to be exact");
  return q;
}

bool left_divides(const QuatPoly& d, const QuatPoly& a) {
  return right_divrem(a, d).remainder.is_zero();
}

std::vector<QuatPoly> euclidean_remainders(const QuatPoly& f, const QuatPoly& g) {
  if (f.is_zero() && g.is_zero()) fail(ErrorKind::kPrecondition, "left gcd of two zero polynomials");
  std::vector<QuatPoly> seq;
  if (f.degree() >= g.degree()) {
    seq = {f, g};
  } else {
    seq = {g, f};
  }
  if (seq[1].is_zero()) {
    seq.pop_back();
    seq.back() = seq.back().monic();
    return seq;
  }
  // Right-multiplying a remainder by a unit does not change its left
  // divisors, so each remainder is kept monic to limit coefficient growth.
  seq[1] = seq[1].monic();
  while (true) {
    QuatPoly next = right_divrem(seq[seq.size() - 2], seq.back()).remainder;
    if (next.is_zero()) break;
    seq.push_back(next.monic());
  }
  return seq;
}

QuatPoly left_gcd(const QuatPoly& f, const QuatPoly& g) {
  return euclidean_remainders(f, g).back();
}

RealPoly mrpf(const QuatPoly& p) {
  if (p.is_zero()) fail(ErrorKind::kPrecondition, "mrpf of zero polynomial");
  RealPoly g;
  for (int idx = 0; idx < 4; ++idx) {
    const RealPoly c = p.component(idx);
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

NormFactors norm_factor(const QuatPoly& c, const RealPoly& r) {
  if (c.is_zero()) fail(ErrorKind::kPrecondition, "degenerate degree: zero quaternion polynomial");
  if (!r.is_monic()) fail(ErrorKind::kPrecondition, "norm factor must be monic");
  if (!divides(r, norm_poly(c))) fail(ErrorKind::kPrecondition, "r does not divide norm");
  if (!poly_gcd(r, mrpf(c)).is_constant()) {
    fail(ErrorKind::kPrecondition, "r shares real factor with c");
  }
  QuatPoly left = left_gcd(c, QuatPoly::lift(r));
  QuatPoly right = exact_right_quotient(c, left);
  check_internal(left * right == c, "left factor times quotient differs from input");
  check_internal(norm_poly(left) == r, "norm of left gcd differs from the prescribed factor");
  return {std::move(left), std::move(right)};
}

std::string to_string(const QuatPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.deg(); k >= 0; --k) {
    const Quaternion& q = p.coeff(k);
    if (q.is_zero()) continue;
    std::string term;
    const std::string power = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (k == 0) {
      term = "(" + to_string(q) + ")";
    } else if (q == Quaternion::real(1)) {
      term = power;
    } else {
      term = "(" + to_string(q) + ")*" + power;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

std::string to_string(const DualQuatPoly& p, const std::string& var) {
  return "[" + to_string(p.primal, var) + "] + eps*[" + to_string(p.dual, var) + "]";
}

}  // namespace minmotion
