/* Copyright 2026 the knzero authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "kn/rational_function.hpp"

#include "kn/errors.hpp"

namespace kn {

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw ZeroDenominatorError("rational function with zero denominator");
  reduce();
}

RationalFunction RationalFunction::z() {
  return RationalFunction(Poly::monomial(1));
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  const Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  const Rat lead = den_.leading_coeff();
  if (lead != 1) {
    const Rat inv = 1 / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const Rat& c) const {
  RationalFunction r = *this;
  r.num_ = r.num_ * c;
  if (c == 0)
    r.den_ = Poly(Rat(1));
  return r;
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero())
    throw ZeroDenominatorError("division by the zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                          den_ * den_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e == 0)
    return RationalFunction(Rat(1));
  if (e < 0) {
    if (is_zero())
      throw ZeroDenominatorError("negative power of the zero function");
    return RationalFunction(den_.pow(-e), num_.pow(-e));
  }
  return RationalFunction(num_.pow(e), den_.pow(e));
}

RationalFunction RationalFunction::compose(const RationalFunction& inner)
    const {
  // p(inner)/q(inner) cleared to one fraction: with inner = a/b and
  // d = max(deg p, deg q),
  //   p(a/b) b^d / (q(a/b) b^d)
  // keeps everything polynomial.
  const int d = std::max(num_.degree(), den_.degree());
  if (d <= 0)
    return *this;
  const Poly& a = inner.num();
  const Poly& b = inner.den();
  // acc_n = sum_k num_k a^k b^(d-k); acc_d likewise for den.
  Poly acc_n, acc_d;
  for (int k = 0; k <= d; ++k) {
    const Poly abk = a.pow(k) * b.pow(d - k);
    if (num_.coeff(k) != 0)
      acc_n = acc_n + abk * num_.coeff(k);
    if (den_.coeff(k) != 0)
      acc_d = acc_d + abk * den_.coeff(k);
  }
  if (acc_d.is_zero())
    throw ZeroDenominatorError("composition denominator vanishes identically");
  return RationalFunction(std::move(acc_n), std::move(acc_d));
}

std::optional<Rat> RationalFunction::eval(const Rat& a) const {
  const Rat d = den_.eval(a);
  if (d == 0)
    return std::nullopt;
  return num_.eval(a) / d;
}

std::optional<int> RationalFunction::order_at_finite(const Rat& a) const {
  if (is_zero())
    return std::nullopt;
  return num_.root_multiplicity(a) - den_.root_multiplicity(a);
}

std::optional<int> RationalFunction::order_at_infinity() const {
  if (is_zero())
    return std::nullopt;
  return den_.degree() - num_.degree();
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_.degree() == 0)
    return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

} // namespace kn
