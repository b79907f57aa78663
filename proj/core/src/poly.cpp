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

#include "kn/poly.hpp"

#include "kn/errors.hpp"

namespace kn {

namespace {
const Rat kZero(0);
}

Poly::Poly(Rat constant) {
  if (constant != 0)
    coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

Poly Poly::monomial(int k, Rat c) {
  if (k < 0)
    throw Error("monomial exponent must be nonnegative");
  if (c == 0)
    return Poly();
  std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
  v.back() = std::move(c);
  return Poly(std::move(v));
}

Poly Poly::linear_root(const Rat& a) { return Poly({-a, Rat(1)}); }

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

const Rat& Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size()))
    return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rat& Poly::leading_coeff() const {
  if (is_zero())
    return kZero;
  return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    v[i] += o.coeffs_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rat> v(coeffs_);
  for (auto& c : v)
    c = -c;
  return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero())
    return Poly();
  std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rat& c) const {
  if (c == 0)
    return Poly();
  std::vector<Rat> v(coeffs_);
  for (auto& x : v)
    x *= c;
  return Poly(std::move(v));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1)
    return Poly();
  std::vector<Rat> v(coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    v[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(v));
}

Rat Poly::eval(const Rat& a) const {
  Rat r(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    r = r * a + *it;
  return r;
}

Poly Poly::shifted(const Rat& a) const {
  // Horner with respect to (z + a): p(z + a) accumulated term by term.
  Poly r;
  const Poly shift({a, Rat(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    r = r * shift + Poly(*it);
  return r;
}

Poly Poly::reversed(int n) const {
  if (is_zero())
    return Poly();
  if (n < degree())
    throw Error("reversal degree below polynomial degree");
  std::vector<Rat> v(static_cast<std::size_t>(n) + 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    v[static_cast<std::size_t>(n) - i] = coeffs_[i];
  return Poly(std::move(v));
}

Poly Poly::pow(int e) const {
  if (e < 0)
    throw Error("negative polynomial power");
  Poly r(Rat(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1)
      r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero())
    return Poly();
  Rat inv = 1 / leading_coeff();
  return *this * inv;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero())
    throw ZeroDenominatorError("polynomial division by zero");
  Poly q;
  Poly r = *this;
  const int dd = d.degree();
  const Rat lead_inv = 1 / d.leading_coeff();
  while (!r.is_zero() && r.degree() >= dd) {
    const int k = r.degree() - dd;
    const Rat c = r.leading_coeff() * lead_inv;
    const Poly t = Poly::monomial(k, c);
    q = q + t;
    r = r - t * d;
  }
  return {q, r};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

int Poly::root_multiplicity(const Rat& a) const {
  if (is_zero())
    throw Error("root multiplicity of the zero polynomial");
  int m = 0;
  Poly p = *this;
  const Poly lin = Poly::linear_root(a);
  while (p.eval(a) == 0) {
    auto [q, r] = p.divmod(lin);
    p = std::move(q);
    ++m;
  }
  return m;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero())
    return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeff(k);
    if (c == 0)
      continue;
    const bool neg = c < 0;
    const Rat a = abs(c);
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    const bool unit = a == 1 && k > 0;
    if (!unit)
      s += rat_to_string(a);
    if (k > 0) {
      if (!unit)
        s += "*";
      s += var;
      if (k > 1)
        s += "^" + std::to_string(k);
    }
  }
  return s;
}

} // namespace kn
