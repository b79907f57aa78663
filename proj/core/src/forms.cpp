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

#include "kn/forms.hpp"

#include "kn/errors.hpp"

namespace kn {

MeroForm MeroForm::operator+(const MeroForm& o) const {
  if (weight != o.weight)
    throw WrongWeightError("adding forms of different weights");
  return {weight, rep + o.rep};
}

MeroForm MeroForm::operator-(const MeroForm& o) const {
  if (weight != o.weight)
    throw WrongWeightError("subtracting forms of different weights");
  return {weight, rep - o.rep};
}

RationalFunction rep_at_infinity(const MeroForm& f) {
  // z = 1/u, dz = -u^-2 du: g(z) dz^w = g(1/u) (-u^-2)^w du^w.
  const RationalFunction inv =
      RationalFunction(Poly(Rat(1)), Poly::monomial(1));
  const RationalFunction jac =
      RationalFunction(Poly(Rat(-1)), Poly::monomial(2));
  return f.rep.compose(inv) * jac.pow(f.weight);
}

std::optional<int> order_at(const MeroForm& f, const Point& p) {
  if (f.is_zero())
    return std::nullopt;
  if (p.is_infinity())
    return *f.rep.order_at_infinity() - 2 * f.weight;
  return f.rep.order_at_finite(p.value());
}

LocalExpansion::LocalExpansion(Point point, int lo, int hi,
                               std::vector<Rat> coeffs)
    : point_(std::move(point)), lo_(lo), hi_(hi), coeffs_(std::move(coeffs)) {
  if (hi_ < lo_ || coeffs_.size() != static_cast<std::size_t>(hi_ - lo_ + 1))
    throw Error("local expansion window does not match coefficient count");
}

const Rat& LocalExpansion::coeff(int k) const {
  if (k < lo_ || k > hi_)
    throw NotInWindowError(
        "local expansion coefficient outside the computed window");
  return coeffs_[static_cast<std::size_t>(k - lo_)];
}

namespace {

/// Laurent coefficients (orders lo..hi) of num/den at t = 0, den != 0.
std::vector<Rat> laurent_at_origin(const Poly& num, const Poly& den, int lo,
                                   int hi) {
  std::vector<Rat> out(static_cast<std::size_t>(hi - lo + 1), Rat(0));
  if (num.is_zero())
    return out;
  // Strip the power of t dividing the denominator: den = t^k * u, u(0) != 0.
  int k = 0;
  Poly u = den;
  while (u.coeff(0) == 0) {
    std::vector<Rat> shifted(u.coeffs().begin() + 1, u.coeffs().end());
    u = Poly(std::move(shifted));
    ++k;
  }
  // num / den = t^-k * num * u^-1; we need series coefficients of
  // num * u^-1 for orders lo + k .. hi + k.
  const int top = hi + k;
  if (top < 0)
    return out;
  // Power series inverse of the unit u up to order `top`.
  std::vector<Rat> inv(static_cast<std::size_t>(top) + 1, Rat(0));
  const Rat u0inv = 1 / u.coeff(0);
  inv[0] = u0inv;
  for (int n = 1; n <= top; ++n) {
    Rat s(0);
    for (int j = 1; j <= n; ++j)
      s += u.coeff(j) * inv[static_cast<std::size_t>(n - j)];
    inv[static_cast<std::size_t>(n)] = -u0inv * s;
  }
  for (int n = std::max(0, lo + k); n <= top; ++n) {
    Rat s(0);
    for (int j = 0; j <= n; ++j) {
      const Rat& c = num.coeff(j);
      if (c != 0)
        s += c * inv[static_cast<std::size_t>(n - j)];
    }
    out[static_cast<std::size_t>(n - k - lo)] = s;
  }
  return out;
}

} // namespace

LocalExpansion local_expansion(const MeroForm& f, const Point& p, int lo,
                               int hi) {
  if (hi < lo)
    throw Error("empty local expansion window");
  if (p.is_infinity()) {
    const RationalFunction g = rep_at_infinity(f);
    return LocalExpansion(p, lo, hi,
                          laurent_at_origin(g.num(), g.den(), lo, hi));
  }
  const Rat& a = p.value();
  const Poly num = f.rep.num().shifted(a);
  const Poly den = f.rep.den().shifted(a);
  return LocalExpansion(p, lo, hi, laurent_at_origin(num, den, lo, hi));
}

Rat residue_at(const MeroForm& f, const Point& p) {
  if (f.weight != 1)
    throw WrongWeightError("residue of a form of weight != 1");
  if (f.is_zero())
    return Rat(0);
  const auto ord = order_at(f, p);
  if (*ord >= 0)
    return Rat(0);
  return local_expansion(f, p, -1, -1).coeff(-1);
}

Rat contour_integral(const MeroForm& f, const std::vector<Point>& points) {
  Rat s(0);
  for (const auto& p : points)
    s += residue_at(f, p);
  return s;
}

MeroForm form_product(const MeroForm& a, const MeroForm& b) {
  return {a.weight + b.weight, a.rep * b.rep};
}

MeroForm exterior_derivative(const MeroForm& f) {
  if (f.weight != 0)
    throw WrongWeightError("exterior derivative expects a weight-0 form");
  return {1, f.rep.derivative()};
}

MeroForm lie_derivative(const MeroForm& e, const MeroForm& g) {
  if (e.weight != -1)
    throw WrongWeightError("lie derivative along a form of weight != -1");
  return {g.weight, e.rep * g.rep.derivative() +
                        g.rep * e.rep.derivative() * Rat(g.weight)};
}

RationalFunction schwarzian(const RationalFunction& h) {
  const RationalFunction h1 = h.derivative();
  if (h1.is_zero())
    throw DegenerateMapError("schwarzian of a locally constant map");
  const RationalFunction h2 = h1.derivative();
  const RationalFunction h3 = h2.derivative();
  const RationalFunction q = h2 / h1;
  return h3 / h1 - q * q * Rat(3, 2);
}

} // namespace kn
