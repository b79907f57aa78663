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

#ifndef KN_POLY_HPP
#define KN_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "kn/rational.hpp"

namespace kn {

/// Univariate polynomial over Q, coefficients stored low degree first with
/// no trailing zeros.  The zero polynomial has an empty coefficient vector
/// and degree -1 by convention.
class Poly {
public:
  Poly() = default;
  explicit Poly(Rat constant);
  explicit Poly(std::vector<Rat> coeffs);

  /// The monomial c * z^k.
  static Poly monomial(int k, Rat c = Rat(1));
  /// z - a.
  static Poly linear_root(const Rat& a);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of z^k (0 outside the stored range).
  const Rat& coeff(int k) const;
  const Rat& leading_coeff() const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

  Poly derivative() const;
  Rat eval(const Rat& a) const;
  /// p(z + a).
  Poly shifted(const Rat& a) const;
  /// z^n * p(1/z); requires n >= degree.
  Poly reversed(int n) const;
  Poly pow(int e) const;
  /// Divide by the leading coefficient; zero stays zero.
  Poly monic() const;

  /// Euclidean division: returns (quotient, remainder).
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  /// Monic greatest common divisor.
  static Poly gcd(Poly a, Poly b);

  /// Multiplicity of the root a (0 when p(a) != 0); requires p != 0.
  int root_multiplicity(const Rat& a) const;

  /// Human-readable form like "2*z^2 - 1/3" (for diagnostics).
  std::string to_string(const std::string& var = "z") const;

private:
  void normalize();
  std::vector<Rat> coeffs_;
};

} // namespace kn

#endif
