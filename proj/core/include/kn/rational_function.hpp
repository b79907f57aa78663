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

#ifndef KN_RATIONAL_FUNCTION_HPP
#define KN_RATIONAL_FUNCTION_HPP

#include <optional>
#include <string>

#include "kn/poly.hpp"

namespace kn {

/// Rational function over Q in fully reduced canonical form: the
/// denominator is monic and coprime to the numerator; the zero function is
/// 0/1.  Equality of canonical forms is equality of functions.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(Rat(1)) {}
  explicit RationalFunction(Rat constant)
      : num_(std::move(constant)), den_(Rat(1)) {}
  explicit RationalFunction(Poly num) : num_(std::move(num)), den_(Rat(1)) {}
  /// Reduces num/den; throws ZeroDenominatorError when den = 0.
  RationalFunction(Poly num, Poly den);

  /// The coordinate function z.
  static RationalFunction z();

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator*(const Rat& c) const;
  /// Throws ZeroDenominatorError when o = 0.
  RationalFunction operator/(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  RationalFunction derivative() const;
  /// Integer power; negative exponents invert (throws on zero base).
  RationalFunction pow(int e) const;
  /// Composition (*this) o inner, a rational function of the inner variable.
  /// Throws ZeroDenominatorError when the denominator pulls back to 0
  /// (possible only when this is non-constant and inner is constant).
  RationalFunction compose(const RationalFunction& inner) const;

  /// Value at a; nullopt at a pole.
  std::optional<Rat> eval(const Rat& a) const;

  /// Vanishing order at the finite point a (negative at poles);
  /// nullopt for the zero function.
  std::optional<int> order_at_finite(const Rat& a) const;
  /// Vanishing order at infinity in the function sense
  /// (deg den - deg num); nullopt for the zero function.
  std::optional<int> order_at_infinity() const;

  std::string to_string(const std::string& var = "z") const;

private:
  void reduce();
  Poly num_, den_;
};

} // namespace kn

#endif
