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

#include <doctest.h>

#include "kn/errors.hpp"
#include "kn/rational_function.hpp"

using namespace kn;

namespace {
const RationalFunction z = RationalFunction::z();
RationalFunction inv(const RationalFunction& f) { return f.pow(-1); }
} // namespace

TEST_CASE("fractions reduce to lowest terms with monic denominator") {
  const Poly num = Poly::monomial(2) - Poly(Rat(1));
  const Poly den = Poly::linear_root(Rat(1));
  const RationalFunction f(num, den);
  CHECK(f == z + RationalFunction(Rat(1)));
  CHECK(f.den() == Poly(Rat(1)));

  const RationalFunction g(num * Rat(2), den * Rat(4));
  CHECK(g.den().leading_coeff() == Rat(1));
  CHECK(g == (z + RationalFunction(Rat(1))) * Rat(1, 2));
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(RationalFunction(Poly(Rat(1)), Poly()),
                  ZeroDenominatorError);
  CHECK_THROWS_AS(z / RationalFunction(), ZeroDenominatorError);
}

TEST_CASE("field arithmetic has exact partial fractions") {
  const RationalFunction f = inv(z - RationalFunction(Rat(1)));
  const RationalFunction g = inv(z + RationalFunction(Rat(1)));
  const RationalFunction sum = f + g;
  // 1/(z-1) + 1/(z+1) = 2z/(z^2-1)
  CHECK(sum == (z * Rat(2)) / (z * z - RationalFunction(Rat(1))));
  CHECK(sum - g == f);
  CHECK(f * g == inv(z * z - RationalFunction(Rat(1))));
  CHECK((f / g) ==
        (z + RationalFunction(Rat(1))) / (z - RationalFunction(Rat(1))));
}

TEST_CASE("derivative uses the quotient rule") {
  CHECK(inv(z).derivative() == -inv(z * z));
  const RationalFunction f = (z * z) / (z - RationalFunction(Rat(1)));
  // f' = (z^2 - 2z)/(z-1)^2
  const RationalFunction expect =
      (z * z - z * Rat(2)) /
      (RationalFunction(Poly::linear_root(Rat(1)).pow(2)));
  CHECK(f.derivative() == expect);
}

TEST_CASE("composition clears inner denominators") {
  const RationalFunction f = z * z + RationalFunction(Rat(1));
  CHECK(f.compose(inv(z)) == (RationalFunction(Rat(1)) + z * z) / (z * z));
  const RationalFunction id = z;
  const RationalFunction moebius =
      (z * Rat(2) + RationalFunction(Rat(1))) / (z - RationalFunction(Rat(3)));
  CHECK(moebius.compose(id) == moebius);
  CHECK(id.compose(moebius) == moebius);
}

TEST_CASE("orders at finite points and infinity") {
  const RationalFunction f = (z * z) / (z - RationalFunction(Rat(1)));
  CHECK(f.order_at_finite(Rat(0)) == 2);
  CHECK(f.order_at_finite(Rat(1)) == -1);
  CHECK(f.order_at_finite(Rat(2)) == 0);
  CHECK(f.order_at_infinity() == -1); // grows like z
  CHECK(inv(z).order_at_infinity() == 1);
  CHECK(!RationalFunction().order_at_infinity().has_value());
  CHECK(!RationalFunction().order_at_finite(Rat(0)).has_value());
}

TEST_CASE("evaluation avoids poles") {
  const RationalFunction f = inv(z - RationalFunction(Rat(1)));
  CHECK(f.eval(Rat(3)) == Rat(1, 2));
  CHECK(!f.eval(Rat(1)).has_value());
}

TEST_CASE("negative powers invert") {
  const RationalFunction f = z * Rat(2);
  CHECK(f.pow(-2) == inv(z * z * Rat(4)));
  CHECK(f.pow(0) == RationalFunction(Rat(1)));
  CHECK_THROWS_AS(RationalFunction().pow(-1), ZeroDenominatorError);
}
