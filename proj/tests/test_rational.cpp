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
#include "kn/rational.hpp"

using namespace kn;

TEST_CASE("integer and fraction literals parse canonically") {
  CHECK(rat_from_string("7") == Rat(7));
  CHECK(rat_from_string("-12") == Rat(-12));
  CHECK(rat_from_string("3/4") == Rat(3, 4));
  CHECK(rat_from_string("6/8") == Rat(3, 4));
  CHECK(rat_from_string("-6/4") == Rat(-3, 2));
  CHECK(rat_from_string("5/-10") == Rat(-1, 2));
  CHECK(rat_from_string("+9") == Rat(9));
  CHECK(rat_from_string("-0") == Rat(0));
}

TEST_CASE("decimal literals become exact fractions") {
  CHECK(rat_from_string("-2.5") == Rat(-5, 2));
  CHECK(rat_from_string("0.125") == Rat(1, 8));
  CHECK(rat_from_string("3.") == Rat(3));
  CHECK(rat_from_string(".5") == Rat(1, 2));
}

TEST_CASE("malformed literals are rejected") {
  CHECK_THROWS_AS(rat_from_string(""), ParseError);
  CHECK_THROWS_AS(rat_from_string("abc"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1/2/3"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rat_from_string("--3"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1.2.3"), ParseError);
  CHECK_THROWS_AS(rat_from_string("."), ParseError);
  CHECK_THROWS_AS(rat_from_string("1e3"), ParseError);
}

TEST_CASE("printing uses p or p/q form") {
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK(rat_to_string(Rat(-7, 3)) == "-7/3");
  CHECK(rat_to_string(Rat(0)) == "0");
  CHECK(rat_from_string(rat_to_string(Rat(22, 7))) == Rat(22, 7));
}

TEST_CASE("integrality predicates and conversion") {
  CHECK(rat_is_integer(Rat(4, 2)));
  CHECK(!rat_is_integer(Rat(1, 2)));
  CHECK(rat_to_long(Rat(-9)) == -9);
}
