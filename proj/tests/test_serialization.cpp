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

#include "kn/basis.hpp"
#include "kn/errors.hpp"
#include "kn/serialization.hpp"

using namespace kn;

TEST_CASE("point configuration round trips through json") {
  const PointConfig cfg({Point(Rat(0)), Point(Rat(1, 2))},
                        {Point(Rat(-3)), Point::infinity()});
  const nlohmann::json j = config_to_json(cfg);
  CHECK(j["in"] == nlohmann::json::array({"0", "1/2"}));
  CHECK(j["out"] == nlohmann::json::array({"-3", "inf"}));
  const PointConfig back = config_from_json(j);
  CHECK(back.n_in() == 2);
  CHECK(back.n_out() == 2);
  CHECK(back.out_points()[1].is_infinity());
  CHECK(back.in_points()[1].value() == Rat(1, 2));
}

TEST_CASE("malformed configuration json raises parse errors") {
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse("{\"in\": []}")),
                  ParseError);
  CHECK_THROWS_AS(
      config_from_json(nlohmann::json::parse("{\"in\": [\"0\"]}")),
      ParseError);
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(
                      "{\"in\": [\"zz\"], \"out\": [\"inf\"]}")),
                  ParseError);
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(
                      "{\"in\": 3, \"out\": [\"inf\"]}")),
                  ParseError);
}

TEST_CASE("basis elements serialize with display and orders") {
  KNBasisTable table(PointConfig::classical());
  const nlohmann::json j = basis_element_to_json(table, KNIndex{0, 2, 1});
  CHECK(j["index"]["weight"] == 0);
  CHECK(j["index"]["degree"] == 2);
  CHECK(j["index"]["label"] == 1);
  // Classical weight-0 degree-2 element is z^2.
  CHECK(j["numerator"] ==
        nlohmann::json::array({"0", "0", "1"}));
  CHECK(j["denominator"] == nlohmann::json::array({"1"}));
  CHECK(j["orders"]["0"] == 2);
  CHECK(j["orders"]["inf"] == -2);
}

TEST_CASE("cocycle tables round trip with locality bound") {
  CocycleTable t({-2, 2}, 2);
  t.set(DegLabel{-2, 1}, DegLabel{2, 2}, Rat(5, 3));
  t.set(DegLabel{-1, 2}, DegLabel{1, 1}, Rat(-7));
  const nlohmann::json j = cocycle_table_to_json(t);
  CHECK(j["window"] == nlohmann::json::array({-2, 2}));
  CHECK(j["labels"] == 2);
  CHECK(j["bound_T"] == 0);
  CHECK(j["pairs"].size() == 2);

  const CocycleTable back = cocycle_table_from_json(j);
  CHECK(back.window() == std::make_pair(-2, 2));
  CHECK(back.labels() == 2);
  CHECK(back.get(DegLabel{2, 2}, DegLabel{-2, 1}) == Rat(-5, 3));
  CHECK(back.get(DegLabel{-1, 2}, DegLabel{1, 1}) == Rat(-7));
  CHECK(back.entries().size() == 2);

  CocycleTable viol({0, 3}, 1);
  viol.set(DegLabel{1, 1}, DegLabel{2, 1}, Rat(1));
  CHECK(cocycle_table_to_json(viol)["bound_T"].is_null());
}

TEST_CASE("module vectors serialize monomials factor by factor") {
  ModuleVec v = ModuleVec::vacuum() * Rat(2, 7);
  v.add(PBWMonomial{GenKey{-1, 1, 0}, GenKey{0, 1, 2}}, Rat(-3));
  const nlohmann::json j = module_vec_to_json(v);
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["monomial"] == nlohmann::json::array());
  CHECK(j["terms"][0]["coeff"] == "2/7");
  CHECK(j["terms"][1]["monomial"] ==
        nlohmann::json::parse("[[0, -1, 1], [2, 0, 1]]"));
  CHECK(j["terms"][1]["coeff"] == "-3");
}

TEST_CASE("canonical dump is deterministic and sorted") {
  nlohmann::json a;
  a["zebra"] = 1;
  a["alpha"] = nlohmann::json::array({1, 2});
  const std::string s = dump_json(a);
  CHECK(s == "{\n  \"alpha\": [\n    1,\n    2\n  ],\n  \"zebra\": 1\n}\n");
  nlohmann::json b;
  b["alpha"] = nlohmann::json::array({1, 2});
  b["zebra"] = 1;
  CHECK(dump_json(b) == s);
}
