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

#include "kn/serialization.hpp"

#include "kn/errors.hpp"
#include "kn/forms.hpp"

namespace kn {

namespace {

nlohmann::json poly_coeffs_to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Rat& c : p.coeffs())
    arr.push_back(rat_to_string(c));
  if (arr.empty())
    arr.push_back("0");
  return arr;
}

std::vector<Point> points_from_json(const nlohmann::json& arr,
                                    const char* field) {
  if (!arr.is_array())
    throw ParseError(std::string("config field '") + field +
                     "' must be an array of point strings");
  std::vector<Point> points;
  for (const auto& entry : arr) {
    if (!entry.is_string())
      throw ParseError(std::string("config field '") + field +
                       "' must contain strings");
    points.push_back(Point::from_string(entry.get<std::string>()));
  }
  return points;
}

} // namespace

nlohmann::json config_to_json(const PointConfig& cfg) {
  nlohmann::json j;
  j["in"] = nlohmann::json::array();
  for (const Point& p : cfg.in_points())
    j["in"].push_back(p.to_string());
  j["out"] = nlohmann::json::array();
  for (const Point& p : cfg.out_points())
    j["out"].push_back(p.to_string());
  return j;
}

PointConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("in") || !j.contains("out"))
    throw ParseError("config must be an object with 'in' and 'out' arrays");
  return PointConfig(points_from_json(j["in"], "in"),
                     points_from_json(j["out"], "out"));
}

nlohmann::json basis_element_to_json(const KNBasisTable& table,
                                     const KNIndex& idx) {
  const KNBasisElement& el = table.element(idx);
  nlohmann::json j;
  j["index"] = {{"weight", idx.weight},
                {"degree", idx.degree},
                {"label", idx.label}};
  j["numerator"] = poly_coeffs_to_json(el.form.rep.num());
  j["denominator"] = poly_coeffs_to_json(el.form.rep.den());
  j["display"] = el.form.rep.to_string();
  nlohmann::json orders = nlohmann::json::object();
  for (const Point& p : table.config().all_points()) {
    auto o = order_at(el.form, p);
    orders[p.to_string()] = o ? nlohmann::json(*o) : nlohmann::json();
  }
  j["orders"] = orders;
  return j;
}

nlohmann::json cocycle_table_to_json(const CocycleTable& table) {
  nlohmann::json j;
  j["window"] = {table.window().first, table.window().second};
  j["labels"] = table.labels();
  try {
    j["bound_T"] = table.locality_bound();
  } catch (const UpperBandViolationError&) {
    j["bound_T"] = nullptr;
  }
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [key, value] : table.entries()) {
    nlohmann::json entry;
    entry["a"] = {key.first.degree, key.first.label};
    entry["b"] = {key.second.degree, key.second.label};
    entry["value"] = rat_to_string(value);
    pairs.push_back(entry);
  }
  j["pairs"] = pairs;
  return j;
}

CocycleTable cocycle_table_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("window") || !j.contains("labels") ||
      !j.contains("pairs") || !j["window"].is_array() ||
      j["window"].size() != 2)
    throw ParseError("cocycle table must carry 'window', 'labels' and "
                     "'pairs'");
  CocycleTable table({j["window"][0].get<int>(), j["window"][1].get<int>()},
                     j["labels"].get<int>());
  for (const auto& entry : j["pairs"]) {
    if (!entry.is_object() || !entry.contains("a") || !entry.contains("b") ||
        !entry.contains("value"))
      throw ParseError("cocycle pair must carry 'a', 'b' and 'value'");
    const DegLabel a{entry["a"][0].get<int>(), entry["a"][1].get<int>()};
    const DegLabel b{entry["b"][0].get<int>(), entry["b"][1].get<int>()};
    table.set(a, b, rat_from_string(entry["value"].get<std::string>()));
  }
  return table;
}

nlohmann::json module_vec_to_json(const ModuleVec& v) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mono, coeff] : v.terms()) {
    nlohmann::json keys = nlohmann::json::array();
    for (const GenKey& k : mono)
      keys.push_back({k.lie, k.degree, k.label});
    terms.push_back({{"monomial", keys}, {"coeff", rat_to_string(coeff)}});
  }
  return nlohmann::json{{"terms", terms}};
}

nlohmann::json almost_grading_to_json(const AlmostGradingReport& rep) {
  return nlohmann::json{{"upper_width", rep.upper_width},
                        {"upper_width_half", rep.upper_width_half},
                        {"stabilized", rep.stabilized()},
                        {"lower_bound_ok", rep.lower_bound_ok},
                        {"pairs_probed", rep.pairs_probed}};
}

nlohmann::json current_commutator_to_json(const CurrentCommutatorReport& rep) {
  return nlohmann::json{{"combinations", rep.combinations},
                        {"probes_used", rep.probes_used},
                        {"failures", rep.failures},
                        {"messages", rep.messages},
                        {"pass", rep.ok()}};
}

nlohmann::json virasoro_report_to_json(const VirasoroReport& rep) {
  nlohmann::json j;
  j["pairs_checked"] = rep.pairs_checked;
  j["probes_used"] = rep.probes_used;
  j["scalar_ok"] = rep.scalar_ok;
  j["no_eligible_probe"] = rep.no_eligible_probe;
  j["defect_cocycle"] = cocycle_table_to_json(rep.defect);
  j["identity"] = {{"ok", rep.identity.ok},
                   {"triples_checked", rep.identity.triples_checked},
                   {"triples_skipped", rep.identity.triples_skipped}};
  j["bound_T"] = rep.locality_ok ? nlohmann::json(rep.bound_t)
                                 : nlohmann::json();
  nlohmann::json witness = nlohmann::json::array();
  for (const auto& [el, value] : rep.fit.witness)
    witness.push_back({{"element", {el.degree, el.label}},
                       {"value", rat_to_string(value)}});
  j["coboundary"] = {{"consistent", rep.fit.consistent},
                     {"witness", witness}};
  j["central_charge"] = (rep.fit.consistent && rep.fit.scale_determined)
                            ? nlohmann::json(rat_to_string(rep.charge))
                            : nlohmann::json();
  j["expected_charge"] = rat_to_string(rep.expected);
  j["coefficient_band"] = rep.band.any
                              ? nlohmann::json({{"lo", rep.band.lo},
                                                {"hi", rep.band.hi}})
                              : nlohmann::json();
  j["failures"] = rep.failures;
  j["pass"] = rep.pass;
  return j;
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

} // namespace kn
