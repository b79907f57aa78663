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

#ifndef KN_SERIALIZATION_HPP
#define KN_SERIALIZATION_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "kn/basis.hpp"
#include "kn/cocycle.hpp"
#include "kn/modules.hpp"
#include "kn/sugawara.hpp"

namespace kn {

/// {"in": ["0", "1"], "out": ["2", "inf"]}; rationals as "p/q", infinity
/// as "inf".
nlohmann::json config_to_json(const PointConfig& cfg);
/// Inverse of config_to_json; ParseError on malformed input.
PointConfig config_from_json(const nlohmann::json& j);

/// {"index": {...}, "numerator": ["c0", ...], "denominator": ["c0", ...],
///  "display": "...", "orders": {"point": order, ...}}; polynomial
/// coefficients are listed from the constant term up.
nlohmann::json basis_element_to_json(const KNBasisTable& table,
                                     const KNIndex& idx);

/// {"window": [lo, hi], "labels": K, "bound_T": t|null,
///  "pairs": [{"a": [n, p], "b": [m, r], "value": "p/q"}, ...]};
/// bound_T is null when the table violates the locality requirement.
nlohmann::json cocycle_table_to_json(const CocycleTable& table);
/// Inverse of cocycle_table_to_json (bound_T is ignored on input).
CocycleTable cocycle_table_from_json(const nlohmann::json& j);

/// {"terms": [{"monomial": [[lie, degree, label], ...], "coeff": "p/q"},
///  ...]} with the empty monomial for the vacuum.
nlohmann::json module_vec_to_json(const ModuleVec& v);

nlohmann::json almost_grading_to_json(const AlmostGradingReport& rep);
nlohmann::json current_commutator_to_json(const CurrentCommutatorReport& rep);
nlohmann::json virasoro_report_to_json(const VirasoroReport& rep);

/// Canonical text form: two-space indent, sorted keys, trailing newline.
std::string dump_json(const nlohmann::json& j);

} // namespace kn

#endif
