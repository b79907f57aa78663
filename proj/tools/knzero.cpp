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

// knzero: exact construction and verification of multi-point algebras of
// meromorphic objects on the sphere, their central extensions, and the
// quadratic (Sugawara-type) operators on truncated vacuum modules.
//
// Subcommands:
//   basis    dump normalized basis elements over a degree window
//   tables   structure constants, cocycle tables, grading bounds
//   kappa    normalized Casimir eigenvalue of a finite algebra
//   verify   commutation-identity and central-charge verification
//
// Exit codes: 0 success / all checks pass, 1 usage or input parsing
// errors, 2 precondition violations (degenerate input, critical level,
// depth exhaustion), 3 verification failure.

#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "kn/basis.hpp"
#include "kn/cocycle.hpp"
#include "kn/errors.hpp"
#include "kn/liealgebra.hpp"
#include "kn/modules.hpp"
#include "kn/serialization.hpp"
#include "kn/sugawara.hpp"

namespace {

struct Options {
  std::string config_path;
  std::string algebra = "sl:2";
  std::string level = "1";
  int depth = 4;
  int nmax = 2;
  int lambda = 0;
  std::string window = "-3:3";
  std::string ordering = "swap-lt";
  int zero_cap = 1;
  int probe_cap = 4;
  bool with_current = false;
  std::string out_path;
};

kn::PointConfig load_config(const Options& opt) {
  if (opt.config_path.empty())
    return kn::PointConfig::classical();
  std::ifstream in(opt.config_path);
  if (!in)
    throw kn::ParseError("cannot open config file: " + opt.config_path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw kn::ParseError(std::string("malformed config JSON: ") + e.what());
  }
  return kn::config_from_json(j);
}

std::pair<int, int> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw kn::ParseError("window must be LO:HI");
  try {
    const int lo = std::stoi(text.substr(0, colon));
    const int hi = std::stoi(text.substr(colon + 1));
    return {lo, hi};
  } catch (const std::exception&) {
    throw kn::ParseError("window bounds must be integers");
  }
}

void emit(const Options& opt, const nlohmann::json& j) {
  const std::string text = kn::dump_json(j);
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path);
  if (!out)
    throw kn::Error("cannot open output file: " + opt.out_path);
  out << text;
}

nlohmann::json sparse_to_json(const kn::SparseCoeffs& terms) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [el, value] : terms)
    arr.push_back({{"element", {el.degree, el.label}},
                   {"value", kn::rat_to_string(value)}});
  return arr;
}

int cmd_basis(const Options& opt) {
  const kn::PointConfig cfg = load_config(opt);
  kn::KNBasisTable table(cfg);
  const auto window = parse_window(opt.window);
  nlohmann::json j;
  j["config"] = kn::config_to_json(cfg);
  j["weight"] = opt.lambda;
  j["window"] = {window.first, window.second};
  nlohmann::json elements = nlohmann::json::array();
  for (int n = window.first; n <= window.second; ++n)
    for (int p = 1; p <= cfg.n_in(); ++p)
      elements.push_back(kn::basis_element_to_json(
          table, kn::KNIndex{opt.lambda, n, p}));
  j["elements"] = elements;
  emit(opt, j);
  return 0;
}

int cmd_tables(const Options& opt) {
  const kn::PointConfig cfg = load_config(opt);
  kn::KNBasisTable table(cfg);
  const auto window = parse_window(opt.window);
  nlohmann::json j;
  j["config"] = kn::config_to_json(cfg);
  j["window"] = {window.first, window.second};

  nlohmann::json products = nlohmann::json::array();
  nlohmann::json brackets = nlohmann::json::array();
  for (int n = window.first; n <= window.second; ++n)
    for (int p = 1; p <= cfg.n_in(); ++p)
      for (int m = window.first; m <= window.second; ++m)
        for (int r = 1; r <= cfg.n_in(); ++r) {
          const kn::DegLabel a{n, p};
          const kn::DegLabel b{m, r};
          products.push_back({{"a", {n, p}},
                              {"b", {m, r}},
                              {"terms",
                               sparse_to_json(table.product_constants(a, b))}});
          if (std::make_pair(n, p) < std::make_pair(m, r))
            brackets.push_back(
                {{"a", {n, p}},
                 {"b", {m, r}},
                 {"terms", sparse_to_json(table.bracket_constants(a, b))}});
        }
  j["products"] = products;
  j["brackets"] = brackets;

  j["function_cocycle"] =
      kn::cocycle_table_to_json(kn::tabulate_function_cocycle(table, window));
  j["vectorfield_cocycle"] = kn::cocycle_table_to_json(
      kn::tabulate_vectorfield_cocycle(table,
                                       kn::ProjectiveConnection::zero(),
                                       window));

  const int probe = std::max({std::abs(window.first), std::abs(window.second),
                              2});
  const kn::AlmostGradingReport s_report = table.almost_grading(0, probe);
  const kn::AlmostGradingReport r_report = table.almost_grading(-1, probe);
  j["grading"] = {{"weight0", kn::almost_grading_to_json(s_report)},
                  {"weight-1", kn::almost_grading_to_json(r_report)}};
  j["S"] = s_report.upper_width;
  j["R"] = r_report.upper_width;
  emit(opt, j);
  return 0;
}

int cmd_kappa(const Options& opt) {
  const kn::FinLieAlgebra algebra = kn::algebra_from_token(opt.algebra);
  nlohmann::json j;
  j["algebra"] = opt.algebra;
  j["dim"] = algebra.dim();
  j["kappa"] = kn::rat_to_string(algebra.kappa());
  emit(opt, j);
  return 0;
}

int cmd_verify(const Options& opt) {
  const kn::PointConfig cfg = load_config(opt);
  kn::KNBasisTable table(cfg);
  const kn::FinLieAlgebra algebra = kn::algebra_from_token(opt.algebra);
  const kn::Rat level = kn::rat_from_string(opt.level);
  if (opt.depth < 0)
    throw kn::InvalidConfigError("depth must be >= 0");
  auto module = std::make_shared<kn::VacuumModule>(table, algebra, level,
                                                  opt.depth);
  const kn::OrderingRule rule = opt.ordering == "swap-le"
                                    ? kn::OrderingRule::SwapIfLessOrEqual
                                    : kn::OrderingRule::SwapIfLess;
  kn::SugawaraContext ctx(table, algebra, module, rule);

  nlohmann::json j;
  j["config"] = kn::config_to_json(cfg);
  j["algebra"] = opt.algebra;
  j["level"] = kn::rat_to_string(level);
  j["depth"] = opt.depth;
  j["degree_window"] = opt.nmax;
  j["required_depth"] = 2 * std::max(0, opt.nmax);
  j["ordering"] = opt.ordering == "swap-le" ? "swap-le" : "swap-lt";

  const kn::VirasoroReport rep =
      kn::verify_virasoro(ctx, opt.nmax, opt.zero_cap, opt.probe_cap);
  j["virasoro"] = kn::virasoro_report_to_json(rep);
  bool pass = rep.pass;

  if (opt.with_current) {
    const kn::CurrentCommutatorReport cur = kn::verify_current_commutator(
        ctx, opt.nmax, opt.nmax, opt.zero_cap, opt.probe_cap);
    j["current"] = kn::current_commutator_to_json(cur);
    pass = pass && cur.ok();
  }

  j["pass"] = pass;
  emit(opt, j);
  return pass ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multi-point algebras on the sphere: bases, central "
               "extensions, quadratic operators"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--config", opt.config_path,
                    "point configuration JSON file (default: 0 in, "
                    "infinity out)");
    cmd->add_option("--out", opt.out_path, "output file (default: stdout)");
  };

  CLI::App* basis = app.add_subcommand("basis", "dump basis elements");
  add_common(basis);
  basis->add_option("--lambda", opt.lambda, "conformal weight");
  basis->add_option("--window", opt.window, "degree window LO:HI");

  CLI::App* tables = app.add_subcommand(
      "tables", "structure constants, cocycles, grading bounds");
  add_common(tables);
  tables->add_option("--window", opt.window, "degree window LO:HI");

  CLI::App* kappa = app.add_subcommand(
      "kappa", "normalized Casimir eigenvalue and dimension");
  kappa->add_option("--algebra", opt.algebra, "algebra token: abelian:d or "
                                              "sl:n");
  kappa->add_option("--out", opt.out_path, "output file (default: stdout)");

  CLI::App* verify = app.add_subcommand(
      "verify", "verify commutation identities and the central charge");
  add_common(verify);
  verify->add_option("--algebra", opt.algebra, "algebra token: abelian:d or "
                                               "sl:n");
  verify->add_option("--level", opt.level, "module level (rational)");
  verify->add_option("--depth", opt.depth, "module depth bound");
  verify->add_option("--nmax", opt.nmax, "mode window half-width");
  verify->add_option("--ordering", opt.ordering,
                     "normal ordering rule: swap-lt or swap-le")
      ->check(CLI::IsMember({"swap-lt", "swap-le"}));
  verify->add_option("--zero-cap", opt.zero_cap,
                     "max degree-0 factors per probe monomial");
  verify->add_option("--probe-cap", opt.probe_cap,
                     "max probes per checked pair (0 = all)");
  verify->add_flag("--current", opt.with_current,
                   "also verify the current commutation identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (basis->parsed())
      return cmd_basis(opt);
    if (tables->parsed())
      return cmd_tables(opt);
    if (kappa->parsed())
      return cmd_kappa(opt);
    return cmd_verify(opt);
  } catch (const kn::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const kn::InvalidConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const kn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
