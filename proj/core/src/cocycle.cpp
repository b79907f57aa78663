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

#include "kn/cocycle.hpp"

#include <vector>

#include "kn/errors.hpp"
#include "kn/linalg.hpp"

namespace kn {

RationalFunction ProjectiveConnection::rep_at_infinity() const {
  // Weight-2 transport of the affine representative plus the Schwarzian of
  // the transition map z = 1/u (zero, but computed rather than assumed).
  const RationalFunction inv =
      RationalFunction(Poly(Rat(1)), Poly::monomial(1));
  return kn::rep_at_infinity(MeroForm{2, rep}) + schwarzian(inv);
}

void ProjectiveConnection::validate(const PointConfig& cfg) const {
  if (rep.is_zero())
    return;
  // Finite poles must sit at marked points.
  Poly d = rep.den();
  for (const auto& pt : cfg.all_points()) {
    if (pt.is_infinity())
      continue;
    const int m = d.root_multiplicity(pt.value());
    for (int i = 0; i < m; ++i)
      d = d.divmod(Poly::linear_root(pt.value())).first;
  }
  if (d.degree() > 0)
    throw InvalidConfigError(
        "projective connection has a pole away from the marked points");
  // A pole at infinity requires infinity to be marked.
  const RationalFunction at_inf = rep_at_infinity();
  if (!at_inf.is_zero() && *at_inf.order_at_finite(Rat(0)) < 0 &&
      !cfg.is_marked(Point::infinity()))
    throw InvalidConfigError(
        "projective connection has a pole at the unmarked point at infinity");
}

Rat function_cocycle(const KNBasisTable& table, const MeroForm& g,
                     const MeroForm& h) {
  if (g.weight != 0 || h.weight != 0)
    throw WrongWeightError("function cocycle expects weight-0 forms");
  const MeroForm integrand = form_product(g, exterior_derivative(h));
  return -contour_integral(integrand, table.config().in_points());
}

Rat vectorfield_cocycle(const KNBasisTable& table, const MeroForm& e,
                        const MeroForm& f, const ProjectiveConnection& conn) {
  if (e.weight != -1 || f.weight != -1)
    throw WrongWeightError("vector field cocycle expects weight -1 forms");
  const RationalFunction& a = e.rep;
  const RationalFunction& b = f.rep;
  const RationalFunction a1 = a.derivative();
  const RationalFunction b1 = b.derivative();
  const RationalFunction a3 = a1.derivative().derivative();
  const RationalFunction b3 = b1.derivative().derivative();
  const RationalFunction integrand =
      (a3 * b - a * b3) * Rat(1, 2) - conn.rep * (a1 * b - a * b1);
  const Rat total = contour_integral(MeroForm{1, integrand},
                                     table.config().in_points());
  return total / 12;
}

CocycleTable::CocycleTable(std::pair<int, int> degree_window, int labels)
    : window_(degree_window), labels_(labels) {
  if (window_.second < window_.first || labels_ < 1)
    throw Error("empty cocycle table domain");
}

bool CocycleTable::in_domain(const DegLabel& a) const {
  return a.degree >= window_.first && a.degree <= window_.second &&
         a.label >= 1 && a.label <= labels_;
}

void CocycleTable::set(const DegLabel& a, const DegLabel& b, Rat v) {
  if (!in_domain(a) || !in_domain(b))
    throw DomainEscapeError("cocycle entry outside the table window");
  if (a == b) {
    if (v != 0)
      throw Error("antisymmetric table cannot hold a nonzero diagonal");
    return;
  }
  const bool flip = b < a;
  const auto key = flip ? std::make_pair(b, a) : std::make_pair(a, b);
  const Rat stored = flip ? Rat(-v) : v;
  auto it = entries_.find(key);
  if (it != entries_.end()) {
    if (it->second != stored)
      throw Error("conflicting antisymmetric table entries");
    return;
  }
  if (stored != 0)
    entries_.emplace(key, stored);
}

Rat CocycleTable::get(const DegLabel& a, const DegLabel& b) const {
  if (!in_domain(a) || !in_domain(b))
    throw DomainEscapeError("cocycle lookup outside the table window");
  if (a == b)
    return Rat(0);
  const bool flip = b < a;
  const auto key = flip ? std::make_pair(b, a) : std::make_pair(a, b);
  auto it = entries_.find(key);
  if (it == entries_.end())
    return Rat(0);
  return flip ? Rat(-it->second) : it->second;
}

int CocycleTable::locality_bound() const {
  int t = 0;
  for (const auto& [pair, v] : entries_) {
    const int total = pair.first.degree + pair.second.degree;
    if (total > 0)
      throw UpperBandViolationError(
          "nonzero cocycle entry at positive degree total " +
          std::to_string(total));
    t = std::min(t, total);
  }
  return t;
}

CocycleTable tabulate_function_cocycle(const KNBasisTable& table,
                                       std::pair<int, int> window) {
  CocycleTable out(window, table.config().n_in());
  for (int n = window.first; n <= window.second; ++n)
    for (int m = n; m <= window.second; ++m)
      for (int p = 1; p <= out.labels(); ++p)
        for (int r = 1; r <= out.labels(); ++r) {
          const DegLabel a{n, p}, b{m, r};
          if (!(a < b))
            continue;
          const Rat v = function_cocycle(
              table, table.element(KNIndex{0, n, p}).form,
              table.element(KNIndex{0, m, r}).form);
          out.set(a, b, v);
        }
  return out;
}

CocycleTable tabulate_vectorfield_cocycle(const KNBasisTable& table,
                                          const ProjectiveConnection& conn,
                                          std::pair<int, int> window) {
  CocycleTable out(window, table.config().n_in());
  for (int n = window.first; n <= window.second; ++n)
    for (int m = n; m <= window.second; ++m)
      for (int p = 1; p <= out.labels(); ++p)
        for (int r = 1; r <= out.labels(); ++r) {
          const DegLabel a{n, p}, b{m, r};
          if (!(a < b))
            continue;
          const Rat v = vectorfield_cocycle(
              table, table.element(KNIndex{-1, n, p}).form,
              table.element(KNIndex{-1, m, r}).form, conn);
          out.set(a, b, v);
        }
  return out;
}

namespace {

/// c([a, b], x) summed through the bracket expansion; nullopt when some
/// support element falls outside the table domain.
std::optional<Rat> bracket_paired(const CocycleTable& table,
                                  const KNBasisTable& basis, const DegLabel& a,
                                  const DegLabel& b, const DegLabel& x) {
  Rat s(0);
  for (const auto& [h, c] : basis.bracket_constants(a, b)) {
    if (!table.in_domain(h))
      return std::nullopt;
    s += c * table.get(h, x);
  }
  return s;
}

std::vector<DegLabel> domain_elements(const CocycleTable& table) {
  std::vector<DegLabel> out;
  for (int n = table.window().first; n <= table.window().second; ++n)
    for (int p = 1; p <= table.labels(); ++p)
      out.push_back(DegLabel{n, p});
  return out;
}

} // namespace

IdentityCheckReport check_cocycle_identity(const CocycleTable& table,
                                           const KNBasisTable& basis) {
  IdentityCheckReport rep;
  const auto elems = domain_elements(table);
  const std::size_t n = elems.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const DegLabel &a = elems[i], &b = elems[j], &x = elems[k];
        const auto t1 = bracket_paired(table, basis, a, b, x);
        const auto t2 = bracket_paired(table, basis, b, x, a);
        const auto t3 = bracket_paired(table, basis, x, a, b);
        if (!t1 || !t2 || !t3) {
          ++rep.triples_skipped;
          continue;
        }
        ++rep.triples_checked;
        if (*t1 + *t2 + *t3 != 0)
          rep.ok = false;
      }
  return rep;
}

namespace {

/// Shared assembly for the coboundary solves: rows over canonical domain
/// pairs, unknowns the witness values b_h (and optionally a leading scale
/// column when `chi` is nonnull).
struct CoboundarySystem {
  std::vector<DegLabel> unknowns;
  std::map<DegLabel, std::size_t> index;
  RatMat a;
  RatVec rhs;
};

CoboundarySystem build_system(const CocycleTable& lhs_minus,
                              const CocycleTable* chi,
                              const KNBasisTable& basis,
                              const CocycleTable* rhs_table) {
  // Unknown witness values: every (degree, label) in any bracket support of
  // a domain pair.
  CoboundarySystem sys;
  const auto elems = domain_elements(lhs_minus);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      for (const auto& [h, c] : basis.bracket_constants(elems[i], elems[j]))
        if (sys.index.emplace(h, sys.unknowns.size()).second)
          sys.unknowns.push_back(h);

  const std::size_t cols = sys.unknowns.size() + (chi ? 1 : 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      RatVec row(cols, Rat(0));
      for (const auto& [h, c] : basis.bracket_constants(elems[i], elems[j]))
        row[sys.index.at(h)] += c;
      if (chi)
        row[cols - 1] = chi->get(elems[i], elems[j]);
      Rat target = lhs_minus.get(elems[i], elems[j]);
      if (rhs_table)
        target -= rhs_table->get(elems[i], elems[j]);
      sys.a.push_back(std::move(row));
      sys.rhs.push_back(std::move(target));
    }
  return sys;
}

} // namespace

CoboundaryFit coboundary_equivalence(const CocycleTable& gamma1,
                                     const CocycleTable& gamma2,
                                     const KNBasisTable& basis) {
  if (gamma1.window() != gamma2.window() ||
      gamma1.labels() != gamma2.labels())
    throw DomainEscapeError("coboundary comparison needs matching domains");
  CoboundarySystem sys = build_system(gamma1, nullptr, basis, &gamma2);
  const LinearSolveResult sol = solve_linear(sys.a, sys.rhs);
  CoboundaryFit fit;
  fit.consistent = sol.consistent;
  if (sol.consistent)
    for (std::size_t i = 0; i < sys.unknowns.size(); ++i)
      if (sol.particular[i] != 0)
        fit.witness[sys.unknowns[i]] = sol.particular[i];
  return fit;
}

CocycleComboFit fit_cocycle_combination(const CocycleTable& gamma,
                                        const CocycleTable& chi,
                                        const KNBasisTable& basis) {
  if (gamma.window() != chi.window() || gamma.labels() != chi.labels())
    throw DomainEscapeError("cocycle fit needs matching domains");
  CoboundarySystem sys = build_system(gamma, &chi, basis, nullptr);
  const LinearSolveResult sol = solve_linear(sys.a, sys.rhs);
  CocycleComboFit fit;
  fit.consistent = sol.consistent;
  if (!sol.consistent)
    return fit;
  const std::size_t scale_col = sys.unknowns.size();
  fit.scale_determined = sol.determined[scale_col];
  fit.scale = sol.particular[scale_col];
  for (std::size_t i = 0; i < sys.unknowns.size(); ++i)
    if (sol.particular[i] != 0)
      fit.witness[sys.unknowns[i]] = sol.particular[i];
  return fit;
}

} // namespace kn
