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

#include "kn/sugawara.hpp"

#include <algorithm>
#include <tuple>

#include "kn/errors.hpp"

namespace kn {

SugawaraContext::SugawaraContext(const KNBasisTable& table,
                                 const FinLieAlgebra& algebra,
                                 std::shared_ptr<const AdmissibleModule> module,
                                 OrderingRule rule)
    : table_(table), algebra_(algebra), module_(std::move(module)),
      rule_(rule),
      assumed_band_(table.config().n_out() > 1 ? 1 : 0) {
  if (!module_)
    throw Error("sugawara context needs a module");
  // The dual contraction below relies on the symmetry of the inverse Gram
  // matrix, i.e. on the invariant form being symmetric.
  const RatMat& dual = algebra_.dual_basis();
  for (int i = 0; i < algebra_.dim(); ++i)
    for (int j = i + 1; j < algebra_.dim(); ++j)
      if (dual[i][j] != dual[j][i])
        throw Error("dual basis matrix is not symmetric");
}

const Rat& SugawaraContext::coefficient(const DegLabel& n, const DegLabel& m,
                                        const DegLabel& k) const {
  const std::array<int, 6> key{n.degree, n.label, m.degree,
                               m.label, k.degree, k.label};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = coeff_cache_.find(key);
    if (it != coeff_cache_.end())
      return it->second;
  }
  const MeroForm& wn = table_.element(KNIndex{1, -n.degree, n.label}).form;
  const MeroForm& wm = table_.element(KNIndex{1, -m.degree, m.label}).form;
  const MeroForm& ek = table_.element(KNIndex{-1, k.degree, k.label}).form;
  const Rat value = contour_integral(form_product(form_product(wn, wm), ek),
                                     table_.config().in_points());
  std::lock_guard<std::mutex> lock(mu_);
  if (value != 0) {
    const int shift = n.degree + m.degree - k.degree;
    if (!band_.any) {
      band_.any = true;
      band_.lo = band_.hi = shift;
    } else {
      band_.lo = std::min(band_.lo, shift);
      band_.hi = std::max(band_.hi, shift);
    }
  }
  return coeff_cache_.emplace(key, value).first->second;
}

CoefficientBand SugawaraContext::measured_band() const {
  std::lock_guard<std::mutex> lock(mu_);
  return band_;
}

SugawaraOperator SugawaraContext::op(int degree, int label) const {
  return SugawaraOperator{this, degree, label, Rat(1, 2)};
}

SugawaraOperator SugawaraContext::rescaled_op(int degree, int label) const {
  return rescale(op(degree, label), module_->level(), algebra_.kappa());
}

SugawaraOperator rescale(const SugawaraOperator& op, const Rat& level,
                         const Rat& kappa) {
  const Rat denom = level + kappa;
  if (denom == 0)
    throw CriticalLevelError("level + kappa = 0: no rescaled modes at the "
                             "critical level");
  return SugawaraOperator{op.ctx, op.degree, op.label,
                          op.prefactor * Rat(-1) / denom};
}

ModuleVec SugawaraContext::apply_raw(int degree, int label,
                                     const PBWMonomial& mono) const {
  const auto key = std::make_tuple(degree, label, mono);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = raw_cache_.find(key);
    if (it != raw_cache_.end())
      return *it->second;
  }

  const int n_in = table_.config().n_in();
  const int dim = algebra_.dim();
  const RatMat& dual = algebra_.dual_basis();
  // Annihilation cutoff: a generator of degree d kills every monomial of
  // degree < -d, so only factor degrees <= amax contribute.
  const int amax = -monomial_degree(mono);

  ModuleVec result;
  // Degree totals contributing to this mode sit in [degree, degree +
  // band]; scan one step beyond on each side so the measured band is an
  // observation, not an assumption.
  for (int t = degree - 1; t <= degree + assumed_band_ + 1; ++t) {
    for (int n = t - amax; n <= amax; ++n) {
      const int m = t - n;
      for (int p = 1; p <= n_in; ++p) {
        for (int r = 1; r <= n_in; ++r) {
          const Rat& c =
              coefficient(DegLabel{n, p}, DegLabel{m, r}, DegLabel{degree,
                                                                   label});
          if (c == 0)
            continue;
          const bool swap = rule_ == OrderingRule::SwapIfLess ? (m < n)
                                                              : (m <= n);
          const int deg_left = swap ? m : n;
          const int lab_left = swap ? r : p;
          const int deg_right = swap ? n : m;
          const int lab_right = swap ? p : r;
          for (int rj = 0; rj < dim; ++rj) {
            const ModuleVec w1 = module_->apply_monomial(
                AffineGenerator{rj, deg_right, lab_right}, mono);
            if (w1.is_zero())
              continue;
            for (int li = 0; li < dim; ++li) {
              const Rat& pairing = dual[li][rj];
              if (pairing == 0)
                continue;
              const ModuleVec w2 = module_->apply(
                  AffineGenerator{li, deg_left, lab_left}, w1);
              result.axpy(c * pairing, w2);
            }
          }
        }
      }
    }
  }

  auto shared = std::make_shared<const ModuleVec>(std::move(result));
  std::lock_guard<std::mutex> lock(mu_);
  return *raw_cache_.emplace(key, std::move(shared)).first->second;
}

ModuleVec SugawaraOperator::apply_monomial(const PBWMonomial& m) const {
  return ctx->apply_raw(degree, label, m) * prefactor;
}

ModuleVec SugawaraOperator::apply(const ModuleVec& v) const {
  ModuleVec out;
  for (const auto& [m, c] : v.terms())
    out.axpy(c * prefactor, ctx->apply_raw(degree, label, m));
  return out;
}

Rat central_charge(const Rat& level, const FinLieAlgebra& algebra) {
  const Rat denom = level + algebra.kappa();
  if (denom == 0)
    throw CriticalLevelError("central charge undefined at the critical "
                             "level");
  return level * Rat(algebra.dim()) / denom;
}

CurrentCommutatorReport verify_current_commutator(const SugawaraContext& ctx,
                                                  int k_max, int n_max,
                                                  int probe_zero_cap,
                                                  int probe_cap) {
  CurrentCommutatorReport rep;
  const AdmissibleModule& mod = ctx.module();
  const int depth = mod.depth();
  const int n_in = ctx.table().config().n_in();
  const int dim = ctx.algebra().dim();
  const Rat shifted_level = mod.level() + ctx.algebra().kappa();
  const auto probes = mod.enumerate_basis(depth, probe_zero_cap);

  for (int k = -k_max; k <= k_max; ++k) {
    for (int s = 1; s <= n_in; ++s) {
      const SugawaraOperator mode = ctx.op(k, s);
      for (int n = -n_max; n <= n_max; ++n) {
        for (int p = 1; p <= n_in; ++p) {
          const SparseCoeffs nabla = ctx.table().lie_derivative_constants(
              DegLabel{k, s}, KNIndex{0, n, p});
          // Degree floors only ever move up through the coefficient band,
          // so the headroom a probe needs is set by the two lowering modes
          // alone.
          const int need = std::max(0, -k) + std::max(0, -n);
          for (int x = 0; x < dim; ++x) {
            ++rep.combinations;
            bool any_probe = false;
            long used = 0;
            for (const auto& probe : probes) {
              if (depth + monomial_degree(probe) < need)
                continue;
              if (probe_cap > 0 && used >= probe_cap)
                break;
              any_probe = true;
              ++used;
              ++rep.probes_used;
              const AffineGenerator current{x, n, p};
              const ModuleVec xv = mod.apply_monomial(current, probe);
              const ModuleVec probe_vec = ModuleVec::single(probe);
              ModuleVec defect = mode.apply(xv);
              defect.axpy(Rat(-1), mod.apply(current, mode.apply(probe_vec)));
              for (const auto& [h, beta] : nabla)
                defect.axpy(shifted_level * beta,
                            mod.apply_monomial(
                                AffineGenerator{x, h.degree, h.label}, probe));
              if (!defect.is_zero()) {
                ++rep.failures;
                if (rep.messages.size() < 8)
                  rep.messages.push_back(
                      "nonzero defect at mode (" + std::to_string(k) + "," +
                      std::to_string(s) + "), current (" + std::to_string(n) +
                      "," + std::to_string(p) + "), basis element " +
                      std::to_string(x));
              }
            }
            if (!any_probe) {
              ++rep.failures;
              if (rep.messages.size() < 8)
                rep.messages.push_back(
                    "no eligible probe for mode (" + std::to_string(k) + "," +
                    std::to_string(s) + "), current degree " +
                    std::to_string(n));
            }
          }
        }
      }
    }
  }
  return rep;
}

VirasoroReport verify_virasoro(const SugawaraContext& ctx, int k_max,
                               int probe_zero_cap, int probe_cap) {
  VirasoroReport rep;
  const AdmissibleModule& mod = ctx.module();
  const int depth = mod.depth();
  const int n_in = ctx.table().config().n_in();
  const std::pair<int, int> window{-k_max, k_max};
  rep.defect = CocycleTable(window, n_in);
  rep.expected = central_charge(mod.level(), ctx.algebra());
  const auto probes = mod.enumerate_basis(depth, probe_zero_cap);

  std::vector<DegLabel> modes;
  for (int k = -k_max; k <= k_max; ++k)
    for (int s = 1; s <= n_in; ++s)
      modes.push_back(DegLabel{k, s});

  for (std::size_t ai = 0; ai < modes.size(); ++ai) {
    for (std::size_t bi = ai + 1; bi < modes.size(); ++bi) {
      const DegLabel a = modes[ai];
      const DegLabel b = modes[bi];
      const SugawaraOperator la = ctx.rescaled_op(a.degree, a.label);
      const SugawaraOperator lb = ctx.rescaled_op(b.degree, b.label);
      const SparseCoeffs& structure =
          ctx.table().bracket_constants(a, b);
      const int need = std::max(0, -a.degree) + std::max(0, -b.degree);
      bool have_scalar = false;
      Rat scalar;
      bool found_probe = false;
      long used = 0;
      for (const auto& probe : probes) {
        if (depth + monomial_degree(probe) < need)
          continue;
        if (probe_cap > 0 && used >= probe_cap)
          break;
        found_probe = true;
        ++used;
        ++rep.probes_used;
        const ModuleVec probe_vec = ModuleVec::single(probe);
        ModuleVec w = la.apply(lb.apply(probe_vec));
        w.axpy(Rat(-1), lb.apply(la.apply(probe_vec)));
        for (const auto& [h, c] : structure)
          w.axpy(-c, ctx.rescaled_op(h.degree, h.label).apply_monomial(probe));
        // The remainder must be the same scalar multiple of the probe for
        // every probe.
        Rat on_probe(0);
        auto it = w.terms().find(probe);
        if (it != w.terms().end())
          on_probe = it->second;
        w.add(probe, -on_probe);
        if (!w.is_zero()) {
          rep.scalar_ok = false;
          if (rep.failures.size() < 8)
            rep.failures.push_back(
                "defect not scalar on a probe for pair (" +
                std::to_string(a.degree) + "," + std::to_string(a.label) +
                ")x(" + std::to_string(b.degree) + "," +
                std::to_string(b.label) + ")");
          continue;
        }
        if (!have_scalar) {
          have_scalar = true;
          scalar = on_probe;
        } else if (scalar != on_probe) {
          rep.scalar_ok = false;
          if (rep.failures.size() < 8)
            rep.failures.push_back(
                "defect scalar varies across probes for pair (" +
                std::to_string(a.degree) + "," + std::to_string(a.label) +
                ")x(" + std::to_string(b.degree) + "," +
                std::to_string(b.label) + ")");
        }
      }
      if (!found_probe) {
        rep.no_eligible_probe = true;
        if (rep.failures.size() < 8)
          rep.failures.push_back("no eligible probe for pair (" +
                                 std::to_string(a.degree) + "," +
                                 std::to_string(a.label) + ")x(" +
                                 std::to_string(b.degree) + "," +
                                 std::to_string(b.label) + ")");
        continue;
      }
      ++rep.pairs_checked;
      if (have_scalar)
        rep.defect.set(a, b, scalar);
    }
  }

  try {
    rep.bound_t = rep.defect.locality_bound();
  } catch (const UpperBandViolationError& e) {
    rep.locality_ok = false;
    rep.failures.push_back(e.what());
  }
  rep.identity = check_cocycle_identity(rep.defect, ctx.table());
  if (!rep.identity.ok)
    rep.failures.push_back("defect violates the cocycle identity");

  const CocycleTable chi = tabulate_vectorfield_cocycle(
      ctx.table(), ProjectiveConnection::zero(), window);
  rep.fit = fit_cocycle_combination(rep.defect, chi, ctx.table());
  if (!rep.fit.consistent)
    rep.failures.push_back("defect is not cohomologous to a multiple of the "
                           "geometric cocycle");
  else if (!rep.fit.scale_determined)
    rep.failures.push_back("central charge not pinned by the window");
  else
    rep.charge = rep.fit.scale;

  rep.band = ctx.measured_band();
  const bool band_ok =
      !rep.band.any ||
      (rep.band.lo >= 0 && rep.band.hi <= ctx.assumed_band());
  if (!band_ok)
    rep.failures.push_back("measured coefficient band escapes the assumed "
                           "band");

  rep.pass = rep.scalar_ok && !rep.no_eligible_probe && rep.locality_ok &&
             rep.identity.ok && rep.fit.consistent &&
             rep.fit.scale_determined && band_ok &&
             rep.charge == rep.expected;
  if (rep.pass == false && rep.charge != rep.expected &&
      rep.fit.consistent && rep.fit.scale_determined)
    rep.failures.push_back("fitted charge " + rat_to_string(rep.charge) +
                           " != expected " + rat_to_string(rep.expected));
  return rep;
}

ClassicalCheckReport classical_virasoro_check(const SugawaraContext& ctx,
                                              int nmax, int probe_weight) {
  ClassicalCheckReport rep;
  const AdmissibleModule& mod = ctx.module();
  const auto probes = mod.enumerate_basis(probe_weight, 0);
  for (int n = -nmax; n <= nmax; ++n) {
    for (int m = n + 1; m <= nmax; ++m) {
      const SugawaraOperator sn = ctx.rescaled_op(n, 1);
      const SugawaraOperator sm = ctx.rescaled_op(m, 1);
      const SugawaraOperator snm = ctx.rescaled_op(n + m, 1);
      const Rat central = (m == -n)
                              ? Rat(static_cast<long>(n) * n * n - n) / 12
                              : Rat(0);
      ++rep.pairs;
      for (const auto& probe : probes) {
        ++rep.probes_used;
        const ModuleVec v = ModuleVec::single(probe);
        ModuleVec lhs = sn.apply(sm.apply(v));
        lhs.axpy(Rat(-1), sm.apply(sn.apply(v)));
        ModuleVec rhs = snm.apply(v) * Rat(m - n);
        rhs.axpy(central, v);
        if (!(lhs == rhs)) {
          ++rep.failures;
          if (rep.messages.size() < 8)
            rep.messages.push_back("commutation relation fails at (n, m) = (" +
                                   std::to_string(n) + ", " +
                                   std::to_string(m) + ")");
        }
      }
    }
  }
  return rep;
}

} // namespace kn
