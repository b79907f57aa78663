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

#ifndef KN_SUGAWARA_HPP
#define KN_SUGAWARA_HPP

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "kn/cocycle.hpp"
#include "kn/modules.hpp"

namespace kn {

/// Which written pair orders get swapped when normal ordering
/// :x(n) y(m):.  Only degrees are compared; the default keeps written
/// order on equal degrees, the alternative swaps it there too.  The two
/// choices differ by a finite reordering, so the induced defect cocycles
/// must be cohomologous.
enum class OrderingRule { SwapIfLess, SwapIfLessOrEqual };

class SugawaraContext;

/// A mode of the quadratic (Sugawara-type) field: the double sum
///   L_(k,s) = (1/2) sum over degrees n+m near k, dual pairs (u_i, u^i)
///             of l-coefficients times :u_i(n,p) u^i(m,r):
/// scaled by `prefactor` (1/2 for the unrescaled operator).
struct SugawaraOperator {
  const SugawaraContext* ctx = nullptr;
  int degree = 0;
  int label = 1;
  Rat prefactor;

  ModuleVec apply(const ModuleVec& v) const;
  ModuleVec apply_monomial(const PBWMonomial& m) const;
};

/// Rescale by -1/(level + kappa); CriticalLevelError at the critical level.
SugawaraOperator rescale(const SugawaraOperator& op, const Rat& level,
                         const Rat& kappa);

/// Measured degree band of the coefficient support, relative to the
/// operator degree: nonzero l-coefficients seen so far had
/// n + m - k in [lo, hi].
struct CoefficientBand {
  int lo = 0;
  int hi = 0;
  bool any = false;
};

/// Shared state for the Sugawara modes of one module: the marked-point
/// basis, the finite algebra with its dual basis, the module, the normal
/// ordering rule, and exact caches for the l-coefficients and the raw
/// (unscaled) operator action.
class SugawaraContext {
public:
  SugawaraContext(const KNBasisTable& table, const FinLieAlgebra& algebra,
                  std::shared_ptr<const AdmissibleModule> module,
                  OrderingRule rule = OrderingRule::SwapIfLess);

  const KNBasisTable& table() const { return table_; }
  const FinLieAlgebra& algebra() const { return algebra_; }
  const AdmissibleModule& module() const { return *module_; }
  OrderingRule rule() const { return rule_; }

  /// l-coefficient: (1/2*pi*i) contour integral over the in points of
  /// omega^(n,p) omega^(m,r) e_(k,s), where omega are the weight-1 duals
  /// and e the weight -1 elements.  Cached.
  const Rat& coefficient(const DegLabel& n, const DegLabel& m,
                         const DegLabel& k) const;

  /// Unrescaled mode with the 1/2 prefactor.
  SugawaraOperator op(int degree, int label) const;
  /// -1/(level + kappa) times the unrescaled mode.
  SugawaraOperator rescaled_op(int degree, int label) const;

  /// Band measured over every coefficient computed so far.
  CoefficientBand measured_band() const;

  /// Upper band width assumed when filtering probes (1 with several out
  /// points, 0 classically); the measured band must stay within it.
  int assumed_band() const { return assumed_band_; }

private:
  friend struct SugawaraOperator;
  ModuleVec apply_raw(int degree, int label, const PBWMonomial& m) const;

  const KNBasisTable& table_;
  const FinLieAlgebra& algebra_;
  std::shared_ptr<const AdmissibleModule> module_;
  OrderingRule rule_;
  int assumed_band_;
  mutable std::mutex mu_;
  mutable std::map<std::array<int, 6>, Rat> coeff_cache_;
  mutable std::map<std::tuple<int, int, PBWMonomial>,
                   std::shared_ptr<const ModuleVec>>
      raw_cache_;
  mutable CoefficientBand band_;
};

/// Expected central charge level * dim / (level + kappa);
/// CriticalLevelError at the critical level.
Rat central_charge(const Rat& level, const FinLieAlgebra& algebra);

struct CurrentCommutatorReport {
  long combinations = 0;
  long probes_used = 0;
  long failures = 0;
  bool ok() const { return combinations > 0 && failures == 0; }
  std::vector<std::string> messages;
};

/// Check [L_(k,s), x(n,p)] v + (level + kappa) x(nabla_e a) v = 0 for the
/// unrescaled modes, every |k| <= k_max, |n| <= n_max, every basis element
/// x and every label pair, on probe monomials with enough headroom
/// (at most probe_cap per combination when probe_cap > 0).
CurrentCommutatorReport verify_current_commutator(const SugawaraContext& ctx,
                                                  int k_max, int n_max,
                                                  int probe_zero_cap,
                                                  int probe_cap = 0);

struct VirasoroReport {
  long pairs_checked = 0;
  long probes_used = 0;
  bool scalar_ok = true;
  bool no_eligible_probe = false;
  CocycleTable defect;
  IdentityCheckReport identity;
  bool locality_ok = true;
  int bound_t = 0;
  CocycleComboFit fit;
  Rat charge;
  Rat expected;
  CoefficientBand band;
  bool pass = false;
  std::vector<std::string> failures;
};

/// Check that the rescaled modes close into a Virasoro-type algebra: for
/// every canonical pair in the degree window,
///   [L*_a, L*_b] - sum_h C^h_(a,b) L*_h = gamma(a, b) id
/// on all eligible probes, with one scalar per pair; then verify the defect
/// gamma is local, satisfies the cocycle identity, and equals
/// charge * chi_(R=0) + coboundary with the charge pinned uniquely and
/// equal to level * dim / (level + kappa).
VirasoroReport verify_virasoro(const SugawaraContext& ctx, int k_max,
                               int probe_zero_cap, int probe_cap = 0);

struct ClassicalCheckReport {
  long pairs = 0;
  long probes_used = 0;
  long failures = 0;
  bool ok() const { return pairs > 0 && failures == 0; }
  std::vector<std::string> messages;
};

/// Direct check of the classical commutation relation on a rank-1 level-1
/// module: [S_n, S_m] v = (m - n) S_(n+m) v + ((n^3 - n)/12) delta_(n,-m) v
/// for the rescaled modes S, all |n|, |m| <= nmax and all probe monomials
/// of weighted degree <= probe_weight.
ClassicalCheckReport classical_virasoro_check(const SugawaraContext& ctx,
                                              int nmax, int probe_weight);

} // namespace kn

#endif
