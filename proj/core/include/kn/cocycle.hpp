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

#ifndef KN_COCYCLE_HPP
#define KN_COCYCLE_HPP

#include <map>
#include <optional>
#include <utility>

#include "kn/basis.hpp"

namespace kn {

/// Projective connection on the projective line, stored through its
/// representative in the affine chart.  Under a coordinate change z = h(u)
/// a projective connection transforms with the square of h' plus the
/// Schwarzian derivative of h, so the representative at infinity is the
/// weight-2 chart transport of the affine representative plus S(1/u)
/// (which vanishes, 1/u being a Moebius map).
struct ProjectiveConnection {
  RationalFunction rep;

  static ProjectiveConnection zero() { return {RationalFunction()}; }

  RationalFunction rep_at_infinity() const;

  /// Check the connection is holomorphic away from the marked points in
  /// both charts; throws InvalidConfigError otherwise.
  void validate(const PointConfig& cfg) const;
};

/// Cocycle on the weight-0 function algebra:
///   gamma(g, h) = -(1/2*pi*i) contour integral of g dh
/// over a cycle separating the in points from the out points.
/// Classically gamma(z^n, z^m) = n delta_(n,-m).
Rat function_cocycle(const KNBasisTable& table, const MeroForm& g,
                     const MeroForm& h);

/// Geometric cocycle on the weight -1 vector field algebra:
///   chi(e, f) = (1/12) * sum of residues over the in points of
///               (1/2)(e'''f - e f''') - R (e'f - e f')
/// where R is a projective connection making the integrand a well-defined
/// 1-form.  Classically (R = 0) chi(e_n, e_m) = (n^3 - n)/12 delta_(n,-m).
Rat vectorfield_cocycle(const KNBasisTable& table, const MeroForm& e,
                        const MeroForm& f, const ProjectiveConnection& conn);

/// Antisymmetric table of cocycle values over (degree, label) pairs with
/// degrees inside a window.  Entries are stored for canonically ordered
/// pairs; lookups resolve the sign.
class CocycleTable {
public:
  /// Empty table over the trivial window {0, 0} with one label.
  CocycleTable() : CocycleTable({0, 0}, 1) {}
  CocycleTable(std::pair<int, int> degree_window, int labels);

  const std::pair<int, int>& window() const { return window_; }
  int labels() const { return labels_; }
  bool in_domain(const DegLabel& a) const;

  /// Record a value; antisymmetry is enforced (setting both orientations
  /// inconsistently, or a nonzero diagonal, throws).
  void set(const DegLabel& a, const DegLabel& b, Rat v);

  /// Value with sign; 0 for never-set pairs; DomainEscapeError outside the
  /// window.
  Rat get(const DegLabel& a, const DegLabel& b) const;

  /// Nonzero entries over canonically ordered pairs (for serialization and
  /// fitting); deterministic order.
  const std::map<std::pair<DegLabel, DegLabel>, Rat>& entries() const {
    return entries_;
  }

  /// Largest degree total with a nonzero entry must be <= 0
  /// (UpperBandViolationError otherwise); returns the smallest such total,
  /// the lower locality bound T (0 for an empty table).
  int locality_bound() const;

private:
  std::pair<int, int> window_;
  int labels_;
  std::map<std::pair<DegLabel, DegLabel>, Rat> entries_;
};

/// Tabulate gamma over all pairs in the window.
CocycleTable tabulate_function_cocycle(const KNBasisTable& table,
                                       std::pair<int, int> window);

/// Tabulate chi over all pairs in the window.
CocycleTable tabulate_vectorfield_cocycle(const KNBasisTable& table,
                                          const ProjectiveConnection& conn,
                                          std::pair<int, int> window);

struct IdentityCheckReport {
  long triples_checked = 0;
  long triples_skipped = 0; // some needed value fell outside the domain
  bool ok = true;
};

/// Verify the 2-cocycle identity
///   c([a,b], x) + c([b,x], a) + c([x,a], b) = 0
/// on all triples from the table domain whose bracket supports stay inside
/// the domain, expanding brackets through the weight -1 structure
/// constants of `basis`.
IdentityCheckReport check_cocycle_identity(const CocycleTable& table,
                                           const KNBasisTable& basis);

/// Result of expressing gamma1 - gamma2 as a coboundary (delta b)(x, y) =
/// b([x, y]) of a linear functional b on the vector field algebra.
struct CoboundaryFit {
  bool consistent = false;
  /// b on the (degree, label) elements that appear in brackets.
  std::map<DegLabel, Rat> witness;
};

/// Exact solve for gamma1 - gamma2 = delta b over every canonical pair in
/// the shared domain.  Brackets are expanded through `basis`.
CoboundaryFit coboundary_equivalence(const CocycleTable& gamma1,
                                     const CocycleTable& gamma2,
                                     const KNBasisTable& basis);

/// Result of the joint exact solve gamma = scale * chi + delta b.
struct CocycleComboFit {
  bool consistent = false;
  bool scale_determined = false;
  Rat scale;
  std::map<DegLabel, Rat> witness;
};

/// Fit gamma as a scalar multiple of chi plus a coboundary; `scale` is
/// meaningful only when the system pins it down uniquely.
CocycleComboFit fit_cocycle_combination(const CocycleTable& gamma,
                                        const CocycleTable& chi,
                                        const KNBasisTable& basis);

} // namespace kn

#endif
