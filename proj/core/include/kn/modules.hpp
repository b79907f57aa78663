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

#ifndef KN_MODULES_HPP
#define KN_MODULES_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "kn/basis.hpp"
#include "kn/liealgebra.hpp"

namespace kn {

/// Generator x_lie (x) A_(degree,label) of the affinization, or the central
/// element t1 (lie = -1).
struct AffineGenerator {
  int lie;
  int degree;
  int label;

  static AffineGenerator central() { return {-1, 0, 0}; }
  bool is_central() const { return lie < 0; }
};

/// Canonical sort key of a non-central generator inside PBW words:
/// ascending (degree, label, lie).
struct GenKey {
  int degree;
  int label;
  int lie;
  auto operator<=>(const GenKey&) const = default;

  AffineGenerator generator() const { return {lie, degree, label}; }
};

/// Ascending product of generator keys; the empty word is the vacuum.
using PBWMonomial = std::vector<GenKey>;

/// Sum of the factor degrees (0 for the vacuum); always <= 0.
int monomial_degree(const PBWMonomial& m);

/// Sparse vector with exact coefficients over PBW monomials.
class ModuleVec {
public:
  using Terms = std::map<PBWMonomial, Rat>;

  static ModuleVec vacuum();
  static ModuleVec single(PBWMonomial m, Rat c = Rat(1));

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  void add(const PBWMonomial& m, const Rat& c);
  ModuleVec& operator+=(const ModuleVec& o);
  ModuleVec& axpy(const Rat& c, const ModuleVec& o);
  ModuleVec operator*(const Rat& c) const;
  ModuleVec operator-(const ModuleVec& o) const;
  bool operator==(const ModuleVec& o) const { return terms_ == o.terms_; }

  /// Smallest monomial degree present (0 for the zero vector).
  int min_degree() const;

private:
  Terms terms_;
};

/// Abstract bracket of two affine generators: a finite combination of
/// generators plus a multiple of the central element.
struct AffineBracket {
  std::vector<std::pair<AffineGenerator, Rat>> lie_terms;
  Rat central = Rat(0);
};

/// [x (x) A_a, y (x) A_b] = [x,y] (x) (A_a A_b)
///                          + (x|y) * gamma(A_a, A_b) * t1,
/// with the product expanded through the weight-0 structure constants and
/// gamma the function cocycle over the separating cycle.
AffineBracket affine_bracket(const KNBasisTable& table, const FinLieAlgebra& g,
                             const AffineGenerator& a,
                             const AffineGenerator& b);

/// Module of the affinization truncated at a fixed depth: monomials whose
/// total degree would drop below -depth raise DepthExceededError; the
/// central element acts as the level.  Generators of positive degree
/// annihilate every vector whose degree they would push above 0.
class AdmissibleModule {
public:
  virtual ~AdmissibleModule() = default;

  virtual int depth() const = 0;
  virtual Rat level() const = 0;

  /// Action of one generator on one basis monomial.
  virtual ModuleVec apply_monomial(const AffineGenerator& g,
                                   const PBWMonomial& m) const = 0;

  /// All generators the module knows at a fixed degree.
  virtual std::vector<AffineGenerator> generators_at(int degree) const = 0;

  /// Basis monomials of degree >= -max_depth with at most max_zero_factors
  /// degree-0 factors, in deterministic order.
  virtual std::vector<PBWMonomial>
  enumerate_basis(int max_depth, int max_zero_factors) const = 0;

  /// Linear extension of apply_monomial; the central generator scales by
  /// the level.
  ModuleVec apply(const AffineGenerator& g, const ModuleVec& v) const;
};

/// Vacuum module: induced from the one-dimensional representation of the
/// nonnegative half plus center on which positive-degree generators act as
/// 0 and t1 as the level.  Degree-0 generators act freely, so words may
/// contain any number of degree-0 factors.  Straightening uses the affine
/// bracket with memoization.
class VacuumModule : public AdmissibleModule {
public:
  VacuumModule(const KNBasisTable& table, const FinLieAlgebra& g, Rat level,
               int depth);

  int depth() const override { return depth_; }
  Rat level() const override { return level_; }
  ModuleVec apply_monomial(const AffineGenerator& g,
                           const PBWMonomial& m) const override;
  std::vector<AffineGenerator> generators_at(int degree) const override;
  std::vector<PBWMonomial> enumerate_basis(int max_depth,
                                           int max_zero_factors) const
      override;

  const KNBasisTable& basis_table() const { return table_; }
  const FinLieAlgebra& algebra() const { return g_; }

private:
  std::shared_ptr<const ModuleVec> leftmul(const GenKey& g,
                                           const PBWMonomial& m) const;
  const AffineBracket& cached_bracket(const GenKey& a, const GenKey& b) const;

  const KNBasisTable& table_;
  const FinLieAlgebra& g_;
  Rat level_;
  int depth_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<GenKey, GenKey>, AffineBracket> bracket_cache_;
  mutable std::map<std::pair<GenKey, PBWMonomial>,
                   std::shared_ptr<const ModuleVec>>
      act_cache_;
};

/// Polynomial (Fock) realization of the rank-1 classical case at level 1:
/// monomials in variables x_1, x_2, ... where the degree -n generator
/// multiplies by n x_n, the degree n generator differentiates by x_n
/// (n >= 1), and the degree-0 generator acts as the identity.  Serves as an
/// independent cross-check of the vacuum construction.
class FockModule : public AdmissibleModule {
public:
  explicit FockModule(int depth) : depth_(depth) {}

  int depth() const override { return depth_; }
  Rat level() const override { return Rat(1); }
  ModuleVec apply_monomial(const AffineGenerator& g,
                           const PBWMonomial& m) const override;
  std::vector<AffineGenerator> generators_at(int degree) const override;
  std::vector<PBWMonomial> enumerate_basis(int max_depth,
                                           int max_zero_factors) const
      override;

private:
  int depth_;
};

struct AdmissibilityReport {
  bool ok = true;
  /// Degree above which every generator annihilated the vector.
  int bound = 0;
  long checks = 0;
};

/// Verify that all generators of degree bound+1 .. probe_max annihilate v,
/// where bound = -min_degree(v).
AdmissibilityReport admissibility_check(const AdmissibleModule& mod,
                                        const ModuleVec& v, int probe_max);

} // namespace kn

#endif
