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

#ifndef KN_LIEALGEBRA_HPP
#define KN_LIEALGEBRA_HPP

#include <string>
#include <vector>

#include "kn/rational.hpp"

namespace kn {

/// Finite-dimensional Lie algebra over Q presented by structure constants
/// in a fixed basis, together with a symmetric invariant bilinear form.
class FinLieAlgebra {
public:
  /// Abelian algebra of the given dimension with the standard euclidean
  /// pairing as invariant form.
  static FinLieAlgebra abelian(int dim);

  /// sl(n, Q), n >= 2, in the basis of off-diagonal matrix units E_ij and
  /// the diagonal differences H_i = E_ii - E_(i+1)(i+1), with the trace
  /// form (x|y) = tr(xy).
  static FinLieAlgebra sl(int n);

  /// Block sum of algebras and forms.
  static FinLieAlgebra direct_sum(const FinLieAlgebra& a,
                                  const FinLieAlgebra& b);

  int dim() const { return dim_; }
  const std::string& basis_name(int i) const;

  /// Coordinates of [x_i, x_j].
  const RatVec& bracket(int i, int j) const;
  /// Bracket of arbitrary coordinate vectors.
  RatVec bracket_vec(const RatVec& x, const RatVec& y) const;
  /// (x_i | x_j).
  const Rat& form(int i, int j) const;
  Rat form_vec(const RatVec& x, const RatVec& y) const;

  /// Coefficient matrix D of the dual basis u^i = sum_j D[i][j] x_j with
  /// respect to the invariant form: D is the inverse Gram matrix.
  /// DegenerateFormError when the form is degenerate.
  const RatMat& dual_basis() const;

  /// Normalized Casimir eigenvalue: sum_i ad(u_i) ad(u^i) acts on the
  /// algebra as 2*kappa*id.  NotScalarOnAdjointError when the operator is
  /// not scalar.  kappa(sl(n)) = n, kappa(abelian) = 0.
  Rat kappa() const;

  /// Check antisymmetry, the Jacobi identity and invariance of the form;
  /// throws Error on the first violation.
  void validate() const;

private:
  FinLieAlgebra(int dim, std::vector<std::string> names);
  int dim_;
  std::vector<std::string> names_;
  /// brackets_[i][j] = coordinates of [x_i, x_j].
  std::vector<std::vector<RatVec>> brackets_;
  RatMat form_;
  mutable RatMat dual_; // lazily computed inverse Gram matrix
  mutable bool dual_ready_ = false;
};

/// Parse an algebra token: "abelian:d" or "sl:n".
FinLieAlgebra algebra_from_token(const std::string& token);

} // namespace kn

#endif
