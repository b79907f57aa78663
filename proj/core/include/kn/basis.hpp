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

#ifndef KN_BASIS_HPP
#define KN_BASIS_HPP

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "kn/forms.hpp"

namespace kn {

/// Two disjoint nonempty tuples of marked points on the projective line:
/// the "in" points P_1..P_K and the "out" points Q_1..Q_L.  Labels are
/// 1-based.  Contour integrals are taken over a cycle separating the in
/// points from the out points, i.e. as residue sums over the in points.
class PointConfig {
public:
  PointConfig(std::vector<Point> in_points, std::vector<Point> out_points);

  /// I = (0), O = (inf): the one-in one-out configuration whose basis is
  /// the Laurent ladder z^(n-w) dz^w.
  static PointConfig classical();

  int n_in() const { return static_cast<int>(in_.size()); }
  int n_out() const { return static_cast<int>(out_.size()); }
  const std::vector<Point>& in_points() const { return in_; }
  const std::vector<Point>& out_points() const { return out_; }
  /// In point with 1-based label p.
  const Point& in_point(int p) const;
  const Point& out_point(int j) const;
  /// All marked points, in points first.
  std::vector<Point> all_points() const;
  bool is_marked(const Point& p) const;

private:
  std::vector<Point> in_, out_;
};

/// Index of a graded basis element: conformal weight, integer degree, and
/// the 1-based label of the in point the element is normalized at.
struct KNIndex {
  int weight;
  int degree;
  int label;
  auto operator<=>(const KNIndex&) const = default;
};

/// (degree, label) pair inside a fixed weight.
struct DegLabel {
  int degree;
  int label;
  auto operator<=>(const DegLabel&) const = default;
};

/// Sparse coefficient vector over (degree, label) pairs of a fixed weight.
using SparseCoeffs = std::map<DegLabel, Rat>;

struct KNBasisElement {
  KNIndex index;
  MeroForm form;
};

/// Measured almost-grading data for products (weight 0) or brackets
/// (weight -1): supports live in [n+m, n+m+upper_width] over the probed
/// window, with `upper_width_half` the same measurement on the half-size
/// window (equality indicates the width has stabilized).
struct AlmostGradingReport {
  int upper_width = 0;
  int upper_width_half = 0;
  bool lower_bound_ok = true;
  int pairs_probed = 0;
  bool stabilized() const { return upper_width == upper_width_half; }
};

/// Graded basis of meromorphic forms attached to a point configuration.
///
/// For weight w and degree n the element with label p is the (unique up to
/// scale) form whose vanishing orders at the marked points are
///   ord(P_i) = n + 1 - w - delta_(i,p),
///   ord(Q_j) = -(n + 1 - w)                 for j < L,
///   ord(Q_L) = such that all orders sum to -2w,
/// normalized so the leading coefficient of its local expansion at P_p
/// equals 1.  Elements, pairings and structure constants are cached.
class KNBasisTable {
public:
  explicit KNBasisTable(PointConfig cfg);

  const PointConfig& config() const { return cfg_; }

  /// Prescribed vanishing order at every marked point.
  std::map<Point, int> prescribe_orders(const KNIndex& idx) const;

  /// The basis element for idx (built on first use, then cached).
  const KNBasisElement& element(const KNIndex& idx) const;

  /// (1/2*pi*i) contour integral of the product of two elements of
  /// complementary weights w and 1-w.  Equals delta(a.degree, -b.degree) *
  /// delta(a.label, b.label) by duality.
  Rat duality_pairing(const KNIndex& a, const KNIndex& b) const;

  /// Exact expansion of f in the weight-f.weight basis.  The support is
  /// located through the vanishing orders of f at the marked points and the
  /// result reconstructs f exactly (this is asserted).
  SparseCoeffs expand(const MeroForm& f) const;

  /// Like expand, but throws NotInWindowError when any nonzero coefficient
  /// has degree outside [window.first, window.second].
  SparseCoeffs expand(const MeroForm& f, std::pair<int, int> window) const;

  /// Structure constants of the product of two weight-0 elements in the
  /// weight-0 basis (cached).
  const SparseCoeffs& product_constants(const DegLabel& a,
                                        const DegLabel& b) const;

  /// Structure constants of the bracket of two weight -1 elements
  /// (e f' - f e') d/dz in the weight -1 basis (cached).
  const SparseCoeffs& bracket_constants(const DegLabel& a,
                                        const DegLabel& b) const;

  /// Lie derivative of the weight-w element g_idx along the weight -1
  /// element e_idx, expanded in the weight-w basis.
  SparseCoeffs lie_derivative_constants(const DegLabel& e_idx,
                                        const KNIndex& g_idx) const;

  /// Measure the almost-grading band over |n|, |m| <= nmax for weight 0
  /// (products) or weight -1 (brackets).  BandViolationError when some
  /// support reaches below n + m.
  AlmostGradingReport almost_grading(int weight, int nmax) const;

private:
  KNBasisElement build_element(const KNIndex& idx) const;
  SparseCoeffs expand_impl(const MeroForm& f) const;

  PointConfig cfg_;
  mutable std::mutex mu_;
  mutable std::map<KNIndex, KNBasisElement> elements_;
  mutable std::map<std::pair<DegLabel, DegLabel>, SparseCoeffs> products_;
  mutable std::map<std::pair<DegLabel, DegLabel>, SparseCoeffs> brackets_;
};

} // namespace kn

#endif
