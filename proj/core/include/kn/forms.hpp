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

#ifndef KN_FORMS_HPP
#define KN_FORMS_HPP

#include <optional>
#include <vector>

#include "kn/point.hpp"
#include "kn/rational_function.hpp"

namespace kn {

/// Meromorphic form g(z) dz^w of integer conformal weight w on the
/// projective line, stored through its representative in the affine chart.
/// In the chart at infinity (coordinate u = 1/z) the same form is
/// represented by g(1/u) * (-u^-2)^w, since dz = -u^-2 du.
struct MeroForm {
  int weight = 0;
  RationalFunction rep;

  MeroForm() = default;
  MeroForm(int w, RationalFunction r) : weight(w), rep(std::move(r)) {}

  bool is_zero() const { return rep.is_zero(); }

  MeroForm operator+(const MeroForm& o) const;
  MeroForm operator-(const MeroForm& o) const;
  MeroForm operator*(const Rat& c) const { return {weight, rep * c}; }
  bool operator==(const MeroForm& o) const {
    return weight == o.weight && rep == o.rep;
  }
};

/// Representative of the form in the chart at infinity.
RationalFunction rep_at_infinity(const MeroForm& f);

/// Vanishing order at a point, taken in the local coordinate of the chart
/// the point lives in (z - a at finite a, u = 1/z at infinity).  The weight
/// shifts the order at infinity: ord = deg den - deg num - 2w there.
/// nullopt for the zero form.
std::optional<int> order_at(const MeroForm& f, const Point& p);

/// Finite window of a Laurent expansion in the local coordinate at a point.
/// Coefficients are stored densely for every order lo..hi, including the
/// window entries that happen to be zero.
class LocalExpansion {
public:
  LocalExpansion(Point point, int lo, int hi, std::vector<Rat> coeffs);

  const Point& point() const { return point_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }

  /// Coefficient of t^k; throws outside the window.
  const Rat& coeff(int k) const;

private:
  Point point_;
  int lo_, hi_;
  std::vector<Rat> coeffs_;
};

/// Laurent coefficients of f in the window lo..hi at the given point.
LocalExpansion local_expansion(const MeroForm& f, const Point& p, int lo,
                               int hi);

/// Residue of a weight-1 form at a point; WrongWeightError otherwise.
Rat residue_at(const MeroForm& f, const Point& p);

/// (1/2*pi*i) times the integral of a weight-1 form over a cycle separating
/// the given points from the rest: the sum of the residues at those points.
Rat contour_integral(const MeroForm& f, const std::vector<Point>& points);

/// Pointwise product; weights add.
MeroForm form_product(const MeroForm& a, const MeroForm& b);

/// d of a weight-0 form: g |-> g' dz.  WrongWeightError unless weight 0.
MeroForm exterior_derivative(const MeroForm& f);

/// Lie derivative of a weight-w form g along the vector field e (weight -1):
/// (e g' + w g e') dz^w.  For w = -1 this is the vector field bracket.
MeroForm lie_derivative(const MeroForm& e, const MeroForm& g);

/// Schwarzian derivative h'''/h' - (3/2)(h''/h')^2.
/// DegenerateMapError when h' = 0.
RationalFunction schwarzian(const RationalFunction& h);

} // namespace kn

#endif
