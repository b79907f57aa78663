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

#include "kn/basis.hpp"

#include <algorithm>
#include <cstdlib>

#include "kn/errors.hpp"
#include "kn/linalg.hpp"

namespace kn {

PointConfig::PointConfig(std::vector<Point> in_points,
                         std::vector<Point> out_points)
    : in_(std::move(in_points)), out_(std::move(out_points)) {
  if (in_.empty() || out_.empty())
    throw InvalidConfigError("both point tuples must be nonempty");
  std::vector<Point> all = in_;
  all.insert(all.end(), out_.begin(), out_.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i] == all[j])
        throw InvalidConfigError("marked points must be pairwise distinct: " +
                                 all[i].to_string());
}

PointConfig PointConfig::classical() {
  return PointConfig({Point(Rat(0))}, {Point::infinity()});
}

const Point& PointConfig::in_point(int p) const {
  if (p < 1 || p > n_in())
    throw InvalidConfigError("in-point label out of range: " +
                             std::to_string(p));
  return in_[static_cast<std::size_t>(p - 1)];
}

const Point& PointConfig::out_point(int j) const {
  if (j < 1 || j > n_out())
    throw InvalidConfigError("out-point label out of range: " +
                             std::to_string(j));
  return out_[static_cast<std::size_t>(j - 1)];
}

std::vector<Point> PointConfig::all_points() const {
  std::vector<Point> all = in_;
  all.insert(all.end(), out_.begin(), out_.end());
  return all;
}

bool PointConfig::is_marked(const Point& p) const {
  for (const auto& q : in_)
    if (q == p)
      return true;
  for (const auto& q : out_)
    if (q == p)
      return true;
  return false;
}

KNBasisTable::KNBasisTable(PointConfig cfg) : cfg_(std::move(cfg)) {}

std::map<Point, int> KNBasisTable::prescribe_orders(const KNIndex& idx) const {
  if (idx.label < 1 || idx.label > cfg_.n_in())
    throw InvalidConfigError("basis element label out of range: " +
                             std::to_string(idx.label));
  const int base = idx.degree + 1 - idx.weight;
  std::map<Point, int> orders;
  int sum = 0;
  for (int i = 1; i <= cfg_.n_in(); ++i) {
    const int o = base - (i == idx.label ? 1 : 0);
    orders[cfg_.in_point(i)] = o;
    sum += o;
  }
  for (int j = 1; j < cfg_.n_out(); ++j) {
    orders[cfg_.out_point(j)] = -base;
    sum += -base;
  }
  // The last out point absorbs whatever is needed to make the orders sum to
  // the degree -2w of a weight-w divisor on the projective line.
  orders[cfg_.out_point(cfg_.n_out())] = -2 * idx.weight - sum;
  return orders;
}

namespace {

/// Pascal triangle up to row n, exact.
RatMat binomials(int n) {
  RatMat b(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    b[i].assign(static_cast<std::size_t>(i) + 1, Rat(1));
    for (int j = 1; j < i; ++j)
      b[i][j] = b[i - 1][j - 1] + b[i - 1][j];
  }
  return b;
}

} // namespace

KNBasisElement KNBasisTable::build_element(const KNIndex& idx) const {
  const auto orders = prescribe_orders(idx);

  // Poles go into the denominator; the order at infinity caps the
  // numerator degree.
  Poly den(Rat(1));
  int o_inf = 0;
  int n_constraints = 0;
  for (const auto& [pt, o] : orders) {
    if (pt.is_infinity()) {
      o_inf = o;
      continue;
    }
    if (o < 0)
      den = den * Poly::linear_root(pt.value()).pow(-o);
    else
      n_constraints += o;
  }
  const int dmax = den.degree() - 2 * idx.weight - o_inf;
  if (dmax < 0)
    throw NonUniqueElementError("no nonzero candidate for the requested "
                                "orders (degree bound negative)");

  // Numerator coefficients solve the homogeneous vanishing conditions: for
  // every finite marked point with positive prescribed order o, the first o
  // Taylor coefficients of the numerator at that point are zero.
  RatMat a;
  a.reserve(static_cast<std::size_t>(n_constraints));
  const RatMat binom = binomials(dmax);
  for (const auto& [pt, o] : orders) {
    if (pt.is_infinity() || o <= 0)
      continue;
    const Rat& p = pt.value();
    for (int j = 0; j < o; ++j) {
      RatVec row(static_cast<std::size_t>(dmax) + 1, Rat(0));
      for (int k = j; k <= dmax; ++k) {
        Rat pw(1);
        for (int t = 0; t < k - j; ++t)
          pw *= p;
        row[static_cast<std::size_t>(k)] = binom[k][j] * pw;
      }
      a.push_back(std::move(row));
    }
  }

  std::vector<RatVec> sol;
  if (a.empty()) {
    if (dmax != 0)
      throw NonUniqueElementError("unconstrained numerator of positive "
                                  "degree bound");
    sol.push_back(RatVec{Rat(1)});
  } else {
    sol = kernel_basis(std::move(a));
  }
  if (sol.size() != 1)
    throw NonUniqueElementError(
        "interpolation space has dimension " + std::to_string(sol.size()) +
        ", expected 1");

  MeroForm form(idx.weight, RationalFunction(Poly(std::move(sol[0])), den));

  // Defensive exactness check: every prescribed order must be realized on
  // the nose (the degree count leaves no slack, so any deviation is a bug).
  for (const auto& [pt, o] : orders) {
    const auto got = order_at(form, pt);
    if (!got || *got != o)
      throw OrderSlackError("order at " + pt.to_string() + " is " +
                            (got ? std::to_string(*got) : "infinite") +
                            ", prescribed " + std::to_string(o));
  }

  // Normalize the leading local coefficient at the labeled in point to 1.
  const Point& anchor = cfg_.in_point(idx.label);
  const int o_anchor = orders.at(anchor);
  const Rat lead =
      local_expansion(form, anchor, o_anchor, o_anchor).coeff(o_anchor);
  form.rep = form.rep * (1 / lead);

  return KNBasisElement{idx, std::move(form)};
}

const KNBasisElement& KNBasisTable::element(const KNIndex& idx) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = elements_.find(idx);
    if (it != elements_.end())
      return it->second;
  }
  KNBasisElement built = build_element(idx);
  std::lock_guard<std::mutex> lock(mu_);
  return elements_.emplace(idx, std::move(built)).first->second;
}

Rat KNBasisTable::duality_pairing(const KNIndex& a, const KNIndex& b) const {
  if (a.weight + b.weight != 1)
    throw WrongWeightError("duality pairing needs complementary weights w "
                           "and 1-w");
  const MeroForm prod =
      form_product(element(a).form, element(b).form);
  return contour_integral(prod, cfg_.in_points());
}

SparseCoeffs KNBasisTable::expand_impl(const MeroForm& f) const {
  SparseCoeffs out;
  if (f.is_zero())
    return out;
  const int w = f.weight;

  // Degree support from the vanishing orders of f at the marked points: the
  // coefficient at (n, p) pairs f against the complementary-weight element
  // of degree -n, and the pairing can only be nonzero when the product has
  // an actual pole at some in point and order >= -1 at every out point.
  int n_min = 0;
  bool first = true;
  for (const auto& pt : cfg_.in_points()) {
    const auto o = order_at(f, pt);
    const int cand = w + *o;
    if (first || cand < n_min) {
      n_min = cand;
      first = false;
    }
  }
  int n_max = 0;
  first = true;
  const int lout = cfg_.n_out();
  for (int j = 1; j <= lout; ++j) {
    const auto o = order_at(f, cfg_.out_point(j));
    const int cand = (j < lout) ? (w - 1 - *o) : (-w - *o);
    if (first || cand > n_max) {
      n_max = cand;
      first = false;
    }
  }

  MeroForm recon(w, RationalFunction());
  for (int n = n_min; n <= n_max; ++n) {
    for (int p = 1; p <= cfg_.n_in(); ++p) {
      const KNIndex dual_idx{1 - w, -n, p};
      const Rat c = contour_integral(
          form_product(f, element(dual_idx).form), cfg_.in_points());
      if (c != 0) {
        out[DegLabel{n, p}] = c;
        recon = recon + element(KNIndex{w, n, p}).form * c;
      }
    }
  }
  if (!(recon == f))
    throw Error("basis expansion failed to reconstruct the form exactly");
  return out;
}

SparseCoeffs KNBasisTable::expand(const MeroForm& f) const {
  return expand_impl(f);
}

SparseCoeffs KNBasisTable::expand(const MeroForm& f,
                                  std::pair<int, int> window) const {
  SparseCoeffs out = expand_impl(f);
  for (const auto& [dl, c] : out)
    if (dl.degree < window.first || dl.degree > window.second)
      throw NotInWindowError(
          "expansion has support at degree " + std::to_string(dl.degree) +
          " outside the window [" + std::to_string(window.first) + ", " +
          std::to_string(window.second) + "]");
  return out;
}

const SparseCoeffs& KNBasisTable::product_constants(const DegLabel& a,
                                                    const DegLabel& b) const {
  const auto key = std::make_pair(a, b);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = products_.find(key);
    if (it != products_.end())
      return it->second;
  }
  const MeroForm prod = form_product(element(KNIndex{0, a.degree, a.label}).form,
                                     element(KNIndex{0, b.degree, b.label}).form);
  SparseCoeffs coeffs = expand_impl(prod);
  std::lock_guard<std::mutex> lock(mu_);
  return products_.emplace(key, std::move(coeffs)).first->second;
}

const SparseCoeffs& KNBasisTable::bracket_constants(const DegLabel& a,
                                                    const DegLabel& b) const {
  const auto key = std::make_pair(a, b);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = brackets_.find(key);
    if (it != brackets_.end())
      return it->second;
  }
  const MeroForm& ea = element(KNIndex{-1, a.degree, a.label}).form;
  const MeroForm& eb = element(KNIndex{-1, b.degree, b.label}).form;
  SparseCoeffs coeffs = expand_impl(lie_derivative(ea, eb));
  std::lock_guard<std::mutex> lock(mu_);
  return brackets_.emplace(key, std::move(coeffs)).first->second;
}

SparseCoeffs KNBasisTable::lie_derivative_constants(const DegLabel& e_idx,
                                                    const KNIndex& g_idx)
    const {
  const MeroForm& e = element(KNIndex{-1, e_idx.degree, e_idx.label}).form;
  const MeroForm& g = element(g_idx).form;
  return expand_impl(lie_derivative(e, g));
}

AlmostGradingReport KNBasisTable::almost_grading(int weight, int nmax) const {
  if (weight != 0 && weight != -1)
    throw WrongWeightError("almost-grading measurement covers weights 0 "
                           "and -1");
  if (nmax < 2)
    throw Error("almost-grading window too small to measure stability");
  AlmostGradingReport rep;
  const int half = nmax / 2;
  for (int n = -nmax; n <= nmax; ++n) {
    for (int m = -nmax; m <= nmax; ++m) {
      for (int p = 1; p <= cfg_.n_in(); ++p) {
        for (int r = 1; r <= cfg_.n_in(); ++r) {
          const SparseCoeffs& c = weight == 0
                                      ? product_constants({n, p}, {m, r})
                                      : bracket_constants({n, p}, {m, r});
          ++rep.pairs_probed;
          if (c.empty())
            continue;
          const int lo = c.begin()->first.degree;
          const int hi = c.rbegin()->first.degree;
          if (lo < n + m)
            throw BandViolationError(
                "support reaches degree " + std::to_string(lo) +
                " below the graded floor " + std::to_string(n + m));
          const int width = hi - (n + m);
          rep.upper_width = std::max(rep.upper_width, width);
          if (std::abs(n) <= half && std::abs(m) <= half)
            rep.upper_width_half = std::max(rep.upper_width_half, width);
        }
      }
    }
  }
  return rep;
}

} // namespace kn
