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

#include "kn/liealgebra.hpp"

#include <utility>

#include "kn/errors.hpp"
#include "kn/linalg.hpp"

namespace kn {

FinLieAlgebra::FinLieAlgebra(int dim, std::vector<std::string> names)
    : dim_(dim), names_(std::move(names)),
      brackets_(static_cast<std::size_t>(dim),
                std::vector<RatVec>(static_cast<std::size_t>(dim),
                                    RatVec(static_cast<std::size_t>(dim),
                                           Rat(0)))),
      form_(static_cast<std::size_t>(dim),
            RatVec(static_cast<std::size_t>(dim), Rat(0))) {}

FinLieAlgebra FinLieAlgebra::abelian(int dim) {
  if (dim < 1)
    throw BadDimensionError("abelian algebra needs dimension >= 1");
  std::vector<std::string> names;
  for (int i = 0; i < dim; ++i)
    names.push_back("a" + std::to_string(i + 1));
  FinLieAlgebra g(dim, std::move(names));
  for (int i = 0; i < dim; ++i)
    g.form_[i][i] = 1;
  return g;
}

namespace {

/// Dense n x n rational matrix helpers for the sl(n) construction.
RatMat mat_zero(int n) {
  return RatMat(static_cast<std::size_t>(n),
                RatVec(static_cast<std::size_t>(n), Rat(0)));
}

RatMat mat_comm(const RatMat& x, const RatMat& y) {
  const std::size_t n = x.size();
  RatMat c = mat_zero(static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Rat s(0);
      for (std::size_t j = 0; j < n; ++j)
        s += x[i][j] * y[j][k] - y[i][j] * x[j][k];
      c[i][k] = s;
    }
  return c;
}

Rat mat_trace_prod(const RatMat& x, const RatMat& y) {
  const std::size_t n = x.size();
  Rat s(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s += x[i][j] * y[j][i];
  return s;
}

} // namespace

FinLieAlgebra FinLieAlgebra::sl(int n) {
  if (n < 2)
    throw BadDimensionError("sl(n) needs n >= 2");
  // Basis: E_ij for i != j, then H_i = E_ii - E_(i+1)(i+1).
  std::vector<RatMat> basis;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        continue;
      RatMat e = mat_zero(n);
      e[i][j] = 1;
      basis.push_back(std::move(e));
      names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  for (int i = 0; i + 1 < n; ++i) {
    RatMat h = mat_zero(n);
    h[i][i] = 1;
    h[i + 1][i + 1] = -1;
    basis.push_back(std::move(h));
    names.push_back("H" + std::to_string(i + 1));
  }
  const int dim = static_cast<int>(basis.size());

  FinLieAlgebra g(dim, std::move(names));

  // Coordinates of a traceless matrix in this basis: off-diagonal entries
  // directly; the diagonal through partial sums (the H_i ladder).
  auto coords = [&](const RatMat& m) {
    RatVec v(static_cast<std::size_t>(dim), Rat(0));
    int idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j)
          continue;
        v[idx++] = m[i][j];
      }
    Rat partial(0);
    for (int i = 0; i + 1 < n; ++i) {
      partial += m[i][i];
      v[idx++] = partial;
    }
    return v;
  };

  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      g.brackets_[i][j] = coords(mat_comm(basis[i], basis[j]));
      g.form_[i][j] = mat_trace_prod(basis[i], basis[j]);
    }
  return g;
}

FinLieAlgebra FinLieAlgebra::direct_sum(const FinLieAlgebra& a,
                                        const FinLieAlgebra& b) {
  std::vector<std::string> names;
  for (int i = 0; i < a.dim(); ++i)
    names.push_back("l." + a.basis_name(i));
  for (int i = 0; i < b.dim(); ++i)
    names.push_back("r." + b.basis_name(i));
  FinLieAlgebra g(a.dim() + b.dim(), std::move(names));
  const int da = a.dim();
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      for (int k = 0; k < da; ++k)
        g.brackets_[i][j][k] = a.brackets_[i][j][k];
      g.form_[i][j] = a.form_[i][j];
    }
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) {
      for (int k = 0; k < b.dim(); ++k)
        g.brackets_[da + i][da + j][da + k] = b.brackets_[i][j][k];
      g.form_[da + i][da + j] = b.form_[i][j];
    }
  return g;
}

const std::string& FinLieAlgebra::basis_name(int i) const {
  return names_.at(static_cast<std::size_t>(i));
}

const RatVec& FinLieAlgebra::bracket(int i, int j) const {
  return brackets_.at(static_cast<std::size_t>(i))
      .at(static_cast<std::size_t>(j));
}

RatVec FinLieAlgebra::bracket_vec(const RatVec& x, const RatVec& y) const {
  RatVec out(static_cast<std::size_t>(dim_), Rat(0));
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0)
      continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0)
        continue;
      const Rat c = x[i] * y[j];
      const RatVec& br = brackets_[i][j];
      for (int k = 0; k < dim_; ++k)
        if (br[k] != 0)
          out[k] += c * br[k];
    }
  }
  return out;
}

const Rat& FinLieAlgebra::form(int i, int j) const {
  return form_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
}

Rat FinLieAlgebra::form_vec(const RatVec& x, const RatVec& y) const {
  Rat s(0);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (x[i] != 0 && y[j] != 0)
        s += x[i] * form_[i][j] * y[j];
  return s;
}

const RatMat& FinLieAlgebra::dual_basis() const {
  if (!dual_ready_) {
    auto inv = invert(form_);
    if (!inv)
      throw DegenerateFormError("invariant form is degenerate; no dual "
                                "basis");
    dual_ = std::move(*inv);
    dual_ready_ = true;
  }
  return dual_;
}

Rat FinLieAlgebra::kappa() const {
  const RatMat& dual = dual_basis();
  // Casimir on the adjoint representation: sum_i ad(u_i) ad(u^i).
  RatMat cas(static_cast<std::size_t>(dim_),
             RatVec(static_cast<std::size_t>(dim_), Rat(0)));
  for (int i = 0; i < dim_; ++i) {
    // u_i = x_i; u^i = sum_j dual[i][j] x_j.
    for (int v = 0; v < dim_; ++v) {
      // ad(u^i) x_v.
      RatVec inner(static_cast<std::size_t>(dim_), Rat(0));
      for (int j = 0; j < dim_; ++j) {
        if (dual[i][j] == 0)
          continue;
        const RatVec& br = brackets_[j][v];
        for (int k = 0; k < dim_; ++k)
          if (br[k] != 0)
            inner[k] += dual[i][j] * br[k];
      }
      // ad(x_i) of that.
      for (int k = 0; k < dim_; ++k) {
        if (inner[k] == 0)
          continue;
        const RatVec& br = brackets_[i][k];
        for (int t = 0; t < dim_; ++t)
          if (br[t] != 0)
            cas[t][v] += inner[k] * br[t];
      }
    }
  }
  const Rat twice_kappa = cas[0][0];
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      const Rat expected = (i == j) ? twice_kappa : Rat(0);
      if (cas[i][j] != expected)
        throw NotScalarOnAdjointError(
            "Casimir operator is not scalar on the adjoint representation");
    }
  return twice_kappa / 2;
}

void FinLieAlgebra::validate() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k)
        if (brackets_[i][j][k] + brackets_[j][i][k] != 0)
          throw Error("structure constants are not antisymmetric");
      if (form_[i][j] != form_[j][i])
        throw Error("invariant form is not symmetric");
    }
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        // Jacobi on basis triples.
        RatVec s(static_cast<std::size_t>(dim_), Rat(0));
        auto acc = [&](const RatVec& xy, int z) {
          for (int t = 0; t < dim_; ++t)
            if (xy[t] != 0) {
              const RatVec& br = brackets_[t][z];
              for (int u = 0; u < dim_; ++u)
                if (br[u] != 0)
                  s[u] += xy[t] * br[u];
            }
        };
        acc(brackets_[i][j], k);
        acc(brackets_[j][k], i);
        acc(brackets_[k][i], j);
        for (int u = 0; u < dim_; ++u)
          if (s[u] != 0)
            throw Error("Jacobi identity fails on basis triple");
        // Invariance on basis triples: ([x_i,x_j] | x_k) = (x_i | [x_j,x_k]).
        Rat lhs(0), rhs(0);
        for (int t = 0; t < dim_; ++t) {
          lhs += brackets_[i][j][t] * form_[t][k];
          rhs += form_[i][t] * brackets_[j][k][t];
        }
        if (lhs != rhs)
          throw Error("invariant form fails invariance on basis triple");
      }
}

FinLieAlgebra algebra_from_token(const std::string& token) {
  const auto colon = token.find(':');
  if (colon == std::string::npos)
    throw ParseError("algebra token must look like abelian:d or sl:n");
  const std::string kind = token.substr(0, colon);
  int arg = 0;
  try {
    arg = std::stoi(token.substr(colon + 1));
  } catch (const std::exception&) {
    throw ParseError("malformed algebra dimension in token: " + token);
  }
  if (kind == "abelian")
    return FinLieAlgebra::abelian(arg);
  if (kind == "sl")
    return FinLieAlgebra::sl(arg);
  throw ParseError("unknown algebra kind: " + kind);
}

} // namespace kn
