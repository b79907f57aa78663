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

#include "kn/linalg.hpp"

#include <cstddef>

namespace kn {

namespace {

/// Reduced row echelon form of [A | b] in place (b may be empty).
/// Returns the pivot column of every pivot row.
std::vector<std::size_t> rref(RatMat& a, RatVec& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c] == 0)
      ++sel;
    if (sel == rows)
      continue;
    std::swap(a[sel], a[r]);
    if (!b.empty())
      std::swap(b[sel], b[r]);
    const Rat inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j)
      a[r][j] *= inv;
    if (!b.empty())
      b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0)
        continue;
      const Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] -= f * a[r][j];
      if (!b.empty())
        b[i] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

LinearSolveResult solve_linear(RatMat a, RatVec b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  LinearSolveResult res;
  const auto pivots = rref(a, b);

  for (std::size_t i = pivots.size(); i < rows; ++i)
    if (b[i] != 0) {
      res.consistent = false;
      return res;
    }
  res.consistent = true;

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots)
    is_pivot[c] = true;

  res.particular.assign(cols, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    res.particular[pivots[i]] = b[i];

  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c])
      continue;
    RatVec v(cols, Rat(0));
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -a[i][c];
    res.nullspace.push_back(std::move(v));
  }

  // A variable is pinned exactly when no nullspace vector moves it.
  res.determined.assign(cols, true);
  for (const auto& v : res.nullspace)
    for (std::size_t c = 0; c < cols; ++c)
      if (v[c] != 0)
        res.determined[c] = false;
  return res;
}

std::vector<RatVec> kernel_basis(RatMat a) {
  RatVec empty;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  const auto pivots = rref(a, empty);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots)
    is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c])
      continue;
    RatVec v(cols, Rat(0));
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -a[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatMat> invert(RatMat a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n)
      return std::nullopt;
  // Augment with the identity and reduce.
  for (std::size_t i = 0; i < n; ++i) {
    a[i].resize(2 * n, Rat(0));
    a[i][n + i] = 1;
  }
  RatVec empty;
  const auto pivots = rref(a, empty);
  if (pivots.size() != n)
    return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (pivots[i] != i)
      return std::nullopt;
  RatMat inv(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv[i][j] = a[i][n + j];
  return inv;
}

} // namespace kn
