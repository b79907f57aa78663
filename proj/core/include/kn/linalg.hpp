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

#ifndef KN_LINALG_HPP
#define KN_LINALG_HPP

#include <optional>
#include <vector>

#include "kn/rational.hpp"

namespace kn {

/// Outcome of an exact linear solve A x = b.
struct LinearSolveResult {
  bool consistent = false;
  /// One solution with all free variables set to 0 (valid iff consistent).
  RatVec particular;
  /// Basis of the homogeneous solution space.
  std::vector<RatVec> nullspace;
  /// Per-variable flag: true when the variable is pinned by the system.
  std::vector<bool> determined;

  bool unique() const { return consistent && nullspace.empty(); }
};

/// Exact Gaussian elimination over Q.  A is rows x cols, b has one entry
/// per row; inconsistent systems report consistent = false.
LinearSolveResult solve_linear(RatMat a, RatVec b);

/// Basis of the kernel of A.
std::vector<RatVec> kernel_basis(RatMat a);

/// Exact inverse; nullopt when A is singular (or not square).
std::optional<RatMat> invert(RatMat a);

} // namespace kn

#endif
