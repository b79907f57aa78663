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

#ifndef KN_RATIONAL_HPP
#define KN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace kn {

/// Exact rational scalar.  Every computation in the library is carried out
/// over Q; no floating point is used anywhere.
///
/// Caution: the inherited two-argument constructor Rat(p, q) stores p/q
/// without reducing to lowest terms, and GMP comparisons silently assume
/// reduced operands.  Build non-literal fractions as Rat(p) / q (division
/// always reduces) or call canonicalize() on the result.
using Rat = mpq_class;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Parse "p", "p/q" or a plain decimal string like "-2.5" into an exact
/// rational.  Throws ParseError on malformed input or a zero denominator.
Rat rat_from_string(std::string_view s);

/// Canonical textual form: "p" when the denominator is 1, otherwise "p/q"
/// with q > 0 and gcd(p, q) = 1.
std::string rat_to_string(const Rat& r);

/// True when r is an integer.
bool rat_is_integer(const Rat& r);

/// Convert an integer rational to long.  Throws Error when r is not an
/// integer or does not fit.
long rat_to_long(const Rat& r);

} // namespace kn

#endif
