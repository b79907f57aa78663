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

#ifndef KN_ERRORS_HPP
#define KN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kn {

/// Base class for every exception thrown by the library.  The CLI maps any
/// Error escaping a subcommand to the "precondition violated" exit status.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, points, configurations).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Division by a zero polynomial / rational function.
class ZeroDenominatorError : public Error {
public:
  using Error::Error;
};

/// An operation received a form of the wrong conformal weight
/// (e.g. a residue of something that is not a 1-form).
class WrongWeightError : public Error {
public:
  using Error::Error;
};

/// Schwarzian derivative of a map with vanishing derivative.
class DegenerateMapError : public Error {
public:
  using Error::Error;
};

/// Marked-point configuration is invalid (empty side, repeated point).
class InvalidConfigError : public Error {
public:
  using Error::Error;
};

/// The interpolation problem for a basis element does not have a
/// one-dimensional solution space.
class NonUniqueElementError : public Error {
public:
  using Error::Error;
};

/// A constructed element fails to realize its prescribed vanishing orders
/// exactly (some order came out too high).
class OrderSlackError : public Error {
public:
  using Error::Error;
};

/// An expansion has support outside the degree window the caller supplied.
class NotInWindowError : public Error {
public:
  using Error::Error;
};

/// A product/bracket expansion reached below its guaranteed lower degree
/// bound, violating the grading.
class BandViolationError : public Error {
public:
  using Error::Error;
};

/// A cocycle table contains a nonzero entry above the upper locality bound.
class UpperBandViolationError : public Error {
public:
  using Error::Error;
};

/// An evaluation needed a value outside the tabulated domain.
class DomainEscapeError : public Error {
public:
  using Error::Error;
};

/// The invariant bilinear form is degenerate, so no dual basis exists.
class DegenerateFormError : public Error {
public:
  using Error::Error;
};

/// A Casimir-type operator that must act as a scalar failed to do so.
class NotScalarOnAdjointError : public Error {
public:
  using Error::Error;
};

/// Dimension arguments out of range for an algebra constructor.
class BadDimensionError : public Error {
public:
  using Error::Error;
};

/// A module operation produced a monomial deeper than the truncation depth.
class DepthExceededError : public Error {
public:
  using Error::Error;
};

/// Rescaling by -1/(level + kappa) at level + kappa = 0.
class CriticalLevelError : public Error {
public:
  using Error::Error;
};

} // namespace kn

#endif
