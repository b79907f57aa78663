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

#ifndef KN_POINT_HPP
#define KN_POINT_HPP

#include <string>
#include <string_view>

#include "kn/errors.hpp"
#include "kn/rational.hpp"

namespace kn {

/// Point on the projective line over Q: either a finite rational value or
/// the point at infinity.
class Point {
public:
  explicit Point(Rat value) : infinite_(false), value_(std::move(value)) {}

  static Point infinity() {
    Point p{Rat(0)};
    p.infinite_ = true;
    return p;
  }

  /// Parses "inf" or a rational literal.
  static Point from_string(std::string_view s) {
    if (s == "inf")
      return infinity();
    return Point(rat_from_string(s));
  }

  bool is_infinity() const { return infinite_; }

  const Rat& value() const {
    if (infinite_)
      throw Error("finite value of the point at infinity requested");
    return value_;
  }

  std::string to_string() const {
    return infinite_ ? "inf" : rat_to_string(value_);
  }

  bool operator==(const Point& o) const {
    if (infinite_ != o.infinite_)
      return false;
    return infinite_ || value_ == o.value_;
  }

  /// Total order (finite points by value, infinity last) so Point can key
  /// ordered containers.
  bool operator<(const Point& o) const {
    if (infinite_)
      return false;
    if (o.infinite_)
      return true;
    return value_ < o.value_;
  }

private:
  bool infinite_;
  Rat value_;
};

} // namespace kn

#endif
