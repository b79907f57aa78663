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

#include "kn/rational.hpp"

#include <cctype>

#include "kn/errors.hpp"

namespace kn {

namespace {

bool is_plain_integer(std::string_view s) {
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

// mpz_set_str rejects an explicit leading '+'.
mpz_class parse_mpz(std::string_view s) {
  if (!s.empty() && s[0] == '+')
    s.remove_prefix(1);
  return mpz_class{std::string(s)};
}

} // namespace

Rat rat_from_string(std::string_view s) {
  if (s.empty())
    throw ParseError("empty rational literal");

  const auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = s.substr(slash + 1);
    if (!is_plain_integer(num) || !is_plain_integer(den))
      throw ParseError("malformed rational literal: " + std::string(s));
    mpz_class p = parse_mpz(num);
    mpz_class q = parse_mpz(den);
    if (q == 0)
      throw ParseError("zero denominator in rational literal: " +
                       std::string(s));
    Rat r(p, q);
    r.canonicalize();
    return r;
  }

  const auto dot = s.find('.');
  if (dot != std::string_view::npos) {
    const std::string_view whole = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    const bool neg = !whole.empty() && whole[0] == '-';
    if (!(is_plain_integer(whole) || whole == "-" || whole == "+" ||
          whole.empty()))
      throw ParseError("malformed decimal literal: " + std::string(s));
    if (frac.empty() && (whole.empty() || whole == "-" || whole == "+"))
      throw ParseError("malformed decimal literal: " + std::string(s));
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("malformed decimal literal: " + std::string(s));
    mpz_class w = 0;
    if (is_plain_integer(whole))
      w = parse_mpz(whole);
    mpz_class scale = 1;
    mpz_class f = 0;
    if (!frac.empty()) {
      f = parse_mpz(frac);
      for (std::size_t i = 0; i < frac.size(); ++i)
        scale *= 10;
    }
    mpz_class p = abs(w) * scale + f;
    if (neg)
      p = -p;
    Rat r(p, scale);
    r.canonicalize();
    return r;
  }

  if (!is_plain_integer(s))
    throw ParseError("malformed rational literal: " + std::string(s));
  return Rat(parse_mpz(s));
}

// The two-argument Rat constructor does not reduce, so normalize a copy
// before reading off numerator and denominator.
std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1)
    return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

bool rat_is_integer(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_den() == 1;
}

long rat_to_long(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() != 1)
    throw Error("rational " + rat_to_string(c) + " is not an integer");
  if (!c.get_num().fits_slong_p())
    throw Error("integer " + rat_to_string(c) + " does not fit in long");
  return c.get_num().get_si();
}

} // namespace kn
