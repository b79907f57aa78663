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

#include <doctest.h>

#include <algorithm>

#include "kn/basis.hpp"
#include "kn/errors.hpp"
#include "kn/liealgebra.hpp"
#include "kn/modules.hpp"

using namespace kn;

namespace {

int index_of(const FinLieAlgebra& g, const std::string& name) {
  for (int i = 0; i < g.dim(); ++i)
    if (g.basis_name(i) == name)
      return i;
  REQUIRE(false);
  return -1;
}

} // namespace

TEST_CASE("module vector arithmetic is exact and sparse") {
  const PBWMonomial a{GenKey{-1, 1, 0}};
  const PBWMonomial b{GenKey{-2, 1, 0}};
  ModuleVec v = ModuleVec::single(a, Rat(1, 2));
  v.add(b, Rat(3));
  v.add(a, Rat(-1, 2)); // cancels the first term entirely
  CHECK(v.terms().size() == 1);
  CHECK(v.min_degree() == -2);

  ModuleVec w;
  CHECK(w.is_zero());
  CHECK(w.min_degree() == 0);
  w.axpy(Rat(2), v);
  CHECK(w.terms().at(b) == 6);

  const ModuleVec diff = w - v * Rat(2);
  CHECK(diff.is_zero());
  CHECK(ModuleVec::vacuum().terms().count(PBWMonomial{}) == 1);
  CHECK(monomial_degree(PBWMonomial{GenKey{-1, 1, 0}, GenKey{-2, 1, 2}}) ==
        -3);
}

TEST_CASE("vacuum module implements annihilation and the affine bracket") {
  KNBasisTable table(PointConfig::classical());
  const FinLieAlgebra g = FinLieAlgebra::sl(2);
  const int e = index_of(g, "E12");
  const int f = index_of(g, "E21");
  const int h = index_of(g, "H1");
  VacuumModule mod(table, g, Rat(1), 3);
  CHECK(mod.depth() == 3);
  CHECK(mod.level() == 1);

  // Positive-degree generators kill the vacuum.
  for (int lie : {e, f, h})
    CHECK(mod.apply_monomial(AffineGenerator{lie, 1, 1}, {}).is_zero());

  // e(1) f(-1) vac = [e, f](0) vac + (e|f) gamma(A_1, A_-1) level vac
  //               = h(0) vac + vac   classically at level 1.
  const ModuleVec fv =
      mod.apply_monomial(AffineGenerator{f, -1, 1}, PBWMonomial{});
  REQUIRE(fv.terms().size() == 1);
  const ModuleVec lhs = mod.apply(AffineGenerator{e, 1, 1}, fv);
  ModuleVec expect = ModuleVec::single(PBWMonomial{GenKey{0, 1, h}});
  expect.add(PBWMonomial{}, Rat(1));
  CHECK(lhs == expect);

  // h(1) h(-1) vac = [h, h](0) vac + (h|h) gamma level vac = 2 vac.
  const ModuleVec hv =
      mod.apply_monomial(AffineGenerator{h, -1, 1}, PBWMonomial{});
  CHECK(mod.apply(AffineGenerator{h, 1, 1}, hv) ==
        ModuleVec::vacuum() * Rat(2));

  // Degree-0 generators act freely: h(0)^2 vac stays a monomial.
  const ModuleVec h0 = mod.apply(AffineGenerator{h, 0, 1},
                                 mod.apply_monomial(AffineGenerator{h, 0, 1},
                                                    PBWMonomial{}));
  REQUIRE(h0.terms().size() == 1);
  CHECK(h0.terms().begin()->first ==
        PBWMonomial({GenKey{0, 1, h}, GenKey{0, 1, h}}));

  // The central generator scales by the level.
  CHECK(mod.apply(AffineGenerator::central(), ModuleVec::vacuum()) ==
        ModuleVec::vacuum());

  CHECK_THROWS_AS(
      mod.apply_monomial(AffineGenerator{e, -4, 1}, PBWMonomial{}),
      DepthExceededError);
}

TEST_CASE("vacuum basis enumeration counts colored partitions") {
  KNBasisTable table(PointConfig::classical());
  const FinLieAlgebra g = FinLieAlgebra::sl(2);
  VacuumModule mod(table, g, Rat(1), 3);
  // Degrees 0,-1,-2,-3 with three colors per part and no degree-0
  // factors: 1 + 3 + 9 + 22.
  const auto basis = mod.enumerate_basis(3, 0);
  CHECK(basis.size() == 35);
  for (const auto& m : basis) {
    CHECK(monomial_degree(m) >= -3);
    CHECK(std::is_sorted(m.begin(), m.end()));
    for (const auto& k : m)
      CHECK(k.degree < 0);
  }
  // Allowing one degree-0 factor strictly grows the count.
  CHECK(mod.enumerate_basis(3, 1).size() > basis.size());
}

TEST_CASE("straightening reproduces commutators deep in a word") {
  KNBasisTable table(PointConfig::classical());
  const FinLieAlgebra g = FinLieAlgebra::sl(2);
  const int e = index_of(g, "E12");
  const int f = index_of(g, "E21");
  VacuumModule mod(table, g, Rat(1), 4);

  // x(2) y(-1) w - y(-1) x(2) w == [x, y](1) w + level (x|y) gamma w
  // for every basis word w deep enough to absorb the degrees.
  for (const auto& w : mod.enumerate_basis(2, 1)) {
    const AffineGenerator x{e, 2, 1};
    const AffineGenerator y{f, -1, 1};
    const ModuleVec lhs =
        mod.apply(x, mod.apply_monomial(y, w)) -
        mod.apply(y, mod.apply_monomial(x, w));
    ModuleVec rhs;
    for (const auto& [hk, c] : table.product_constants(
             DegLabel{2, 1}, DegLabel{-1, 1})) {
      const RatVec& br = g.bracket(e, f);
      for (int i = 0; i < g.dim(); ++i)
        if (br[static_cast<std::size_t>(i)] != 0)
          rhs.axpy(c * br[static_cast<std::size_t>(i)],
                   mod.apply_monomial(AffineGenerator{i, hk.degree,
                                                      hk.label},
                                      w));
    }
    // gamma(A_2, A_-1) = 0 classically, so no central term here.
    CHECK(lhs == rhs);
  }
}

TEST_CASE("polynomial module realizes the rank-1 oscillator") {
  FockModule mod(4);
  CHECK(mod.level() == 1);
  const PBWMonomial x1{GenKey{-1, 1, 0}};
  const PBWMonomial x2{GenKey{-2, 1, 0}};

  // a_0 acts as the identity; a_{-n} multiplies by n x_n.
  CHECK(mod.apply_monomial(AffineGenerator{0, 0, 1}, x1) ==
        ModuleVec::single(x1));
  CHECK(mod.apply_monomial(AffineGenerator{0, -1, 1}, PBWMonomial{}) ==
        ModuleVec::single(x1));
  CHECK(mod.apply_monomial(AffineGenerator{0, -2, 1}, PBWMonomial{}) ==
        ModuleVec::single(x2, Rat(2)));

  // a_n differentiates with multiplicity.
  const PBWMonomial x1x1{GenKey{-1, 1, 0}, GenKey{-1, 1, 0}};
  CHECK(mod.apply_monomial(AffineGenerator{0, 1, 1}, x1x1) ==
        ModuleVec::single(x1, Rat(2)));
  CHECK(mod.apply_monomial(AffineGenerator{0, 2, 1}, x1).is_zero());

  // [a_n, a_{-n}] vac = n vac.
  for (int n = 1; n <= 4; ++n) {
    const ModuleVec up =
        mod.apply_monomial(AffineGenerator{0, -n, 1}, PBWMonomial{});
    const ModuleVec back = mod.apply(AffineGenerator{0, n, 1}, up);
    CHECK(back == ModuleVec::vacuum() * Rat(n));
  }

  CHECK_THROWS_AS(
      mod.apply_monomial(AffineGenerator{0, -5, 1}, PBWMonomial{}),
      DepthExceededError);
  CHECK_THROWS_AS(mod.apply_monomial(AffineGenerator{1, -1, 1}, x1), Error);

  // Partitions of 0..4: 1 + 1 + 2 + 3 + 5.
  CHECK(mod.enumerate_basis(4, 0).size() == 12);
}

TEST_CASE("admissibility probe confirms truncation from above") {
  FockModule mod(6);
  const ModuleVec v = ModuleVec::single(PBWMonomial{GenKey{-2, 1, 0}});
  const AdmissibilityReport rep = admissibility_check(mod, v, 8);
  CHECK(rep.ok);
  CHECK(rep.bound == 2);
  CHECK(rep.checks > 0);

  KNBasisTable table(PointConfig::classical());
  const FinLieAlgebra g = FinLieAlgebra::sl(2);
  VacuumModule vac(table, g, Rat(1), 3);
  const AdmissibilityReport r2 =
      admissibility_check(vac, ModuleVec::vacuum(), 5);
  CHECK(r2.ok);
  CHECK(r2.bound == 0);
}
