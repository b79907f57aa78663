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

#include "kn/modules.hpp"

#include <algorithm>

#include "kn/cocycle.hpp"
#include "kn/errors.hpp"

namespace kn {

int monomial_degree(const PBWMonomial& m) {
  int d = 0;
  for (const auto& k : m)
    d += k.degree;
  return d;
}

ModuleVec ModuleVec::vacuum() { return single(PBWMonomial{}); }

ModuleVec ModuleVec::single(PBWMonomial m, Rat c) {
  ModuleVec v;
  if (c != 0)
    v.terms_.emplace(std::move(m), std::move(c));
  return v;
}

void ModuleVec::add(const PBWMonomial& m, const Rat& c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

ModuleVec& ModuleVec::operator+=(const ModuleVec& o) {
  for (const auto& [m, c] : o.terms_)
    add(m, c);
  return *this;
}

ModuleVec& ModuleVec::axpy(const Rat& c, const ModuleVec& o) {
  if (c == 0)
    return *this;
  for (const auto& [m, x] : o.terms_)
    add(m, c * x);
  return *this;
}

ModuleVec ModuleVec::operator*(const Rat& c) const {
  ModuleVec v;
  if (c != 0)
    for (const auto& [m, x] : terms_)
      v.terms_.emplace(m, c * x);
  return v;
}

ModuleVec ModuleVec::operator-(const ModuleVec& o) const {
  ModuleVec v = *this;
  v.axpy(Rat(-1), o);
  return v;
}

int ModuleVec::min_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    d = std::min(d, monomial_degree(m));
  return d;
}

AffineBracket affine_bracket(const KNBasisTable& table, const FinLieAlgebra& g,
                             const AffineGenerator& a,
                             const AffineGenerator& b) {
  if (a.is_central() || b.is_central())
    return AffineBracket{}; // t1 is central
  AffineBracket out;
  const RatVec& xy = g.bracket(a.lie, b.lie);
  bool xy_zero = true;
  for (int k = 0; k < g.dim(); ++k)
    if (xy[k] != 0) {
      xy_zero = false;
      break;
    }
  if (!xy_zero) {
    const SparseCoeffs& prod = table.product_constants(
        DegLabel{a.degree, a.label}, DegLabel{b.degree, b.label});
    for (const auto& [dl, c] : prod)
      for (int k = 0; k < g.dim(); ++k)
        if (xy[k] != 0)
          out.lie_terms.push_back(
              {AffineGenerator{k, dl.degree, dl.label}, c * xy[k]});
  }
  const Rat pairing = g.form(a.lie, b.lie);
  if (pairing != 0) {
    const Rat gamma = function_cocycle(
        table, table.element(KNIndex{0, a.degree, a.label}).form,
        table.element(KNIndex{0, b.degree, b.label}).form);
    out.central = pairing * gamma;
  }
  return out;
}

ModuleVec AdmissibleModule::apply(const AffineGenerator& g,
                                  const ModuleVec& v) const {
  ModuleVec out;
  if (g.is_central())
    return v * level();
  for (const auto& [m, c] : v.terms())
    out.axpy(c, apply_monomial(g, m));
  return out;
}

VacuumModule::VacuumModule(const KNBasisTable& table, const FinLieAlgebra& g,
                           Rat level, int depth)
    : table_(table), g_(g), level_(std::move(level)), depth_(depth) {
  if (depth < 0)
    throw Error("vacuum module depth must be nonnegative");
}

const AffineBracket& VacuumModule::cached_bracket(const GenKey& a,
                                                  const GenKey& b) const {
  const auto key = std::make_pair(a, b);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = bracket_cache_.find(key);
    if (it != bracket_cache_.end())
      return it->second;
  }
  AffineBracket br = affine_bracket(table_, g_, a.generator(), b.generator());
  std::lock_guard<std::mutex> lock(mu_);
  return bracket_cache_.emplace(key, std::move(br)).first->second;
}

std::shared_ptr<const ModuleVec> VacuumModule::leftmul(
    const GenKey& g, const PBWMonomial& m) const {
  // Annihilation shortcut: all components of u_g (m) sit at degrees
  // >= deg(g) + deg(m), and every monomial has degree <= 0.
  if (g.degree + monomial_degree(m) > 0)
    return std::make_shared<const ModuleVec>();

  const auto key = std::make_pair(g, m);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = act_cache_.find(key);
    if (it != act_cache_.end())
      return it->second;
  }

  ModuleVec result;
  if (m.empty()) {
    // On the vacuum: positive degrees annihilate (covered by the shortcut
    // above), degree <= 0 creates the singleton word.
    if (g.degree < -depth_)
      throw DepthExceededError("monomial degree " + std::to_string(g.degree) +
                               " below truncation depth " +
                               std::to_string(-depth_));
    result = ModuleVec::single(PBWMonomial{g});
  } else {
    const GenKey h = m.front();
    const PBWMonomial tail(m.begin() + 1, m.end());
    if (g <= h) {
      const int total = g.degree + monomial_degree(m);
      if (total < -depth_)
        throw DepthExceededError("monomial degree " + std::to_string(total) +
                                 " below truncation depth " +
                                 std::to_string(-depth_));
      PBWMonomial word;
      word.reserve(m.size() + 1);
      word.push_back(g);
      word.insert(word.end(), m.begin(), m.end());
      result = ModuleVec::single(std::move(word));
    } else {
      // u_g u_h = u_h u_g + [u_g, u_h] applied to the tail.
      const auto vg = leftmul(g, tail);
      for (const auto& [mono, c] : vg->terms())
        result.axpy(c, *leftmul(h, mono));
      const AffineBracket& br = cached_bracket(g, h);
      for (const auto& [gen, c] : br.lie_terms)
        result.axpy(c, *leftmul(GenKey{gen.degree, gen.label, gen.lie}, tail));
      if (br.central != 0)
        result.add(tail, br.central * level_);
    }
  }

  auto shared = std::make_shared<const ModuleVec>(std::move(result));
  std::lock_guard<std::mutex> lock(mu_);
  return act_cache_.emplace(key, std::move(shared)).first->second;
}

ModuleVec VacuumModule::apply_monomial(const AffineGenerator& g,
                                       const PBWMonomial& m) const {
  if (g.is_central())
    return ModuleVec::single(m, level_);
  if (g.lie < 0 || g.lie >= g_.dim())
    throw Error("generator index outside the finite algebra");
  if (g.label < 1 || g.label > table_.config().n_in())
    throw InvalidConfigError("generator label outside the configuration");
  return *leftmul(GenKey{g.degree, g.label, g.lie}, m);
}

std::vector<AffineGenerator> VacuumModule::generators_at(int degree) const {
  std::vector<AffineGenerator> out;
  for (int p = 1; p <= table_.config().n_in(); ++p)
    for (int i = 0; i < g_.dim(); ++i)
      out.push_back(AffineGenerator{i, degree, p});
  return out;
}

std::vector<PBWMonomial> VacuumModule::enumerate_basis(
    int max_depth, int max_zero_factors) const {
  // All keys usable in a word of depth <= max_depth, ascending.
  std::vector<GenKey> keys;
  for (int d = -max_depth; d <= 0; ++d)
    for (int p = 1; p <= table_.config().n_in(); ++p)
      for (int i = 0; i < g_.dim(); ++i)
        keys.push_back(GenKey{d, p, i});

  std::vector<PBWMonomial> out;
  PBWMonomial word;
  // Depth-first over nondecreasing key sequences.
  auto rec = [&](auto&& self, std::size_t from, int budget, int zeros) -> void {
    out.push_back(word);
    for (std::size_t k = from; k < keys.size(); ++k) {
      const GenKey& key = keys[k];
      if (-key.degree > budget)
        continue;
      if (key.degree == 0 && zeros == 0)
        continue;
      word.push_back(key);
      self(self, k, budget + key.degree,
           zeros - (key.degree == 0 ? 1 : 0));
      word.pop_back();
    }
  };
  rec(rec, 0, max_depth, max_zero_factors);
  return out;
}

ModuleVec FockModule::apply_monomial(const AffineGenerator& g,
                                     const PBWMonomial& m) const {
  if (g.is_central())
    return ModuleVec::single(m, Rat(1));
  if (g.lie != 0 || g.label != 1)
    throw Error("polynomial module is defined for the rank-1 one-point "
                "case only");
  const int n = g.degree;
  if (n == 0)
    return ModuleVec::single(m, Rat(1)); // degree-0 generator acts as id
  if (n < 0) {
    // Multiply by (-n) x_(-n).
    const int total = n + monomial_degree(m);
    if (total < -depth_)
      throw DepthExceededError("monomial degree " + std::to_string(total) +
                               " below truncation depth " +
                               std::to_string(-depth_));
    PBWMonomial word = m;
    word.insert(std::upper_bound(word.begin(), word.end(), GenKey{n, 1, 0}),
                GenKey{n, 1, 0});
    return ModuleVec::single(std::move(word), Rat(-n));
  }
  // Differentiate by x_n.
  const GenKey key{-n, 1, 0};
  const auto lo = std::lower_bound(m.begin(), m.end(), key);
  const auto hi = std::upper_bound(m.begin(), m.end(), key);
  const long mult = hi - lo;
  if (mult == 0)
    return ModuleVec();
  PBWMonomial word;
  word.reserve(m.size() - 1);
  word.insert(word.end(), m.begin(), hi - 1);
  word.insert(word.end(), hi, m.end());
  return ModuleVec::single(std::move(word), Rat(mult));
}

std::vector<AffineGenerator> FockModule::generators_at(int degree) const {
  return {AffineGenerator{0, degree, 1}};
}

std::vector<PBWMonomial> FockModule::enumerate_basis(int max_depth,
                                                     int) const {
  std::vector<PBWMonomial> out;
  PBWMonomial word;
  auto rec = [&](auto&& self, int next_var, int budget) -> void {
    out.push_back(word);
    for (int n = next_var; n <= budget; ++n) {
      word.push_back(GenKey{-n, 1, 0});
      self(self, n, budget - n);
      word.pop_back();
    }
  };
  rec(rec, 1, max_depth);
  for (auto& w : out)
    std::sort(w.begin(), w.end());
  return out;
}

AdmissibilityReport admissibility_check(const AdmissibleModule& mod,
                                        const ModuleVec& v, int probe_max) {
  AdmissibilityReport rep;
  rep.bound = -v.min_degree();
  for (int d = rep.bound + 1; d <= probe_max; ++d)
    for (const auto& g : mod.generators_at(d)) {
      ++rep.checks;
      if (!mod.apply(g, v).is_zero())
        rep.ok = false;
    }
  return rep;
}

} // namespace kn
