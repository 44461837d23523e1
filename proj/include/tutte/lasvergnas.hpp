// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "tutte/embedded.hpp"
#include "tutte/matroid.hpp"
#include "tutte/ribbon.hpp"

namespace tutte {

// The topological Tutte polynomial of a cellularly embedded graph is computed
// through the matroid perspective B(G*) -> C(G), never from drawings.
struct EmbeddedPerspective {
  RibbonGraph source;
  MatroidPerspective perspective;
};

inline EmbeddedPerspective embedded_perspective(const RibbonGraph& g) {
  if (g.e() > kMaxGroundSet) throw CapExceeded("ribbon graph needs <= 16 edges");
  Matroid front = bond_matroid(g.dual().underlying_graph());  // B(G*)
  Matroid back = cycle_matroid(g.underlying_graph());         // C(G)
  return EmbeddedPerspective{g, MatroidPerspective(front, back)};
}

inline Polynomial lv_of_ribbon(const RibbonGraph& g) {
  return lv_tutte(embedded_perspective(g).perspective);
}

struct LvKrushkalResult {
  bool pass;
  Polynomial lhs, rhs;
};

// L_{G in Sigma}(x,y,z) = z^{n(G)-kappa(G)} * K~(x-1, y-1, 1/z, 1/z) for the
// singleton partition; the half powers of the Krushkal variables pair up, so
// they route through one square-root variable that reduces to 1/z.
inline LvKrushkalResult lv_krushkal_check(const RibbonGraph& g) {
  Polynomial lhs = lv_of_ribbon(g);
  Polynomial kr = krushkal_cellular(g, VertexPartition::singletons(g.v()));
  SubstArgs args;
  args.bindings["x"] = Polynomial::variable("x") - Polynomial::one();
  args.bindings["y"] = Polynomial::variable("y") - Polynomial::one();
  args.sqrt_bindings["a"] = Polynomial::variable("w");
  args.sqrt_bindings["b"] = Polynomial::variable("w");
  Polynomial mid = substitute(kr, args);
  Polynomial zinv = Polynomial::monomial(Monomial::var("z", -1), 1);
  Polynomial rhs = reduce_square(mid, "w", zinv);
  if (rhs.max_doubled_exponent("w") > 0)
    throw FractionalSubstitution("odd power of the paired Krushkal variables");
  int n = g.nullity(g.full_set());
  int kappa = kappa_sperp(g, g.full_set()).kappa;
  rhs = rhs * Polynomial::monomial(Monomial::var("z", n - kappa), 1);
  return LvKrushkalResult{lhs == rhs, lhs, rhs};
}

}  // namespace tutte
