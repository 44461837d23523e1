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

#include <doctest.h>

#include "tutte/matroid.hpp"

using namespace tutte;

namespace {
Polynomial X() { return Polynomial::variable("x"); }
Polynomial Y() { return Polynomial::variable("y"); }

// Independent oracle: the dual rank formula applied subset by subset.
Matroid dual_oracle(const Matroid& m) {
  std::vector<std::uint8_t> r(std::size_t{1} << m.n());
  for (std::uint32_t a = 0; a < r.size(); ++a)
    r[a] = static_cast<std::uint8_t>(Matroid::popcount(a) +
                                     m.rank(m.full_set() & ~a) - m.rank());
  return Matroid(m.n(), std::move(r));
}
}  // namespace

TEST_CASE("construction validates the rank axioms") {
  CHECK_THROWS_AS(Matroid(1, {1, 1}), NotAMatroid);       // r(empty) != 0
  CHECK_THROWS_AS(Matroid(1, {0, 2}), NotAMatroid);       // unit increase
  // local exchange: r({e}) = r({f}) = r(emptyset) = 0 but r({e,f}) = 1
  CHECK_THROWS_AS(Matroid(2, {0, 0, 0, 1}), NotAMatroid);
  CHECK_NOTHROW(Matroid(2, {0, 1, 1, 1}));  // U_{1,2}
}

TEST_CASE("uniform matroids") {
  Matroid u23 = Matroid::uniform(2, 3);
  CHECK(u23.rank() == 2);
  CHECK(u23.rank(0b111) == 2);
  CHECK(u23.rank(0b011) == 2);
  CHECK(u23.rank(0b001) == 1);
  CHECK(Matroid::uniform(0, 1).is_loop(0));
  CHECK(Matroid::uniform(1, 1).is_coloop(0));
}

TEST_CASE("minors") {
  Matroid u23 = Matroid::uniform(2, 3);
  // U_{2,3} / e = U_{1,2}: oracle is the uniform rank table.
  CHECK(u23.con(0) == Matroid::uniform(1, 2));
  CHECK(u23.del(0) == Matroid::uniform(2, 2));
  Matroid u11 = Matroid::uniform(1, 1);
  CHECK(u11.minor(0, 0) == u11);
  CHECK_THROWS_AS(u23.minor(1, 1), OverlappingSets);
  // contracting a loop = deleting it
  Matroid loop_plus = Matroid::uniform(1, 1).direct_sum(Matroid::uniform(0, 1));
  CHECK(loop_plus.con(1) == loop_plus.del(1));
}

TEST_CASE("dual") {
  CHECK(Matroid::uniform(1, 1).dual() == Matroid::uniform(0, 1));
  CHECK(Matroid::uniform(2, 3).dual() == Matroid::uniform(1, 3));
  CHECK(Matroid::uniform(2, 3).dual() == dual_oracle(Matroid::uniform(2, 3)));
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      Matroid m = Matroid::uniform(k, n);
      CHECK(m.dual().dual() == m);
    }
}

TEST_CASE("tutte polynomial anchors") {
  CHECK(tutte_polynomial(Matroid::uniform(0, 0)) == Polynomial::one());
  CHECK(tutte_polynomial(Matroid::uniform(1, 1)) == X());
  CHECK(tutte_polynomial(Matroid::uniform(0, 1)) == Y());
  CHECK(tutte_polynomial(Matroid::uniform(2, 3)) == X().pow(2) + X() + Y());
  CHECK(tutte_polynomial(Matroid::uniform(1, 2)) == X() + Y());
}

TEST_CASE("deletion-contraction recursion reproduces the Tutte polynomial") {
  // e.dctm with every element order, against the subset expansion.
  std::function<Polynomial(const Matroid&, int)> rec = [&](const Matroid& m,
                                                           int pick) {
    if (m.n() == 0) return Polynomial::one();
    int e = pick < m.n() ? pick : 0;
    if (m.is_loop(e)) return Y() * rec(m.del(e), 0);
    if (m.is_coloop(e)) return X() * rec(m.con(e), 0);
    return rec(m.del(e), 0) + rec(m.con(e), 0);
  };
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      Matroid m = Matroid::uniform(k, n);
      for (int e = 0; e < std::max(1, n); ++e)
        CHECK(rec(m, e) == tutte_polynomial(m));
    }
}

TEST_CASE("perspective validation") {
  Matroid u11 = Matroid::uniform(1, 1), u01 = Matroid::uniform(0, 1);
  CHECK_NOTHROW(MatroidPerspective(u11, u01));
  // U_{0,1} -> U_{1,1} is not a perspective.
  CHECK_THROWS_AS(MatroidPerspective(u01, u11), NotAPerspective);
  CHECK_THROWS_AS(
      MatroidPerspective(Matroid::uniform(1, 2), Matroid::uniform(2, 2)),
      NotAPerspective);
}

TEST_CASE("las vergnas polynomial of a perspective") {
  Matroid u11 = Matroid::uniform(1, 1), u01 = Matroid::uniform(0, 1);
  CHECK(lv_tutte(MatroidPerspective(Matroid::uniform(0, 0),
                                    Matroid::uniform(0, 0))) ==
        Polynomial::one());
  // (U11 -> U01): the A = empty term contributes z, the full term 1.
  CHECK(lv_tutte(MatroidPerspective(u11, u01)) ==
        Polynomial::variable("z") + Polynomial::one());
  // (M -> M) has no z and equals T_M.
  Matroid u23 = Matroid::uniform(2, 3);
  Polynomial lv = lv_tutte(MatroidPerspective(u23, u23));
  CHECK(lv == tutte_polynomial(u23));
  CHECK(lv.max_doubled_exponent("z") == 0);
}
