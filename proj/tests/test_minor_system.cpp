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

#include "tutte/corpus.hpp"
#include "tutte/minor_system.hpp"

using namespace tutte;

namespace {
Polynomial v(const char* n) { return Polynomial::variable(n); }
}

TEST_CASE("coproduct terms") {
  // edgeless object: the single pair (unit, unit)
  MinorObject unit = matroid_object(Matroid::uniform(0, 0));
  auto terms = coproduct_terms(unit);
  CHECK(terms.size() == 1);
  CHECK(terms[0].first.grade() == 0);
  CHECK(terms[0].second.grade() == 0);

  // U_{1,1}: two subsets, [(U00, U11), (U11, U00)] in binary counting order
  MinorObject u11 = matroid_object(Matroid::uniform(1, 1));
  auto t2 = coproduct_terms(u11);
  REQUIRE(t2.size() == 2);
  CHECK(t2[0].first.grade() == 0);
  CHECK(serialize(t2[0].second) == serialize(u11));
  CHECK(serialize(t2[1].first) == serialize(u11));
  CHECK(t2[1].second.grade() == 0);

  // the triangle graph has 2^3 = 8 coproduct pairs
  CHECK(coproduct_terms(graph_object(graph_triangle())).size() == 8);
  CHECK_THROWS_AS(coproduct_terms(graph_object(graph_triangle()), 2),
                  CapExceeded);
}

TEST_CASE("grade-1 classification") {
  CHECK(classify_grade1(matroid_object(Matroid::uniform(1, 1))).label ==
        "coloop");
  CHECK(classify_grade1(dm_object(dm_nonorientable())).label ==
        "non-orientable-loop");
  // a single twisted loop classifies through its delta-matroid as D_n
  MinorObject neg = ribbon_object(ribbon_negative_loop());
  CHECK(classify_grade1(neg).id == 2);
  CHECK(delta_matroid_of_ribbon(std::get<RibbonGraph>(neg.payload)) ==
        dm_nonorientable());
  CHECK_THROWS_AS(classify_grade1(graph_object(graph_triangle())), WrongGrade);

  // every representative classifies as itself
  for (SystemTag tag :
       {SystemTag::Matroid, SystemTag::Perspective, SystemTag::Graph,
        SystemTag::DeltaMatroid, SystemTag::PenroseDeltaMatroid,
        SystemTag::Ribbon, SystemTag::PartitionedRibbon,
        SystemTag::PartitionedCellular})
    for (int id = 0; id < class_count(tag); ++id)
      CHECK(classify_grade1(grade1_representative(tag, id)).id == id);
}

TEST_CASE("exp_star") {
  Selector db = canonical_selector_y(SystemTag::Graph);
  // unit object: the counit term
  CHECK(exp_star_bruteforce(graph_object(Multigraph(1, {})), db).num ==
        Polynomial::one());
  // U_{1,1} with x-selector: single grade-1 factor
  Selector da = canonical_selector_x(SystemTag::Matroid);
  auto e = exp_star_bruteforce(matroid_object(Matroid::uniform(1, 1)), da);
  CHECK(e.is_integral());
  CHECK(e.num == v("x1"));
  // triangle with the y-selector: y1^2 y2
  auto et = exp_star_bruteforce(graph_object(graph_triangle()), db);
  CHECK(et.is_integral());
  CHECK(et.num == v("y1").pow(2) * v("y2"));
  CHECK_THROWS_AS(
      exp_star_bruteforce(matroid_object(Matroid::uniform(3, 7)), da),
      CapExceeded);
}

TEST_CASE("uniformity checks") {
  // any matroid with the (x1, x2) selector is uniform
  Selector da = canonical_selector_x(SystemTag::Matroid);
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(check_uniform(matroid_object(Matroid::uniform(k, n)), da).uniform);

  // the 2-element witness with a free third coefficient is not uniform and
  // the witness names two element orderings
  MinorObject wit = dm_object(DeltaMatroid(2, {0b00, 0b01, 0b11}));
  Selector free3(SystemTag::DeltaMatroid, {v("a1"), v("a2"), v("a3")});
  auto rep = check_uniform(wit, free3);
  REQUIRE_FALSE(rep.uniform);
  CHECK(rep.witness_order_a.size() == 2);
  CHECK(rep.witness_order_b.size() == 2);
  CHECK(rep.product_a != rep.product_b);
}

TEST_CASE("alpha engines") {
  // grade-0 base case
  Selector da = canonical_selector_x(SystemTag::Matroid);
  Selector db = canonical_selector_y(SystemTag::Matroid);
  RankProfile prof = canonical_profile(SystemTag::Matroid);
  MinorObject unit = matroid_object(Matroid::uniform(0, 0));
  for (auto eng : {AlphaEngine::Bruteforce, AlphaEngine::StateSum, AlphaEngine::DelCon})
    CHECK(alpha_compute(unit, da, db, eng, prof) == Polynomial::one());

  // U_{1,2} with selectors (1, y-1), (x-1, 1) gives T = x + y
  Polynomial x = v("x"), y = v("y");
  Selector ta(SystemTag::Matroid, {Polynomial::one(), y - Polynomial::one()});
  Selector tb(SystemTag::Matroid, {x - Polynomial::one(), Polynomial::one()});
  MinorObject u12 = matroid_object(Matroid::uniform(1, 2));
  CHECK(alpha_delcon(u12, ta, tb) == x + y);
  CHECK(alpha_bruteforce_scaled(u12, ta, tb).num == x + y);
  // the non-monomial selector is rejected by the state-sum engine
  CHECK_THROWS_AS(alpha_statesum(u12, ta, tb, prof), ProfileMismatch);

  // frozen triangle alpha, all engines
  MinorObject tri = graph_object(graph_triangle());
  Selector ga = canonical_selector_x(SystemTag::Graph);
  Selector gb = canonical_selector_y(SystemTag::Graph);
  Polynomial frozen = v("y1").pow(2) * v("y2") +
                      v("x1") * v("y1") * v("y2") * Polynomial::constant(3) +
                      v("x1").pow(2) * v("y2") * Polynomial::constant(3) +
                      v("x1").pow(2) * v("x2");
  RankProfile gprof = canonical_profile(SystemTag::Graph);
  for (auto eng : {AlphaEngine::Bruteforce, AlphaEngine::StateSum, AlphaEngine::DelCon})
    CHECK(alpha_compute(tri, ga, gb, eng, gprof) == frozen);
}

TEST_CASE("morphism transfer") {
  Selector ga = canonical_selector_x(SystemTag::Graph);
  Selector gb = canonical_selector_y(SystemTag::Graph);
  auto res = morphism_transfer_check(graph_object(graph_triangle()),
                                     MorphismMap::CycleMatroid, ga, gb);
  CHECK(res.pass);

  // projection-1 demands a_cc = a_cl once both classes occur among minors;
  // (U22 -> U12) realizes both: its restriction is coloop-coloop, its
  // contraction coloop-loop.
  Selector bad_a(SystemTag::Perspective, {v("x1"), v("x2"), v("x3")});
  Selector bad_b(SystemTag::Perspective, {v("y1"), v("y2"), v("y3")});
  MinorObject persp = perspective_object(
      MatroidPerspective(Matroid::uniform(2, 2), Matroid::uniform(1, 2)));
  CHECK_THROWS_AS(morphism_transfer_check(persp, MorphismMap::PerspectiveProjection1,
                                          bad_a, bad_b),
                  SelectorIncompatible);
  // with the fibre-constant selector the transfer holds
  Selector ok_a(SystemTag::Perspective, {v("x1"), v("x2"), v("x1")});
  Selector ok_b(SystemTag::Perspective, {v("y1"), v("y2"), v("y1")});
  CHECK(morphism_transfer_check(persp, MorphismMap::PerspectiveProjection1,
                                ok_a, ok_b)
            .pass);

  // plane restriction of the underlying-graph map
  Selector ra = canonical_selector_x(SystemTag::Ribbon);
  Selector rb = canonical_selector_y(SystemTag::Ribbon);
  CHECK(morphism_transfer_check(ribbon_object(ribbon_theta()),
                                MorphismMap::PlaneRibbonToGraph, ra, rb)
            .pass);
  CHECK_THROWS_AS(
      morphism_transfer_check(ribbon_object(ribbon_torus_interleaved()),
                              MorphismMap::PlaneRibbonToGraph, ra, rb),
      SelectorIncompatible);
}

TEST_CASE("selector arity is validated") {
  CHECK_THROWS_AS(Selector(SystemTag::DeltaMatroid, {v("a1"), v("a2")}),
                  Error);
}
