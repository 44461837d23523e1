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
#include "tutte/embedded.hpp"
#include "tutte/ribbon.hpp"

using namespace tutte;

namespace {
RibbonGraph posloop() { return RibbonGraph({{0, 1}}, {{0, 1, +1}}); }
RibbonGraph bridge() { return RibbonGraph({{0}, {1}}, {{0, 1, +1}}); }
}  // namespace

TEST_CASE("boundary profiles") {
  RibbonGraph disc({{}}, {});
  CHECK(boundary_profile(disc, 0).f == 1);
  CHECK(boundary_profile(disc, 0).gamma == 0);

  CHECK(boundary_profile(posloop(), 1).f == 2);   // annulus
  CHECK(boundary_profile(posloop(), 1).gamma == 0);
  // one negative loop: a single boundary walk, Euler genus 1 (Moebius band)
  CHECK(boundary_profile(ribbon_negative_loop(), 1).f == 1);
  CHECK(boundary_profile(ribbon_negative_loop(), 1).gamma == 1);

  CHECK(boundary_profile(bridge(), 1).f == 1);
  CHECK(boundary_profile(ribbon_theta(), 0b111).f == 3);
  CHECK(boundary_profile(ribbon_torus_interleaved(), 0b11).f == 1);
  CHECK(boundary_profile(ribbon_torus_interleaved(), 0b11).gamma == 2);
}

TEST_CASE("contraction cases") {
  // positive non-loop edge: rotations spliced at the half-edges
  RibbonGraph tri = ribbon_plane_triangle();
  RibbonGraph c = tri.contract(0).g;
  CHECK(c.v() == 2);
  CHECK(c.e() == 2);
  CHECK(delta_matroid_of_ribbon(c) ==
        DeltaMatroid::from_matroid(Matroid::uniform(1, 2)));

  // one-vertex positive loop contracted: two isolated vertices
  auto pl = posloop().contract(0);
  CHECK(pl.g.v() == 2);
  CHECK(pl.g.e() == 0);
  CHECK(pl.created.size() == 2);

  // one-vertex negative loop contracted: one isolated vertex
  auto nl = ribbon_negative_loop().contract(0);
  CHECK(nl.g.v() == 1);
  CHECK(nl.g.e() == 0);
}

TEST_CASE("transforms") {
  CHECK(ribbon_negative_loop().petrial(1).edges()[0].sign == 1);
  for (const auto& co : corpus_detail::enumerate_ribbons(2)) {
    CHECK(co.petrial(co.full_set()).petrial(co.full_set()).serialize() ==
          co.serialize());
  }
  // dual of the plane theta: verified through the delta-matroid twist
  RibbonGraph theta = ribbon_theta();
  CHECK(delta_matroid_of_ribbon(theta.dual()) ==
        delta_matroid_of_ribbon(theta).dual());
}

TEST_CASE("delta-matroids of the named ribbon graphs") {
  CHECK(delta_matroid_of_ribbon(bridge()) == dm_coloop());
  CHECK(delta_matroid_of_ribbon(posloop()) == dm_orientable());
  CHECK(delta_matroid_of_ribbon(ribbon_negative_loop()) == dm_nonorientable());
  CHECK(delta_matroid_of_ribbon(ribbon_torus_interleaved()) ==
        DeltaMatroid(2, {0b00, 0b11}));
}

TEST_CASE("functor squares on the enumerated corpus") {
  for (const auto& g : corpus_detail::enumerate_ribbons(3)) {
    DeltaMatroid d = delta_matroid_of_ribbon(g);
    for (int i = 0; i < g.e(); ++i) {
      CHECK(delta_matroid_of_ribbon(g.del(i)) == d.del(i));
      CHECK(delta_matroid_of_ribbon(g.contract(i).g) == d.con(i));
      CHECK(delta_matroid_of_ribbon(g.petrial(std::uint32_t{1} << i)) ==
            d.loop_complement(std::uint32_t{1} << i));
    }
    CHECK(delta_matroid_of_ribbon(g.dual()) == d.dual());
  }
}

TEST_CASE("kappa and the Krushkal exponents") {
  // plane graphs: kappa(A) = n(A), s = s_perp = 0
  for (const RibbonGraph& g : {ribbon_theta(), ribbon_plane_triangle()}) {
    for (std::uint32_t a = 0; a <= g.full_set(); ++a) {
      KappaS ks = kappa_sperp(g, a);
      CHECK(ks.kappa == g.nullity(a));
      CHECK(ks.s == 0);
      CHECK(ks.s_perp == 0);
      if (a == g.full_set()) break;
    }
  }
  // A = E: kappa = f(G) - c(G)
  for (const auto& g : corpus_detail::enumerate_ribbons(2)) {
    if (g.e() == 0) continue;
    CHECK(kappa_sperp(g, g.full_set()).kappa ==
          g.boundary_components(g.full_set()) - g.components());
    CHECK(kappa_sperp(g, 0).kappa == 0);
  }
}

TEST_CASE("krushkal polynomial examples") {
  CHECK(krushkal_cellular(RibbonGraph({{}}, {}), VertexPartition::singletons(1)) ==
        Polynomial::one());
  // one negative loop: terms for the empty set and the loop
  Polynomial k = krushkal_cellular(ribbon_negative_loop(),
                                   VertexPartition::singletons(1));
  Polynomial expect =
      Polynomial::one() +
      Polynomial::monomial(Monomial::var_doubled("a", 1).times(
                               Monomial::var_doubled("b", 1)),
                           1);
  CHECK(k == expect);
}

TEST_CASE("penrose polynomial of ribbon graphs") {
  // edgeless one-vertex graph: P(lam) = lam
  CHECK(ribbon_penrose_classic(RibbonGraph({{}}, {})) ==
        Polynomial::variable("lam"));
  // single positive loop: lam^2 - lam
  CHECK(ribbon_penrose_classic(posloop()) ==
        Polynomial::variable("lam").pow(2) - Polynomial::variable("lam"));
  // theta at lam = 3 counts the proper edge 3-colourings; oracle: brute force
  // over all 27 assignments on the underlying graph.
  Multigraph theta = ribbon_theta().underlying_graph();
  int proper = 0;
  for (int c0 = 0; c0 < 3; ++c0)
    for (int c1 = 0; c1 < 3; ++c1)
      for (int c2 = 0; c2 < 3; ++c2) {
        int col[3] = {c0, c1, c2};
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
          for (int j = i + 1; j < 3 && ok; ++j) {
            bool adjacent = theta.edges[i].first == theta.edges[j].first ||
                            theta.edges[i].first == theta.edges[j].second ||
                            theta.edges[i].second == theta.edges[j].first ||
                            theta.edges[i].second == theta.edges[j].second;
            if (adjacent && col[i] == col[j]) ok = false;
          }
        if (ok) ++proper;
      }
  CHECK(proper == 6);
  CHECK(ribbon_penrose_eval(ribbon_theta(), 3) == proper);
}

TEST_CASE("partitioned minors update blocks") {
  // contracting theta's first edge with both vertices in one block keeps a
  // single block; with separate blocks the two merge.
  PartitionedRibbon pr(ribbon_theta(), VertexPartition{{{0}, {1}}});
  PartitionedRibbon c = pr.con(0);
  CHECK(c.p.blocks.size() == 1);
  CHECK(c.g.v() == 1);
  PartitionedRibbon d = pr.del(0);
  CHECK(d.p.blocks.size() == 2);
}

TEST_CASE("cellular region tracking distinguishes the torus meridian") {
  // Deleting one loop of the interleaved pair leaves a positive loop whose
  // two boundary circles bound a single region: the torus meridian, kappa 0.
  CellularObject torus(ribbon_torus_interleaved(), VertexPartition{{{0}}});
  CellularObject merid = torus.del(1);
  CHECK(merid.g.e() == 1);
  CHECK(merid.num_regions == 1);
  CHECK(merid.kappa(1) == 0);
  // The same loop cellularly embedded has two disc regions and kappa 1.
  CellularObject sphere(posloop(), VertexPartition::singletons(1));
  CHECK(sphere.num_regions == 2);
  CHECK(sphere.kappa(1) == 1);
}
