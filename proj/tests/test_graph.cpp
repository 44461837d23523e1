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
#include "tutte/graph.hpp"

using namespace tutte;

TEST_CASE("graph rank") {
  Multigraph tri = graph_triangle();
  CHECK(graph_rank(tri, 0b111) == 2);
  CHECK(graph_rank(tri, 0) == 0);
  Multigraph theta = graph_theta();
  CHECK(graph_rank(theta, 0b011) == 1);
  CHECK(graph_rank(theta, 0b111) == 1);
  Multigraph loop(1, {{0, 0}});
  CHECK(graph_rank(loop, 1) == 0);
}

TEST_CASE("cycle matroid") {
  CHECK(cycle_matroid(graph_triangle()) == Matroid::uniform(2, 3));
  CHECK(cycle_matroid(Multigraph(1, {{0, 0}})) == Matroid::uniform(0, 1));
  CHECK(cycle_matroid(Multigraph(2, {{0, 1}})) == Matroid::uniform(1, 1));
  CHECK(bond_matroid(graph_triangle()) == Matroid::uniform(1, 3));
}

TEST_CASE("graph minors") {
  Multigraph tri = graph_triangle();
  Multigraph contracted = graph_minor(tri, 0, 0b001);
  CHECK(contracted.v == 2);
  CHECK(contracted.e() == 2);
  CHECK(cycle_matroid(contracted) == Matroid::uniform(1, 2));

  // loop contraction behaves as loop deletion
  Multigraph loop(1, {{0, 0}});
  CHECK(graph_minor(loop, 0, 1).serialize() == graph_minor(loop, 1, 0).serialize());

  // theta contract one edge: a vertex with two loops
  Multigraph theta_c = graph_minor(graph_theta(), 0, 0b001);
  CHECK(theta_c.v == 1);
  CHECK(theta_c.e() == 2);
  CHECK(theta_c.edges[0].first == theta_c.edges[0].second);

  CHECK_THROWS_AS(graph_minor(tri, 0b001, 0b001), OverlappingSets);
}

TEST_CASE("functoriality of the cycle matroid") {
  // C(G/A), C(G\A) against matroid minors, all graphs with <= 3 edges.
  for (const auto& g : corpus_detail::enumerate_graphs(3)) {
    Matroid c = cycle_matroid(g);
    for (int i = 0; i < g.e(); ++i) {
      std::uint32_t bit = std::uint32_t{1} << i;
      CHECK(cycle_matroid(graph_minor(g, bit, 0)) == c.minor(bit, 0));
      CHECK(cycle_matroid(graph_minor(g, 0, bit)) == c.minor(0, bit));
    }
  }
}

TEST_CASE("vertex partitions and quotient rank") {
  Multigraph tri = graph_triangle();
  VertexPartition singles = VertexPartition::singletons(3);
  for (std::uint32_t a = 0; a < 8; ++a)
    CHECK(quotient_rank(tri, singles, a) == graph_rank(tri, a));

  VertexPartition one_block{{{0, 1, 2}}};
  for (std::uint32_t a = 0; a < 8; ++a)
    CHECK(quotient_rank(tri, one_block, a) == 0);

  VertexPartition bad{{{0, 1}, {1, 2}}};
  CHECK_THROWS_AS(bad.validate(3), ParseError);
  VertexPartition missing{{{0, 1}}};
  CHECK_THROWS_AS(missing.validate(3), ParseError);
}

TEST_CASE("six-edge partitioned quotient structure") {
  // Five vertices in blocks {A, A}, {B, B}, {C}; identifying each block
  // merges endpoints exactly as the explicit quotient graph does.
  Multigraph g(5, {{0, 2}, {2, 1}, {1, 3}, {3, 4}, {4, 0}, {2, 3}});
  VertexPartition p{{{0, 1}, {2, 3}, {4}}};
  Multigraph q = quotient_graph(g, p);
  CHECK(q.v == 3);
  CHECK(q.e() == 6);
  // oracle: union-find rank of the quotient built by hand
  Multigraph manual(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}, {2, 0}, {1, 1}});
  for (std::uint32_t a = 0; a < (1u << 6); ++a)
    CHECK(quotient_rank(g, p, a) == graph_rank(manual, a));
}
