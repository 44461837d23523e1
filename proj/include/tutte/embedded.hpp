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

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tutte/graph.hpp"
#include "tutte/ribbon.hpp"

namespace tutte {

// ---------------------------------------------------------------------------
// Vertex-partitioned ribbon graphs.

struct PartitionedRibbon {
  RibbonGraph g;
  VertexPartition p;

  PartitionedRibbon() = default;
  PartitionedRibbon(RibbonGraph graph, VertexPartition part)
      : g(std::move(graph)), p(std::move(part)) {
    p.validate(g.v());
  }

  int quotient_rank_of(std::uint32_t subset) const {
    return quotient_rank(g.underlying_graph(), p, subset);
  }
  int quotient_rank_full() const { return quotient_rank_of(g.full_set()); }

  PartitionedRibbon del(int edge_idx) const {
    return PartitionedRibbon(g.del(edge_idx), p);
  }

  PartitionedRibbon con(int edge_idx) const {
    int u = g.vertex_of(g.edges()[edge_idx].h1);
    int w = g.vertex_of(g.edges()[edge_idx].h2);
    auto cr = g.contract(edge_idx);
    auto bo = p.block_of(g.v());
    int bu = bo[u], bw = bo[w];
    VertexPartition np;
    std::vector<int> merged;
    for (int bi = 0; bi < static_cast<int>(p.blocks.size()); ++bi) {
      std::vector<int> blk;
      for (int x : p.blocks[bi])
        if (cr.old_to_new[x] >= 0) blk.push_back(cr.old_to_new[x]);
      if (bi == bu || bi == bw) {
        for (int x : blk) merged.push_back(x);
      } else if (!blk.empty()) {
        np.blocks.push_back(std::move(blk));
      }
    }
    for (int x : cr.created) merged.push_back(x);
    std::sort(merged.begin(), merged.end());
    if (!merged.empty()) np.blocks.push_back(std::move(merged));
    return PartitionedRibbon(cr.g, np);
  }

  std::string serialize() const { return g.serialize() + p.serialize(); }
};

// ---------------------------------------------------------------------------
// Cellularly embedded graphs with minors that may leave the cellular world.
//
// A cellular embedding is a ribbon graph whose regions are discs, one per
// boundary circle.  Deleting an edge keeps the ambient surface, so the minor
// is generally not cellular any more.  Up to the moves that leave the Krushkal
// exponents invariant, all the extra data a minor needs is the grouping of
// boundary circles into regions, which deletion merges and contraction
// carries over.  region_of[i] is the region id of the i-th boundary circle in
// the canonical circle order; isolated vertices are dropped on sight.

struct CellularObject {
  RibbonGraph g;
  VertexPartition p;
  std::vector<int> region_of;
  int num_regions = 0;

  CellularObject() = default;
  CellularObject(const RibbonGraph& graph, const VertexPartition& part) {
    auto dr = graph.drop_isolated();
    g = dr.g;
    p = remap_partition(part, dr.old_to_new);
    p.validate(g.v());
    auto b = g.boundary(g.full_set());
    region_of.resize(b.circles.size());
    for (std::size_t i = 0; i < region_of.size(); ++i)
      region_of[i] = static_cast<int>(i);
    num_regions = static_cast<int>(region_of.size());
  }

  int quotient_rank_of(std::uint32_t subset) const {
    return quotient_rank(g.underlying_graph(), p, subset);
  }

  // Components of the base surface: glue graph components to the regions they
  // border.
  int sigma_components() const {
    if (g.e() == 0) return 0;
    auto b = g.boundary(g.full_set());
    UnionFind uf(num_regions + g.v());
    for (const auto& ed : g.edges())
      uf.unite(num_regions + g.vertex_of(ed.h1), num_regions + g.vertex_of(ed.h2));
    for (std::size_t i = 0; i < b.circles.size(); ++i)
      uf.unite(region_of[i], num_regions + g.vertex_of(b.circles[i][0].first));
    std::vector<int> reps;
    for (int r = 0; r < num_regions; ++r) reps.push_back(uf.find(r));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return static_cast<int>(reps.size());
  }

  // Components of the complement of the spanning subgraph (V, A) in the base
  // surface: regions plus the ribbons of the edges outside A.
  int complement_components(std::uint32_t subset) const {
    if (g.e() == 0) return 0;
    auto b = g.boundary(g.full_set());
    UnionFind uf(num_regions + g.e());
    for (int i = 0; i < g.e(); ++i) {
      if (subset & (std::uint32_t{1} << i)) continue;
      const auto& ed = g.edges()[i];
      for (const RibbonGraph::Dart d :
           {RibbonGraph::Dart{ed.h1, 0}, RibbonGraph::Dart{ed.h1, 1},
            RibbonGraph::Dart{ed.h2, 0}, RibbonGraph::Dart{ed.h2, 1}})
        uf.unite(num_regions + i, region_of[b.circle_of.at(d)]);
    }
    std::vector<int> reps;
    for (int r = 0; r < num_regions; ++r) reps.push_back(uf.find(r));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return static_cast<int>(reps.size());
  }

  int kappa(std::uint32_t subset) const {
    if (g.e() == 0) return 0;
    return complement_components(subset) - sigma_components();
  }

  CellularObject del(int edge_idx) const {
    auto old_b = g.boundary(g.full_set());
    const auto& ed = g.edges()[edge_idx];
    UnionFind ru(num_regions);
    int anchor = -1;
    for (const RibbonGraph::Dart d :
         {RibbonGraph::Dart{ed.h1, 0}, RibbonGraph::Dart{ed.h1, 1},
          RibbonGraph::Dart{ed.h2, 0}, RibbonGraph::Dart{ed.h2, 1}}) {
      int r = region_of[old_b.circle_of.at(d)];
      if (anchor < 0) anchor = r;
      ru.unite(anchor, r);
    }
    RibbonGraph del_g = g.del(edge_idx);
    auto dr = del_g.drop_isolated();
    CellularObject out;
    out.g = dr.g;
    out.p = remap_partition(p, dr.old_to_new);
    rebuild_regions(out, old_b, ru, {});
    return out;
  }

  CellularObject con(int edge_idx) const {
    auto old_b = g.boundary(g.full_set());
    int u = g.vertex_of(g.edges()[edge_idx].h1);
    int w = g.vertex_of(g.edges()[edge_idx].h2);
    auto cr = g.contract(edge_idx);
    auto dr = cr.g.drop_isolated();
    // Compose the two vertex remaps and update the partition.
    auto bo = p.block_of(g.v());
    int bu = bo[u], bw = bo[w];
    VertexPartition np;
    std::vector<int> merged;
    for (int bi = 0; bi < static_cast<int>(p.blocks.size()); ++bi) {
      std::vector<int> blk;
      for (int x : p.blocks[bi]) {
        int y = cr.old_to_new[x];
        if (y >= 0 && dr.old_to_new[y] >= 0) blk.push_back(dr.old_to_new[y]);
      }
      if (bi == bu || bi == bw) {
        for (int x : blk) merged.push_back(x);
      } else if (!blk.empty()) {
        np.blocks.push_back(std::move(blk));
      }
    }
    for (int x : cr.created)
      if (dr.old_to_new[x] >= 0) merged.push_back(dr.old_to_new[x]);
    std::sort(merged.begin(), merged.end());
    if (!merged.empty()) np.blocks.push_back(std::move(merged));

    CellularObject out;
    out.g = dr.g;
    out.p = np;
    UnionFind ru(num_regions);  // contraction never merges regions
    rebuild_regions(out, old_b, ru, cr.flipped);
    return out;
  }

  std::string serialize() const {
    std::string s = g.serialize() + p.serialize() + "R";
    for (int r : region_of) s += std::to_string(r) + ",";
    return s;
  }

 private:
  static VertexPartition remap_partition(const VertexPartition& part,
                                         const std::vector<int>& old_to_new) {
    VertexPartition np;
    for (const auto& blk : part.blocks) {
      std::vector<int> nb;
      for (int x : blk)
        if (x < static_cast<int>(old_to_new.size()) && old_to_new[x] >= 0)
          nb.push_back(old_to_new[x]);
      std::sort(nb.begin(), nb.end());
      if (!nb.empty()) np.blocks.push_back(std::move(nb));
    }
    return np;
  }

  // Assigns regions to the circles of out.g: every surviving dart remembers
  // its old circle (modulo the vertex flips the surgery performed).  Region
  // ids are then re-densified in circle order.
  void rebuild_regions(CellularObject& out, const RibbonGraph::Boundary& old_b,
                       UnionFind& ru, const std::map<int, bool>& flipped) const {
    auto nb = out.g.boundary(out.g.full_set());
    std::vector<int> raw(nb.circles.size(), -1);
    for (std::size_t i = 0; i < nb.circles.size(); ++i) {
      for (const auto& d : nb.circles[i]) {
        RibbonGraph::Dart od = d;
        auto fl = flipped.find(d.first);
        if (fl != flipped.end() && fl->second) od.second = 1 - od.second;
        auto it = old_b.circle_of.find(od);
        if (it == old_b.circle_of.end()) continue;
        int r = ru.find(region_of[it->second]);
        if (raw[i] < 0) raw[i] = r;
        else if (raw[i] != r)
          throw NotCellular("region tracking lost a circle correspondence");
      }
      if (raw[i] < 0)
        throw NotCellular("boundary circle with no surviving dart");
    }
    std::map<int, int> dense;
    out.region_of.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      auto it = dense.find(raw[i]);
      if (it == dense.end())
        it = dense.emplace(raw[i], static_cast<int>(dense.size())).first;
      out.region_of[i] = it->second;
    }
    out.num_regions = static_cast<int>(dense.size());
  }
};

// ---------------------------------------------------------------------------
// Topological polynomials.

// R~_G(x,y), over the shifted generators "x-1", "y-1" (half-integer powers).
inline Polynomial ribbon_br2(const RibbonGraph& g) {
  int rho_e = g.rho_doubled(g.full_set());
  Polynomial total;
  for (std::uint32_t a = 0;; ++a) {
    int rho_a = g.rho_doubled(a);
    total += Polynomial::monomial(
        Monomial::var_doubled("x-1", rho_e - rho_a)
            .times(Monomial::var_doubled("y-1",
                                         2 * Matroid::popcount(a) - rho_a)),
        1);
    if (a == g.full_set()) break;
  }
  return total;
}

// R_G(x,y,z) = sum_A (x-1)^{r(G)-r(A)} y^{n(A)} z^{gamma(A)}.
inline Polynomial ribbon_br3(const RibbonGraph& g) {
  Polynomial xm1 = Polynomial::variable("x") - Polynomial::one();
  Polynomial total;
  for (std::uint32_t a = 0;; ++a) {
    total += xm1.pow(g.rank(g.full_set()) - g.rank(a)) *
             Polynomial::monomial(Monomial::var("y", g.nullity(a))
                                      .times(Monomial::var("z", g.genus(a))),
                                  1);
    if (a == g.full_set()) break;
  }
  return total;
}

// R_{(G,P)}(x,y,z) =
//   sum_A (x-1)^{r(G_P)-r(A_P)} y^{|A|-r(A_P)} z^{2(rho(A)-r(A_P))}.
inline Polynomial partitioned_br(const PartitionedRibbon& gp) {
  Polynomial xm1 = Polynomial::variable("x") - Polynomial::one();
  int r_full = gp.quotient_rank_full();
  Polynomial total;
  for (std::uint32_t a = 0;; ++a) {
    int rp = gp.quotient_rank_of(a);
    int zexp = gp.g.rho_doubled(a) - 2 * rp;
    total += xm1.pow(r_full - rp) *
             Polynomial::monomial(
                 Monomial::var("y", Matroid::popcount(a) - rp)
                     .times(Monomial::var("z", zexp)),
                 1);
    if (a == gp.g.full_set()) break;
  }
  return total;
}

// K~(x,y,a,b) = sum_A x^{r(G_P)-r(A_P)} y^{kappa(A)} a^{rho(A)-r(A_P)}
//               b^{|A|-rho(A)-kappa(A)}  (a, b may carry half-integer powers).
inline Polynomial krushkal_cellular(const CellularObject& c) {
  int r_full = c.quotient_rank_of(c.g.full_set());
  Polynomial total;
  for (std::uint32_t a = 0;; ++a) {
    int rp = c.quotient_rank_of(a);
    int rho_dbl = c.g.rho_doubled(a);
    int kap = c.kappa(a);
    Monomial m = Monomial::var("x", r_full - rp)
                     .times(Monomial::var("y", kap))
                     .times(Monomial::var_doubled("a", rho_dbl - 2 * rp))
                     .times(Monomial::var_doubled(
                         "b", 2 * Matroid::popcount(a) - rho_dbl - 2 * kap));
    total += Polynomial::monomial(m, 1);
    if (a == c.g.full_set()) break;
  }
  return total;
}

inline Polynomial krushkal_cellular(const RibbonGraph& g,
                                    const VertexPartition& p) {
  return krushkal_cellular(CellularObject(g, p));
}

// Classical Penrose polynomial by partial-Petrial enumeration, symbolically in
// the variable "lam".
inline Polynomial ribbon_penrose_classic(const RibbonGraph& g) {
  Polynomial total;
  for (std::uint32_t a = 0;; ++a) {
    int f = g.petrial(a).boundary_components(g.petrial(a).full_set());
    int sign = (Matroid::popcount(a) & 1) ? -1 : 1;
    total += Polynomial::monomial(Monomial::var("lam", f), sign);
    if (a == g.full_set()) break;
  }
  return total;
}

inline Rational ribbon_penrose_eval(const RibbonGraph& g, const Rational& lam) {
  return evaluate(ribbon_penrose_classic(g), {{"lam", lam}});
}

// 2*xi(A) = |A| + f(G) - f(G^{tau(A)}), matching
// xi(A) = |A|/2 + rho(D(G)+A) - rho(D(G)) through
// r_max(D(G^{tau(A)})) = |E| - f(G^{tau(A)}) + c(G).
inline int ribbon_xi_doubled(const RibbonGraph& g, std::uint32_t a) {
  return Matroid::popcount(a) + g.boundary_components(g.full_set()) -
         g.petrial(a).boundary_components(g.full_set());
}

inline Polynomial ribbon_penrose2(const RibbonGraph& g) {
  int xi_e = ribbon_xi_doubled(g, g.full_set());
  Polynomial total;
  for (std::uint32_t a = 0;; ++a) {
    int xi_a = ribbon_xi_doubled(g, a);
    total += Polynomial::monomial(
        Monomial::var_doubled("x-1", xi_e - xi_a)
            .times(
                Monomial::var_doubled("y-1", 2 * Matroid::popcount(a) - xi_a)),
        1);
    if (a == g.full_set()) break;
  }
  return total;
}

}  // namespace tutte
