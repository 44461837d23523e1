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

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tutte/errors.hpp"
#include "tutte/matroid.hpp"

namespace tutte {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;  // min-id representative keeps merges order-independent
    return true;
  }
  int components() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
      if (find(i) == i) ++c;
    return c;
  }

 private:
  std::vector<int> parent_;
};

// A multigraph with loops and parallel edges.  Edge ids are positions in the
// edge list and survive minors (surviving edges keep their relative order).
struct Multigraph {
  int v = 0;
  std::vector<std::pair<int, int>> edges;

  Multigraph() = default;
  Multigraph(int vertices, std::vector<std::pair<int, int>> es)
      : v(vertices), edges(std::move(es)) {
    for (const auto& [a, b] : edges)
      if (a < 0 || a >= v || b < 0 || b >= v)
        throw ParseError("edge endpoint out of range");
  }

  int e() const { return static_cast<int>(edges.size()); }
  std::uint32_t full_set() const { return (std::uint32_t{1} << e()) - 1; }

  std::string serialize() const {
    std::string s = "g" + std::to_string(v) + ":";
    for (const auto& [a, b] : edges)
      s += std::to_string(a) + "-" + std::to_string(b) + ";";
    return s;
  }
};

// r(A) = v(A) - c(A) for the spanning subgraph on A (all vertices kept).
inline int graph_rank(const Multigraph& g, std::uint32_t subset) {
  UnionFind uf(g.v);
  for (int i = 0; i < g.e(); ++i)
    if (subset & (std::uint32_t{1} << i)) uf.unite(g.edges[i].first, g.edges[i].second);
  return g.v - uf.components();
}

inline int graph_components(const Multigraph& g, std::uint32_t subset) {
  UnionFind uf(g.v);
  for (int i = 0; i < g.e(); ++i)
    if (subset & (std::uint32_t{1} << i)) uf.unite(g.edges[i].first, g.edges[i].second);
  return uf.components();
}

inline Matroid cycle_matroid(const Multigraph& g) {
  if (g.e() > kMaxGroundSet)
    throw CapExceeded("cycle matroid needs <= 16 edges");
  std::vector<std::uint8_t> r(std::size_t{1} << g.e());
  for (std::uint32_t a = 0; a < r.size(); ++a)
    r[a] = static_cast<std::uint8_t>(graph_rank(g, a));
  return Matroid(g.e(), std::move(r));
}

inline Matroid bond_matroid(const Multigraph& g) {
  return cycle_matroid(g).dual();
}

// Deletion removes edges; contraction merges endpoints (a contracted loop is
// just removed, matching the matroid convention).  Vertices are compacted with
// min-id class representatives so the result is independent of edge order.
inline Multigraph graph_minor(const Multigraph& g, std::uint32_t delete_set,
                              std::uint32_t contract_set) {
  if (delete_set & contract_set)
    throw OverlappingSets("deletion and contraction sets intersect");
  UnionFind uf(g.v);
  for (int i = 0; i < g.e(); ++i)
    if (contract_set & (std::uint32_t{1} << i))
      uf.unite(g.edges[i].first, g.edges[i].second);
  std::vector<int> label(g.v, -1);
  int nv = 0;
  for (int x = 0; x < g.v; ++x)
    if (uf.find(x) == x) label[x] = nv++;
  Multigraph out;
  out.v = nv;
  for (int i = 0; i < g.e(); ++i) {
    if ((delete_set | contract_set) & (std::uint32_t{1} << i)) continue;
    out.edges.emplace_back(label[uf.find(g.edges[i].first)],
                           label[uf.find(g.edges[i].second)]);
  }
  return out;
}

inline Multigraph graph_disjoint_union(const Multigraph& a, const Multigraph& b) {
  Multigraph out = a;
  out.v += b.v;
  for (const auto& [x, y] : b.edges) out.edges.emplace_back(x + a.v, y + a.v);
  return out;
}

// A partition of the vertex set into disjoint covering blocks.
struct VertexPartition {
  std::vector<std::vector<int>> blocks;

  static VertexPartition singletons(int v) {
    VertexPartition p;
    for (int i = 0; i < v; ++i) p.blocks.push_back({i});
    return p;
  }

  void validate(int v) const {
    std::vector<int> seen(v, 0);
    for (const auto& b : blocks)
      for (int x : b) {
        if (x < 0 || x >= v) throw ParseError("partition vertex out of range");
        if (seen[x]++) throw ParseError("partition blocks overlap");
      }
    for (int x = 0; x < v; ++x)
      if (!seen[x]) throw ParseError("partition does not cover vertex " +
                                     std::to_string(x));
  }

  std::vector<int> block_of(int v) const {
    std::vector<int> bo(v, -1);
    for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi)
      for (int x : blocks[bi]) bo[x] = bi;
    return bo;
  }

  std::string serialize() const {
    std::string s = "P";
    for (const auto& b : blocks) {
      s += "{";
      for (int x : b) s += std::to_string(x) + ",";
      s += "}";
    }
    return s;
  }
};

// The quotient graph G_{/P}: one vertex per block, edges re-attached.
inline Multigraph quotient_graph(const Multigraph& g, const VertexPartition& p) {
  p.validate(g.v);
  auto bo = p.block_of(g.v);
  Multigraph q;
  q.v = static_cast<int>(p.blocks.size());
  for (const auto& [a, b] : g.edges) q.edges.emplace_back(bo[a], bo[b]);
  return q;
}

inline int quotient_rank(const Multigraph& g, const VertexPartition& p,
                         std::uint32_t subset) {
  return graph_rank(quotient_graph(g, p), subset);
}

inline Polynomial tutte_polynomial(const Multigraph& g) {
  return tutte_polynomial(cycle_matroid(g));
}

}  // namespace tutte
