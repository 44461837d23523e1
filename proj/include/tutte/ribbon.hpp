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
#include <optional>
#include <string>
#include <vector>

#include "tutte/delta_matroid.hpp"
#include "tutte/errors.hpp"
#include "tutte/graph.hpp"

namespace tutte {

// A ribbon graph as a signed rotation system: every vertex carries a cyclic
// list of half-edge ids, every edge pairs two distinct half-edges and carries
// a sign (-1 for a half-twisted ribbon).
//
// Boundary walks run on "darts": each half-edge h has two darts, A(h) before
// it and B(h) after it in the rotation.  Vertex arcs join B(h_i) to A(h_{i+1})
// around each vertex; the two free sides of an edge join darts across the
// ribbon, with the pairing depending on the sign.  Boundary components are the
// alternating cycles of those two matchings.
struct RibbonEdge {
  int h1, h2;
  int sign;  // +1 or -1
};

class RibbonGraph {
 public:
  RibbonGraph() = default;
  RibbonGraph(std::vector<std::vector<int>> rotations,
              std::vector<RibbonEdge> edges)
      : rot_(std::move(rotations)), edges_(std::move(edges)) {
    rebuild_index();
  }

  int v() const { return static_cast<int>(rot_.size()); }
  int e() const { return static_cast<int>(edges_.size()); }
  std::uint32_t full_set() const { return (std::uint32_t{1} << e()) - 1; }
  const std::vector<std::vector<int>>& rotations() const { return rot_; }
  const std::vector<RibbonEdge>& edges() const { return edges_; }
  int vertex_of(int half) const { return vertex_.at(half); }
  int edge_of(int half) const { return edge_.at(half); }

  // --- boundary machinery ------------------------------------------------

  using Dart = std::pair<int, int>;  // (half-edge id, side 0=A / 1=B)

  struct Boundary {
    std::vector<std::vector<Dart>> circles;  // dart circles in walk order
    std::vector<int> bare_vertices;          // edgeless vertices, one circle each
    std::map<Dart, int> circle_of;           // dart -> index into circles
    int f() const {
      return static_cast<int>(circles.size() + bare_vertices.size());
    }
  };

  // Boundary of the spanning subgraph (V, subset).
  Boundary boundary(std::uint32_t subset) const {
    std::map<Dart, Dart> mv, me;
    for (const auto& rot : rot_) {
      std::vector<int> r;
      for (int h : rot)
        if (subset & (std::uint32_t{1} << edge_.at(h))) r.push_back(h);
      int k = static_cast<int>(r.size());
      for (int i = 0; i < k; ++i) {
        Dart b{r[i], 1}, a{r[(i + 1) % k], 0};
        mv[b] = a;
        mv[a] = b;
      }
    }
    for (int i = 0; i < e(); ++i) {
      if (!(subset & (std::uint32_t{1} << i))) continue;
      const auto& ed = edges_[i];
      Dart a1{ed.h1, 0}, b1{ed.h1, 1}, a2{ed.h2, 0}, b2{ed.h2, 1};
      if (ed.sign > 0) {
        me[a1] = b2, me[b2] = a1;
        me[b1] = a2, me[a2] = b1;
      } else {
        me[a1] = a2, me[a2] = a1;
        me[b1] = b2, me[b2] = b1;
      }
    }
    Boundary out;
    std::map<Dart, bool> seen;
    for (const auto& [d, p] : me) seen[d] = false;
    for (const auto& [d0, unused] : me) {
      if (seen[d0]) continue;
      std::vector<Dart> circle;
      Dart d = d0;
      do {
        circle.push_back(d);
        seen[d] = true;
        Dart x = me.at(d);
        circle.push_back(x);
        seen[x] = true;
        d = mv.at(x);
      } while (d != d0);
      int idx = static_cast<int>(out.circles.size());
      for (const Dart& c : circle) out.circle_of[c] = idx;
      out.circles.push_back(std::move(circle));
    }
    for (int x = 0; x < v(); ++x) {
      bool bare = true;
      for (int h : rot_[x])
        if (subset & (std::uint32_t{1} << edge_.at(h))) bare = false;
      if (bare) out.bare_vertices.push_back(x);
    }
    return out;
  }

  int boundary_components(std::uint32_t subset) const {
    return boundary(subset).f();
  }

  int components(std::uint32_t subset) const {
    UnionFind uf(v());
    for (int i = 0; i < e(); ++i)
      if (subset & (std::uint32_t{1} << i))
        uf.unite(vertex_.at(edges_[i].h1), vertex_.at(edges_[i].h2));
    return uf.components();
  }
  int components() const { return components(full_set()); }

  int rank(std::uint32_t subset) const { return v() - components(subset); }
  int nullity(std::uint32_t subset) const {
    return Matroid::popcount(subset) - rank(subset);
  }
  // Euler genus of the spanning subgraph.
  int genus(std::uint32_t subset) const {
    return 2 * components(subset) - v() + Matroid::popcount(subset) -
           boundary_components(subset);
  }
  // 2*rho(A) = |A| + v - f(A).
  int rho_doubled(std::uint32_t subset) const {
    return Matroid::popcount(subset) + v() - boundary_components(subset);
  }

  // --- minors and transforms ----------------------------------------------

  RibbonGraph del(int edge_idx) const {
    RibbonGraph out;
    const auto& ed = edges_[edge_idx];
    for (const auto& rot : rot_) {
      std::vector<int> r;
      for (int h : rot)
        if (h != ed.h1 && h != ed.h2) r.push_back(h);
      out.rot_.push_back(std::move(r));
    }
    for (int i = 0; i < e(); ++i)
      if (i != edge_idx) out.edges_.push_back(edges_[i]);
    out.rebuild_index();
    return out;
  }

  // Contracts one edge by boundary surgery: walk the boundary of the
  // one-edge ribbon subgraph on e's endpoints treating all other half-edges
  // as stubs; every walk cycle becomes a vertex of G/e, and a stub traversed
  // against its rotation direction half-twists its edge.
  struct ContractResult;
  ContractResult contract(int edge_idx) const;

  // Partial Petrial: half-twist every edge in the subset.
  RibbonGraph petrial(std::uint32_t subset) const {
    RibbonGraph out = *this;
    for (int i = 0; i < e(); ++i)
      if (subset & (std::uint32_t{1} << i)) out.edges_[i].sign = -out.edges_[i].sign;
    return out;
  }

  // Geometric dual: boundary components become vertices.  Each edge's two
  // free sides become the dual half-edges 2i and 2i+1; the dual edge is
  // half-twisted exactly when both sides are traversed with equal orientation
  // relative to the h1-end -> h2-end direction.
  RibbonGraph dual() const {
    Boundary b = boundary(full_set());
    std::vector<std::vector<int>> rots(b.circles.size() +
                                       b.bare_vertices.size());
    // side index: 0 for the arc containing A(h1), 1 for the arc with B(h1)
    std::vector<std::vector<int>> traversal(e());  // per edge: direction flags
    for (std::size_t ci = 0; ci < b.circles.size(); ++ci) {
      const auto& cyc = b.circles[ci];
      // cyc lists darts in walk order: (d, me(d), d', me(d'), ...)
      for (std::size_t j = 0; j + 1 < cyc.size(); j += 2) {
        Dart from = cyc[j], to = cyc[j + 1];
        int ei = edge_.at(from.first);
        const auto& ed = edges_[ei];
        int side, forward;
        if (from.first == ed.h1) {
          side = from.second;
          forward = 1;
        } else {
          // arriving from the h2 end; identify the arc by its h1 dart
          side = to.second;
          forward = 0;
        }
        rots[ci].push_back(2 * ei + side);
        traversal[ei].push_back(forward);
      }
    }
    std::vector<RibbonEdge> dedges(e());
    for (int i = 0; i < e(); ++i) {
      int s = (traversal[i][0] == traversal[i][1]) ? -1 : +1;
      dedges[i] = RibbonEdge{2 * i, 2 * i + 1, s};
    }
    return RibbonGraph(std::move(rots), std::move(dedges));
  }

  RibbonGraph disjoint_union(const RibbonGraph& o) const {
    int shift = 0;
    for (const auto& rot : rot_)
      for (int h : rot) shift = std::max(shift, h + 1);
    RibbonGraph out = *this;
    for (const auto& rot : o.rot_) {
      std::vector<int> r;
      for (int h : rot) r.push_back(h + shift);
      out.rot_.push_back(std::move(r));
    }
    for (const auto& ed : o.edges_)
      out.edges_.push_back(RibbonEdge{ed.h1 + shift, ed.h2 + shift, ed.sign});
    out.rebuild_index();
    return out;
  }

  // Join at vertex a of this and vertex b of o: concatenate the rotations.
  RibbonGraph join(int a, const RibbonGraph& o, int b) const {
    RibbonGraph u = disjoint_union(o);
    int bid = v() + b;
    std::vector<int> merged = u.rot_[a];
    for (int h : u.rot_[bid]) merged.push_back(h);
    u.rot_[a] = std::move(merged);
    u.rot_.erase(u.rot_.begin() + bid);
    u.rebuild_index();
    return u;
  }

  // Drops edgeless vertices (the join/Kr-trivial ones).
  struct DropResult;
  DropResult drop_isolated() const;

  Multigraph underlying_graph() const {
    Multigraph g;
    g.v = v();
    for (const auto& ed : edges_)
      g.edges.emplace_back(vertex_.at(ed.h1), vertex_.at(ed.h2));
    return g;
  }

  bool is_loop(int edge_idx) const {
    return vertex_.at(edges_[edge_idx].h1) == vertex_.at(edges_[edge_idx].h2);
  }

  // Reverses one vertex's rotation and half-twists every non-loop edge at it;
  // the result presents the same ribbon surface.
  RibbonGraph vertex_flip(int x) const {
    RibbonGraph out = *this;
    std::reverse(out.rot_[x].begin(), out.rot_[x].end());
    for (auto& ed : out.edges_) {
      bool e1 = vertex_.at(ed.h1) == x, e2 = vertex_.at(ed.h2) == x;
      if (e1 != e2) ed.sign = -ed.sign;
    }
    out.rebuild_index();
    return out;
  }

  // Serialization minimized over all vertex flips: identical strings exactly
  // when the rotation systems agree up to flips, cyclic rotation, vertex
  // order, and edgeless vertices.  Falls back to the plain form for large
  // vertex counts.
  std::string canonical_serialize() const {
    if (v() > 12) return serialize();
    std::string best = serialize();
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << v()); ++m) {
      RibbonGraph g = *this;
      for (int x = 0; x < v(); ++x)
        if (m & (std::uint32_t{1} << x)) g = g.vertex_flip(x);
      std::string s = g.serialize();
      if (s < best) best = s;
    }
    return best;
  }

  // Serialization after a light normalization (rotations rotated to their
  // minimal half-edge, vertices sorted); equal strings mean equal rotation
  // systems, which is all memoization needs.
  std::string serialize() const {
    std::vector<std::vector<int>> rots;
    for (const auto& rot : rot_) {
      if (rot.empty()) continue;  // edgeless vertices are join-trivial
      auto it = std::min_element(rot.begin(), rot.end());
      std::vector<int> r(it, rot.end());
      r.insert(r.end(), rot.begin(), it);
      rots.push_back(std::move(r));
    }
    std::sort(rots.begin(), rots.end());
    std::string s = "r";
    for (const auto& r : rots) {
      s += "[";
      for (int h : r) s += std::to_string(h) + ",";
      s += "]";
    }
    s += "|";
    for (const auto& ed : edges_) {
      int a = std::min(ed.h1, ed.h2), b = std::max(ed.h1, ed.h2);
      s += std::to_string(a) + "-" + std::to_string(b) +
           (ed.sign > 0 ? "+" : "-") + ";";
    }
    return s;
  }

 private:
  void rebuild_index() {
    vertex_.clear();
    edge_.clear();
    for (int x = 0; x < v(); ++x)
      for (int h : rot_[x]) {
        if (vertex_.count(h)) throw ParseError("half-edge appears twice");
        vertex_[h] = x;
      }
    for (int i = 0; i < e(); ++i) {
      const auto& ed = edges_[i];
      if (ed.h1 == ed.h2) throw ParseError("edge pairs a half-edge with itself");
      if (!vertex_.count(ed.h1) || !vertex_.count(ed.h2))
        throw ParseError("edge references a missing half-edge");
      if (edge_.count(ed.h1) || edge_.count(ed.h2))
        throw ParseError("half-edge used by two edges");
      if (ed.sign != 1 && ed.sign != -1) throw ParseError("edge sign must be +-1");
      edge_[ed.h1] = i;
      edge_[ed.h2] = i;
    }
    for (const auto& [h, x] : vertex_)
      if (!edge_.count(h)) throw ParseError("half-edge not used by any edge");
  }

  std::vector<std::vector<int>> rot_;
  std::vector<RibbonEdge> edges_;
  std::map<int, int> vertex_;  // half-edge -> vertex
  std::map<int, int> edge_;    // half-edge -> edge index
};

struct RibbonGraph::ContractResult {
  RibbonGraph g;
  std::vector<int> old_to_new;  // old vertex id -> new id, -1 if removed
  std::vector<int> created;     // ids of vertices created by the surgery
  // Half-edges whose attachment came out mirrored; the dart (h, s) of the
  // result corresponds to the dart (h, 1-s) of the input for these.
  std::map<int, bool> flipped;
};

struct RibbonGraph::DropResult {
  RibbonGraph g;
  std::vector<int> old_to_new;
};

inline RibbonGraph::ContractResult RibbonGraph::contract(int edge_idx) const {
  const auto& ed = edges_[edge_idx];
  int u = vertex_.at(ed.h1), w = vertex_.at(ed.h2);
  std::map<Dart, Dart> mv, me;
  for (int x : (u == w ? std::vector<int>{u} : std::vector<int>{u, w})) {
    const auto& r = rot_[x];
    int k = static_cast<int>(r.size());
    for (int i = 0; i < k; ++i) {
      Dart b{r[i], 1}, a{r[(i + 1) % k], 0};
      mv[b] = a;
      mv[a] = b;
    }
  }
  Dart a1{ed.h1, 0}, b1{ed.h1, 1}, a2{ed.h2, 0}, b2{ed.h2, 1};
  if (ed.sign > 0) {
    me[a1] = b2, me[b2] = a1;
    me[b1] = a2, me[a2] = b1;
  } else {
    me[a1] = a2, me[a2] = a1;
    me[b1] = b2, me[b2] = b1;
  }
  auto p2 = [&](const Dart& d) -> Dart {
    auto it = me.find(d);
    if (it != me.end()) return it->second;
    return Dart{d.first, 1 - d.second};  // stub arc
  };

  std::map<Dart, bool> seen;
  for (const auto& [d, p] : mv) seen[d] = false;
  std::vector<std::vector<int>> new_rots;
  std::map<int, bool> flipped;
  for (const auto& [d0, unused] : mv) {
    if (seen[d0]) continue;
    std::vector<int> rot;
    Dart d = d0;
    do {
      seen[d] = true;
      Dart x = p2(d);
      seen[x] = true;
      if (x.first == d.first && x.first != ed.h1 && x.first != ed.h2) {
        // traversed the stub of half-edge d.first
        rot.push_back(d.first);
        if (d.second == 1) flipped[d.first] = !flipped[d.first];
      }
      d = mv.at(x);
    } while (d != d0);
    new_rots.push_back(std::move(rot));
  }

  ContractResult res;
  res.old_to_new.assign(v(), -1);
  for (int x = 0; x < v(); ++x) {
    if (x == u || x == w) continue;
    res.old_to_new[x] = static_cast<int>(res.g.rot_.size());
    res.g.rot_.push_back(rot_[x]);
  }
  for (auto& rot : new_rots) {
    res.created.push_back(static_cast<int>(res.g.rot_.size()));
    res.g.rot_.push_back(std::move(rot));
  }
  for (int i = 0; i < e(); ++i) {
    if (i == edge_idx) continue;
    RibbonEdge ne = edges_[i];
    bool f1 = flipped.count(ne.h1) ? flipped[ne.h1] : false;
    bool f2 = flipped.count(ne.h2) ? flipped[ne.h2] : false;
    if (f1 != f2) ne.sign = -ne.sign;
    res.g.edges_.push_back(ne);
  }
  res.flipped = std::move(flipped);
  res.g.rebuild_index();
  return res;
}

inline RibbonGraph::DropResult RibbonGraph::drop_isolated() const {
  DropResult res;
  res.old_to_new.assign(v(), -1);
  for (int x = 0; x < v(); ++x) {
    if (rot_[x].empty()) continue;
    res.old_to_new[x] = static_cast<int>(res.g.rot_.size());
    res.g.rot_.push_back(rot_[x]);
  }
  res.g.edges_ = edges_;
  res.g.rebuild_index();
  return res;
}

struct BoundaryProfile {
  int f;
  int c;
  int gamma;
  int rho_doubled;
};

inline BoundaryProfile boundary_profile(const RibbonGraph& g,
                                        std::uint32_t subset) {
  BoundaryProfile p;
  p.f = g.boundary_components(subset);
  p.c = g.components(subset);
  p.gamma = g.genus(subset);
  p.rho_doubled = g.rho_doubled(subset);
  return p;
}

inline RibbonGraph ribbon_minor(const RibbonGraph& g, std::uint32_t delete_set,
                                std::uint32_t contract_set) {
  if (delete_set & contract_set)
    throw OverlappingSets("deletion and contraction sets intersect");
  RibbonGraph cur = g;
  // Highest index first keeps lower edge indices stable.
  for (int i = g.e() - 1; i >= 0; --i) {
    if (delete_set & (std::uint32_t{1} << i)) cur = cur.del(i);
    else if (contract_set & (std::uint32_t{1} << i)) cur = cur.contract(i).g;
  }
  return cur;
}

// Feasible sets are the spanning quasi-tree edge sets: f(A) = c(G).
inline DeltaMatroid delta_matroid_of_ribbon(const RibbonGraph& g) {
  if (g.e() > kMaxGroundSet) throw CapExceeded("ribbon graph needs <= 16 edges");
  int c = g.components();
  std::vector<std::uint32_t> feas;
  for (std::uint32_t a = 0;; ++a) {
    if (g.boundary_components(a) == c) feas.push_back(a);
    if (a == g.full_set()) break;
  }
  return DeltaMatroid(g.e(), std::move(feas));
}

// kappa(A) counts complement components against the base surface; s and
// s-perp are the Euler genera of the subgraph neighbourhood and of its
// complement, both read off through the dual.
struct KappaS {
  int kappa;
  int s;
  int s_perp;
};

inline KappaS kappa_sperp(const RibbonGraph& g, std::uint32_t subset) {
  RibbonGraph d = g.dual();
  std::uint32_t comp = g.full_set() & ~subset;
  KappaS out;
  out.kappa = d.components(comp) - g.components();
  out.s = g.genus(subset);
  out.s_perp = d.genus(comp);
  return out;
}

}  // namespace tutte
