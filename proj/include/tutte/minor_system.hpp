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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tutte/delta_matroid.hpp"
#include "tutte/embedded.hpp"
#include "tutte/errors.hpp"
#include "tutte/graph.hpp"
#include "tutte/matroid.hpp"
#include "tutte/poly.hpp"
#include "tutte/ribbon.hpp"

namespace tutte {

// The eight minors systems of the library, plus the mirror Penrose system
// whose coproduct deletes instead of contracting (used by the duality suite).
enum class SystemTag {
  Matroid,
  Perspective,
  Graph,
  DeltaMatroid,
  PenroseDeltaMatroid,
  Ribbon,
  PartitionedRibbon,
  PartitionedCellular,
  PenroseHatDeltaMatroid,
};

inline const char* system_name(SystemTag t) {
  switch (t) {
    case SystemTag::Matroid: return "matroid";
    case SystemTag::Perspective: return "perspective";
    case SystemTag::Graph: return "graph";
    case SystemTag::DeltaMatroid: return "delta-matroid";
    case SystemTag::PenroseDeltaMatroid: return "penrose-delta-matroid";
    case SystemTag::Ribbon: return "ribbon";
    case SystemTag::PartitionedRibbon: return "partitioned-ribbon";
    case SystemTag::PartitionedCellular: return "partitioned-cellular";
    case SystemTag::PenroseHatDeltaMatroid: return "penrose-hat-delta-matroid";
  }
  return "?";
}

// An object of some minors system together with its ordered element list.
// Minors renumber the payload densely but keep the surviving element ids.
struct MinorObject {
  SystemTag tag = SystemTag::Graph;
  std::variant<Multigraph, Matroid, MatroidPerspective, DeltaMatroid,
               RibbonGraph, PartitionedRibbon, CellularObject>
      payload;
  std::vector<int> elements;

  int grade() const { return static_cast<int>(elements.size()); }
  std::uint32_t full_mask() const {
    return (std::uint32_t{1} << elements.size()) - 1;
  }
};

namespace detail {
inline std::vector<int> iota_elements(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}
}  // namespace detail

inline MinorObject matroid_object(Matroid m) {
  int n = m.n();
  return MinorObject{SystemTag::Matroid, std::move(m),
                     detail::iota_elements(n)};
}
inline MinorObject perspective_object(MatroidPerspective p) {
  int n = p.n();
  return MinorObject{SystemTag::Perspective, std::move(p),
                     detail::iota_elements(n)};
}
inline MinorObject graph_object(Multigraph g) {
  int n = g.e();
  return MinorObject{SystemTag::Graph, std::move(g), detail::iota_elements(n)};
}
inline MinorObject dm_object(DeltaMatroid d) {
  int n = d.n();
  return MinorObject{SystemTag::DeltaMatroid, std::move(d),
                     detail::iota_elements(n)};
}
inline MinorObject penrose_dm_object(DeltaMatroid d) {
  int n = d.n();
  return MinorObject{SystemTag::PenroseDeltaMatroid, std::move(d),
                     detail::iota_elements(n)};
}
inline MinorObject penrose_hat_dm_object(DeltaMatroid d) {
  int n = d.n();
  return MinorObject{SystemTag::PenroseHatDeltaMatroid, std::move(d),
                     detail::iota_elements(n)};
}
inline MinorObject ribbon_object(RibbonGraph g) {
  int n = g.e();
  return MinorObject{SystemTag::Ribbon, std::move(g),
                     detail::iota_elements(n)};
}
inline MinorObject partitioned_ribbon_object(PartitionedRibbon g) {
  int n = g.g.e();
  return MinorObject{SystemTag::PartitionedRibbon, std::move(g),
                     detail::iota_elements(n)};
}
inline MinorObject cellular_object(CellularObject c) {
  int n = c.g.e();
  return MinorObject{SystemTag::PartitionedCellular, std::move(c),
                     detail::iota_elements(n)};
}

inline std::string serialize(const MinorObject& s) {
  std::string body = std::visit(
      [](const auto& payload) { return payload.serialize(); }, s.payload);
  return std::string(system_name(s.tag)) + "/" + body;
}

// --- system minor operations ----------------------------------------------

inline MinorObject sys_delete(const MinorObject& s, int pos) {
  MinorObject out = s;
  out.elements.erase(out.elements.begin() + pos);
  std::uint32_t bit = std::uint32_t{1} << pos;
  switch (s.tag) {
    case SystemTag::Matroid:
      out.payload = std::get<Matroid>(s.payload).minor(bit, 0);
      break;
    case SystemTag::Perspective:
      out.payload = std::get<MatroidPerspective>(s.payload).minor(bit, 0);
      break;
    case SystemTag::Graph:
      out.payload = graph_minor(std::get<Multigraph>(s.payload), bit, 0);
      break;
    case SystemTag::DeltaMatroid:
      out.payload = std::get<DeltaMatroid>(s.payload).del(pos);
      break;
    case SystemTag::PenroseDeltaMatroid:
      // The Penrose system uses D/e as its "deletion".
      out.payload = std::get<DeltaMatroid>(s.payload).con(pos);
      break;
    case SystemTag::PenroseHatDeltaMatroid:
      out.payload = std::get<DeltaMatroid>(s.payload).del(pos);
      break;
    case SystemTag::Ribbon:
      out.payload = std::get<RibbonGraph>(s.payload).del(pos);
      break;
    case SystemTag::PartitionedRibbon:
      out.payload = std::get<PartitionedRibbon>(s.payload).del(pos);
      break;
    case SystemTag::PartitionedCellular:
      out.payload = std::get<CellularObject>(s.payload).del(pos);
      break;
  }
  return out;
}

inline MinorObject sys_contract(const MinorObject& s, int pos) {
  MinorObject out = s;
  out.elements.erase(out.elements.begin() + pos);
  std::uint32_t bit = std::uint32_t{1} << pos;
  switch (s.tag) {
    case SystemTag::Matroid:
      out.payload = std::get<Matroid>(s.payload).minor(0, bit);
      break;
    case SystemTag::Perspective:
      out.payload = std::get<MatroidPerspective>(s.payload).minor(0, bit);
      break;
    case SystemTag::Graph:
      out.payload = graph_minor(std::get<Multigraph>(s.payload), 0, bit);
      break;
    case SystemTag::DeltaMatroid:
      out.payload = std::get<DeltaMatroid>(s.payload).con(pos);
      break;
    case SystemTag::PenroseDeltaMatroid:
    case SystemTag::PenroseHatDeltaMatroid:
      // (D+e)/e
      out.payload = std::get<DeltaMatroid>(s.payload).complement_contract(pos);
      break;
    case SystemTag::Ribbon:
      out.payload = std::get<RibbonGraph>(s.payload).contract(pos).g;
      break;
    case SystemTag::PartitionedRibbon:
      out.payload = std::get<PartitionedRibbon>(s.payload).con(pos);
      break;
    case SystemTag::PartitionedCellular:
      out.payload = std::get<CellularObject>(s.payload).con(pos);
      break;
  }
  return out;
}

// S \ A^c: the system "restriction" to the positions in mask.
inline MinorObject restriction(const MinorObject& s, std::uint32_t mask) {
  MinorObject cur = s;
  for (int pos = s.grade() - 1; pos >= 0; --pos)
    if (!(mask & (std::uint32_t{1} << pos))) cur = sys_delete(cur, pos);
  return cur;
}

// S // A: contract every position in mask.
inline MinorObject contract_set(const MinorObject& s, std::uint32_t mask) {
  MinorObject cur = s;
  for (int pos = s.grade() - 1; pos >= 0; --pos)
    if (mask & (std::uint32_t{1} << pos)) cur = sys_contract(cur, pos);
  return cur;
}

// One-element restriction S \ e^c.
inline MinorObject restrict_to_element(const MinorObject& s, int pos) {
  return restriction(s, std::uint32_t{1} << pos);
}

// S // e^c (contract everything except position pos).
inline MinorObject contract_complement(const MinorObject& s, int pos) {
  return contract_set(s, s.full_mask() & ~(std::uint32_t{1} << pos));
}

// Hopf multiplication: direct sum / disjoint union per system.
inline MinorObject multiply(const MinorObject& a, const MinorObject& b) {
  if (a.tag != b.tag) throw Error("SystemMismatch", "product across systems");
  MinorObject out = a;
  int next_id = 0;
  for (int id : a.elements) next_id = std::max(next_id, id + 1);
  for (std::size_t i = 0; i < b.elements.size(); ++i)
    out.elements.push_back(next_id + static_cast<int>(i));
  switch (a.tag) {
    case SystemTag::Matroid:
      out.payload = std::get<Matroid>(a.payload).direct_sum(
          std::get<Matroid>(b.payload));
      break;
    case SystemTag::Perspective:
      out.payload = std::get<MatroidPerspective>(a.payload)
                        .direct_sum(std::get<MatroidPerspective>(b.payload));
      break;
    case SystemTag::Graph:
      out.payload = graph_disjoint_union(std::get<Multigraph>(a.payload),
                                         std::get<Multigraph>(b.payload));
      break;
    case SystemTag::DeltaMatroid:
    case SystemTag::PenroseDeltaMatroid:
    case SystemTag::PenroseHatDeltaMatroid:
      out.payload = std::get<DeltaMatroid>(a.payload).direct_sum(
          std::get<DeltaMatroid>(b.payload));
      break;
    case SystemTag::Ribbon:
      out.payload = std::get<RibbonGraph>(a.payload).disjoint_union(
          std::get<RibbonGraph>(b.payload));
      break;
    case SystemTag::PartitionedRibbon: {
      const auto& x = std::get<PartitionedRibbon>(a.payload);
      const auto& y = std::get<PartitionedRibbon>(b.payload);
      PartitionedRibbon pr;
      pr.g = x.g.disjoint_union(y.g);
      pr.p = x.p;
      for (const auto& blk : y.p.blocks) {
        std::vector<int> nb;
        for (int v : blk) nb.push_back(v + x.g.v());
        pr.p.blocks.push_back(std::move(nb));
      }
      out.payload = std::move(pr);
      break;
    }
    case SystemTag::PartitionedCellular: {
      const auto& x = std::get<CellularObject>(a.payload);
      const auto& y = std::get<CellularObject>(b.payload);
      CellularObject c;
      c.g = x.g.disjoint_union(y.g);
      c.p = x.p;
      for (const auto& blk : y.p.blocks) {
        std::vector<int> nb;
        for (int v : blk) nb.push_back(v + x.g.v());
        c.p.blocks.push_back(std::move(nb));
      }
      c.region_of = x.region_of;
      for (int r : y.region_of) c.region_of.push_back(r + x.num_regions);
      c.num_regions = x.num_regions + y.num_regions;
      out.payload = std::move(c);
      break;
    }
  }
  return out;
}

// --- grade-1 classification --------------------------------------------

struct Grade1Class {
  SystemTag tag;
  int id;
  std::string label;
  bool operator==(const Grade1Class& o) const {
    return tag == o.tag && id == o.id;
  }
};

inline int class_count(SystemTag t) {
  switch (t) {
    case SystemTag::Matroid: return 2;
    case SystemTag::Perspective: return 3;
    case SystemTag::Graph: return 2;
    case SystemTag::DeltaMatroid: return 3;
    case SystemTag::PenroseDeltaMatroid: return 3;
    case SystemTag::PenroseHatDeltaMatroid: return 3;
    case SystemTag::Ribbon: return 3;
    case SystemTag::PartitionedRibbon: return 4;
    case SystemTag::PartitionedCellular: return 5;
  }
  return 0;
}

inline std::string class_label(SystemTag t, int id) {
  switch (t) {
    case SystemTag::Matroid:
      return id == 0 ? "coloop" : "loop";
    case SystemTag::Graph:
      return id == 0 ? "bridge" : "loop";
    case SystemTag::Perspective:
      return id == 0 ? "coloop-coloop" : (id == 1 ? "loop-loop" : "coloop-loop");
    case SystemTag::DeltaMatroid:
    case SystemTag::PenroseDeltaMatroid:
    case SystemTag::PenroseHatDeltaMatroid:
      return id == 0 ? "coloop" : (id == 1 ? "orientable-loop" : "non-orientable-loop");
    case SystemTag::Ribbon:
      return id == 0 ? "bridge" : (id == 1 ? "orientable-loop" : "non-orientable-loop");
    case SystemTag::PartitionedRibbon:
      switch (id) {
        case 0: return "bridge-two-blocks";
        case 1: return "orientable-loop";
        case 2: return "non-orientable-loop";
        default: return "bridge-one-block";
      }
    case SystemTag::PartitionedCellular:
      switch (id) {
        case 0: return "path-two-blocks";
        case 1: return "sphere-loop";
        case 2: return "path-one-block";
        case 3: return "projective-loop";
        default: return "torus-meridian-loop";
      }
  }
  return "?";
}

inline Grade1Class classify_grade1(const MinorObject& s) {
  if (s.grade() != 1)
    throw WrongGrade("classify_grade1 requires a one-element object");
  int id = -1;
  switch (s.tag) {
    case SystemTag::Matroid: {
      id = std::get<Matroid>(s.payload).rank(1) == 1 ? 0 : 1;
      break;
    }
    case SystemTag::Perspective: {
      const auto& p = std::get<MatroidPerspective>(s.payload);
      int rf = p.front().rank(1), rb = p.back().rank(1);
      id = (rf == 1 && rb == 1) ? 0 : (rf == 0 ? 1 : 2);
      break;
    }
    case SystemTag::Graph: {
      const auto& g = std::get<Multigraph>(s.payload);
      id = g.edges[0].first == g.edges[0].second ? 1 : 0;
      break;
    }
    case SystemTag::DeltaMatroid:
    case SystemTag::PenroseDeltaMatroid:
    case SystemTag::PenroseHatDeltaMatroid: {
      const auto& d = std::get<DeltaMatroid>(s.payload);
      if (d == dm_coloop()) id = 0;
      else if (d == dm_orientable()) id = 1;
      else id = 2;
      break;
    }
    case SystemTag::Ribbon: {
      const auto& g = std::get<RibbonGraph>(s.payload);
      if (!g.is_loop(0)) id = 0;
      else id = g.genus(1) == 0 ? 1 : 2;
      break;
    }
    case SystemTag::PartitionedRibbon: {
      const auto& pr = std::get<PartitionedRibbon>(s.payload);
      const auto& ed = pr.g.edges()[0];
      if (pr.g.is_loop(0)) {
        id = pr.g.genus(1) == 0 ? 1 : 2;
      } else {
        auto bo = pr.p.block_of(pr.g.v());
        id = bo[pr.g.vertex_of(ed.h1)] == bo[pr.g.vertex_of(ed.h2)] ? 3 : 0;
      }
      break;
    }
    case SystemTag::PartitionedCellular: {
      const auto& c = std::get<CellularObject>(s.payload);
      const auto& ed = c.g.edges()[0];
      if (!c.g.is_loop(0)) {
        auto bo = c.p.block_of(c.g.v());
        id = bo[c.g.vertex_of(ed.h1)] == bo[c.g.vertex_of(ed.h2)] ? 2 : 0;
      } else if (c.g.genus(1) == 1) {
        id = 3;
      } else {
        id = c.kappa(1) == 1 ? 1 : 4;
      }
      break;
    }
  }
  return Grade1Class{s.tag, id, class_label(s.tag, id)};
}

// A canonical representative of each grade-1 class.
inline MinorObject grade1_representative(SystemTag t, int id) {
  auto bridge = RibbonGraph({{0}, {1}}, {{0, 1, +1}});
  auto posloop = RibbonGraph({{0, 1}}, {{0, 1, +1}});
  auto negloop = RibbonGraph({{0, 1}}, {{0, 1, -1}});
  switch (t) {
    case SystemTag::Matroid:
      return matroid_object(id == 0 ? Matroid::uniform(1, 1)
                                    : Matroid::uniform(0, 1));
    case SystemTag::Perspective: {
      Matroid c = Matroid::uniform(1, 1), l = Matroid::uniform(0, 1);
      if (id == 0) return perspective_object(MatroidPerspective(c, c));
      if (id == 1) return perspective_object(MatroidPerspective(l, l));
      return perspective_object(MatroidPerspective(c, l));
    }
    case SystemTag::Graph:
      return graph_object(id == 0 ? Multigraph(2, {{0, 1}})
                                  : Multigraph(1, {{0, 0}}));
    case SystemTag::DeltaMatroid:
    case SystemTag::PenroseDeltaMatroid:
    case SystemTag::PenroseHatDeltaMatroid: {
      DeltaMatroid d = id == 0 ? dm_coloop()
                               : (id == 1 ? dm_orientable() : dm_nonorientable());
      MinorObject o = dm_object(d);
      o.tag = t;
      return o;
    }
    case SystemTag::Ribbon:
      return ribbon_object(id == 0 ? bridge : (id == 1 ? posloop : negloop));
    case SystemTag::PartitionedRibbon: {
      if (id == 0)
        return partitioned_ribbon_object(
            PartitionedRibbon(bridge, VertexPartition{{{0}, {1}}}));
      if (id == 1)
        return partitioned_ribbon_object(
            PartitionedRibbon(posloop, VertexPartition{{{0}}}));
      if (id == 2)
        return partitioned_ribbon_object(
            PartitionedRibbon(negloop, VertexPartition{{{0}}}));
      return partitioned_ribbon_object(
          PartitionedRibbon(bridge, VertexPartition{{{0, 1}}}));
    }
    case SystemTag::PartitionedCellular: {
      if (id == 0)
        return cellular_object(CellularObject(bridge, VertexPartition{{{0}, {1}}}));
      if (id == 1)
        return cellular_object(CellularObject(posloop, VertexPartition{{{0}}}));
      if (id == 2)
        return cellular_object(CellularObject(bridge, VertexPartition{{{0, 1}}}));
      if (id == 3)
        return cellular_object(CellularObject(negloop, VertexPartition{{{0}}}));
      // Torus meridian: a positive loop whose two boundary circles bound a
      // single region (an annulus).
      CellularObject c(posloop, VertexPartition{{{0}}});
      c.region_of = {0, 0};
      c.num_regions = 1;
      return cellular_object(c);
    }
  }
  throw Error("Internal", "bad grade-1 class");
}

// --- selectors and rank profiles ------------------------------------------

struct Selector {
  SystemTag tag;
  std::vector<Polynomial> coeff;  // indexed by class id; total over classes

  Selector(SystemTag t, std::vector<Polynomial> c) : tag(t), coeff(std::move(c)) {
    if (static_cast<int>(coeff.size()) != class_count(t))
      throw Error("SelectorArity", "coefficient map not total over classes");
  }
};

struct RankProfile {
  SystemTag tag;
  int num_ranks = 0;
  // Doubled per-class increments m_{ij}.
  std::vector<std::vector<int>> m_doubled;
  // Doubled r_j(S \ A^c), computed directly on subsets of a fixed object.
  std::vector<int> (*subset_ranks)(const MinorObject&, std::uint32_t) = nullptr;

  std::vector<int> object_ranks(const MinorObject& s) const {
    return subset_ranks(s, s.full_mask());
  }
};

namespace detail {

inline std::vector<int> ranks_matroid(const MinorObject& s, std::uint32_t a) {
  const auto& m = std::get<Matroid>(s.payload);
  int r = m.rank(a);
  return {2 * r, 2 * (Matroid::popcount(a) - r)};
}
inline std::vector<int> ranks_graph(const MinorObject& s, std::uint32_t a) {
  const auto& g = std::get<Multigraph>(s.payload);
  int r = graph_rank(g, a);
  return {2 * r, 2 * (Matroid::popcount(a) - r)};
}
inline std::vector<int> ranks_perspective(const MinorObject& s,
                                          std::uint32_t a) {
  const auto& p = std::get<MatroidPerspective>(s.payload);
  int r = p.front().rank(a), rp = p.back().rank(a);
  return {2 * rp, 2 * (Matroid::popcount(a) - r), 2 * (r - rp)};
}
inline std::vector<int> ranks_dm(const MinorObject& s, std::uint32_t a) {
  const auto& d = std::get<DeltaMatroid>(s.payload);
  int rho = d.rho_subset_doubled(a);
  return {rho, 2 * Matroid::popcount(a) - rho};
}
inline std::vector<int> ranks_penrose_dm(const MinorObject& s,
                                         std::uint32_t a) {
  const auto& d = std::get<DeltaMatroid>(s.payload);
  int xi = d.xi_subset_doubled(a);
  return {xi, 2 * Matroid::popcount(a) - xi};
}
inline std::vector<int> ranks_penrose_hat_dm(const MinorObject& s,
                                             std::uint32_t a) {
  // The mirror system is the *-conjugate: ranks read off the dual of the
  // plain restriction.
  const auto& d = std::get<DeltaMatroid>(s.payload);
  int xi = d.restrict_to(a).dual().xi_doubled();
  return {xi, 2 * Matroid::popcount(a) - xi};
}
inline std::vector<int> ranks_ribbon(const MinorObject& s, std::uint32_t a) {
  const auto& g = std::get<RibbonGraph>(s.payload);
  int rho = g.rho_doubled(a);
  return {rho, 2 * Matroid::popcount(a) - rho};
}
inline std::vector<int> ranks_partitioned_ribbon(const MinorObject& s,
                                                 std::uint32_t a) {
  const auto& pr = std::get<PartitionedRibbon>(s.payload);
  int rp = pr.quotient_rank_of(a);
  int rho = pr.g.rho_doubled(a);
  return {2 * rp, 2 * Matroid::popcount(a) - rho, rho - 2 * rp};
}
inline std::vector<int> ranks_cellular(const MinorObject& s, std::uint32_t a) {
  const auto& c = std::get<CellularObject>(s.payload);
  int rp = c.quotient_rank_of(a);
  int rho = c.g.rho_doubled(a);
  int kap = c.kappa(a);
  return {2 * rp, 2 * kap, rho - 2 * rp,
          2 * Matroid::popcount(a) - rho - 2 * kap};
}

}  // namespace detail

inline RankProfile canonical_profile(SystemTag t) {
  RankProfile p;
  p.tag = t;
  switch (t) {
    case SystemTag::Matroid:
      p.num_ranks = 2;
      p.m_doubled = {{2, 0}, {0, 2}};
      p.subset_ranks = detail::ranks_matroid;
      break;
    case SystemTag::Graph:
      p.num_ranks = 2;
      p.m_doubled = {{2, 0}, {0, 2}};
      p.subset_ranks = detail::ranks_graph;
      break;
    case SystemTag::Perspective:
      p.num_ranks = 3;
      p.m_doubled = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
      p.subset_ranks = detail::ranks_perspective;
      break;
    case SystemTag::DeltaMatroid:
      p.num_ranks = 2;
      p.m_doubled = {{2, 0}, {0, 2}, {1, 1}};
      p.subset_ranks = detail::ranks_dm;
      break;
    case SystemTag::PenroseDeltaMatroid:
      p.num_ranks = 2;
      p.m_doubled = {{1, 1}, {2, 0}, {0, 2}};
      p.subset_ranks = detail::ranks_penrose_dm;
      break;
    case SystemTag::PenroseHatDeltaMatroid:
      p.num_ranks = 2;
      p.m_doubled = {{2, 0}, {1, 1}, {0, 2}};
      p.subset_ranks = detail::ranks_penrose_hat_dm;
      break;
    case SystemTag::Ribbon:
      p.num_ranks = 2;
      p.m_doubled = {{2, 0}, {0, 2}, {1, 1}};
      p.subset_ranks = detail::ranks_ribbon;
      break;
    case SystemTag::PartitionedRibbon:
      p.num_ranks = 3;
      p.m_doubled = {{2, 0, 0}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
      p.subset_ranks = detail::ranks_partitioned_ribbon;
      break;
    case SystemTag::PartitionedCellular:
      p.num_ranks = 4;
      p.m_doubled = {
          {2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}, {0, 0, 0, 2}};
      p.subset_ranks = detail::ranks_cellular;
      break;
  }
  return p;
}

// The uniform selector of the profile: a_i = prod_j vars[j]^{m_ij}.
inline Selector profile_selector(SystemTag t,
                                 const std::vector<std::string>& vars) {
  RankProfile p = canonical_profile(t);
  if (static_cast<int>(vars.size()) != p.num_ranks)
    throw ProfileMismatch("wrong number of selector variables");
  std::vector<Polynomial> coeff;
  for (const auto& row : p.m_doubled) {
    Monomial m;
    for (int j = 0; j < p.num_ranks; ++j)
      m = m.times(Monomial::var_doubled(vars[j], row[j]));
    coeff.push_back(Polynomial::monomial(m, 1));
  }
  return Selector(t, std::move(coeff));
}

inline std::vector<std::string> default_x_vars(SystemTag t) {
  int k = canonical_profile(t).num_ranks;
  std::vector<std::string> v;
  for (int j = 1; j <= k; ++j) v.push_back("x" + std::to_string(j));
  return v;
}
inline std::vector<std::string> default_y_vars(SystemTag t) {
  int k = canonical_profile(t).num_ranks;
  std::vector<std::string> v;
  for (int j = 1; j <= k; ++j) v.push_back("y" + std::to_string(j));
  return v;
}

inline Selector canonical_selector_x(SystemTag t) {
  return profile_selector(t, default_x_vars(t));
}
inline Selector canonical_selector_y(SystemTag t) {
  return profile_selector(t, default_y_vars(t));
}

// --- coproduct --------------------------------------------------------

inline std::vector<std::pair<MinorObject, MinorObject>> coproduct_terms(
    const MinorObject& s, int cap = 16) {
  if (s.grade() > cap)
    throw CapExceeded("coproduct on " + std::to_string(s.grade()) +
                      " elements exceeds cap " + std::to_string(cap));
  std::vector<std::pair<MinorObject, MinorObject>> out;
  for (std::uint32_t a = 0;; ++a) {
    out.emplace_back(restriction(s, a), contract_set(s, a));
    if (a == s.full_mask()) break;
  }
  return out;
}

// --- the three alpha engines -------------------------------------------

// An exact polynomial with a positive integer denominator; the bruteforce
// exponential averages over decompositions, so transient fractions appear for
// non-uniform selectors.
struct ScaledPoly {
  Polynomial num;
  Int den = 1;

  static ScaledPoly of(Polynomial p) { return ScaledPoly{std::move(p), 1}; }

  void reduce() {
    using boost::multiprecision::gcd;
    if (num.is_zero()) {
      den = 1;
      return;
    }
    Int g = den;
    for (const auto& [m, c] : num.terms()) g = gcd(g, boost::multiprecision::abs(c));
    if (g > 1) {
      Polynomial scaled;
      for (const auto& [m, c] : num.terms())
        scaled += Polynomial::monomial(m, c / g);
      num = std::move(scaled);
      den /= g;
    }
  }

  ScaledPoly operator+(const ScaledPoly& o) const {
    ScaledPoly r{num * o.den + o.num * den, den * o.den};
    r.reduce();
    return r;
  }
  ScaledPoly operator*(const ScaledPoly& o) const {
    ScaledPoly r{num * o.num, den * o.den};
    r.reduce();
    return r;
  }
  ScaledPoly operator*(const Polynomial& p) const {
    ScaledPoly r{num * p, den};
    r.reduce();
    return r;
  }
  bool operator==(const ScaledPoly& o) const {
    return num * o.den == o.num * den;
  }
  bool is_integral() const { return den == 1; }
};

constexpr int kBruteforceCap = 6;

// exp_*(delta)(S): the average of the selector product over all full
// decompositions, computed by recursive expansion with memoization on the
// canonical serialization.
class ExpStar {
 public:
  ExpStar(Selector sel) : sel_(std::move(sel)) {}

  ScaledPoly operator()(const MinorObject& s) {
    if (s.tag != sel_.tag) throw Error("SystemMismatch", "selector system");
    if (s.grade() > kBruteforceCap)
      throw CapExceeded("bruteforce exponential beyond " +
                        std::to_string(kBruteforceCap) + " elements");
    return eval(s);
  }

 private:
  ScaledPoly eval(const MinorObject& s) {
    if (s.grade() == 0) return ScaledPoly::of(Polynomial::one());
    std::string key = serialize(s);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    ScaledPoly total = ScaledPoly::of(Polynomial::zero());
    int n = s.grade();
    for (int pos = 0; pos < n; ++pos) {
      const Polynomial& c =
          sel_.coeff[classify_grade1(restrict_to_element(s, pos)).id];
      if (c.is_zero()) continue;
      total = total + eval(sys_contract(s, pos)) * c;
    }
    total.den *= n;
    total.reduce();
    memo_.emplace(std::move(key), total);
    return total;
  }

  Selector sel_;
  std::map<std::string, ScaledPoly> memo_;
};

inline ScaledPoly exp_star_bruteforce(const MinorObject& s, const Selector& d) {
  ExpStar e(d);
  return e(s);
}

struct UniformityReport {
  bool uniform = true;
  // Two element-id orderings whose decomposition products differ.
  std::vector<int> witness_order_a, witness_order_b;
  Polynomial product_a, product_b;
};

// Checks the selector over every full decomposition of S (all |E|! element
// orders).
inline UniformityReport check_uniform(const MinorObject& s, const Selector& d) {
  if (s.grade() > kBruteforceCap)
    throw CapExceeded("uniformity check beyond 6 elements");
  std::vector<int> order(s.grade());
  for (int i = 0; i < s.grade(); ++i) order[i] = i;
  UniformityReport rep;
  bool have_first = false;
  std::vector<int> first_order;
  Polynomial first_product;
  std::sort(order.begin(), order.end());
  do {
    Polynomial prod = Polynomial::one();
    MinorObject cur = s;
    for (int idx : order) {
      int id = s.elements[idx];
      int pos = -1;
      for (int i = 0; i < cur.grade(); ++i)
        if (cur.elements[i] == id) pos = i;
      prod *= d.coeff[classify_grade1(restrict_to_element(cur, pos)).id];
      cur = sys_contract(cur, pos);
    }
    if (!have_first) {
      have_first = true;
      first_order = order;
      first_product = prod;
    } else if (!(prod == first_product)) {
      rep.uniform = false;
      for (int idx : first_order) rep.witness_order_a.push_back(s.elements[idx]);
      for (int idx : order) rep.witness_order_b.push_back(s.elements[idx]);
      rep.product_a = first_product;
      rep.product_b = prod;
      return rep;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return rep;
}

enum class AlphaEngine { Bruteforce, StateSum, DelCon };

inline ScaledPoly alpha_bruteforce_scaled(const MinorObject& s,
                                          const Selector& da,
                                          const Selector& db) {
  if (s.grade() > kBruteforceCap)
    throw CapExceeded("bruteforce alpha beyond 6 elements");
  ExpStar ea(da), eb(db);
  ScaledPoly total = ScaledPoly::of(Polynomial::zero());
  for (std::uint32_t a = 0;; ++a) {
    total = total + ea(restriction(s, a)) * eb(contract_set(s, a));
    if (a == s.full_mask()) break;
  }
  return total;
}

// Matches the selector against the profile's monomial form and returns the
// variable names x_j; throws ProfileMismatch otherwise.
inline std::vector<std::string> profile_variables(const Selector& sel,
                                                  const RankProfile& profile) {
  std::vector<std::string> vars(profile.num_ranks);
  for (int j = 0; j < profile.num_ranks; ++j) {
    int unit_class = -1;
    for (int i = 0; i < static_cast<int>(profile.m_doubled.size()); ++i) {
      bool unit = profile.m_doubled[i][j] == 2;
      for (int k = 0; k < profile.num_ranks && unit; ++k)
        if (k != j && profile.m_doubled[i][k] != 0) unit = false;
      if (unit) {
        unit_class = i;
        break;
      }
    }
    if (unit_class < 0) throw ProfileMismatch("profile lacks a unit row");
    auto mono = sel.coeff[unit_class].as_monomial();
    if (!mono || mono->second != 1 || mono->first.exponents().size() != 1 ||
        mono->first.exponents()[0].second != 2)
      throw ProfileMismatch("selector coefficient is not the profile variable");
    vars[j] = mono->first.exponents()[0].first;
  }
  for (int i = 0; i < static_cast<int>(profile.m_doubled.size()); ++i) {
    Monomial expect;
    for (int j = 0; j < profile.num_ranks; ++j)
      expect = expect.times(
          Monomial::var_doubled(vars[j], profile.m_doubled[i][j]));
    if (!(sel.coeff[i] == Polynomial::monomial(expect, 1)))
      throw ProfileMismatch("selector is not of the profile monomial form");
  }
  return vars;
}

inline Polynomial alpha_statesum(const MinorObject& s, const Selector& da,
                                 const Selector& db,
                                 const RankProfile& profile) {
  if (s.grade() > kMaxGroundSet) throw CapExceeded("state sum beyond 16 elements");
  std::vector<std::string> xv = profile_variables(da, profile);
  std::vector<std::string> yv = profile_variables(db, profile);
  std::vector<int> full = profile.subset_ranks(s, s.full_mask());
  Polynomial total;
  for (std::uint32_t a = 0;; ++a) {
    std::vector<int> ra = profile.subset_ranks(s, a);
    Monomial m;
    for (int j = 0; j < profile.num_ranks; ++j) {
      m = m.times(Monomial::var_doubled(xv[j], ra[j]));
      m = m.times(Monomial::var_doubled(yv[j], full[j] - ra[j]));
    }
    total += Polynomial::monomial(m, 1);
    if (a == s.full_mask()) break;
  }
  return total;
}

// Deletion-contraction recursion: picks the lowest-index element, terminates
// at grade 0 with value 1.
inline Polynomial alpha_delcon(const MinorObject& s, const Selector& da,
                               const Selector& db, int pick_pos = 0) {
  if (s.grade() == 0) return Polynomial::one();
  if (s.grade() > kMaxGroundSet)
    throw CapExceeded("deletion-contraction beyond 16 elements");
  int pos = pick_pos < s.grade() ? pick_pos : 0;
  const Polynomial& dbv =
      db.coeff[classify_grade1(contract_complement(s, pos)).id];
  const Polynomial& dav =
      da.coeff[classify_grade1(restrict_to_element(s, pos)).id];
  Polynomial out;
  if (!dbv.is_zero()) out += dbv * alpha_delcon(sys_delete(s, pos), da, db);
  if (!dav.is_zero()) out += dav * alpha_delcon(sys_contract(s, pos), da, db);
  return out;
}

inline Polynomial alpha_compute(const MinorObject& s, const Selector& da,
                                const Selector& db, AlphaEngine engine,
                                const RankProfile& profile) {
  switch (engine) {
    case AlphaEngine::Bruteforce: {
      ScaledPoly p = alpha_bruteforce_scaled(s, da, db);
      if (!p.is_integral())
        throw Error("NonIntegralAlpha",
                    "order-averaged alpha of a non-uniform selector is "
                    "fractional; use alpha_bruteforce_scaled");
      return p.num;
    }
    case AlphaEngine::StateSum:
      return alpha_statesum(s, da, db, profile);
    case AlphaEngine::DelCon:
      return alpha_delcon(s, da, db);
  }
  throw Error("Internal", "bad engine");
}

// --- Hopf morphism transfer ---------------------------------------------

enum class MorphismMap {
  CycleMatroid,           // graph -> matroid
  DeltaMatroidOfRibbon,   // ribbon -> delta-matroid
  PerspectiveInclusion,   // matroid -> perspective, M -> (M -> M)
  PerspectiveProjection1, // perspective -> matroid, front
  PerspectiveProjection2, // perspective -> matroid, back
  PartitionForget,        // partitioned ribbon -> ribbon
  PlaneRibbonToGraph,     // plane ribbon -> underlying graph
};

inline SystemTag morphism_source(MorphismMap m) {
  switch (m) {
    case MorphismMap::CycleMatroid: return SystemTag::Graph;
    case MorphismMap::DeltaMatroidOfRibbon: return SystemTag::Ribbon;
    case MorphismMap::PerspectiveInclusion: return SystemTag::Matroid;
    case MorphismMap::PerspectiveProjection1: return SystemTag::Perspective;
    case MorphismMap::PerspectiveProjection2: return SystemTag::Perspective;
    case MorphismMap::PartitionForget: return SystemTag::PartitionedRibbon;
    case MorphismMap::PlaneRibbonToGraph: return SystemTag::Ribbon;
  }
  throw Error("Internal", "bad map");
}

inline SystemTag morphism_target(MorphismMap m) {
  switch (m) {
    case MorphismMap::CycleMatroid: return SystemTag::Matroid;
    case MorphismMap::DeltaMatroidOfRibbon: return SystemTag::DeltaMatroid;
    case MorphismMap::PerspectiveInclusion: return SystemTag::Perspective;
    case MorphismMap::PerspectiveProjection1: return SystemTag::Matroid;
    case MorphismMap::PerspectiveProjection2: return SystemTag::Matroid;
    case MorphismMap::PartitionForget: return SystemTag::Ribbon;
    case MorphismMap::PlaneRibbonToGraph: return SystemTag::Graph;
  }
  throw Error("Internal", "bad map");
}

inline MinorObject apply_morphism(MorphismMap m, const MinorObject& s) {
  if (s.tag != morphism_source(m))
    throw SelectorIncompatible("object is not in the map's source system");
  switch (m) {
    case MorphismMap::CycleMatroid: {
      MinorObject out = matroid_object(cycle_matroid(std::get<Multigraph>(s.payload)));
      out.elements = s.elements;
      return out;
    }
    case MorphismMap::DeltaMatroidOfRibbon: {
      MinorObject out =
          dm_object(delta_matroid_of_ribbon(std::get<RibbonGraph>(s.payload)));
      out.elements = s.elements;
      return out;
    }
    case MorphismMap::PerspectiveInclusion: {
      const auto& mtr = std::get<Matroid>(s.payload);
      MinorObject out = perspective_object(MatroidPerspective(mtr, mtr));
      out.elements = s.elements;
      return out;
    }
    case MorphismMap::PerspectiveProjection1: {
      MinorObject out =
          matroid_object(std::get<MatroidPerspective>(s.payload).front());
      out.elements = s.elements;
      return out;
    }
    case MorphismMap::PerspectiveProjection2: {
      MinorObject out =
          matroid_object(std::get<MatroidPerspective>(s.payload).back());
      out.elements = s.elements;
      return out;
    }
    case MorphismMap::PartitionForget: {
      MinorObject out = ribbon_object(std::get<PartitionedRibbon>(s.payload).g);
      out.elements = s.elements;
      return out;
    }
    case MorphismMap::PlaneRibbonToGraph: {
      const auto& g = std::get<RibbonGraph>(s.payload);
      if (g.genus(g.full_set()) != 0)
        throw SelectorIncompatible("underlying-graph map needs a plane ribbon graph");
      MinorObject out = graph_object(g.underlying_graph());
      out.elements = s.elements;
      return out;
    }
  }
  throw Error("Internal", "bad map");
}

struct MorphismCheckResult {
  bool pass = true;
  Polynomial lhs, rhs;
  std::string detail;
};

// Verifies alpha_H(a,b)(S) = alpha_H'(a',b')(phi(S)) where the target
// selectors are induced by pushing the source coefficients through phi.
// Requires the source coefficients to be constant on the fibres of phi over
// the grade-1 classes that actually occur among S's minors.
inline MorphismCheckResult morphism_transfer_check(const MinorObject& s,
                                                   MorphismMap map,
                                                   const Selector& da,
                                                   const Selector& db) {
  if (s.grade() > kBruteforceCap)
    throw CapExceeded("morphism check uses the bruteforce engine; <= 6 elements");
  SystemTag src = morphism_source(map), dst = morphism_target(map);
  if (da.tag != src || db.tag != src)
    throw SelectorIncompatible("selectors are not on the source system");

  // Which source classes occur among the grade-1 minors of s?
  std::vector<bool> occurs(class_count(src), false);
  std::function<void(const MinorObject&)> scan = [&](const MinorObject& cur) {
    if (cur.grade() == 1) {
      occurs[classify_grade1(cur).id] = true;
      return;
    }
    if (cur.grade() == 0) return;
    for (int pos = 0; pos < cur.grade(); ++pos) {
      scan(sys_delete(cur, pos));
      scan(sys_contract(cur, pos));
    }
  };
  scan(s);

  std::vector<Polynomial> ca(class_count(dst)), cb(class_count(dst));
  std::vector<bool> fixed(class_count(dst), false);
  for (int i = 0; i < class_count(src); ++i) {
    if (!occurs[i]) continue;
    int img = classify_grade1(apply_morphism(map, grade1_representative(src, i))).id;
    if (fixed[img]) {
      if (!(ca[img] == da.coeff[i] && cb[img] == db.coeff[i]))
        throw SelectorIncompatible(
            "source selector is not constant on a fibre of the morphism over "
            "class " + class_label(dst, img));
    } else {
      fixed[img] = true;
      ca[img] = da.coeff[i];
      cb[img] = db.coeff[i];
    }
  }
  Selector da2(dst, ca), db2(dst, cb);

  MorphismCheckResult res;
  ScaledPoly lhs = alpha_bruteforce_scaled(s, da, db);
  ScaledPoly rhs = alpha_bruteforce_scaled(apply_morphism(map, s), da2, db2);
  res.pass = lhs == rhs;
  res.lhs = lhs.num;
  res.rhs = rhs.num;
  if (!res.pass) res.detail = "alpha transfer failed";
  return res;
}

}  // namespace tutte
