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
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tutte/lasvergnas.hpp"
#include "tutte/minor_system.hpp"

namespace tutte {

// The verification corpus is enumerated, not sampled, so failures are
// reproducible: uniform/graphic/ribbon matroids, every SEA-valid delta-matroid
// on at most 3 elements, every signed rotation system on at most 2 vertices
// and 3 edges, and the named examples.  A nonzero seed appends deterministic
// pseudo-random extension objects.

struct CorpusObject {
  std::string id;
  MinorObject obj;
};

// Named ribbon graphs used throughout the examples.
inline RibbonGraph ribbon_theta() {
  return RibbonGraph({{0, 2, 4}, {1, 5, 3}}, {{0, 1, +1}, {2, 3, +1}, {4, 5, +1}});
}
inline RibbonGraph ribbon_plane_triangle() {
  // 3-cycle cellularly embedded in the sphere.
  return RibbonGraph({{0, 5}, {1, 2}, {3, 4}},
                     {{0, 1, +1}, {2, 3, +1}, {4, 5, +1}});
}
inline RibbonGraph ribbon_torus_interleaved() {
  return RibbonGraph({{0, 2, 1, 3}}, {{0, 1, +1}, {2, 3, +1}});
}
inline RibbonGraph ribbon_negative_loop() {
  return RibbonGraph({{0, 1}}, {{0, 1, -1}});
}

inline Multigraph graph_triangle() { return Multigraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline Multigraph graph_theta() { return Multigraph(2, {{0, 1}, {0, 1}, {0, 1}}); }

namespace corpus_detail {

inline void push_unique(std::vector<CorpusObject>& out, std::set<std::string>& seen,
                        const std::string& id, MinorObject obj) {
  std::string key = serialize(obj);
  if (seen.insert(key).second) out.push_back(CorpusObject{id, std::move(obj)});
}

inline const std::vector<Multigraph>& enumerate_graphs(int max_edges) {
  static std::map<int, std::vector<Multigraph>> cache;
  auto hit = cache.find(max_edges);
  if (hit != cache.end()) return hit->second;
  std::vector<Multigraph> out;
  for (int v = 1; v <= 3; ++v) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < v; ++i)
      for (int j = i; j < v; ++j) pairs.emplace_back(i, j);
    int np = static_cast<int>(pairs.size());
    int cap = std::min(max_edges, 3);
    // multisets of pairs, sizes 0..cap
    std::vector<int> pick;
    std::function<void(int, int)> rec = [&](int start, int remaining) {
      Multigraph g;
      g.v = v;
      for (int p : pick) g.edges.push_back(pairs[p]);
      out.push_back(g);
      if (remaining == 0) return;
      for (int p = start; p < np; ++p) {
        pick.push_back(p);
        rec(p, remaining - 1);
        pick.pop_back();
      }
    };
    rec(0, cap);
  }
  return cache.emplace(max_edges, std::move(out)).first->second;
}

inline const std::vector<RibbonGraph>& enumerate_ribbons(int max_edges) {
  static std::map<int, std::vector<RibbonGraph>> cache;
  int cap = std::min(max_edges, 3);
  auto hit = cache.find(cap);
  if (hit != cache.end()) return hit->second;
  std::vector<RibbonGraph> out;
  std::set<std::string> seen;
  for (int e = 0; e <= cap; ++e) {
    int h = 2 * e;
    std::vector<int> perm(h);
    for (int i = 0; i < h; ++i) perm[i] = i;
    do {
      for (int split = 0; split <= h; ++split) {
        for (int signs = 0; signs < (1 << e); ++signs) {
          std::vector<std::vector<int>> rots;
          std::vector<int> v0(perm.begin(), perm.begin() + split);
          std::vector<int> v1(perm.begin() + split, perm.end());
          if (v0.empty() && e > 0) continue;
          rots.push_back(v0);
          if (!v1.empty()) rots.push_back(v1);
          if (e == 0 && rots.empty()) rots.push_back({});
          std::vector<RibbonEdge> edges;
          for (int i = 0; i < e; ++i)
            edges.push_back(RibbonEdge{2 * i, 2 * i + 1, (signs >> i) & 1 ? -1 : 1});
          RibbonGraph g(rots, edges);
          if (seen.insert(g.serialize()).second) out.push_back(std::move(g));
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return cache.emplace(cap, std::move(out)).first->second;
}

inline const std::vector<DeltaMatroid>& enumerate_delta_matroids(int max_n) {
  static std::map<int, std::vector<DeltaMatroid>> cache;
  int cap = std::min(max_n, 3);
  auto hit = cache.find(cap);
  if (hit != cache.end()) return hit->second;
  std::vector<DeltaMatroid> out;
  for (int n = 0; n <= cap; ++n) {
    int families = 1 << (1 << n);
    for (int fam = 1; fam < families; ++fam) {
      std::vector<std::uint32_t> feas;
      for (int m = 0; m < (1 << n); ++m)
        if (fam & (1 << m)) feas.push_back(static_cast<std::uint32_t>(m));
      try {
        out.emplace_back(n, feas);
      } catch (const NotADeltaMatroid&) {
      }
    }
  }
  return cache.emplace(cap, std::move(out)).first->second;
}

inline std::vector<VertexPartition> partitions_of(int v) {
  std::vector<VertexPartition> out;
  if (v == 0) {
    out.push_back(VertexPartition{});
    return out;
  }
  // enumerate set partitions by restricted growth strings
  std::vector<int> rgs(v, 0);
  while (true) {
    int blocks = 1 + *std::max_element(rgs.begin(), rgs.end());
    VertexPartition p;
    p.blocks.assign(blocks, {});
    for (int i = 0; i < v; ++i) p.blocks[rgs[i]].push_back(i);
    out.push_back(p);
    int i = v - 1;
    while (i > 0) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, rgs[j]);
      if (rgs[i] <= mx) break;
      --i;
    }
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < v; ++j) rgs[j] = 0;
  }
  return out;
}

}  // namespace corpus_detail

struct CorpusOptions {
  int max_elements = 4;
  unsigned seed = 0;  // nonzero appends randomized extension objects
};

inline std::vector<CorpusObject> corpus_graphs(const CorpusOptions& opt) {
  std::vector<CorpusObject> out;
  std::set<std::string> seen;
  int idx = 0;
  for (const auto& g : corpus_detail::enumerate_graphs(opt.max_elements)) {
    if (g.e() > opt.max_elements) continue;
    corpus_detail::push_unique(out, seen, "graph-" + std::to_string(idx++),
                               graph_object(g));
  }
  if (opt.max_elements >= 3) {
    corpus_detail::push_unique(out, seen, "graph-triangle",
                               graph_object(graph_triangle()));
    corpus_detail::push_unique(out, seen, "graph-theta",
                               graph_object(graph_theta()));
  }
  if (opt.seed) {
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<int> nv(1, 4), ne(0, std::min(opt.max_elements, 4));
    for (int k = 0; k < 5; ++k) {
      Multigraph g;
      g.v = nv(rng);
      int e = ne(rng);
      std::uniform_int_distribution<int> pick(0, g.v - 1);
      for (int i = 0; i < e; ++i) g.edges.emplace_back(pick(rng), pick(rng));
      corpus_detail::push_unique(out, seen, "graph-rnd-" + std::to_string(k),
                                 graph_object(g));
    }
  }
  return out;
}

inline std::vector<CorpusObject> corpus_ribbons(const CorpusOptions& opt) {
  std::vector<CorpusObject> out;
  std::set<std::string> seen;
  int idx = 0;
  for (const auto& g : corpus_detail::enumerate_ribbons(opt.max_elements)) {
    if (g.e() > opt.max_elements) continue;
    corpus_detail::push_unique(out, seen, "ribbon-" + std::to_string(idx++),
                               ribbon_object(g));
  }
  if (opt.max_elements >= 3) {
    corpus_detail::push_unique(out, seen, "ribbon-theta",
                               ribbon_object(ribbon_theta()));
    corpus_detail::push_unique(out, seen, "ribbon-triangle",
                               ribbon_object(ribbon_plane_triangle()));
  }
  if (opt.max_elements >= 2)
    corpus_detail::push_unique(out, seen, "ribbon-torus",
                               ribbon_object(ribbon_torus_interleaved()));
  if (opt.seed) {
    std::mt19937 rng(opt.seed);
    for (int k = 0; k < 5; ++k) {
      int e = std::uniform_int_distribution<int>(1, std::min(opt.max_elements, 4))(rng);
      std::vector<int> halves(2 * e);
      for (int i = 0; i < 2 * e; ++i) halves[i] = i;
      std::shuffle(halves.begin(), halves.end(), rng);
      int split = std::uniform_int_distribution<int>(0, 2 * e)(rng);
      std::vector<std::vector<int>> rots;
      std::vector<int> v0(halves.begin(), halves.begin() + split);
      std::vector<int> v1(halves.begin() + split, halves.end());
      if (v0.empty()) std::swap(v0, v1);
      if (v0.empty()) continue;
      rots.push_back(v0);
      if (!v1.empty()) rots.push_back(v1);
      std::vector<RibbonEdge> edges;
      for (int i = 0; i < e; ++i)
        edges.push_back(RibbonEdge{2 * i, 2 * i + 1,
                                   std::uniform_int_distribution<int>(0, 1)(rng) ? -1 : 1});
      corpus_detail::push_unique(out, seen, "ribbon-rnd-" + std::to_string(k),
                                 ribbon_object(RibbonGraph(rots, edges)));
    }
  }
  return out;
}

inline std::vector<CorpusObject> corpus_matroids(const CorpusOptions& opt) {
  std::vector<CorpusObject> out;
  std::set<std::string> seen;
  for (int n = 0; n <= opt.max_elements; ++n)
    for (int k = 0; k <= n; ++k)
      corpus_detail::push_unique(out, seen,
                                 "U" + std::to_string(k) + "," + std::to_string(n),
                                 matroid_object(Matroid::uniform(k, n)));
  int idx = 0;
  for (const auto& co : corpus_graphs({std::min(opt.max_elements, 3), 0})) {
    const auto& g = std::get<Multigraph>(co.obj.payload);
    Matroid c = cycle_matroid(g);
    corpus_detail::push_unique(out, seen, "cycle-" + std::to_string(idx),
                               matroid_object(c));
    corpus_detail::push_unique(out, seen, "bond-" + std::to_string(idx),
                               matroid_object(c.dual()));
    ++idx;
  }
  idx = 0;
  for (const auto& co : corpus_ribbons({std::min(opt.max_elements, 3), 0})) {
    const auto& g = std::get<RibbonGraph>(co.obj.payload);
    DeltaMatroid d = delta_matroid_of_ribbon(g);
    corpus_detail::push_unique(out, seen, "rg-lower-" + std::to_string(idx),
                               matroid_object(d.lower_matroid()));
    corpus_detail::push_unique(out, seen, "rg-upper-" + std::to_string(idx),
                               matroid_object(d.upper_matroid()));
    ++idx;
  }
  return out;
}

inline std::vector<CorpusObject> corpus_perspectives(const CorpusOptions& opt) {
  std::vector<CorpusObject> out;
  std::set<std::string> seen;
  for (int n = 0; n <= opt.max_elements; ++n)
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= k; ++j)
        corpus_detail::push_unique(
            out, seen,
            "U" + std::to_string(k) + "->" + std::to_string(j) + "," +
                std::to_string(n),
            perspective_object(MatroidPerspective(Matroid::uniform(k, n),
                                                  Matroid::uniform(j, n))));
  int idx = 0;
  for (const auto& co : corpus_matroids({std::min(opt.max_elements, 3), 0})) {
    const auto& m = std::get<Matroid>(co.obj.payload);
    corpus_detail::push_unique(out, seen, "id-" + co.id,
                               perspective_object(MatroidPerspective(m, m)));
    ++idx;
  }
  idx = 0;
  for (const auto& co : corpus_ribbons({std::min(opt.max_elements, 3), 0})) {
    const auto& g = std::get<RibbonGraph>(co.obj.payload);
    corpus_detail::push_unique(out, seen, "embed-" + std::to_string(idx++),
                               perspective_object(embedded_perspective(g).perspective));
  }
  return out;
}

inline std::vector<CorpusObject> corpus_delta_matroids(const CorpusOptions& opt) {
  std::vector<CorpusObject> out;
  std::set<std::string> seen;
  int idx = 0;
  for (const auto& d : corpus_detail::enumerate_delta_matroids(opt.max_elements))
    corpus_detail::push_unique(out, seen, "dm-" + std::to_string(idx++),
                               dm_object(d));
  if (opt.seed) {
    std::mt19937 rng(opt.seed);
    int made = 0;
    for (int tries = 0; tries < 300 && made < 5; ++tries) {
      int n = 4;
      std::vector<std::uint32_t> feas;
      for (std::uint32_t m = 0; m < 16u; ++m)
        if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) feas.push_back(m);
      if (feas.empty()) continue;
      try {
        DeltaMatroid d(n, feas);
        corpus_detail::push_unique(out, seen, "dm-rnd-" + std::to_string(made++),
                                   dm_object(d));
      } catch (const NotADeltaMatroid&) {
      }
    }
  }
  return out;
}

// The vf-safe subset of the delta-matroid corpus, in the Penrose system.
inline std::vector<CorpusObject> corpus_penrose_dms(const CorpusOptions& opt) {
  std::vector<CorpusObject> out;
  for (const auto& co : corpus_delta_matroids(opt)) {
    const auto& d = std::get<DeltaMatroid>(co.obj.payload);
    if (d.n() <= 4 && !dm_is_vf_safe(d)) continue;
    out.push_back(CorpusObject{"pe-" + co.id, penrose_dm_object(d)});
  }
  return out;
}

inline std::vector<CorpusObject> corpus_partitioned_ribbons(
    const CorpusOptions& opt) {
  std::vector<CorpusObject> out;
  std::set<std::string> seen;
  for (const auto& co : corpus_ribbons(opt)) {
    const auto& g = std::get<RibbonGraph>(co.obj.payload);
    int pi = 0;
    for (const auto& p : corpus_detail::partitions_of(g.v()))
      corpus_detail::push_unique(
          out, seen, co.id + "-P" + std::to_string(pi++),
          partitioned_ribbon_object(PartitionedRibbon(g, p)));
  }
  return out;
}

inline std::vector<CorpusObject> corpus_cellulars(const CorpusOptions& opt) {
  std::vector<CorpusObject> out;
  std::set<std::string> seen;
  for (const auto& co : corpus_ribbons(opt)) {
    const auto& g = std::get<RibbonGraph>(co.obj.payload);
    int pi = 0;
    for (const auto& p : corpus_detail::partitions_of(g.v()))
      corpus_detail::push_unique(out, seen, co.id + "-C" + std::to_string(pi++),
                                 cellular_object(CellularObject(g, p)));
  }
  return out;
}

inline std::vector<CorpusObject> corpus_for_uncached(SystemTag tag,
                                                     const CorpusOptions& opt);

inline const std::vector<CorpusObject>& corpus_for(SystemTag tag,
                                                   const CorpusOptions& opt) {
  static std::map<std::string, std::vector<CorpusObject>> cache;
  std::string key = std::string(system_name(tag)) + "/" +
                    std::to_string(opt.max_elements) + "/" +
                    std::to_string(opt.seed);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;
  std::vector<CorpusObject> out = corpus_for_uncached(tag, opt);
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

inline std::vector<CorpusObject> corpus_for_uncached(SystemTag tag,
                                                     const CorpusOptions& opt) {
  switch (tag) {
    case SystemTag::Matroid: return corpus_matroids(opt);
    case SystemTag::Perspective: return corpus_perspectives(opt);
    case SystemTag::Graph: return corpus_graphs(opt);
    case SystemTag::DeltaMatroid: return corpus_delta_matroids(opt);
    case SystemTag::PenroseDeltaMatroid: return corpus_penrose_dms(opt);
    case SystemTag::Ribbon: return corpus_ribbons(opt);
    case SystemTag::PartitionedRibbon: return corpus_partitioned_ribbons(opt);
    case SystemTag::PartitionedCellular: return corpus_cellulars(opt);
    case SystemTag::PenroseHatDeltaMatroid: {
      std::vector<CorpusObject> out;
      for (auto& co : corpus_penrose_dms(opt)) {
        co.obj.tag = SystemTag::PenroseHatDeltaMatroid;
        co.id = "hat-" + co.id;
        out.push_back(co);
      }
      return out;
    }
  }
  return {};
}

}  // namespace tutte
