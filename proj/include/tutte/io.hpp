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

#include <fstream>
#include <json.hpp>
#include <optional>
#include <string>

#include "tutte/embedded.hpp"
#include "tutte/lasvergnas.hpp"
#include "tutte/minor_system.hpp"

namespace tutte {

using json = nlohmann::json;

// A parsed input object: the payload plus an optional vertex partition for
// the embedded families.
struct ParsedObject {
  MinorObject obj;
  std::optional<VertexPartition> partition;
};

namespace io_detail {

inline const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw ParseError("missing field '" + std::string(name) + "' in " +
                     j.dump().substr(0, 80));
  return *it;
}

inline int int_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_number_integer())
    throw ParseError("field '" + std::string(name) + "' must be an integer");
  return f.get<int>();
}

inline Matroid parse_matroid(const json& j) {
  std::string type = field(j, "type").get<std::string>();
  if (type == "uniform")
    return Matroid::uniform(int_field(j, "k"), int_field(j, "n"));
  if (type != "matroid") throw ParseError("expected a matroid record");
  int n = int_field(j, "n");
  const json& ranks = field(j, "ranks");
  if (!ranks.is_array() || ranks.size() != (std::size_t{1} << n))
    throw ParseError("field 'ranks' must list 2^n ranks in subset-bitmask order");
  std::vector<std::uint8_t> table;
  for (const auto& r : ranks) table.push_back(static_cast<std::uint8_t>(r.get<int>()));
  return Matroid(n, std::move(table));
}

inline VertexPartition parse_partition(const json& j) {
  VertexPartition p;
  const json& blocks = field(j, "blocks");
  if (!blocks.is_array()) throw ParseError("'blocks' must be a list of lists");
  for (const auto& b : blocks) {
    std::vector<int> blk;
    for (const auto& v : b) blk.push_back(v.get<int>());
    p.blocks.push_back(std::move(blk));
  }
  return p;
}

}  // namespace io_detail

inline ParsedObject parse_object(const json& j) {
  using namespace io_detail;
  if (!j.is_object()) throw ParseError("object record must be a JSON object");
  std::string type = field(j, "type").get<std::string>();
  ParsedObject out;
  if (type == "matroid" || type == "uniform") {
    out.obj = matroid_object(parse_matroid(j));
  } else if (type == "perspective") {
    out.obj = perspective_object(MatroidPerspective(
        parse_matroid(field(j, "front")), parse_matroid(field(j, "back"))));
  } else if (type == "graph") {
    int v = int_field(j, "v");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : field(j, "edges")) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError("graph edges must be [a, b] pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    out.obj = graph_object(Multigraph(v, std::move(edges)));
    if (j.contains("partition")) out.partition = parse_partition(j["partition"]);
  } else if (type == "delta-matroid") {
    int n = int_field(j, "n");
    std::vector<std::uint32_t> feas;
    for (const auto& f : field(j, "feasible")) {
      std::uint32_t mask = 0;
      for (const auto& e : f) {
        int x = e.get<int>();
        if (x < 0 || x >= n) throw ParseError("feasible-set element out of range");
        mask |= std::uint32_t{1} << x;
      }
      feas.push_back(mask);
    }
    out.obj = dm_object(DeltaMatroid(n, std::move(feas)));
  } else if (type == "ribbon") {
    std::vector<std::vector<int>> rots;
    for (const auto& vtx : field(j, "vertices")) {
      std::vector<int> rot;
      for (const auto& h : vtx) rot.push_back(h.get<int>());
      rots.push_back(std::move(rot));
    }
    std::vector<RibbonEdge> edges;
    for (const auto& e : field(j, "edges")) {
      const json& pair = field(e, "pair");
      if (!pair.is_array() || pair.size() != 2)
        throw ParseError("ribbon edge 'pair' must be [h1, h2]");
      edges.push_back(RibbonEdge{pair[0].get<int>(), pair[1].get<int>(),
                                 int_field(e, "sign")});
    }
    out.obj = ribbon_object(RibbonGraph(std::move(rots), std::move(edges)));
    if (j.contains("partition")) out.partition = parse_partition(j["partition"]);
  } else {
    throw ParseError("unknown object type '" + type + "'");
  }
  return out;
}

inline ParsedObject load_object(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("in '") + path + "': " + e.what());
  }
  return parse_object(j);
}

// Structured polynomial form: a list of {coefficient, exponents} records with
// doubled exponents, so x^{1/2} appears as 1.
inline json polynomial_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::object();
    for (const auto& [name, d] : m.exponents()) exps[name] = d;
    terms.push_back({{"coefficient", c.str()}, {"exponents", exps}});
  }
  return terms;
}

inline Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Int(text));
    return Rational(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("cannot parse rational '" + text + "'");
  }
}

// --- the compute verb -------------------------------------------------

struct ComputeResult {
  std::string text;                    // what the CLI prints
  std::optional<Polynomial> polynomial;  // absent for rational evaluations
};

inline ComputeResult compute_polynomial(const ParsedObject& po,
                                        const std::string& which,
                                        const std::optional<Rational>& lambda) {
  const MinorObject& s = po.obj;
  auto need = [&](std::initializer_list<SystemTag> tags) {
    for (SystemTag t : tags)
      if (s.tag == t) return;
    throw ParseError("polynomial '" + which + "' is not defined for a " +
                     system_name(s.tag) + " input");
  };
  auto partition_or_singletons = [&](const RibbonGraph& g) {
    if (po.partition) return *po.partition;
    return VertexPartition::singletons(g.v());
  };
  ComputeResult res;
  Polynomial p;
  if (which == "tutte") {
    need({SystemTag::Matroid, SystemTag::Graph});
    p = s.tag == SystemTag::Matroid
            ? tutte_polynomial(std::get<Matroid>(s.payload))
            : tutte_polynomial(std::get<Multigraph>(s.payload));
  } else if (which == "lv") {
    need({SystemTag::Perspective, SystemTag::Ribbon});
    p = s.tag == SystemTag::Perspective
            ? lv_tutte(std::get<MatroidPerspective>(s.payload))
            : lv_of_ribbon(std::get<RibbonGraph>(s.payload));
  } else if (which == "br2") {
    need({SystemTag::DeltaMatroid, SystemTag::Ribbon});
    p = s.tag == SystemTag::DeltaMatroid
            ? dm_br2(std::get<DeltaMatroid>(s.payload))
            : ribbon_br2(std::get<RibbonGraph>(s.payload));
  } else if (which == "br3") {
    need({SystemTag::DeltaMatroid, SystemTag::Ribbon});
    p = s.tag == SystemTag::DeltaMatroid
            ? dm_br3(std::get<DeltaMatroid>(s.payload))
            : ribbon_br3(std::get<RibbonGraph>(s.payload));
  } else if (which == "br-partitioned") {
    need({SystemTag::Ribbon});
    const auto& g = std::get<RibbonGraph>(s.payload);
    p = partitioned_br(PartitionedRibbon(g, partition_or_singletons(g)));
  } else if (which == "krushkal") {
    need({SystemTag::Ribbon});
    const auto& g = std::get<RibbonGraph>(s.payload);
    p = krushkal_cellular(g, partition_or_singletons(g));
  } else if (which == "penrose2") {
    need({SystemTag::DeltaMatroid, SystemTag::Ribbon});
    p = s.tag == SystemTag::DeltaMatroid
            ? dm_penrose2(std::get<DeltaMatroid>(s.payload))
            : ribbon_penrose2(std::get<RibbonGraph>(s.payload));
  } else if (which == "penrose") {
    need({SystemTag::DeltaMatroid, SystemTag::Ribbon});
    if (!lambda) throw ParseError("penrose needs --lambda");
    Rational value = s.tag == SystemTag::DeltaMatroid
                         ? dm_penrose_eval(std::get<DeltaMatroid>(s.payload), *lambda)
                         : ribbon_penrose_eval(std::get<RibbonGraph>(s.payload), *lambda);
    res.text = to_string(value);
    return res;
  } else {
    throw ParseError("unknown polynomial '" + which + "'");
  }
  res.text = to_string(p);
  res.polynomial = std::move(p);
  return res;
}

}  // namespace tutte
