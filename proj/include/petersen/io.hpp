// Copyright 2026 The petersen-cover Authors
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

#include <sstream>
#include <string>

#include <json.hpp>

#include "petersen/bounds.hpp"
#include "petersen/cover.hpp"
#include "petersen/graph.hpp"
#include "petersen/solver.hpp"

namespace petersen {

/// DIMACS undirected-graph format: "p edge 2n 3n" then one "e a b" line per
/// edge in canonical order, vertices numbered u_i -> i, v_i -> n+i.
inline std::string to_dimacs(const graph& g) {
  std::ostringstream os;
  os << "c P(" << g.n() << "," << g.k() << ") generalized Petersen graph\n";
  os << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
  for (const edge& e : g.edges()) {
    os << "e " << g.canonical_id(e.a) << " " << g.canonical_id(e.b) << "\n";
  }
  return os.str();
}

inline nlohmann::json graph_to_json(const graph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  j["k"] = g.k();
  auto vertices = nlohmann::json::array();
  for (int id = 1; id <= g.num_vertices(); ++id) {
    vertex_id v = g.vertex_from_id(id);
    vertices.push_back({{"id", id},
                        {"label", to_string(v)},
                        {"side", v.side == vertex_side::outer ? "outer" : "inner"},
                        {"index", v.index}});
  }
  j["vertices"] = std::move(vertices);
  auto edges = nlohmann::json::array();
  for (const edge& e : g.edges()) {
    edges.push_back({{"source", g.canonical_id(e.a)},
                     {"target", g.canonical_id(e.b)},
                     {"kind", to_string(e.kind)}});
  }
  j["edges"] = std::move(edges);
  return j;
}

/// Cover certificate: {n, k, selected_u, selected_v, size}. Round-trips
/// losslessly; indices are 1-based and ascending.
inline nlohmann::json cover_to_certificate(const cover& c) {
  return {{"n", c.params().n},
          {"k", c.params().k},
          {"selected_u", c.selected_outer_indices()},
          {"selected_v", c.selected_inner_indices()},
          {"size", c.size()}};
}

inline cover certificate_to_cover(const nlohmann::json& j) {
  if (!j.contains("n") || !j.contains("k") || !j.contains("selected_u") ||
      !j.contains("selected_v") || !j.contains("size")) {
    throw domain_error("certificate: missing field");
  }
  graph_params p{j.at("n").get<int>(), j.at("k").get<int>()};
  cover c(p, j.at("selected_u").get<std::vector<int>>(),
          j.at("selected_v").get<std::vector<int>>());
  if (c.size() != j.at("size").get<int>()) {
    throw domain_error("certificate: size field disagrees with selection");
  }
  return c;
}

inline nlohmann::json beta_result_to_json(const beta_result& r) {
  return {{"n", r.params.n},
          {"k", r.params.k},
          {"beta", r.beta},
          {"method", to_string(r.method)},
          {"nodes", r.nodes},
          {"elapsed_us", r.elapsed.count()},
          {"witness", cover_to_certificate(r.witness)}};
}

inline nlohmann::json bound_report_to_json(const bound_report& r) {
  nlohmann::json j;
  j["n"] = r.params.n;
  j["k"] = r.params.k;
  j["lower"] = r.lower;
  auto uppers = nlohmann::json::array();
  for (const auto& u : r.uppers) {
    uppers.push_back({{"method", u.label()}, {"value", u.value}});
  }
  j["uppers"] = std::move(uppers);
  j["min_upper"] = r.min_upper();
  if (r.exact) {
    j["exact"] = {{"value", r.exact->value},
                  {"formula", to_string(r.exact->formula)}};
  } else {
    j["exact"] = nullptr;
  }
  j["conjecture"] = r.conjecture;
  return j;
}

inline const char* bound_report_csv_header() {
  return "n,k,lower,exact,min_upper,conjecture";
}

inline std::string bound_report_to_csv_row(const bound_report& r) {
  std::ostringstream os;
  os << r.params.n << "," << r.params.k << "," << r.lower << ",";
  if (r.exact) os << r.exact->value;
  os << "," << r.min_upper() << "," << r.conjecture;
  return os.str();
}

}  // namespace petersen
