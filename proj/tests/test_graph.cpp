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

#include "petersen/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "petersen/io.hpp"

using namespace petersen;

TEST_CASE("build_graph basic counts") {
  graph g = build_graph(5, 2);
  CHECK(g.num_vertices() == 10);
  CHECK(g.num_edges() == 15);
  CHECK(g.edges().size() == 15);

  graph f = build_graph(16, 5);
  CHECK(f.num_vertices() == 32);
  CHECK(f.num_edges() == 48);
}

TEST_CASE("build_graph rejects inadmissible parameters") {
  CHECK_THROWS_AS(build_graph(4, 2), domain_error);   // n = 2k
  CHECK_THROWS_AS(build_graph(3, 2), domain_error);   // n < 2k
  CHECK_THROWS_AS(build_graph(5, 0), domain_error);
  CHECK_THROWS_AS(build_graph(5, -1), domain_error);
  CHECK_NOTHROW(build_graph(3, 1));
}

TEST_CASE("every vertex has degree 3 and edge kinds split n/n/n") {
  for (graph_params p :
       {graph_params{5, 2}, {9, 3}, {16, 5}, {12, 4}, {7, 1}}) {
    graph g(p);
    std::map<edge_kind, int> kind_count;
    for (const edge& e : g.edges()) ++kind_count[e.kind];
    CHECK(kind_count[edge_kind::u_edge] == p.n);
    CHECK(kind_count[edge_kind::spoke] == p.n);
    CHECK(kind_count[edge_kind::v_edge] == p.n);

    std::map<int, int> degree;
    for (const edge& e : g.edges()) {
      ++degree[g.canonical_id(e.a)];
      ++degree[g.canonical_id(e.b)];
    }
    for (int id = 1; id <= g.num_vertices(); ++id) {
      CHECK(degree[id] == 3);
      auto nb = g.neighbors(g.vertex_from_id(id));
      CHECK(nb.size() == 3);
      CHECK(std::is_sorted(nb.begin(), nb.end(),
                           [&](vertex_id a, vertex_id b) {
                             return g.canonical_id(a) < g.canonical_id(b);
                           }));
    }
  }
}

TEST_CASE("canonical edge order is deterministic") {
  graph g = build_graph(5, 2);
  CHECK(g.edges()[0] == edge{outer_vertex(1), outer_vertex(2), edge_kind::u_edge});
  CHECK(g.edges()[4] == edge{outer_vertex(1), outer_vertex(5), edge_kind::u_edge});
  CHECK(g.edges()[5] == edge{outer_vertex(1), inner_vertex(1), edge_kind::spoke});
  // V-edges sorted by smaller endpoint: (1,3),(1,4),(2,4),(2,5),(3,5)
  CHECK(g.edges()[10] == edge{inner_vertex(1), inner_vertex(3), edge_kind::v_edge});
  CHECK(g.edges()[11] == edge{inner_vertex(1), inner_vertex(4), edge_kind::v_edge});
  CHECK(g.edges()[14] == edge{inner_vertex(3), inner_vertex(5), edge_kind::v_edge});
}

TEST_CASE("twin is an involution exchanging sides") {
  graph g = build_graph(16, 5);
  CHECK(g.twin(outer_vertex(3)) == inner_vertex(3));
  CHECK(g.twin(inner_vertex(16)) == outer_vertex(16));
  for (int id = 1; id <= g.num_vertices(); ++id) {
    vertex_id v = g.vertex_from_id(id);
    CHECK(g.twin(g.twin(v)) == v);
    CHECK(g.twin(v).side != v.side);
  }
}

TEST_CASE("inner cycles partition V into (n,k) cycles of length n/(n,k)") {
  graph g = build_graph(9, 3);
  REQUIRE(g.gcd() == 3);
  const auto& cycles = g.inner_cycles();
  REQUIRE(cycles.size() == 3);
  CHECK(cycles[0] == std::vector<vertex_id>{inner_vertex(1), inner_vertex(4),
                                            inner_vertex(7)});
  CHECK(cycles[1] == std::vector<vertex_id>{inner_vertex(2), inner_vertex(5),
                                            inner_vertex(8)});
  CHECK(cycles[2] == std::vector<vertex_id>{inner_vertex(3), inner_vertex(6),
                                            inner_vertex(9)});

  CHECK(build_graph(5, 2).inner_cycles().size() == 1);
  CHECK(build_graph(5, 2).inner_cycles()[0].size() == 5);
  CHECK(build_graph(16, 5).inner_cycles().size() == 1);
  CHECK(build_graph(16, 5).inner_cycles()[0].size() == 16);

  for (graph_params p : {graph_params{12, 4}, {15, 6}, {20, 8}}) {
    graph h(p);
    std::set<int> seen;
    std::size_t total = 0;
    for (const auto& cycle : h.inner_cycles()) {
      CHECK(static_cast<int>(cycle.size()) == p.n / h.gcd());
      total += cycle.size();
      for (vertex_id v : cycle) seen.insert(v.index);
      // consecutive cycle members really are V-edges
      for (std::size_t t = 0; t < cycle.size(); ++t) {
        vertex_id a = cycle[t], b = cycle[(t + 1) % cycle.size()];
        int diff = h.wrap(b.index - a.index + p.n);
        CHECK((diff == p.k || diff == p.n - p.k));
      }
    }
    CHECK(static_cast<int>(h.inner_cycles().size()) == h.gcd());
    CHECK(total == static_cast<std::size_t>(p.n));
    CHECK(seen.size() == static_cast<std::size_t>(p.n));
  }
}

TEST_CASE("sector enumerates m consecutive twin pairs") {
  graph g = build_graph(16, 5);
  auto s = g.sector(0, 4);
  REQUIRE(s.size() == 8);
  CHECK(s[0] == outer_vertex(1));
  CHECK(s[3] == outer_vertex(4));
  CHECK(s[4] == inner_vertex(1));
  CHECK(s[7] == inner_vertex(4));

  auto w = g.sector(14, 4);  // wraps
  CHECK(w[0] == outer_vertex(15));
  CHECK(w[1] == outer_vertex(16));
  CHECK(w[2] == outer_vertex(1));
  CHECK(w[3] == outer_vertex(2));

  CHECK(g.sector(0, 16).size() == 32);
  CHECK_THROWS_AS(g.sector(0, 0), domain_error);
  CHECK_THROWS_AS(g.sector(0, 17), domain_error);
}

TEST_CASE("bipartiteness characterization") {
  SECTION("n even, k odd is bipartite with the stated bipartition") {
    graph g = build_graph(16, 5);
    bipartiteness b = is_bipartite(g);
    REQUIRE(b.bipartite);
    CHECK(b.part_x.size() + b.part_y.size() == 32);
    std::set<vertex_id> x(b.part_x.begin(), b.part_x.end());
    CHECK(x.count(outer_vertex(1)) == 1);
    CHECK(x.count(inner_vertex(2)) == 1);
    // every edge crosses the bipartition
    for (const edge& e : g.edges()) {
      CHECK(x.count(e.a) + x.count(e.b) == 1);
    }
  }
  SECTION("odd n yields the outer odd cycle") {
    bipartiteness b = is_bipartite(build_graph(5, 2));
    REQUIRE_FALSE(b.bipartite);
    CHECK(b.odd_cycle.size() == 5);
    CHECK(b.odd_cycle.front() == outer_vertex(1));
  }
  SECTION("n and k both even yields the C_{k+3} witness") {
    graph g = build_graph(6, 2);
    bipartiteness b = is_bipartite(g);
    REQUIRE_FALSE(b.bipartite);
    REQUIRE(b.odd_cycle ==
            std::vector<vertex_id>{outer_vertex(1), inner_vertex(1),
                                   inner_vertex(3), outer_vertex(3),
                                   outer_vertex(2)});
  }
  SECTION("odd-cycle witnesses are genuine odd cycles") {
    for (graph_params p :
         {graph_params{5, 2}, {7, 3}, {6, 2}, {8, 2}, {12, 4}, {9, 1}}) {
      graph g(p);
      bipartiteness b = is_bipartite(g);
      REQUIRE_FALSE(b.bipartite);
      REQUIRE(b.odd_cycle.size() % 2 == 1);
      for (std::size_t t = 0; t < b.odd_cycle.size(); ++t) {
        vertex_id a = b.odd_cycle[t];
        vertex_id c = b.odd_cycle[(t + 1) % b.odd_cycle.size()];
        auto nb = g.neighbors(a);
        CHECK(std::find(nb.begin(), nb.end(), c) != nb.end());
      }
    }
  }
  SECTION("agrees with generic 2-coloring for all n <= 20") {
    for (int n = 3; n <= 20; ++n) {
      for (int kk = 1; 2 * kk < n; ++kk) {
        graph g = build_graph(n, kk);
        CHECK(is_bipartite(g).bipartite == oracle::two_colorable(g));
        CHECK(is_bipartite(g).bipartite == (n % 2 == 0 && kk % 2 == 1));
      }
    }
  }
}

TEST_CASE("DIMACS export") {
  graph g = build_graph(5, 2);
  std::string d = to_dimacs(g);
  CHECK(d.find("p edge 10 15") != std::string::npos);
  CHECK(d.find("e 1 2") != std::string::npos);
  CHECK(d.find("e 1 6") != std::string::npos);   // spoke u1-v1
  CHECK(d.find("e 6 8") != std::string::npos);   // v-edge v1-v3
  CHECK(std::count(d.begin(), d.end(), '\n') == 17);  // c + p + 15 edges
}

TEST_CASE("JSON graph export") {
  graph g = build_graph(16, 5);
  nlohmann::json j = graph_to_json(g);
  CHECK(j["vertices"].size() == 32);
  CHECK(j["edges"].size() == 48);
  CHECK(j["vertices"][0]["label"] == "u1");
  CHECK(j["vertices"][16]["label"] == "v1");
  CHECK(j["n"] == 16);
  CHECK(j["k"] == 5);
}
