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

#include <algorithm>
#include <array>
#include <compare>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "petersen/errors.hpp"

namespace petersen {

/// Parameters of a generalized Petersen graph P(n,k). Admissible iff
/// k >= 1 and n > 2k.
struct graph_params {
  int n = 0;  ///< outer/inner cycle length
  int k = 0;  ///< inner skip

  friend bool operator==(const graph_params&, const graph_params&) = default;
  friend auto operator<=>(const graph_params&, const graph_params&) = default;
};

inline bool params_admissible(graph_params p) {
  return p.k >= 1 && p.n > 2 * p.k;
}

inline void require_admissible(graph_params p) {
  if (!params_admissible(p)) {
    throw domain_error("P(" + std::to_string(p.n) + "," + std::to_string(p.k) +
                       "): requires k >= 1 and n > 2k");
  }
}

enum class vertex_side : unsigned char { outer, inner };

/// A vertex u_i (outer) or v_i (inner), index 1-based in 1..n.
/// Default ordering is the canonical order u_1..u_n, v_1..v_n.
struct vertex_id {
  vertex_side side = vertex_side::outer;
  int index = 0;

  friend bool operator==(const vertex_id&, const vertex_id&) = default;
  friend auto operator<=>(const vertex_id&, const vertex_id&) = default;
};

inline vertex_id outer_vertex(int i) { return {vertex_side::outer, i}; }
inline vertex_id inner_vertex(int i) { return {vertex_side::inner, i}; }

inline std::string to_string(vertex_id v) {
  return (v.side == vertex_side::outer ? "u" : "v") + std::to_string(v.index);
}

enum class edge_kind : unsigned char { u_edge, spoke, v_edge };

inline const char* to_string(edge_kind k) {
  switch (k) {
    case edge_kind::u_edge: return "u_edge";
    case edge_kind::spoke: return "spoke";
    case edge_kind::v_edge: return "v_edge";
  }
  return "?";
}

/// Undirected edge; endpoints stored with the canonically smaller one first.
struct edge {
  vertex_id a, b;
  edge_kind kind = edge_kind::u_edge;

  friend bool operator==(const edge&, const edge&) = default;
};

inline std::string to_string(const edge& e) {
  return to_string(e.a) + "-" + to_string(e.b);
}

/// Immutable model of P(n,k): vertex set {u_i, v_i}, edge set
/// {u_i u_{i+1}, u_i v_i, v_i v_{i+k}}, subscripts reduced modulo n into
/// 1..n. Exactly 2n vertices and 3n edges; every vertex has degree 3.
/// Safe to share across threads once constructed.
class graph {
 public:
  explicit graph(graph_params p) : p_(p) {
    require_admissible(p);
    gcd_ = std::gcd(p_.n, p_.k);
    build_edges();
    build_adjacency();
    build_inner_cycles();
  }

  const graph_params& params() const { return p_; }
  int n() const { return p_.n; }
  int k() const { return p_.k; }
  int num_vertices() const { return 2 * p_.n; }
  int num_edges() const { return 3 * p_.n; }

  /// gcd (n,k); the inner vertices form (n,k) cycles of length n/(n,k).
  int gcd() const { return gcd_; }

  /// Reduces an arbitrary integer subscript into 1..n.
  int wrap(int i) const {
    int m = (i - 1) % p_.n;
    if (m < 0) m += p_.n;
    return m + 1;
  }

  /// Canonical numbering u_i -> i, v_i -> n+i (1..2n). Matches the DIMACS
  /// export numbering.
  int canonical_id(vertex_id v) const {
    return v.side == vertex_side::outer ? v.index : p_.n + v.index;
  }

  vertex_id vertex_from_id(int id) const {
    if (id < 1 || id > 2 * p_.n) throw domain_error("vertex id out of range");
    return id <= p_.n ? outer_vertex(id) : inner_vertex(id - p_.n);
  }

  /// Opposite-side vertex with the same index. An involution.
  vertex_id twin(vertex_id v) const {
    return {v.side == vertex_side::outer ? vertex_side::inner
                                         : vertex_side::outer,
            v.index};
  }

  /// Edges in canonical order: U-edges by index, then spokes, then V-edges
  /// by smaller endpoint.
  const std::vector<edge>& edges() const { return edges_; }

  /// The three neighbors of v, sorted by canonical id.
  std::span<const vertex_id, 3> neighbors(vertex_id v) const {
    return std::span<const vertex_id, 3>(adj_[canonical_id(v) - 1]);
  }

  /// The (n,k) inner cycles, ordered by smallest index; each cycle starts
  /// at its smallest index and walks by +k.
  const std::vector<std::vector<vertex_id>>& inner_cycles() const {
    return inner_cycles_;
  }

  /// The m-sector {u_{start+1},...,u_{start+m}} U {v_{start+1},...,v_{start+m}},
  /// with modular wrap. Outer vertices first, each in walk order.
  std::vector<vertex_id> sector(int start, int m) const {
    if (m < 1 || m > p_.n) throw domain_error("sector size out of range");
    std::vector<vertex_id> out;
    out.reserve(2 * m);
    for (int j = 1; j <= m; ++j) out.push_back(outer_vertex(wrap(start + j)));
    for (int j = 1; j <= m; ++j) out.push_back(inner_vertex(wrap(start + j)));
    return out;
  }

 private:
  void build_edges() {
    const int n = p_.n;
    edges_.reserve(3 * n);
    for (int i = 1; i <= n; ++i) {
      edges_.push_back(normalized(outer_vertex(i), outer_vertex(wrap(i + 1)),
                                  edge_kind::u_edge));
    }
    for (int i = 1; i <= n; ++i) {
      edges_.push_back({outer_vertex(i), inner_vertex(i), edge_kind::spoke});
    }
    std::vector<edge> ve;
    ve.reserve(n);
    for (int i = 1; i <= n; ++i) {
      ve.push_back(normalized(inner_vertex(i), inner_vertex(wrap(i + p_.k)),
                              edge_kind::v_edge));
    }
    std::sort(ve.begin(), ve.end(), [](const edge& x, const edge& y) {
      return std::pair(x.a.index, x.b.index) < std::pair(y.a.index, y.b.index);
    });
    edges_.insert(edges_.end(), ve.begin(), ve.end());
  }

  edge normalized(vertex_id a, vertex_id b, edge_kind kind) const {
    if (canonical_id(a) > canonical_id(b)) std::swap(a, b);
    return {a, b, kind};
  }

  void build_adjacency() {
    adj_.resize(2 * p_.n);
    for (int i = 1; i <= p_.n; ++i) {
      adj_[canonical_id(outer_vertex(i)) - 1] = {
          outer_vertex(wrap(i - 1)), outer_vertex(wrap(i + 1)),
          inner_vertex(i)};
      adj_[canonical_id(inner_vertex(i)) - 1] = {
          inner_vertex(wrap(i - p_.k)), inner_vertex(wrap(i + p_.k)),
          outer_vertex(i)};
    }
    for (auto& nb : adj_) {
      std::sort(nb.begin(), nb.end(), [this](vertex_id x, vertex_id y) {
        return canonical_id(x) < canonical_id(y);
      });
    }
  }

  void build_inner_cycles() {
    const int len = p_.n / gcd_;
    inner_cycles_.reserve(gcd_);
    for (int s = 1; s <= gcd_; ++s) {
      std::vector<vertex_id> cycle;
      cycle.reserve(len);
      int i = s;
      for (int t = 0; t < len; ++t) {
        cycle.push_back(inner_vertex(i));
        i = wrap(i + p_.k);
      }
      inner_cycles_.push_back(std::move(cycle));
    }
  }

  graph_params p_;
  int gcd_ = 1;
  std::vector<edge> edges_;
  std::vector<std::array<vertex_id, 3>> adj_;
  std::vector<std::vector<vertex_id>> inner_cycles_;
};

inline graph build_graph(int n, int k) { return graph({n, k}); }

/// Outcome of the bipartiteness characterization: P(n,k) is bipartite iff
/// n is even and k is odd. Carries the bipartition when true (class X =
/// {u_i, v_{i+1} | i odd}), an explicit odd cycle when false.
struct bipartiteness {
  bool bipartite = false;
  std::vector<vertex_id> part_x, part_y;
  std::vector<vertex_id> odd_cycle;
};

inline bipartiteness is_bipartite(const graph& g) {
  const int n = g.n(), k = g.k();
  bipartiteness out;
  if (n % 2 == 0 && k % 2 == 1) {
    out.bipartite = true;
    for (int i = 1; i <= n; i += 2) {
      out.part_x.push_back(outer_vertex(i));
      out.part_x.push_back(inner_vertex(g.wrap(i + 1)));
    }
    for (int i = 2; i <= n; i += 2) {
      out.part_y.push_back(outer_vertex(i));
      out.part_y.push_back(inner_vertex(g.wrap(i + 1)));
    }
    std::sort(out.part_x.begin(), out.part_x.end());
    std::sort(out.part_y.begin(), out.part_y.end());
    return out;
  }
  if (n % 2 == 1) {
    // The outer cycle itself is odd.
    for (int i = 1; i <= n; ++i) out.odd_cycle.push_back(outer_vertex(i));
    return out;
  }
  // n and k both even: u_1 v_1 v_{k+1} u_{k+1} u_k ... u_2 is a C_{k+3}.
  out.odd_cycle.push_back(outer_vertex(1));
  out.odd_cycle.push_back(inner_vertex(1));
  out.odd_cycle.push_back(inner_vertex(k + 1));
  for (int i = k + 1; i >= 2; --i) out.odd_cycle.push_back(outer_vertex(i));
  return out;
}

}  // namespace petersen
