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
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "petersen/graph.hpp"

namespace petersen {

/// A vertex selection over the 2n vertices of P(n,k). Immutable after
/// construction; transformations return new covers. Despite the name a
/// cover object is just a selection -- validity is checked by is_cover.
class cover {
 public:
  explicit cover(graph_params p)
      : p_(p), outer_(p.n, 0), inner_(p.n, 0) {
    require_admissible(p);
  }

  cover(graph_params p, const std::vector<int>& outer_indices,
        const std::vector<int>& inner_indices)
      : cover(p) {
    for (int i : outer_indices) set(outer_, i);
    for (int i : inner_indices) set(inner_, i);
    recount();
  }

  static cover from_masks(graph_params p, std::vector<char> outer_mask,
                          std::vector<char> inner_mask) {
    cover c(p);
    if (static_cast<int>(outer_mask.size()) != p.n ||
        static_cast<int>(inner_mask.size()) != p.n) {
      throw domain_error("cover mask size must equal n");
    }
    c.outer_ = std::move(outer_mask);
    c.inner_ = std::move(inner_mask);
    c.recount();
    return c;
  }

  const graph_params& params() const { return p_; }
  int n() const { return p_.n; }

  bool outer_selected(int i) const { return outer_[check(i)] != 0; }
  bool inner_selected(int i) const { return inner_[check(i)] != 0; }
  bool selected(vertex_id v) const {
    return v.side == vertex_side::outer ? outer_selected(v.index)
                                        : inner_selected(v.index);
  }

  int size() const { return outer_count_ + inner_count_; }
  int outer_count() const { return outer_count_; }
  int inner_count() const { return inner_count_; }

  std::vector<int> selected_outer_indices() const { return indices(outer_); }
  std::vector<int> selected_inner_indices() const { return indices(inner_); }

  cover with(vertex_id v) const {
    cover c(*this);
    (v.side == vertex_side::outer ? c.outer_ : c.inner_)[check(v.index)] = 1;
    c.recount();
    return c;
  }

  cover without(vertex_id v) const {
    cover c(*this);
    (v.side == vertex_side::outer ? c.outer_ : c.inner_)[check(v.index)] = 0;
    c.recount();
    return c;
  }

  friend bool operator==(const cover&, const cover&) = default;

 private:
  int check(int i) const {
    if (i < 1 || i > p_.n) throw domain_error("vertex index out of range");
    return i - 1;
  }

  void set(std::vector<char>& mask, int i) { mask[check(i)] = 1; }

  std::vector<int> indices(const std::vector<char>& mask) const {
    std::vector<int> out;
    for (int i = 0; i < p_.n; ++i)
      if (mask[i]) out.push_back(i + 1);
    return out;
  }

  void recount() {
    outer_count_ = static_cast<int>(
        std::count(outer_.begin(), outer_.end(), char{1}));
    inner_count_ = static_cast<int>(
        std::count(inner_.begin(), inner_.end(), char{1}));
  }

  graph_params p_;
  std::vector<char> outer_, inner_;
  int outer_count_ = 0;
  int inner_count_ = 0;
};

struct cover_check {
  bool ok = false;
  std::optional<edge> uncovered;  ///< first uncovered edge, canonical order
};

/// True iff every edge has at least one selected endpoint.
inline cover_check is_cover(const graph& g, const cover& c) {
  if (c.params() != g.params()) throw domain_error("cover/graph mismatch");
  for (const edge& e : g.edges()) {
    if (!c.selected(e.a) && !c.selected(e.b)) return {false, e};
  }
  return {true, std::nullopt};
}

/// A trivial cover selects all of V. Excluded from the strip calculus.
inline bool is_trivial(const cover& c) {
  return c.inner_count() == c.n();
}

/// A maximal circular run of selected inner vertices. The run covers
/// v_start, v_{start+1}, ..., v_{start+size-1} with subscripts mod n;
/// v_{start-1} and v_{start+size} are unselected.
struct strip {
  int start = 0;
  int size = 0;

  friend bool operator==(const strip&, const strip&) = default;
};

struct strip_decomposition {
  graph_params params;
  std::vector<strip> strips;  ///< ordered by start index

  int max_size() const {
    int m = 0;
    for (const strip& s : strips) m = std::max(m, s.size);
    return m;
  }
};

namespace detail {

// Circular maximal runs of 1s in mask (index i holds vertex i+1). The mask
// must not be all-ones.
inline std::vector<strip> circular_runs(const std::vector<char>& mask) {
  const int n = static_cast<int>(mask.size());
  int anchor = -1;
  for (int i = 0; i < n; ++i) {
    if (!mask[i]) {
      anchor = i;
      break;
    }
  }
  if (anchor == -1) {
    throw invariant_error("circular_runs: all-ones mask has no strips");
  }
  std::vector<strip> runs;
  int run_start = -1, run_len = 0;
  for (int t = 1; t <= n; ++t) {
    int i = (anchor + t) % n;
    if (mask[i]) {
      if (run_len == 0) run_start = i + 1;
      ++run_len;
    } else if (run_len > 0) {
      runs.push_back({run_start, run_len});
      run_len = 0;
    }
  }
  if (run_len > 0) runs.push_back({run_start, run_len});
  std::sort(runs.begin(), runs.end(),
            [](const strip& a, const strip& b) { return a.start < b.start; });
  return runs;
}

}  // namespace detail

/// Decomposes the selected inner vertices into strips. The trivial cover is
/// rejected: all of V is not a strip.
inline strip_decomposition strips(const cover& c) {
  if (is_trivial(c)) {
    throw domain_error("strips: trivial cover has no strip decomposition");
  }
  std::vector<char> mask(c.n(), 0);
  for (int i : c.selected_inner_indices()) mask[i - 1] = 1;
  return {c.params(), detail::circular_runs(mask)};
}

/// a(c) = number of selected inner vertices, b(c) = number of odd strips,
/// plus |c| and the strip size multiset (in strip-start order).
struct cover_stats {
  int a = 0;
  int b = 0;
  int size = 0;
  std::vector<int> strip_sizes;
};

inline cover_stats stats(const cover& c) {
  strip_decomposition d = strips(c);
  cover_stats s;
  s.size = c.size();
  for (const strip& st : d.strips) {
    s.a += st.size;
    s.b += st.size % 2;
    s.strip_sizes.push_back(st.size);
  }
  return s;
}

/// The twins chosen by the semi-optimal rule on one strip: for a strip
/// v_j,...,v_{j+s-1} select u_{j+1}, u_{j+3}, ..., exactly ceil((s-1)/2)
/// vertices.
inline std::vector<vertex_id> optimal_twin_selection(graph_params p,
                                                     const strip& s) {
  require_admissible(p);
  if (s.size < 1 || s.size > p.n - 1) throw domain_error("bad strip size");
  const int count = s.size / 2;  // ceil((size-1)/2)
  std::vector<vertex_id> out;
  out.reserve(count);
  for (int t = 1; t <= count; ++t) {
    int idx = (s.start - 1 + 2 * t - 1) % p.n + 1;
    out.push_back(outer_vertex(idx));
  }
  return out;
}

/// The semi-optimal transformation so(c): keep c's inner selection, select
/// the twin of every unselected inner vertex, and on each strip's twins
/// apply the alternating rule. Requires a non-trivial cover; the result is
/// a cover of size exactly n + (a(c)-b(c))/2 <= |c|.
inline cover semi_optimal(const graph& g, const cover& c) {
  if (is_trivial(c)) throw domain_error("semi_optimal: trivial cover");
  if (!is_cover(g, c).ok) throw domain_error("semi_optimal: input not a cover");

  const int n = g.n();
  std::vector<char> outer_mask(n, 0), inner_mask(n, 0);
  for (int i = 1; i <= n; ++i) {
    if (c.inner_selected(i)) {
      inner_mask[i - 1] = 1;
    } else {
      outer_mask[i - 1] = 1;  // twin of an unselected inner vertex
    }
  }
  cover_stats st = stats(c);
  for (const strip& s : strips(c).strips) {
    for (vertex_id u : optimal_twin_selection(g.params(), s)) {
      outer_mask[u.index - 1] = 1;
    }
  }
  cover so = cover::from_masks(g.params(), std::move(outer_mask),
                               std::move(inner_mask));
  if (so.size() != n + (st.a - st.b) / 2) {
    throw invariant_error("semi_optimal: size equation violated");
  }
  return so;
}

struct d_value {
  int value = 0;
};

/// d(P(n,k)) = min over all non-trivial covers of a(c) - b(c), by exhaustive
/// enumeration of inner selection patterns. Guarded to 2n <= 24.
///
/// a(c)-b(c) depends only on the inner selection, and an inner pattern
/// extends to a non-trivial cover iff it covers every V-edge and is not all
/// of V, so scanning the 2^n inner patterns is exhaustive.
inline d_value d_value_bruteforce(const graph& g) {
  const int n = g.n();
  if (2 * n > 24) {
    throw resource_error("d_value_bruteforce: guard 2n <= 24 exceeded");
  }
  std::vector<std::pair<int, int>> vedges;  // 0-based index pairs
  for (const edge& e : g.edges()) {
    if (e.kind == edge_kind::v_edge) vedges.push_back({e.a.index - 1, e.b.index - 1});
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  int best = 2 * n;  // any valid pattern beats this
  for (std::uint32_t m = 0; m < full; ++m) {  // skips the all-of-V pattern
    bool covers = true;
    for (auto [x, y] : vedges) {
      if (!((m >> x) & 1) && !((m >> y) & 1)) {
        covers = false;
        break;
      }
    }
    if (!covers) continue;
    std::vector<char> mask(n);
    for (int i = 0; i < n; ++i) mask[i] = (m >> i) & 1;
    int a = 0, b = 0;
    for (const strip& s : detail::circular_runs(mask)) {
      a += s.size;
      b += s.size % 2;
    }
    best = std::min(best, a - b);
  }
  return {best};
}

/// d derived via the characterization d = 2(beta - n); used beyond the
/// enumeration guard.
inline d_value d_from_beta(graph_params p, int beta) {
  require_admissible(p);
  return {2 * (beta - p.n)};
}

}  // namespace petersen
