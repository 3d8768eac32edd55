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

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "petersen/cover.hpp"
#include "petersen/graph.hpp"

namespace petersen {

enum class solve_method { brute_force, branch_and_bound };

inline const char* to_string(solve_method m) {
  return m == solve_method::brute_force ? "brute_force" : "branch_and_bound";
}

struct solve_options {
  std::uint64_t node_budget = 100'000'000;
  std::optional<std::chrono::milliseconds> time_budget;
  std::optional<cover> warm_start;  ///< incumbent; must be a valid cover
};

struct beta_result {
  graph_params params;
  int beta = 0;
  cover witness;
  solve_method method = solve_method::branch_and_bound;
  std::uint64_t nodes = 0;
  std::chrono::microseconds elapsed{0};
};

/// Thrown when a solve exhausts its node or time budget. Carries the best
/// bounds found: the incumbent cover (a valid upper bound) and the root
/// matching lower bound.
class budget_exceeded : public resource_error {
 public:
  budget_exceeded(int lower, cover incumbent)
      : resource_error("solve budget exhausted (bounds " +
                       std::to_string(lower) + " <= beta <= " +
                       std::to_string(incumbent.size()) + ")"),
        lower_bound(lower),
        best_upper(incumbent.size()),
        best_cover(std::move(incumbent)) {}

  int lower_bound;
  int best_upper;
  cover best_cover;
};

namespace detail {

// All-inner plus alternating-outer cover of size n + ceil(n/2). Always
// valid; used as the incumbent of last resort.
inline cover trivial_style_cover(const graph& g) {
  const int n = g.n();
  std::vector<char> outer_mask(n, 0), inner_mask(n, 1);
  for (int i = 1; i <= n; i += 2) outer_mask[i - 1] = 1;
  return cover::from_masks(g.params(), std::move(outer_mask),
                           std::move(inner_mask));
}

inline std::vector<int> canonical_id_list(const cover& c) {
  std::vector<int> ids = c.selected_outer_indices();
  for (int i : c.selected_inner_indices()) ids.push_back(c.n() + i);
  return ids;
}

// n + sum(floor(m_i/2)) over the circular runs of the inner pattern; this
// is the size of the cheapest cover with that inner selection.
inline int pattern_cover_size(int n, const std::vector<char>& mask) {
  int total = n;
  for (const strip& s : circular_runs(mask)) total += s.size / 2;
  return total;
}

inline std::vector<std::pair<int, int>> v_edge_pairs(const graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const edge& e : g.edges()) {
    if (e.kind == edge_kind::v_edge) {
      out.push_back({e.a.index - 1, e.b.index - 1});
    }
  }
  return out;
}

// Minimum cover size by exhaustive scan of inner selection patterns:
// a pattern extends to a cover iff it covers every V-edge, and the optimal
// completion costs (n - a) forced twins plus floor(m_i/2) per strip.
// The trivial pattern (all of V) is included as a candidate for safety.
inline int beta_by_pattern_scan(const graph& g) {
  const int n = g.n();
  const auto vedges = v_edge_pairs(g);
  int best = n + (n + 1) / 2;  // trivial cover candidate
  const std::uint32_t full = (1u << n) - 1;
  std::vector<char> mask(n);
  for (std::uint32_t m = 0; m < full; ++m) {
    bool covers = true;
    for (auto [x, y] : vedges) {
      if (!((m >> x) & 1) && !((m >> y) & 1)) {
        covers = false;
        break;
      }
    }
    if (!covers) continue;
    for (int i = 0; i < n; ++i) mask[i] = (m >> i) & 1;
    best = std::min(best, pattern_cover_size(n, mask));
  }
  return best;
}

// All ways to pick exactly floor(m/2) of the m twin positions of a strip
// so that the m-1 internal path edges are covered. Offsets are 0-based
// within the strip.
inline std::vector<std::vector<int>> strip_twin_choices(int m) {
  const int want = m / 2;
  std::vector<std::vector<int>> out;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    if (__builtin_popcount(s) != want) continue;
    bool ok = true;
    for (int j = 0; j + 1 < m; ++j) {
      if (!((s >> j) & 1) && !((s >> (j + 1)) & 1)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<int> offsets;
    for (int j = 0; j < m; ++j)
      if ((s >> j) & 1) offsets.push_back(j);
    out.push_back(std::move(offsets));
  }
  return out;
}

// Visits every minimum cover exactly once. Every minimum cover consists of
// an inner pattern whose optimal completion size equals beta, the forced
// twins of the unselected inner vertices, and one minimum choice per strip.
template <typename Visit>
inline void for_each_min_cover(const graph& g, int beta, Visit&& visit) {
  const int n = g.n();
  if (n + (n + 1) / 2 <= beta) {
    throw invariant_error("trivial cover would be minimum");
  }
  const auto vedges = v_edge_pairs(g);
  const std::uint32_t full = (1u << n) - 1;
  std::vector<char> inner_mask(n);
  for (std::uint32_t m = 0; m < full; ++m) {
    bool covers = true;
    for (auto [x, y] : vedges) {
      if (!((m >> x) & 1) && !((m >> y) & 1)) {
        covers = false;
        break;
      }
    }
    if (!covers) continue;
    for (int i = 0; i < n; ++i) inner_mask[i] = (m >> i) & 1;
    auto runs = circular_runs(inner_mask);
    int size = n;
    for (const strip& s : runs) size += s.size / 2;
    if (size != beta) continue;

    std::vector<char> base_outer(n, 0);
    for (int i = 0; i < n; ++i)
      if (!inner_mask[i]) base_outer[i] = 1;
    std::vector<std::vector<std::vector<int>>> choices;  // per strip
    for (const strip& s : runs) choices.push_back(strip_twin_choices(s.size));

    std::vector<char> outer_mask = base_outer;
    auto emit = [&](auto&& self, std::size_t si) -> void {
      if (si == runs.size()) {
        visit(cover::from_masks(g.params(), outer_mask, inner_mask));
        return;
      }
      for (const auto& offsets : choices[si]) {
        for (int off : offsets)
          outer_mask[(runs[si].start - 1 + off) % n] = 1;
        self(self, si + 1);
        for (int off : offsets)
          outer_mask[(runs[si].start - 1 + off) % n] = 0;
      }
    };
    emit(emit, 0);
  }
}

}  // namespace detail

/// Exhaustive minimum vertex cover, guarded to 2n <= 26. The witness is the
/// lexicographically least minimum cover in canonical vertex order.
inline beta_result beta_bruteforce(const graph& g) {
  const int n = g.n();
  if (2 * n > 26) throw resource_error("beta_bruteforce: guard 2n <= 26");
  const auto t0 = std::chrono::steady_clock::now();

  const int beta = detail::beta_by_pattern_scan(g);
  std::optional<cover> best;
  std::vector<int> best_ids;
  detail::for_each_min_cover(g, beta, [&](const cover& c) {
    std::vector<int> ids = detail::canonical_id_list(c);
    if (!best || ids < best_ids) {
      best = c;
      best_ids = std::move(ids);
    }
  });
  if (!best) throw invariant_error("no minimum cover found");
  const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - t0);
  return {g.params(), beta,           *best,
          solve_method::brute_force,  std::uint64_t{1} << n, elapsed};
}

/// The complete, duplicate-free list of minimum covers. Guarded to 2n <= 24.
struct min_cover_enumeration {
  graph_params params;
  int beta = 0;
  std::vector<cover> covers;
};

inline min_cover_enumeration enumerate_min_covers(const graph& g) {
  if (2 * g.n() > 24) {
    throw resource_error("enumerate_min_covers: guard 2n <= 24");
  }
  min_cover_enumeration out{g.params(), detail::beta_by_pattern_scan(g), {}};
  detail::for_each_min_cover(g, out.beta,
                             [&](const cover& c) { out.covers.push_back(c); });
  return out;
}

namespace detail {

// Branch-and-bound engine for exact minimum vertex cover. Branches on a
// maximum-degree vertex of the residual graph (in cover vs all neighbors in
// cover), applies degree-0/1 reductions, and prunes with a greedy maximal
// matching bound. Fully deterministic: all ties break by canonical id.
class vc_engine {
 public:
  vc_engine(const graph& g, const solve_options& opts) : g_(g), nv_(2 * g.n()) {
    adj_.resize(nv_);
    for (int id = 1; id <= nv_; ++id) {
      auto nb = g.neighbors(g.vertex_from_id(id));
      for (int j = 0; j < 3; ++j) adj_[id - 1][j] = g.canonical_id(nb[j]) - 1;
    }
    state_.assign(nv_, undecided);
    degree_.assign(nv_, 3);
    alive_ = nv_;

    cover warm =
        opts.warm_start ? *opts.warm_start : detail::trivial_style_cover(g);
    if (warm.params() != g.params() || !is_cover(g_, warm).ok) {
      throw domain_error("warm start is not a valid cover of this graph");
    }
    best_size_ = warm.size();
    best_mask_.assign(nv_, 0);
    for (int i : warm.selected_outer_indices()) best_mask_[i - 1] = 1;
    for (int i : warm.selected_inner_indices()) best_mask_[g.n() + i - 1] = 1;

    node_budget_ = opts.node_budget;
    if (opts.time_budget) {
      deadline_ = std::chrono::steady_clock::now() + *opts.time_budget;
    }
  }

  void run() {
    root_lower_ = matching_lb();
    dfs();
  }

  int best_size() const { return best_size_; }
  std::uint64_t nodes() const { return nodes_; }

  cover best_cover() const {
    std::vector<char> outer_mask(g_.n(), 0), inner_mask(g_.n(), 0);
    for (int v = 0; v < nv_; ++v) {
      if (!best_mask_[v]) continue;
      if (v < g_.n()) {
        outer_mask[v] = 1;
      } else {
        inner_mask[v - g_.n()] = 1;
      }
    }
    return cover::from_masks(g_.params(), std::move(outer_mask),
                             std::move(inner_mask));
  }

 private:
  static constexpr signed char undecided = 0, in_cover = 1, excluded = 2;

  void remove_vertex(int v, bool into_cover) {
    state_[v] = into_cover ? in_cover : excluded;
    --alive_;
    if (into_cover) ++count_;
    for (int w : adj_[v]) {
      if (state_[w] == undecided) --degree_[w];
    }
    trail_.push_back({v, into_cover});
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [v, inc] = trail_.back();
      trail_.pop_back();
      state_[v] = undecided;
      ++alive_;
      if (inc) --count_;
      int d = 0;
      for (int w : adj_[v]) {
        if (state_[w] == undecided) {
          ++degree_[w];
          ++d;
        }
      }
      degree_[v] = d;
    }
  }

  // Degree-0 vertices leave the cover; the neighbor of a degree-1 vertex
  // always belongs to some minimum cover.
  void reduce() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < nv_; ++v) {
        if (state_[v] != undecided) continue;
        if (degree_[v] == 0) {
          remove_vertex(v, false);
          changed = true;
        } else if (degree_[v] == 1) {
          for (int w : adj_[v]) {
            if (state_[w] == undecided) {
              remove_vertex(w, true);
              break;
            }
          }
          remove_vertex(v, false);
          changed = true;
        }
      }
    }
  }

  int matching_lb() const {
    std::vector<char> matched(nv_, 0);
    int m = 0;
    for (int v = 0; v < nv_; ++v) {
      if (state_[v] != undecided || matched[v]) continue;
      for (int w : adj_[v]) {
        if (state_[w] == undecided && !matched[w]) {
          matched[v] = matched[w] = 1;
          ++m;
          break;
        }
      }
    }
    return m;
  }

  int pick_branch_vertex() const {
    int best = -1, best_deg = -1;
    for (int v = 0; v < nv_; ++v) {
      if (state_[v] == undecided && degree_[v] > best_deg) {
        best = v;
        best_deg = degree_[v];
      }
    }
    return best;
  }

  [[noreturn]] void out_of_budget() {
    throw budget_exceeded(root_lower_, best_cover());
  }

  void dfs() {
    if (++nodes_ > node_budget_) out_of_budget();
    if (deadline_ && (nodes_ % 1024) == 1 &&
        std::chrono::steady_clock::now() > *deadline_) {
      out_of_budget();
    }
    const std::size_t mark = trail_.size();
    reduce();
    if (alive_ == 0) {
      if (count_ < best_size_) {
        best_size_ = count_;
        for (int v = 0; v < nv_; ++v) best_mask_[v] = (state_[v] == in_cover);
      }
      undo_to(mark);
      return;
    }
    if (count_ + matching_lb() >= best_size_) {
      undo_to(mark);
      return;
    }
    const int v = pick_branch_vertex();
    const std::size_t branch_mark = trail_.size();

    remove_vertex(v, true);
    dfs();
    undo_to(branch_mark);

    std::array<int, 3> nbrs{};
    int cnt = 0;
    for (int w : adj_[v]) {
      if (state_[w] == undecided) nbrs[cnt++] = w;
    }
    remove_vertex(v, false);
    for (int j = 0; j < cnt; ++j) {
      if (state_[nbrs[j]] == undecided) remove_vertex(nbrs[j], true);
    }
    dfs();
    undo_to(mark);
  }

  const graph& g_;
  int nv_;
  std::vector<std::array<int, 3>> adj_;
  std::vector<signed char> state_;
  std::vector<int> degree_;
  std::vector<std::pair<int, bool>> trail_;
  int alive_ = 0;
  int count_ = 0;
  int best_size_ = 0;
  std::vector<char> best_mask_;
  int root_lower_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t node_budget_ = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

}  // namespace detail

/// Exact minimum vertex cover by branch and bound. Deterministic given the
/// fixed branching rule; throws budget_exceeded with the best bounds found
/// when the configured budget runs out. Callers wanting the constructions
/// warm start should use beta_exact (solve.hpp) instead.
inline beta_result branch_and_bound(const graph& g,
                                    const solve_options& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  detail::vc_engine engine(g, opts);
  engine.run();
  const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - t0);
  return {g.params(),
          engine.best_size(),
          engine.best_cover(),
          solve_method::branch_and_bound,
          engine.nodes(),
          elapsed};
}

}  // namespace petersen
