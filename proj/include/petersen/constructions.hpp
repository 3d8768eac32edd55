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
#include <string>
#include <vector>

#include "petersen/cover.hpp"
#include "petersen/graph.hpp"

namespace petersen {

enum class construction_method {
  bipartite,
  odd_odd,
  k1,
  alternating_cycles,
  tiled_exact,
  tiled_padded,
  even_k,
  fallback,
};

inline const char* to_string(construction_method m) {
  switch (m) {
    case construction_method::bipartite: return "bipartite";
    case construction_method::odd_odd: return "odd_odd";
    case construction_method::k1: return "k1";
    case construction_method::alternating_cycles: return "alternating_cycles";
    case construction_method::tiled_exact: return "tiled_exact";
    case construction_method::tiled_padded: return "tiled_padded";
    case construction_method::even_k: return "even_k";
    case construction_method::fallback: return "fallback";
  }
  return "?";
}

/// A constructed cover together with the size bound its proof claims.
/// Always satisfies |c| <= claimed_bound and is_cover.
struct construction_result {
  construction_method method;
  cover c;
  int claimed_bound = 0;
  int tile_m = 0;  ///< sector size for tiled constructions, else 0
};

namespace detail {

inline construction_result checked(const graph& g, construction_method m,
                                   cover c, int claimed, int tile_m = 0) {
  if (!is_cover(g, c).ok) {
    throw invariant_error(std::string("construction ") + to_string(m) +
                          " produced a non-cover");
  }
  if (c.size() > claimed) {
    throw invariant_error(std::string("construction ") + to_string(m) +
                          " exceeded its claimed bound");
  }
  return {m, std::move(c), claimed, tile_m};
}

}  // namespace detail

/// For even n and odd k: the bipartition class {u_i, v_{i+1} | i odd} is a
/// cover of size exactly n.
inline construction_result bipartite_cover(const graph& g) {
  const int n = g.n(), k = g.k();
  if (n % 2 != 0 || k % 2 != 1) {
    throw domain_error("bipartite_cover: requires n even, k odd");
  }
  std::vector<char> outer_mask(n, 0), inner_mask(n, 0);
  for (int i = 1; i <= n; i += 2) {
    outer_mask[i - 1] = 1;
    inner_mask[g.wrap(i + 1) - 1] = 1;
  }
  return detail::checked(
      g, construction_method::bipartite,
      cover::from_masks(g.params(), std::move(outer_mask),
                        std::move(inner_mask)),
      n);
}

/// For n and k both odd: odd-index outer vertices, even-index inner
/// vertices, plus one endpoint of each of the (k+1)/2 leftover V-edges
/// v_{n-i} v_{n-i+k}, i = 0,2,...,k-1. Size exactly n + (k+1)/2.
inline construction_result odd_odd_cover(const graph& g) {
  const int n = g.n(), k = g.k();
  if (n % 2 != 1 || k % 2 != 1) {
    throw domain_error("odd_odd_cover: requires n odd, k odd");
  }
  std::vector<char> outer_mask(n, 0), inner_mask(n, 0);
  for (int i = 1; i <= n; i += 2) outer_mask[i - 1] = 1;
  for (int i = 2; i <= n; i += 2) inner_mask[i - 1] = 1;
  for (int i = 0; i <= k - 1; i += 2) {
    inner_mask[g.wrap(n - i + k) - 1] = 1;  // higher-index endpoint
  }
  return detail::checked(
      g, construction_method::odd_odd,
      cover::from_masks(g.params(), std::move(outer_mask),
                        std::move(inner_mask)),
      n + (k + 1) / 2);
}

/// For k = 1 and odd n: {u_i | i odd} and {v_i | i = 1 or i even}, size n+1.
inline construction_result k1_cover(const graph& g) {
  const int n = g.n(), k = g.k();
  if (k != 1 || n % 2 != 1) {
    throw domain_error("k1_cover: requires k = 1, n odd");
  }
  std::vector<char> outer_mask(n, 0), inner_mask(n, 0);
  for (int i = 1; i <= n; i += 2) outer_mask[i - 1] = 1;
  inner_mask[0] = 1;
  for (int i = 2; i <= n; i += 2) inner_mask[i - 1] = 1;
  return detail::checked(
      g, construction_method::k1,
      cover::from_masks(g.params(), std::move(outer_mask),
                        std::move(inner_mask)),
      n + 1);
}

/// All outer vertices plus an alternating selection of ceil(len/2) vertices
/// per inner cycle, then semi-optimalized. Size <= n + floor((n+(n,k))/4)
/// when n/(n,k) is odd, <= n + floor(n/4) when even.
inline construction_result alternating_cycles_cover(const graph& g) {
  const int n = g.n(), gc = g.gcd();
  std::vector<char> outer_mask(n, 1), inner_mask(n, 0);
  for (const auto& cycle : g.inner_cycles()) {
    for (std::size_t t = 0; t < cycle.size(); t += 2) {
      inner_mask[cycle[t].index - 1] = 1;
    }
  }
  cover c = cover::from_masks(g.params(), std::move(outer_mask),
                              std::move(inner_mask));
  const bool odd_len = (n / gc) % 2 == 1;
  const int claimed = odd_len ? n + (n + gc) / 4 : n + n / 4;
  return detail::checked(g, construction_method::alternating_cycles,
                         semi_optimal(g, c), claimed);
}

/// Sector-tiling parameters: a pattern of P(m,r) with r = k mod m is
/// repeated across m-sectors. Requires m < k and m > 2r > 0.
struct tiling_params {
  int m = 0;
  int r = 0;        ///< k mod m
  int r_prime = 0;  ///< n mod m
};

inline tiling_params make_tiling(const graph& g, int m) {
  if (m < 1 || m >= g.k()) throw domain_error("tiling: requires m < k");
  const int r = g.k() % m;
  if (!(m > 2 * r && r > 0)) {
    throw domain_error("tiling: requires m > 2(k mod m) > 0");
  }
  return {m, r, g.n() % m};
}

/// All sector sizes m admissible for tiling P(n,k).
inline std::vector<int> admissible_tilings(int k) {
  std::vector<int> out;
  for (int m = 3; m < k; ++m) {
    const int r = k % m;
    if (m > 2 * r && r > 0) out.push_back(m);
  }
  return out;
}

/// Tiles a cover of P(m,r) across the m-sectors of P(n,k). When m | n the
/// pattern repeats exactly and the size equals (n/m)|base|; otherwise
/// floor(n/m) sectors are tiled and the padding u_{n-r'+1..n},
/// v_{n-k+1..n+k-r'} is added, for a size of at most floor(n/m)|base| + 2k.
inline construction_result tiled_cover(const graph& g, const tiling_params& t,
                                       const cover& base) {
  const int n = g.n(), k = g.k();
  if (t.m >= k || t.r != k % t.m || !(t.m > 2 * t.r && t.r > 0) ||
      t.r_prime != n % t.m) {
    throw domain_error("tiled_cover: invalid tiling parameters");
  }
  if (base.params() != graph_params{t.m, t.r}) {
    throw domain_error("tiled_cover: base cover must be over P(m, k mod m)");
  }
  if (!is_cover(graph({t.m, t.r}), base).ok) {
    throw domain_error("tiled_cover: base is not a cover of P(m, k mod m)");
  }

  std::vector<char> outer_mask(n, 0), inner_mask(n, 0);
  const int sectors = n / t.m;
  for (int s = 0; s < sectors; ++s) {
    for (int j = 1; j <= t.m; ++j) {
      if (base.outer_selected(j)) outer_mask[s * t.m + j - 1] = 1;
      if (base.inner_selected(j)) inner_mask[s * t.m + j - 1] = 1;
    }
  }
  if (t.r_prime == 0) {
    return detail::checked(
        g, construction_method::tiled_exact,
        cover::from_masks(g.params(), std::move(outer_mask),
                          std::move(inner_mask)),
        sectors * base.size(), t.m);
  }
  for (int i = n - t.r_prime + 1; i <= n; ++i) outer_mask[i - 1] = 1;
  for (int i = n - k + 1; i <= n + k - t.r_prime; ++i) {
    inner_mask[g.wrap(i) - 1] = 1;
  }
  return detail::checked(
      g, construction_method::tiled_padded,
      cover::from_masks(g.params(), std::move(outer_mask),
                        std::move(inner_mask)),
      sectors * base.size() + 2 * k, t.m);
}

/// For even k >= 4: tiling with m = k-1 and the minimum cover of P(k-1,1).
/// Size <= n + n/(k-1) when (k-1) | n, else <= n + floor(n/(k-1)) + 2k.
inline construction_result even_k_cover(const graph& g) {
  const int n = g.n(), k = g.k();
  if (k % 2 != 0 || k < 4) {
    throw domain_error("even_k_cover: requires k even, k >= 4");
  }
  const int m = k - 1;
  const cover base = k1_cover(graph({m, 1})).c;  // size m+1 = beta(P(m,1))
  construction_result r = tiled_cover(g, make_tiling(g, m), base);
  const int claimed =
      (n % m == 0) ? n + n / m : n + n / m + 2 * k;
  return detail::checked(g, construction_method::even_k, std::move(r.c),
                         claimed, m);
}

/// The always-available trivial-style cover (all inner + alternating outer)
/// of size n + ceil(n/2). By the paper's definitions it is a trivial cover,
/// so it is never fed to the strip calculus.
inline construction_result fallback_cover(const graph& g) {
  const int n = g.n();
  std::vector<char> outer_mask(n, 0), inner_mask(n, 1);
  for (int i = 1; i <= n; i += 2) outer_mask[i - 1] = 1;
  return detail::checked(
      g, construction_method::fallback,
      cover::from_masks(g.params(), std::move(outer_mask),
                        std::move(inner_mask)),
      n + (n + 1) / 2);
}

/// Transforms a minimum cover into one of equal size whose maximum strip is
/// at most k+1 (k odd) or k+2 (k even). Mirrors the exchange argument of
/// the existence theorem: saturate redundant-vertex deletions, then swap
/// the k-th (or (k+1)-th) strip vertex for the one a further k ahead.
/// Validity and size are re-checked after every step; iterations capped at
/// n^2.
inline cover reduce_strips(const graph& g, const cover& c) {
  const int n = g.n(), k = g.k();
  if (!is_cover(g, c).ok) throw domain_error("reduce_strips: not a cover");
  if (is_trivial(c)) throw domain_error("reduce_strips: trivial cover");
  const int size0 = c.size();
  const int target = (k % 2 == 1) ? k + 1 : k + 2;

  std::vector<char> inner_mask(n, 0);
  for (int i : c.selected_inner_indices()) inner_mask[i - 1] = 1;

  auto complete = [&](const std::vector<char>& im) {
    // Semi-optimal completion of an inner pattern.
    std::vector<char> outer_mask(n, 0);
    for (int i = 0; i < n; ++i)
      if (!im[i]) outer_mask[i] = 1;
    for (const strip& s : detail::circular_runs(im)) {
      for (int t = 1; t <= s.size / 2; ++t) {
        outer_mask[(s.start - 1 + 2 * t - 1) % n] = 1;
      }
    }
    return cover::from_masks(g.params(), std::move(outer_mask),
                             std::vector<char>(im));
  };
  auto at = [&](int i) { return inner_mask[g.wrap(i) - 1] != 0; };

  const int cap = n * n;
  for (int iter = 0; iter <= cap; ++iter) {
    cover cur = complete(inner_mask);
    if (!is_cover(g, cur).ok) {
      throw invariant_error("reduce_strips: completion lost coverage");
    }
    if (cur.size() < size0) {
      throw domain_error("reduce_strips: input cover is not minimum");
    }
    if (cur.size() > size0) {
      throw invariant_error("reduce_strips: size increased");
    }

    auto runs = detail::circular_runs(inner_mask);
    int max_size = 0;
    for (const strip& s : runs) max_size = std::max(max_size, s.size);
    if (max_size <= target) return cur;

    // Deletion pass: a selected inner vertex with both inner neighbors
    // selected is redundant; its twin takes over the spoke.
    bool deleted = false;
    for (int i = 1; i <= n; ++i) {
      if (at(i) && at(i - k) && at(i + k)) {
        inner_mask[i - 1] = 0;
        deleted = true;
        break;
      }
    }
    if (deleted) continue;

    // Exchange on the first maximum strip. After saturation the landing
    // vertex is guaranteed unselected.
    const strip* s = nullptr;
    for (const strip& r : runs) {
      if (r.size == max_size) {
        s = &r;
        break;
      }
    }
    const int shift = (k % 2 == 1) ? k : k + 1;
    const int drop = g.wrap(s->start + shift);
    const int add = g.wrap(s->start + shift + k);
    if (!inner_mask[drop - 1] || inner_mask[add - 1]) {
      throw invariant_error("reduce_strips: exchange preconditions failed");
    }
    inner_mask[drop - 1] = 0;
    inner_mask[add - 1] = 1;
  }
  throw invariant_error("reduce_strips: iteration cap reached");
}

/// Evaluates every construction whose preconditions hold (tilings use
/// recursively constructed bases) and returns the smallest cover found.
/// The fallback always applies, so this never fails.
inline construction_result best_construction(const graph& g) {
  const int n = g.n(), k = g.k();
  construction_result best = fallback_cover(g);
  auto consider = [&](construction_result r) {
    if (r.c.size() < best.c.size()) best = std::move(r);
  };
  // Sharp named constructions first, so they win ties deterministically.
  if (n % 2 == 0 && k % 2 == 1) consider(bipartite_cover(g));
  if (n % 2 == 1 && k % 2 == 1) consider(odd_odd_cover(g));
  if (k == 1 && n % 2 == 1) consider(k1_cover(g));
  if (k % 2 == 0 && k >= 4) consider(even_k_cover(g));
  for (int m : admissible_tilings(k)) {
    const tiling_params t = make_tiling(g, m);
    const cover base = best_construction(graph({t.m, t.r})).c;
    consider(tiled_cover(g, t, base));
  }
  consider(alternating_cycles_cover(g));
  return best;
}

}  // namespace petersen
