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

#include <optional>
#include <string>
#include <vector>

#include "petersen/solve.hpp"

namespace petersen {

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

/// The conjectured universal upper bound n + ceil(n/5).
inline int conjecture_value(graph_params p) { return p.n + ceil_div(p.n, 5); }

/// Best closed-form lower bound: the spoke matching gives n; odd n gives
/// n + ((n,k)+1)/2 and n + 1; and n + 2 applies unless n even with k odd,
/// n odd with k = 1, or (n,k) = (5,2).
inline int lower_bound(graph_params p) {
  require_admissible(p);
  const int n = p.n, k = p.k;
  int lo = n;
  if (n % 2 == 1) {
    const int g = std::gcd(n, k);
    lo = std::max(lo, n + (g + 1) / 2);
    lo = std::max(lo, n + 1);
  }
  const bool beta_n = n % 2 == 0 && k % 2 == 1;
  const bool beta_n1 = (n % 2 == 1 && k == 1) || (n == 5 && k == 2);
  if (!beta_n && !beta_n1) lo = std::max(lo, n + 2);
  return lo;
}

enum class bound_method {
  bipartite,
  k1,
  odd_odd,
  alternating_cycles,
  even_k,
  tiled,
  trivial,
};

inline const char* to_string(bound_method m) {
  switch (m) {
    case bound_method::bipartite: return "bipartite";
    case bound_method::k1: return "k1";
    case bound_method::odd_odd: return "odd_odd";
    case bound_method::alternating_cycles: return "alternating_cycles";
    case bound_method::even_k: return "even_k";
    case bound_method::tiled: return "tiled";
    case bound_method::trivial: return "trivial";
  }
  return "?";
}

struct upper_bound_entry {
  bound_method method;
  int value = 0;
  int tile_m = 0;  ///< sector size for tiled entries, else 0

  std::string label() const {
    std::string s = to_string(method);
    if (tile_m > 0 && method == bound_method::tiled) {
      s += "(m=" + std::to_string(tile_m) + ")";
    }
    return s;
  }
};

enum class formula_kind {
  k1,
  k2,
  k3,
  even_n_odd_k,
  odd_odd_divides,
  n_eq_2k_plus_1,
};

inline const char* to_string(formula_kind f) {
  switch (f) {
    case formula_kind::k1: return "k1";
    case formula_kind::k2: return "k2";
    case formula_kind::k3: return "k3";
    case formula_kind::even_n_odd_k: return "even_n_odd_k";
    case formula_kind::odd_odd_divides: return "odd_odd_divides";
    case formula_kind::n_eq_2k_plus_1: return "n_eq_2k_plus_1";
  }
  return "?";
}

struct exact_value {
  int value = 0;
  formula_kind formula = formula_kind::k1;
};

/// The exact value of beta when a closed formula applies: k in {1,2,3};
/// n even with k odd; n,k both odd with k | n; n = 2k+1. All applicable
/// formulas are evaluated and must agree.
inline std::optional<exact_value> exact_formula(graph_params p) {
  require_admissible(p);
  const int n = p.n, k = p.k;
  std::vector<exact_value> hits;
  if (k == 1) hits.push_back({n % 2 == 0 ? n : n + 1, formula_kind::k1});
  if (k == 2) hits.push_back({n + ceil_div(n, 5), formula_kind::k2});
  if (k == 3) hits.push_back({n % 2 == 0 ? n : n + 2, formula_kind::k3});
  if (n % 2 == 0 && k % 2 == 1) hits.push_back({n, formula_kind::even_n_odd_k});
  if (n % 2 == 1 && k % 2 == 1 && n % k == 0) {
    hits.push_back({n + (k + 1) / 2, formula_kind::odd_odd_divides});
  }
  if (n == 2 * k + 1) {
    hits.push_back({n + ceil_div(n, 5), formula_kind::n_eq_2k_plus_1});
  }
  if (hits.empty()) return std::nullopt;
  for (const exact_value& h : hits) {
    if (h.value != hits.front().value) {
      throw invariant_error("exact_formula: applicable formulas disagree on P(" +
                            std::to_string(n) + "," + std::to_string(k) + ")");
    }
  }
  return hits.front();
}

/// Every applicable closed-form upper bound. The trivial n + ceil(n/2)
/// always applies, so the list is never empty. Tiled entries evaluate
/// beta(P(m, k mod m)) by formula when available, otherwise by the solver
/// (sector sizes shrink strictly, so the recursion is bounded).
inline std::vector<upper_bound_entry> upper_bounds(graph_params p) {
  require_admissible(p);
  const int n = p.n, k = p.k;
  const int g = std::gcd(n, k);
  std::vector<upper_bound_entry> out;

  if (n % 2 == 0 && k % 2 == 1) out.push_back({bound_method::bipartite, n});
  if (k == 1 && n % 2 == 1) out.push_back({bound_method::k1, n + 1});
  if (n % 2 == 1 && k % 2 == 1) {
    out.push_back({bound_method::odd_odd, n + (k + 1) / 2});
  }
  {
    const bool odd_len = (n / g) % 2 == 1;
    const int v = odd_len ? n + (n + g) / 4 : n + n / 4;
    out.push_back({bound_method::alternating_cycles, v});
  }
  if (k % 2 == 0 && k >= 4) {
    const int m = k - 1;
    const int v = (n % m == 0) ? n + n / m : n + n / m + 2 * k;
    out.push_back({bound_method::even_k, v});
  }
  for (int m : admissible_tilings(k)) {
    const int r = k % m;
    int beta_mr;
    if (auto f = exact_formula({m, r})) {
      beta_mr = f->value;
    } else {
      beta_mr = beta_exact(graph({m, r})).beta;
    }
    const int v = (n % m == 0) ? (n / m) * beta_mr
                               : (n / m) * beta_mr + 2 * k;
    out.push_back({bound_method::tiled, v, m});
  }
  out.push_back({bound_method::trivial, n + ceil_div(n, 2)});
  return out;
}

/// Consolidated report for one (n,k): the lower bound, all upper bounds,
/// the exact value when a formula applies, and the conjecture value.
struct bound_report {
  graph_params params;
  int lower = 0;
  std::vector<upper_bound_entry> uppers;
  std::optional<exact_value> exact;
  int conjecture = 0;

  int min_upper() const {
    int m = uppers.front().value;
    for (const auto& u : uppers) m = std::min(m, u.value);
    return m;
  }
};

inline bound_report make_bound_report(graph_params p) {
  bound_report r{p, lower_bound(p), upper_bounds(p), exact_formula(p),
                 conjecture_value(p)};
  if (r.lower > r.min_upper()) {
    throw invariant_error("bound_report: lower bound exceeds an upper bound");
  }
  if (r.exact && (r.exact->value < r.lower || r.exact->value > r.min_upper())) {
    throw invariant_error("bound_report: exact value escapes the sandwich");
  }
  return r;
}

}  // namespace petersen
