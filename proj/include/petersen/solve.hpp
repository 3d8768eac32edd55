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

#include "petersen/constructions.hpp"
#include "petersen/solver.hpp"

namespace petersen {

/// Exact minimum vertex cover with the branch-and-bound solver, warm-started
/// from the best available construction unless the caller supplies an
/// incumbent.
inline beta_result beta_exact(const graph& g, solve_options opts = {}) {
  if (!opts.warm_start) opts.warm_start = best_construction(g).c;
  return branch_and_bound(g, opts);
}

}  // namespace petersen
