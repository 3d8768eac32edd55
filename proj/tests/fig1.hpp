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

#include "petersen/cover.hpp"

namespace fig1 {

// The size-21 vertex cover of P(16,5) used as the running worked example:
// 10 outer and 11 inner vertices, strips {v16..v4}, {v7,v8}, {v10,v11,v12},
// {v14}.
inline petersen::cover cover_p16_5() {
  return petersen::cover({16, 5},
                         /*outer*/ {2, 3, 5, 6, 7, 9, 11, 13, 15, 16},
                         /*inner*/ {1, 2, 3, 4, 7, 8, 10, 11, 12, 14, 16});
}

}  // namespace fig1
