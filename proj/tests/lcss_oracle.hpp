// Copyright 2026 The Paralemma Authors
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

// Brute-force longest common substring, kept independent of the DP in
// src/paradigm.cpp: tries every length from longest to shortest and every
// pair of windows, so the first hit is the longest match with the smallest
// start in `a`, then in `b`.
#pragma once

#include <algorithm>
#include <string_view>

#include "paralemma/paradigm.hpp"

namespace paralemma::testing {

inline CommonSubstring brute_force_lcss(std::u32string_view a,
                                        std::u32string_view b) {
  for (std::size_t len = std::min(a.size(), b.size()); len > 0; --len) {
    for (std::size_t sa = 0; sa + len <= a.size(); ++sa) {
      for (std::size_t sb = 0; sb + len <= b.size(); ++sb) {
        if (a.substr(sa, len) == b.substr(sb, len)) return {sa, sb, len};
      }
    }
  }
  return {0, 0, 0};
}

}  // namespace paralemma::testing
