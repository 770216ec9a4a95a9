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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace paralemma {

using ParadigmId = std::uint32_t;

/// A string rewrite that turns an inflected form into its lemma: drop
/// `cut_prefix` code points on the left and `cut_suffix` on the right, then
/// wrap the remainder in `add_prefix` and `add_suffix`.
struct Paradigm {
  std::uint32_t cut_prefix = 0;
  std::uint32_t cut_suffix = 0;
  std::string add_prefix;
  std::string add_suffix;

  bool is_identity() const noexcept {
    return cut_prefix == 0 && cut_suffix == 0 && add_prefix.empty() &&
           add_suffix.empty();
  }

  friend bool operator==(const Paradigm&, const Paradigm&) = default;
  friend auto operator<=>(const Paradigm&, const Paradigm&) = default;
};

/// Renders `(2,1,"","ть")`.
std::string to_string(const Paradigm& paradigm);
std::ostream& operator<<(std::ostream& out, const Paradigm& paradigm);

/// Rewrites `form` (UTF-8) with `paradigm`. Throws CutExceedsLength when the
/// form has fewer code points than cut_prefix + cut_suffix.
std::string apply_paradigm(const Paradigm& paradigm, std::string_view form);

/// Position of a longest common substring, in code points.
struct CommonSubstring {
  std::size_t start_a = 0;
  std::size_t start_b = 0;
  std::size_t length = 0;

  friend bool operator==(const CommonSubstring&,
                         const CommonSubstring&) = default;
};

/// Among maximal-length matches the smallest start_a wins, then the smallest
/// start_b. Returns {0, 0, 0} when the strings share no code point.
CommonSubstring longest_common_substring(std::u32string_view a,
                                         std::u32string_view b);
CommonSubstring longest_common_substring(std::string_view a,
                                         std::string_view b);

/// The paradigm that rewrites `inflected` into `normal`, anchored on their
/// longest common substring. Without a common code point the whole
/// inflected form is cut and the whole normal form added as suffix.
Paradigm extract_paradigm(std::string_view normal, std::string_view inflected);

}  // namespace paralemma

template <>
struct std::hash<paralemma::Paradigm> {
  std::size_t operator()(const paralemma::Paradigm& p) const noexcept;
};
