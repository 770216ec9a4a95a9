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

#include "paralemma/paradigm.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "paralemma/errors.hpp"
#include "paralemma/utf8.hpp"

namespace paralemma {
namespace {

bool is_continuation(char c) noexcept {
  return (static_cast<std::uint8_t>(c) & 0xC0) == 0x80;
}

// Byte offset after skipping `count` code points from the front, or npos.
std::size_t skip_front(std::string_view text, std::size_t count) noexcept {
  std::size_t pos = 0;
  for (std::size_t k = 0; k < count; ++k) {
    if (pos >= text.size()) return std::string_view::npos;
    ++pos;
    while (pos < text.size() && is_continuation(text[pos])) ++pos;
  }
  return pos;
}

// Byte offset of the start of the last `count` code points, or npos.
std::size_t skip_back(std::string_view text, std::size_t count) noexcept {
  std::size_t pos = text.size();
  for (std::size_t k = 0; k < count; ++k) {
    if (pos == 0) return std::string_view::npos;
    --pos;
    while (pos > 0 && is_continuation(text[pos])) --pos;
  }
  return pos;
}

}  // namespace

std::string to_string(const Paradigm& p) {
  return "(" + std::to_string(p.cut_prefix) + "," +
         std::to_string(p.cut_suffix) + ",\"" + p.add_prefix + "\",\"" +
         p.add_suffix + "\")";
}

std::ostream& operator<<(std::ostream& out, const Paradigm& paradigm) {
  return out << to_string(paradigm);
}

std::string apply_paradigm(const Paradigm& paradigm, std::string_view form) {
  const std::size_t begin = skip_front(form, paradigm.cut_prefix);
  const std::size_t end = skip_back(form, paradigm.cut_suffix);
  if (begin == std::string_view::npos || end == std::string_view::npos ||
      begin > end) {
    throw CutExceedsLength("paradigm " + to_string(paradigm) +
                           " cuts more than the " +
                           std::to_string(utf8::length(form)) +
                           " code points of \"" + std::string(form) + "\"");
  }
  std::string result;
  result.reserve(paradigm.add_prefix.size() + (end - begin) +
                 paradigm.add_suffix.size());
  result.append(paradigm.add_prefix);
  result.append(form.substr(begin, end - begin));
  result.append(paradigm.add_suffix);
  return result;
}

CommonSubstring longest_common_substring(std::u32string_view a,
                                         std::u32string_view b) {
  CommonSubstring best;
  if (a.empty() || b.empty()) return best;

  // Two DP rows; words are short enough to keep them on the stack.
  constexpr std::size_t kInlineRow = 64;
  std::array<std::uint32_t, 2 * kInlineRow> inline_rows;
  std::vector<std::uint32_t> heap_rows;
  std::span<std::uint32_t> rows(inline_rows);
  if (b.size() + 1 > kInlineRow) {
    heap_rows.resize(2 * (b.size() + 1));
    rows = heap_rows;
  }
  // run[j + 1] holds the length of the common run ending at a[i], b[j].
  std::span<std::uint32_t> prev = rows.subspan(0, b.size() + 1);
  std::span<std::uint32_t> run = rows.subspan(b.size() + 1, b.size() + 1);
  std::fill(prev.begin(), prev.end(), 0);
  run[0] = 0;

  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      run[j + 1] = a[i] == b[j] ? prev[j] + 1 : 0;
      // Strict comparison keeps the earliest end in `a`, then in `b`.
      if (run[j + 1] > best.length) {
        best.length = run[j + 1];
        best.start_a = i + 1 - best.length;
        best.start_b = j + 1 - best.length;
      }
    }
    std::swap(prev, run);
  }
  return best;
}

CommonSubstring longest_common_substring(std::string_view a,
                                         std::string_view b) {
  return longest_common_substring(std::u32string_view(utf8::decode(a)),
                                  std::u32string_view(utf8::decode(b)));
}

Paradigm extract_paradigm(std::string_view normal, std::string_view inflected) {
  const std::u32string n = utf8::decode(normal);
  const std::u32string i = utf8::decode(inflected);
  const CommonSubstring common = longest_common_substring(n, i);

  Paradigm p;
  if (common.length == 0) {
    p.cut_suffix = static_cast<std::uint32_t>(i.size());
    p.add_suffix = std::string(normal);
    return p;
  }
  const std::u32string_view nv(n);
  p.cut_prefix = static_cast<std::uint32_t>(common.start_b);
  p.cut_suffix =
      static_cast<std::uint32_t>(i.size() - common.start_b - common.length);
  p.add_prefix = utf8::encode(nv.substr(0, common.start_a));
  p.add_suffix = utf8::encode(nv.substr(common.start_a + common.length));
  return p;
}

}  // namespace paralemma

std::size_t std::hash<paralemma::Paradigm>::operator()(
    const paralemma::Paradigm& p) const noexcept {
  std::size_t seed = std::hash<std::string>{}(p.add_suffix);
  auto mix = [&seed](std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  };
  mix(std::hash<std::string>{}(p.add_prefix));
  mix(p.cut_prefix);
  mix(p.cut_suffix);
  return seed;
}
