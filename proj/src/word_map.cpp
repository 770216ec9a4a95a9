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

#include "paralemma/word_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace paralemma {

WordMap WordMap::from_entries(std::vector<value_type> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const value_type& a, const value_type& b) {
              return a.first < b.first;
            });
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& [word, entry] = entries[k];
    if (k > 0 && entries[k - 1].first == word) {
      throw std::invalid_argument("word form \"" + word + "\" appears twice");
    }
    if (entry.hashes.empty() ||
        entry.hashes.size() != entry.paradigm_ids.size()) {
      throw std::invalid_argument("word form \"" + word +
                                  "\" has empty or unequal hash/paradigm lists");
    }
    for (std::size_t j = 1; j < entry.size(); ++j) {
      const auto prev = std::pair(entry.hashes[j - 1], entry.paradigm_ids[j - 1]);
      const auto cur = std::pair(entry.hashes[j], entry.paradigm_ids[j]);
      if (!(prev < cur)) {
        throw std::invalid_argument("word form \"" + word +
                                    "\" has unsorted or repeated pairs");
      }
    }
  }
  WordMap map;
  map.entries_ = std::move(entries);
  return map;
}

const WordEntry* WordMap::find(std::string_view word) const noexcept {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), word,
      [](const value_type& entry, std::string_view key) {
        return std::string_view(entry.first) < key;
      });
  if (it == entries_.end() || it->first != word) return nullptr;
  return &it->second;
}

}  // namespace paralemma
