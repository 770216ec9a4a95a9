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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paralemma/murmur3.hpp"
#include "paralemma/paradigm.hpp"

namespace paralemma {

/// Parallel lists: paradigm_ids[j] rewrites the word form into the lemma
/// whose hash is hashes[j]. Pairs are unique and ascending by
/// (hash, paradigm id).
struct WordEntry {
  std::vector<LemmaHash> hashes;
  std::vector<ParadigmId> paradigm_ids;

  std::size_t size() const noexcept { return hashes.size(); }

  friend bool operator==(const WordEntry&, const WordEntry&) = default;
};

/// Word form -> WordEntry, stored as a vector sorted by the UTF-8 bytes of
/// the key.
class WordMap {
 public:
  using value_type = std::pair<std::string, WordEntry>;
  using const_iterator = std::vector<value_type>::const_iterator;

  WordMap() = default;

  /// Sorts `entries` by key. Throws std::invalid_argument on a repeated key,
  /// an entry whose lists are empty or of unequal length, or pairs that are
  /// not strictly ascending.
  static WordMap from_entries(std::vector<value_type> entries);

  const WordEntry* find(std::string_view word) const noexcept;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const_iterator begin() const noexcept { return entries_.begin(); }
  const_iterator end() const noexcept { return entries_.end(); }

  friend bool operator==(const WordMap&, const WordMap&) = default;

 private:
  std::vector<value_type> entries_;
};

}  // namespace paralemma
