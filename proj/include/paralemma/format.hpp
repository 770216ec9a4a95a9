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

#include <cstdint>
#include <ostream>
#include <span>

#include "paralemma/paradigm_table.hpp"
#include "paralemma/word_map.hpp"

namespace paralemma {

// A compiled dictionary is two MessagePack maps back to back:
//
//   1. paradigm id (uint) -> [cut_prefix, cut_suffix, add_prefix, add_suffix]
//   2. word form (str)    -> [[lemma hash, ...], [paradigm id, ...]]
//
// Writers emit ids ascending and word forms in ascending byte order; readers
// accept any order.

struct DictionaryContents {
  ParadigmTable paradigms;
  WordMap words;

  friend bool operator==(const DictionaryContents&,
                         const DictionaryContents&) = default;
};

/// Throws IoError when the stream fails.
void serialize(const ParadigmTable& paradigms, const WordMap& words,
               std::ostream& sink);

/// Throws FormatError for anything other than exactly two well-shaped maps,
/// and DanglingParadigmId when section 2 references an id missing from
/// section 1.
DictionaryContents deserialize(std::span<const std::uint8_t> bytes);

}  // namespace paralemma
