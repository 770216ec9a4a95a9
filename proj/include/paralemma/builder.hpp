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
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "paralemma/murmur3.hpp"
#include "paralemma/opencorpora.hpp"
#include "paralemma/paradigm_table.hpp"
#include "paralemma/word_map.hpp"

namespace paralemma {

struct IndexedForm {
  std::string form;
  ParadigmId paradigm_id = 0;

  friend bool operator==(const IndexedForm&, const IndexedForm&) = default;
};

/// Lemma hash -> the (inflected form, paradigm id) pairs of that lemma,
/// unique, in insertion order.
using LemmaIndex = std::unordered_map<LemmaHash, std::vector<IndexedForm>>;

using WarningSink = std::function<void(std::string_view)>;

/// Writes the message to standard error.
void warn_to_stderr(std::string_view message);

struct BuiltIndex {
  ParadigmTable paradigms;
  LemmaIndex index;
};

/// Interns the paradigm of every (normal form, inflected form) pair and files
/// the pair under the hash of the normal form. Records must be fed in a
/// deterministic order for ids to be reproducible.
class DictionaryBuilder {
 public:
  explicit DictionaryBuilder(WarningSink warn = warn_to_stderr);

  void add(const LemmaRecord& record);

  const ParadigmTable& paradigms() const noexcept { return paradigms_; }
  const LemmaIndex& index() const noexcept { return index_; }

  std::size_t record_count() const noexcept { return records_; }
  std::size_t pair_count() const noexcept { return pairs_; }
  std::size_t collision_count() const noexcept { return collisions_; }

  BuiltIndex finish() && { return {std::move(paradigms_), std::move(index_)}; }

 private:
  WarningSink warn_;
  ParadigmTable paradigms_;
  LemmaIndex index_;
  // First normal form seen per hash, to report collisions.
  std::unordered_map<LemmaHash, std::string> normal_forms_;
  std::size_t records_ = 0;
  std::size_t pairs_ = 0;
  std::size_t collisions_ = 0;
};

BuiltIndex build_index(std::span<const LemmaRecord> records,
                       WarningSink warn = warn_to_stderr);
BuiltIndex build_index(LemmataReader& reader,
                       WarningSink warn = warn_to_stderr);

/// Regroups the index by word form; pairs within an entry are sorted by
/// (hash, paradigm id) and deduplicated.
WordMap invert_index(const LemmaIndex& index);

struct Stats {
  std::size_t lemma_count = 0;
  std::size_t paradigm_count = 0;
  std::size_t word_form_count = 0;

  friend bool operator==(const Stats&, const Stats&) = default;
};

/// lemma_count counts distinct lemma hashes referenced by `words`.
Stats build_stats(const ParadigmTable& paradigms, const WordMap& words);

std::string format_stats(const Stats& stats);

}  // namespace paralemma
