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

#include "paralemma/dictionary.hpp"

#include <algorithm>
#include <iterator>

#include "paralemma/errors.hpp"

namespace paralemma {

Dictionary::Dictionary(ParadigmTable paradigms, WordMap words,
                       NormalizeOptions options)
    : paradigms_(std::move(paradigms)),
      words_(std::move(words)),
      options_(options) {
  for (const auto& [word, entry] : words_) {
    for (ParadigmId id : entry.paradigm_ids) {
      if (!paradigms_.contains(id)) {
        throw DanglingParadigmId("word form \"" + word +
                                 "\" references unknown paradigm " +
                                 std::to_string(id));
      }
    }
  }
}

Dictionary Dictionary::load(std::istream& source, NormalizeOptions options) {
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(source)),
                                  std::istreambuf_iterator<char>());
  if (source.bad()) throw IoError("read error on dictionary");
  return from_bytes(bytes, options);
}

Dictionary Dictionary::from_bytes(std::span<const std::uint8_t> bytes,
                                  NormalizeOptions options) {
  DictionaryContents contents = deserialize(bytes);
  return Dictionary(std::move(contents.paradigms), std::move(contents.words),
                    options);
}

const WordEntry* Dictionary::lookup(std::string_view word,
                                    std::string& normalized) const {
  try {
    normalized = normalize_token(word, options_);
  } catch (const EmptyToken&) {
    return nullptr;
  } catch (const WhitespaceInToken&) {
    return nullptr;
  } catch (const InvalidUtf8&) {
    return nullptr;
  }
  return words_.find(normalized);
}

std::vector<LemmaCandidate> Dictionary::lemmatize(std::string_view word) const {
  std::string normalized;
  const WordEntry* entry = lookup(word, normalized);
  if (entry == nullptr) return {};

  std::vector<LemmaCandidate> candidates;
  for (std::size_t j = 0; j < entry->size(); ++j) {
    const ParadigmId id = entry->paradigm_ids[j];
    std::string lemma;
    try {
      lemma = apply_paradigm(paradigms_.at(id), normalized);
    } catch (const CutExceedsLength& e) {
      throw ConsistencyError("word form \"" + normalized + "\": " + e.what());
    }
    const LemmaHash stored = entry->hashes[j];
    if (murmur3_32(lemma) != stored) {
      throw ConsistencyError("word form \"" + normalized + "\" rebuilds \"" +
                             lemma + "\" with paradigm " + std::to_string(id) +
                             ", whose hash does not match the stored " +
                             std::to_string(stored));
    }
    const bool duplicate = std::any_of(
        candidates.begin(), candidates.end(),
        [&lemma](const LemmaCandidate& c) { return c.lemma == lemma; });
    if (!duplicate) candidates.push_back({std::move(lemma), stored, id});
  }
  return candidates;
}

std::vector<LemmaHash> Dictionary::lemma_hashes(std::string_view word) const {
  std::string normalized;
  const WordEntry* entry = lookup(word, normalized);
  if (entry == nullptr) return {};
  std::vector<LemmaHash> hashes;
  // Sorted storage puts equal hashes next to each other.
  std::unique_copy(entry->hashes.begin(), entry->hashes.end(),
                   std::back_inserter(hashes));
  return hashes;
}

}  // namespace paralemma
