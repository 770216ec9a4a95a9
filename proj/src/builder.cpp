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

#include "paralemma/builder.hpp"

#include <algorithm>
#include <iostream>
#include <tuple>
#include <unordered_set>

namespace paralemma {

void warn_to_stderr(std::string_view message) {
  std::cerr << "warning: " << message << '\n';
}

DictionaryBuilder::DictionaryBuilder(WarningSink warn)
    : warn_(std::move(warn)) {}

void DictionaryBuilder::add(const LemmaRecord& record) {
  ++records_;
  const LemmaHash hash = murmur3_32(record.normal_form);
  const auto [seen, fresh] = normal_forms_.try_emplace(hash, record.normal_form);
  if (!fresh && seen->second != record.normal_form) {
    ++collisions_;
    if (warn_) {
      warn_("lemma hash collision: \"" + seen->second + "\" and \"" +
            record.normal_form + "\" both hash to " + std::to_string(hash));
    }
  }

  auto& forms = index_[hash];
  for (const std::string& inflected : record.inflected_forms) {
    ++pairs_;
    IndexedForm entry{inflected,
                      paradigms_.intern(
                          extract_paradigm(record.normal_form, inflected))};
    if (std::find(forms.begin(), forms.end(), entry) == forms.end()) {
      forms.push_back(std::move(entry));
    }
  }
}

BuiltIndex build_index(std::span<const LemmaRecord> records,
                       WarningSink warn) {
  DictionaryBuilder builder(std::move(warn));
  for (const LemmaRecord& record : records) builder.add(record);
  return std::move(builder).finish();
}

BuiltIndex build_index(LemmataReader& reader, WarningSink warn) {
  DictionaryBuilder builder(std::move(warn));
  while (auto record = reader.next()) builder.add(*record);
  return std::move(builder).finish();
}

WordMap invert_index(const LemmaIndex& index) {
  using Triple = std::tuple<std::string_view, LemmaHash, ParadigmId>;
  std::vector<Triple> triples;
  for (const auto& [hash, forms] : index) {
    for (const IndexedForm& entry : forms) {
      triples.emplace_back(entry.form, hash, entry.paradigm_id);
    }
  }
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());

  std::vector<WordMap::value_type> entries;
  for (std::size_t k = 0; k < triples.size();) {
    const std::string_view word = std::get<0>(triples[k]);
    WordEntry entry;
    for (; k < triples.size() && std::get<0>(triples[k]) == word; ++k) {
      entry.hashes.push_back(std::get<1>(triples[k]));
      entry.paradigm_ids.push_back(std::get<2>(triples[k]));
    }
    entries.emplace_back(std::string(word), std::move(entry));
  }
  return WordMap::from_entries(std::move(entries));
}

Stats build_stats(const ParadigmTable& paradigms, const WordMap& words) {
  std::unordered_set<LemmaHash> lemmas;
  for (const auto& [word, entry] : words) {
    lemmas.insert(entry.hashes.begin(), entry.hashes.end());
  }
  return {lemmas.size(), paradigms.size(), words.size()};
}

std::string format_stats(const Stats& stats) {
  return "lemmas=" + std::to_string(stats.lemma_count) +
         " paradigms=" + std::to_string(stats.paradigm_count) +
         " forms=" + std::to_string(stats.word_form_count);
}

}  // namespace paralemma
