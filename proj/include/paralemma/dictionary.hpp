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
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paralemma/builder.hpp"
#include "paralemma/format.hpp"
#include "paralemma/normalize.hpp"

namespace paralemma {

struct LemmaCandidate {
  std::string lemma;
  LemmaHash lemma_hash = 0;
  ParadigmId paradigm_id = 0;

  friend bool operator==(const LemmaCandidate&,
                         const LemmaCandidate&) = default;
};

/// A loaded, immutable dictionary. Queries are const and may run from any
/// number of threads.
///
/// Query words go through normalize_token with the options given here; they
/// must match the options the dictionary was compiled with, since the file
/// does not record them.
class Dictionary {
 public:
  /// Throws DanglingParadigmId when `words` references a missing paradigm.
  Dictionary(ParadigmTable paradigms, WordMap words,
             NormalizeOptions options = {});

  static Dictionary load(std::istream& source, NormalizeOptions options = {});
  static Dictionary from_bytes(std::span<const std::uint8_t> bytes,
                               NormalizeOptions options = {});

  /// Lemmas of `word` in stored order, one candidate per distinct lemma.
  /// Unknown or unnormalizable words give an empty list. Throws
  /// ConsistencyError when a stored pair does not rebuild a lemma with the
  /// stored hash.
  std::vector<LemmaCandidate> lemmatize(std::string_view word) const;

  /// Distinct lemma hashes of `word` in stored order, without rebuilding
  /// lemma strings.
  std::vector<LemmaHash> lemma_hashes(std::string_view word) const;

  const ParadigmTable& paradigms() const noexcept { return paradigms_; }
  const WordMap& words() const noexcept { return words_; }
  const NormalizeOptions& options() const noexcept { return options_; }
  Stats stats() const { return build_stats(paradigms_, words_); }

 private:
  const WordEntry* lookup(std::string_view word, std::string& normalized) const;

  ParadigmTable paradigms_;
  WordMap words_;
  NormalizeOptions options_;
};

}  // namespace paralemma
