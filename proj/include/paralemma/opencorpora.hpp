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
#include <deque>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "paralemma/normalize.hpp"

namespace paralemma {

/// One `<lemma>` of the `<lemmata>` section, normalized.
struct LemmaRecord {
  std::uint64_t id = 0;
  std::string normal_form;
  /// Document order, first occurrence kept. Always contains normal_form.
  std::vector<std::string> inflected_forms;

  friend bool operator==(const LemmaRecord&, const LemmaRecord&) = default;
};

/// Pull parser over an OpenCorpora dictionary XML stream.
///
/// The document is fed to the XML tokenizer in fixed-size chunks, so memory
/// use is bounded by one chunk plus the records it completes, whatever the
/// document size. Everything outside `<lemmata>` is skipped, as are the
/// grammeme children of `<l>` and `<f>`.
///
/// Errors: MalformedXml (with line and column), MissingNormalForm,
/// DuplicateLemmaId.
class LemmataReader {
 public:
  explicit LemmataReader(std::istream& source, NormalizeOptions options = {});
  ~LemmataReader();

  LemmataReader(const LemmataReader&) = delete;
  LemmataReader& operator=(const LemmataReader&) = delete;

  /// Next record in document order, or nullopt at end of document.
  std::optional<LemmaRecord> next();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

/// Collects every record; meant for small inputs and tests.
std::vector<LemmaRecord> parse_lemmata(std::istream& source,
                                       NormalizeOptions options = {});

}  // namespace paralemma
