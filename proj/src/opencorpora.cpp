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

#include "paralemma/opencorpora.hpp"

#include <expat.h>

#include <algorithm>
#include <charconv>
#include <cstring>
#include <exception>
#include <string_view>
#include <unordered_set>

#include "paralemma/errors.hpp"

namespace paralemma {
namespace {

constexpr std::size_t kChunkSize = 64 * 1024;

// Ids below this limit live in a bitmap (at most 8 MiB); OpenCorpora ids are
// dense and well under it. Larger ids fall back to a hash set.
constexpr std::uint64_t kBitmapLimit = std::uint64_t{1} << 26;

class IdSet {
 public:
  /// Returns false when `id` was already present.
  bool insert(std::uint64_t id) {
    if (id < kBitmapLimit) {
      if (id >= bits_.size()) {
        bits_.resize(std::min<std::uint64_t>(
            kBitmapLimit, std::max<std::uint64_t>(id + 1, bits_.size() * 2)));
      }
      if (bits_[id]) return false;
      bits_[id] = true;
      return true;
    }
    return sparse_.insert(id).second;
  }

 private:
  std::vector<bool> bits_;
  std::unordered_set<std::uint64_t> sparse_;
};

const char* find_attribute(const XML_Char** attrs, std::string_view name) {
  for (std::size_t k = 0; attrs[k] != nullptr; k += 2) {
    if (name == attrs[k]) return attrs[k + 1];
  }
  return nullptr;
}

}  // namespace

struct LemmataReader::State {
  std::istream& source;
  NormalizeOptions options;
  XML_Parser parser = nullptr;
  std::vector<char> buffer = std::vector<char>(kChunkSize);
  std::deque<LemmaRecord> ready;
  bool finished = false;
  std::exception_ptr pending;

  // Element nesting depth, and the depth of the open <lemmata>, <lemma>.
  std::size_t depth = 0;
  std::size_t lemmata_depth = 0;
  std::size_t lemma_depth = 0;
  std::optional<LemmaRecord> current;
  bool has_normal_form = false;
  std::unordered_set<std::string> current_forms;
  IdSet seen_ids;

  State(std::istream& in, NormalizeOptions opts) : source(in), options(opts) {
    parser = XML_ParserCreate("UTF-8");
    if (parser == nullptr) throw std::bad_alloc();
    XML_SetUserData(parser, this);
    XML_SetElementHandler(parser, &State::on_start, &State::on_end);
  }

  ~State() { XML_ParserFree(parser); }

  std::size_t line() const { return XML_GetCurrentLineNumber(parser); }
  std::size_t column() const { return XML_GetCurrentColumnNumber(parser) + 1; }

  [[noreturn]] void fail(const std::string& what) const {
    throw MalformedXml(what, line(), column());
  }

  std::string normalized_attribute(const XML_Char** attrs,
                                   std::string_view element) {
    const char* raw = find_attribute(attrs, "t");
    if (raw == nullptr) fail("<" + std::string(element) + "> without t");
    try {
      return normalize_token(raw, options);
    } catch (const Error& e) {
      fail("bad form in <" + std::string(element) + ">: " + e.what());
    }
  }

  void add_form(std::string form) {
    if (current_forms.insert(form).second) {
      current->inflected_forms.push_back(std::move(form));
    }
  }

  void start(const XML_Char* name, const XML_Char** attrs) {
    ++depth;
    const std::string_view element(name);
    if (lemmata_depth == 0) {
      if (element == "lemmata") lemmata_depth = depth;
      return;
    }
    if (lemma_depth == 0) {
      if (depth == lemmata_depth + 1 && element == "lemma") open_lemma(attrs);
      return;
    }
    if (depth != lemma_depth + 1) return;
    if (element == "l") {
      if (has_normal_form) return;
      current->normal_form = normalized_attribute(attrs, element);
      has_normal_form = true;
    } else if (element == "f") {
      add_form(normalized_attribute(attrs, element));
    }
  }

  void open_lemma(const XML_Char** attrs) {
    const char* id_text = find_attribute(attrs, "id");
    if (id_text == nullptr) fail("<lemma> without id");
    const std::string_view id_view(id_text);
    std::uint64_t id = 0;
    const auto [ptr, ec] =
        std::from_chars(id_view.data(), id_view.data() + id_view.size(), id);
    if (ec != std::errc() || ptr != id_view.data() + id_view.size() ||
        id_view.empty()) {
      fail("<lemma> id \"" + std::string(id_view) +
           "\" is not a non-negative integer");
    }
    if (!seen_ids.insert(id)) {
      throw DuplicateLemmaId("lemma id " + std::to_string(id) +
                             " repeats at line " + std::to_string(line()));
    }
    lemma_depth = depth;
    current.emplace();
    current->id = id;
    has_normal_form = false;
    current_forms.clear();
  }

  void close_lemma() {
    if (!has_normal_form) {
      throw MissingNormalForm("lemma id " + std::to_string(current->id) +
                              " has no <l> element (line " +
                              std::to_string(line()) + ")");
    }
    LemmaRecord record = std::move(*current);
    current.reset();
    lemma_depth = 0;
    auto& forms = record.inflected_forms;
    if (std::find(forms.begin(), forms.end(), record.normal_form) ==
        forms.end()) {
      forms.insert(forms.begin(), record.normal_form);
    }
    ready.push_back(std::move(record));
  }

  void end() {
    if (lemma_depth != 0 && depth == lemma_depth) {
      close_lemma();
    } else if (lemmata_depth != 0 && depth == lemmata_depth) {
      lemmata_depth = 0;
    }
    --depth;
  }

  // Expat is C: exceptions are parked and rethrown after XML_Parse returns.
  static void XMLCALL on_start(void* user, const XML_Char* name,
                               const XML_Char** attrs) {
    auto* self = static_cast<State*>(user);
    try {
      self->start(name, attrs);
    } catch (...) {
      self->pending = std::current_exception();
      XML_StopParser(self->parser, XML_FALSE);
    }
  }

  static void XMLCALL on_end(void* user, const XML_Char*) {
    auto* self = static_cast<State*>(user);
    try {
      self->end();
    } catch (...) {
      self->pending = std::current_exception();
      XML_StopParser(self->parser, XML_FALSE);
    }
  }

  void feed() {
    source.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    const std::streamsize got = source.gcount();
    if (source.bad()) throw IoError("read error on dictionary XML");
    const bool last = got == 0 || source.eof();
    const XML_Status status =
        XML_Parse(parser, buffer.data(), static_cast<int>(got), last);
    if (pending) {
      finished = true;
      std::rethrow_exception(std::exchange(pending, nullptr));
    }
    if (status != XML_STATUS_OK) {
      finished = true;
      fail(XML_ErrorString(XML_GetErrorCode(parser)));
    }
    if (last) finished = true;
  }
};

LemmataReader::LemmataReader(std::istream& source, NormalizeOptions options)
    : state_(std::make_unique<State>(source, options)) {}

LemmataReader::~LemmataReader() = default;

std::optional<LemmaRecord> LemmataReader::next() {
  while (state_->ready.empty() && !state_->finished) state_->feed();
  if (state_->ready.empty()) return std::nullopt;
  LemmaRecord record = std::move(state_->ready.front());
  state_->ready.pop_front();
  return record;
}

std::vector<LemmaRecord> parse_lemmata(std::istream& source,
                                       NormalizeOptions options) {
  LemmataReader reader(source, options);
  std::vector<LemmaRecord> records;
  while (auto record = reader.next()) records.push_back(std::move(*record));
  return records;
}

}  // namespace paralemma
