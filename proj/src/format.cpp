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

#include "paralemma/format.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

#include "paralemma/errors.hpp"
#include "paralemma/msgpack.hpp"
#include "paralemma/utf8.hpp"

namespace paralemma {
namespace {

template <typename T>
T narrow(std::uint64_t value, const char* what) {
  if (value > std::numeric_limits<T>::max()) {
    throw FormatError(std::string(what) + " " + std::to_string(value) +
                      " is out of range");
  }
  return static_cast<T>(value);
}

// Every element takes at least one byte, which bounds declared sizes before
// anything is allocated.
std::size_t checked_size(const msgpack::Reader& reader, std::size_t size) {
  if (size > reader.remaining()) {
    throw FormatError("declared size " + std::to_string(size) +
                      " exceeds the remaining " +
                      std::to_string(reader.remaining()) + " bytes");
  }
  return size;
}

std::string read_text(msgpack::Reader& reader, const char* what) {
  const std::string_view text = reader.str();
  if (!utf8::is_valid(text)) {
    throw FormatError(std::string(what) + " is not valid UTF-8");
  }
  return std::string(text);
}

ParadigmTable read_paradigms(msgpack::Reader& reader) {
  const std::size_t count = checked_size(reader, reader.map_header());
  std::vector<Paradigm> paradigms(count);
  std::vector<bool> seen(count, false);
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint64_t id = reader.uint();
    if (id >= count || seen[id]) {
      throw FormatError("paradigm ids must be unique and dense in 0.." +
                        std::to_string(count) + ", found " +
                        std::to_string(id));
    }
    seen[id] = true;
    if (reader.array_header() != 4) {
      throw FormatError("paradigm " + std::to_string(id) +
                        " is not a 4-element array");
    }
    Paradigm& p = paradigms[id];
    p.cut_prefix = narrow<std::uint32_t>(reader.uint(), "cut_prefix");
    p.cut_suffix = narrow<std::uint32_t>(reader.uint(), "cut_suffix");
    p.add_prefix = read_text(reader, "add_prefix");
    p.add_suffix = read_text(reader, "add_suffix");
  }
  try {
    return ParadigmTable::from_paradigms(std::move(paradigms));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

WordMap read_words(msgpack::Reader& reader) {
  const std::size_t count = checked_size(reader, reader.map_header());
  std::vector<WordMap::value_type> entries;
  entries.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::string word = read_text(reader, "word form");
    if (reader.array_header() != 2) {
      throw FormatError("entry for \"" + word + "\" is not a 2-element array");
    }
    WordEntry entry;
    const std::size_t hashes = checked_size(reader, reader.array_header());
    entry.hashes.reserve(hashes);
    for (std::size_t j = 0; j < hashes; ++j) {
      entry.hashes.push_back(narrow<LemmaHash>(reader.uint(), "lemma hash"));
    }
    const std::size_t ids = checked_size(reader, reader.array_header());
    entry.paradigm_ids.reserve(ids);
    for (std::size_t j = 0; j < ids; ++j) {
      entry.paradigm_ids.push_back(
          narrow<ParadigmId>(reader.uint(), "paradigm id"));
    }
    entries.emplace_back(std::move(word), std::move(entry));
  }
  try {
    return WordMap::from_entries(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

void serialize(const ParadigmTable& paradigms, const WordMap& words,
               std::ostream& sink) {
  msgpack::Writer writer(sink);

  writer.map_header(paradigms.size());
  for (std::size_t id = 0; id < paradigms.size(); ++id) {
    const Paradigm& p = paradigms.at(static_cast<ParadigmId>(id));
    writer.uint(id);
    writer.array_header(4);
    writer.uint(p.cut_prefix);
    writer.uint(p.cut_suffix);
    writer.str(p.add_prefix);
    writer.str(p.add_suffix);
  }

  writer.map_header(words.size());
  for (const auto& [word, entry] : words) {
    writer.str(word);
    writer.array_header(2);
    writer.array_header(entry.hashes.size());
    for (LemmaHash hash : entry.hashes) writer.uint(hash);
    writer.array_header(entry.paradigm_ids.size());
    for (ParadigmId id : entry.paradigm_ids) writer.uint(id);
  }

  sink.flush();
  if (!sink) throw IoError("failed writing dictionary");
}

DictionaryContents deserialize(std::span<const std::uint8_t> bytes) {
  msgpack::Reader reader(bytes);
  DictionaryContents contents{read_paradigms(reader), read_words(reader)};
  if (!reader.at_end()) {
    throw FormatError(std::to_string(bytes.size() - reader.position()) +
                      " trailing bytes after the word map");
  }
  for (const auto& [word, entry] : contents.words) {
    for (ParadigmId id : entry.paradigm_ids) {
      if (!contents.paradigms.contains(id)) {
        throw DanglingParadigmId("word form \"" + word +
                                 "\" references unknown paradigm " +
                                 std::to_string(id));
      }
    }
  }
  return contents;
}

}  // namespace paralemma
