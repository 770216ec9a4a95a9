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

// paralemma: compile OpenCorpora dictionaries and lemmatize words with them.
//
//   paralemma compile dict.opcorpora.xml -o ru.dict
//   bzcat dict.opcorpora.xml.bz2 | paralemma compile - -o ru.dict
//   paralemma lemmatize ru.dict зарубил стали
//   paralemma lemmatize ru.dict < tokens.txt
//   paralemma lookup ru.dict стали
//   paralemma stats ru.dict
//
// Exit codes: 0 success, 1 malformed input data, 2 I/O or dictionary load
// failure, 3 unknown word (lookup only).

#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "paralemma/builder.hpp"
#include "paralemma/dictionary.hpp"
#include "paralemma/errors.hpp"
#include "paralemma/format.hpp"
#include "paralemma/opencorpora.hpp"

namespace {

namespace fs = std::filesystem;
using namespace paralemma;

constexpr int kExitOk = 0;
constexpr int kExitBadData = 1;
constexpr int kExitIo = 2;
constexpr int kExitUnknownWord = 3;

struct CliConfig {
  std::string input = "-";
  std::string output = "-";
  std::string dictionary;
  std::vector<std::string> words;
  bool fold_yo = true;
  bool fallback_identity = false;
};

int fail(int code, const std::string& message) {
  std::cerr << "paralemma: " << message << '\n';
  return code;
}

// Temp file next to the destination, renamed into place on commit() and
// removed otherwise.
class AtomicFile {
 public:
  explicit AtomicFile(const fs::path& target) : target_(target) {
    std::string pattern = target.string() + ".tmp-XXXXXX";
    const int fd = ::mkstemp(pattern.data());
    if (fd < 0) {
      throw IoError("cannot create temporary file for " + target.string() +
                    ": " + std::strerror(errno));
    }
    ::close(fd);
    temp_ = pattern;
    stream_.open(temp_, std::ios::binary | std::ios::trunc);
    if (!stream_) throw IoError("cannot open " + temp_.string());
  }

  ~AtomicFile() {
    if (!committed_) {
      stream_.close();
      std::error_code ignored;
      fs::remove(temp_, ignored);
    }
  }

  AtomicFile(const AtomicFile&) = delete;
  AtomicFile& operator=(const AtomicFile&) = delete;

  std::ostream& stream() { return stream_; }

  void commit() {
    stream_.close();
    if (!stream_) throw IoError("failed writing " + temp_.string());
    std::error_code ec;
    fs::rename(temp_, target_, ec);
    if (ec) {
      throw IoError("cannot rename " + temp_.string() + " to " +
                    target_.string() + ": " + ec.message());
    }
    committed_ = true;
  }

 private:
  fs::path target_;
  fs::path temp_;
  std::ofstream stream_;
  bool committed_ = false;
};

int cmd_compile(const CliConfig& config) {
  const NormalizeOptions options{config.fold_yo};
  std::ifstream file;
  std::istream* input = &std::cin;
  if (config.input != "-") {
    file.open(config.input, std::ios::binary);
    if (!file) {
      return fail(kExitIo, "cannot open " + config.input + ": " +
                               std::strerror(errno));
    }
    input = &file;
  }

  try {
    std::optional<AtomicFile> output;
    if (config.output != "-") output.emplace(config.output);

    LemmataReader reader(*input, options);
    BuiltIndex built = build_index(reader);
    const WordMap words = invert_index(built.index);
    built.index.clear();

    serialize(built.paradigms, words,
              output ? output->stream() : std::cout);
    if (output) output->commit();
    std::cerr << format_stats(build_stats(built.paradigms, words)) << '\n';
  } catch (const IoError& e) {
    return fail(kExitIo, e.what());
  } catch (const Error& e) {
    return fail(kExitBadData, e.what());
  }
  return kExitOk;
}

struct LoadedDictionary {
  Dictionary dictionary;
  std::size_t file_size;
};

// Throws paralemma::Error on any failure.
LoadedDictionary load_dictionary(const std::string& path, bool fold_yo) {
  std::ifstream file;
  std::istream* input = &std::cin;
  if (path != "-") {
    file.open(path, std::ios::binary);
    if (!file) {
      throw IoError("cannot open " + path + ": " + std::strerror(errno));
    }
    input = &file;
  }
  const std::vector<std::uint8_t> bytes(
      (std::istreambuf_iterator<char>(*input)),
      std::istreambuf_iterator<char>());
  if (input->bad()) throw IoError("read error on " + path);
  return {Dictionary::from_bytes(bytes, NormalizeOptions{fold_yo}),
          bytes.size()};
}

std::string join_lemmas(const std::vector<LemmaCandidate>& candidates) {
  std::string joined;
  for (const LemmaCandidate& c : candidates) {
    if (!joined.empty()) joined += ',';
    joined += c.lemma;
  }
  return joined;
}

void print_lemmas(const Dictionary& dictionary, const std::string& token,
                  bool fallback_identity) {
  std::vector<LemmaCandidate> candidates;
  try {
    candidates = dictionary.lemmatize(token);
  } catch (const ConsistencyError& e) {
    std::cerr << "paralemma: " << e.what() << '\n';
  }
  std::cout << token << '\t';
  if (!candidates.empty()) {
    std::cout << join_lemmas(candidates);
  } else {
    std::cout << (fallback_identity ? token : std::string("-"));
  }
  std::cout << '\n';
}

int cmd_lemmatize(const CliConfig& config) {
  std::optional<LoadedDictionary> loaded;
  try {
    loaded.emplace(load_dictionary(config.dictionary, config.fold_yo));
  } catch (const Error& e) {
    return fail(kExitIo, e.what());
  }
  const Dictionary& dictionary = loaded->dictionary;

  if (!config.words.empty()) {
    for (const std::string& word : config.words) {
      print_lemmas(dictionary, word, config.fallback_identity);
    }
  } else {
    std::string token;
    while (std::cin >> token) {
      print_lemmas(dictionary, token, config.fallback_identity);
    }
  }
  std::cout.flush();
  return kExitOk;
}

int cmd_lookup(const CliConfig& config) {
  std::optional<LoadedDictionary> loaded;
  try {
    loaded.emplace(load_dictionary(config.dictionary, config.fold_yo));
  } catch (const Error& e) {
    return fail(kExitIo, e.what());
  }
  const Dictionary& dictionary = loaded->dictionary;

  std::vector<LemmaCandidate> candidates;
  try {
    candidates = dictionary.lemmatize(config.words.front());
  } catch (const ConsistencyError& e) {
    return fail(kExitIo, e.what());
  }
  if (candidates.empty()) return kExitUnknownWord;
  for (const LemmaCandidate& c : candidates) {
    std::cout << c.lemma << '\t' << c.lemma_hash << '\t' << c.paradigm_id
              << '\t' << to_string(dictionary.paradigms().at(c.paradigm_id))
              << '\n';
  }
  return kExitOk;
}

int cmd_stats(const CliConfig& config) {
  try {
    const LoadedDictionary loaded =
        load_dictionary(config.dictionary, config.fold_yo);
    std::cout << format_stats(loaded.dictionary.stats())
              << " bytes=" << loaded.file_size << '\n';
  } catch (const Error& e) {
    return fail(kExitIo, e.what());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"Paradigm-based lemmatizer for full-text search"};
  app.require_subcommand(1);
  CliConfig config;

  auto add_fold_flag = [&config](CLI::App* command) {
    command->add_flag("!--no-fold-yo", config.fold_yo,
                      "Keep ё distinct from е (must match the compile setting)");
  };

  auto* compile = app.add_subcommand(
      "compile", "Compile an OpenCorpora dictionary XML into a dictionary file");
  compile->add_option("input", config.input, "Dictionary XML, or - for stdin")
      ->required();
  compile->add_option("-o,--output", config.output,
                      "Output dictionary file, or - for stdout")
      ->capture_default_str();
  add_fold_flag(compile);

  auto* lemmatize = app.add_subcommand(
      "lemmatize", "Print the lemmas of words given as arguments or on stdin");
  lemmatize->add_option("dictionary", config.dictionary, "Dictionary file")
      ->required();
  lemmatize->add_option("words", config.words,
                        "Words to lemmatize; stdin tokens when omitted");
  lemmatize->add_flag("--fallback-identity", config.fallback_identity,
                      "Print unknown words as their own lemma instead of -");
  add_fold_flag(lemmatize);

  auto* lookup = app.add_subcommand(
      "lookup", "Show every candidate of a word with its paradigm");
  lookup->add_option("dictionary", config.dictionary, "Dictionary file")
      ->required();
  lookup->add_option("word", config.words, "Word to look up")
      ->required()
      ->expected(1);
  add_fold_flag(lookup);

  auto* stats = app.add_subcommand("stats", "Print dictionary statistics");
  stats->add_option("dictionary", config.dictionary, "Dictionary file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (compile->parsed()) return cmd_compile(config);
  if (lemmatize->parsed()) return cmd_lemmatize(config);
  if (lookup->parsed()) return cmd_lookup(config);
  return cmd_stats(config);
}
