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

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <thread>

#include "fixture_support.hpp"
#include "paralemma/errors.hpp"

namespace paralemma {
namespace {

using testing::as_bytes;
using testing::compile_fixture;
using testing::compile_records;

Dictionary load_fixture(const std::string& name = "fixture.xml") {
  const auto compiled = compile_fixture(name);
  return Dictionary::from_bytes(as_bytes(compiled.bytes));
}

std::vector<std::string> lemmas_of(const std::vector<LemmaCandidate>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.lemma);
  return out;
}

TEST(Load, EmptyDictionary) {
  const std::string bytes("\x80\x80", 2);
  const Dictionary dict = Dictionary::from_bytes(as_bytes(bytes));
  EXPECT_TRUE(dict.paradigms().empty());
  EXPECT_TRUE(dict.words().empty());
  EXPECT_EQ(dict.stats(), (Stats{0, 0, 0}));
}

TEST(Load, FixtureStatsMatchBuilder) {
  const auto compiled = compile_fixture("fixture.xml");
  std::istringstream in(compiled.bytes);
  const Dictionary dict = Dictionary::load(in);
  EXPECT_EQ(dict.stats(), build_stats(compiled.paradigms, compiled.words));
}

TEST(Load, TrailingGarbageIsFormatError) {
  const auto compiled = compile_fixture("fixture.xml");
  const std::string bytes = compiled.bytes + '\x00';
  EXPECT_THROW(Dictionary::from_bytes(as_bytes(bytes)), FormatError);
}

TEST(Load, TruncationIsFormatError) {
  const auto compiled = compile_fixture("fixture.xml");
  for (std::size_t cut : {std::size_t{0}, std::size_t{1}, std::size_t{40},
                          compiled.bytes.size() - 1}) {
    const std::string bytes = compiled.bytes.substr(0, cut);
    EXPECT_THROW(Dictionary::from_bytes(as_bytes(bytes)), FormatError)
        << "cut at " << cut;
  }
}

TEST(Load, WrongShapes) {
  // Single object only.
  EXPECT_THROW(Dictionary::from_bytes(as_bytes(std::string("\x80", 1))),
               FormatError);
  // Paradigm value is a 3-element array.
  EXPECT_THROW(Dictionary::from_bytes(as_bytes(
                   std::string("\x81\x00\x93\x00\x00\xa0\x80", 7))),
               FormatError);
  // Paradigm ids not dense (id 1 without id 0).
  EXPECT_THROW(Dictionary::from_bytes(as_bytes(
                   std::string("\x81\x01\x94\x00\x00\xa0\xa0\x80", 8))),
               FormatError);
  // Duplicate paradigm.
  EXPECT_THROW(
      Dictionary::from_bytes(as_bytes(std::string(
          "\x82\x00\x94\x00\x00\xa0\xa0\x01\x94\x00\x00\xa0\xa0\x80", 14))),
      FormatError);
  // Word entry with unequal parallel lists.
  EXPECT_THROW(Dictionary::from_bytes(as_bytes(std::string(
                   "\x81\x00\x94\x00\x00\xa0\xa0"
                   "\x81\xa1x\x92\x92\x01\x02\x91\x00",
                   16))),
               FormatError);
  // Declared map size larger than the data.
  EXPECT_THROW(Dictionary::from_bytes(as_bytes(
                   std::string("\xdf\xff\xff\xff\xff", 5))),
               FormatError);
}

TEST(Load, DanglingParadigmId) {
  // One paradigm (id 0) but the word references id 3.
  const std::string bytes(
      "\x81\x00\x94\x00\x00\xa0\xa0"
      "\x81\xa1x\x92\x91\x01\x91\x03",
      15);
  EXPECT_THROW(Dictionary::from_bytes(as_bytes(bytes)), DanglingParadigmId);
  EXPECT_THROW(Dictionary(ParadigmTable{},
                          WordMap::from_entries({{"x", {{1}, {0}}}})),
               DanglingParadigmId);
}

TEST(Load, AcceptsUnsortedSections) {
  // Section 1 in descending id order, section 2 keys out of order.
  std::string bytes("\x82\x01\x94\x00\x01\xa0\xa0\x00\x94\x00\x00\xa0\xa0", 13);
  const std::uint32_t hb = murmur3_32("b");
  const std::uint32_t ha = murmur3_32("a");
  auto put_hash = [&bytes](std::uint32_t h) {
    bytes += '\xce';
    for (int s = 24; s >= 0; s -= 8) bytes += static_cast<char>(h >> s);
  };
  bytes += "\x82";
  bytes += "\xa1" "b" "\x92\x91";
  put_hash(hb);
  bytes += std::string("\x91\x00", 2);
  bytes += "\xa2" "ab" "\x92\x91";
  put_hash(ha);
  bytes += "\x91\x01";
  const Dictionary dict = Dictionary::from_bytes(as_bytes(bytes));
  EXPECT_EQ(dict.paradigms().at(1), (Paradigm{0, 1, "", ""}));
  EXPECT_EQ(lemmas_of(dict.lemmatize("ab")), (std::vector<std::string>{"a"}));
  EXPECT_EQ(lemmas_of(dict.lemmatize("b")), (std::vector<std::string>{"b"}));
}

TEST(Lemmatize, WorkedExample) {
  const auto compiled = compile_records({{1, "рубить", {"рубить", "зарубил"}}});
  const Dictionary dict = Dictionary::from_bytes(as_bytes(compiled.bytes));
  const auto candidates = dict.lemmatize("зарубил");
  ASSERT_EQ(candidates.size(), 1u);
  EXPECT_EQ(candidates[0],
            (LemmaCandidate{"рубить", murmur3_32("рубить"), 1}));
  EXPECT_EQ(candidates[0].lemma_hash, 159649469u);
}

TEST(Lemmatize, AmbiguousForm) {
  const Dictionary dict = load_fixture();
  EXPECT_EQ(lemmas_of(dict.lemmatize("стали")),
            (std::vector<std::string>{"стать", "сталь"}));
}

TEST(Lemmatize, UnknownAndEmpty) {
  const Dictionary dict = load_fixture();
  EXPECT_TRUE(dict.lemmatize("").empty());
  EXPECT_TRUE(dict.lemmatize("qwerty").empty());
  EXPECT_TRUE(dict.lemmatize("два слова").empty());
  EXPECT_TRUE(dict.lemmatize("\xff").empty());
}

TEST(Lemmatize, NormalizesQueries) {
  const Dictionary dict = load_fixture();
  EXPECT_EQ(lemmas_of(dict.lemmatize("ЗАРУБИЛ")),
            (std::vector<std::string>{"рубить"}));
  EXPECT_EQ(lemmas_of(dict.lemmatize("Ёжиком")),
            (std::vector<std::string>{"еж"}));
  EXPECT_EQ(lemmas_of(dict.lemmatize(" бегу ")),
            (std::vector<std::string>{"бежать"}));
}

TEST(Lemmatize, FoldSettingMustMatchCompileSetting) {
  const auto compiled =
      compile_fixture("fixture.xml", NormalizeOptions{.fold_yo = false});
  const Dictionary dict = Dictionary::from_bytes(
      as_bytes(compiled.bytes), NormalizeOptions{.fold_yo = false});
  EXPECT_EQ(lemmas_of(dict.lemmatize("ЁЖ")), (std::vector<std::string>{"ёж"}));
  EXPECT_EQ(lemmas_of(dict.lemmatize("ежу")), (std::vector<std::string>{"ёж"}));
  // A folded query misses the unfolded entry.
  const Dictionary mismatched = Dictionary::from_bytes(as_bytes(compiled.bytes));
  EXPECT_TRUE(mismatched.lemmatize("ЁЖ").empty());
}

TEST(Lemmatize, DeduplicatesByLemma) {
  // Two different paradigms rebuild the same lemma from "аа".
  const auto table = ParadigmTable::from_paradigms(
      {Paradigm{}, Paradigm{1, 0, "а", ""}});
  const LemmaHash h = murmur3_32("аа");
  const Dictionary dict(table, WordMap::from_entries({{"аа", {{h, h}, {0, 1}}}}));
  const auto candidates = dict.lemmatize("аа");
  ASSERT_EQ(candidates.size(), 1u);
  EXPECT_EQ(candidates[0].paradigm_id, 0u);
}

TEST(Lemmatize, CorruptionRaisesConsistencyError) {
  const auto table = ParadigmTable::from_paradigms(
      {Paradigm{}, Paradigm{5, 0, "", ""}});
  const Dictionary wrong_hash(
      table, WordMap::from_entries({{"стол", {{12345}, {0}}}}));
  EXPECT_THROW(wrong_hash.lemmatize("стол"), ConsistencyError);
  const Dictionary overlong_cut(
      table,
      WordMap::from_entries({{"стол", {{murmur3_32("стол")}, {1}}}}));
  EXPECT_THROW(overlong_cut.lemmatize("стол"), ConsistencyError);
}

TEST(LemmaHashes, Examples) {
  const Dictionary dict = load_fixture();
  EXPECT_EQ(dict.lemma_hashes("зарубил"),
            (std::vector<LemmaHash>{murmur3_32("рубить")}));
  EXPECT_EQ(dict.lemma_hashes("рубить"),
            (std::vector<LemmaHash>{murmur3_32("рубить")}));
  EXPECT_TRUE(dict.lemma_hashes("qwerty").empty());
  EXPECT_TRUE(dict.lemma_hashes("").empty());
}

TEST(LemmaHashes, DeduplicatesEqualHashes) {
  const auto table = ParadigmTable::from_paradigms(
      {Paradigm{}, Paradigm{1, 0, "а", ""}});
  const LemmaHash h = murmur3_32("аа");
  const Dictionary dict(table, WordMap::from_entries({{"аа", {{h, h}, {0, 1}}}}));
  EXPECT_EQ(dict.lemma_hashes("аа"), (std::vector<LemmaHash>{h}));
}

TEST(RuntimeProperty, FixtureCompletenessAndHashAgreement) {
  const auto compiled = compile_fixture("fixture.xml");
  const Dictionary dict = Dictionary::from_bytes(as_bytes(compiled.bytes));
  for (const auto& record : compiled.records) {
    for (const auto& form : record.inflected_forms) {
      const auto candidates = dict.lemmatize(form);
      const auto lemmas = lemmas_of(candidates);
      EXPECT_NE(std::find(lemmas.begin(), lemmas.end(), record.normal_form),
                lemmas.end())
          << form;
    }
  }
  for (const auto& [word, entry] : dict.words()) {
    const auto candidates = dict.lemmatize(word);
    std::vector<LemmaHash> projected;
    for (const auto& c : candidates) {
      EXPECT_EQ(murmur3_32(c.lemma), c.lemma_hash) << word;
      if (std::find(projected.begin(), projected.end(), c.lemma_hash) ==
          projected.end()) {
        projected.push_back(c.lemma_hash);
      }
    }
    EXPECT_EQ(dict.lemma_hashes(word), projected) << word;
    EXPECT_EQ(dict.lemmatize(word), candidates) << word;
  }
}

TEST(RuntimeProperty, ConcurrentReadersSeeIdenticalResults) {
  const Dictionary dict = load_fixture();
  const std::vector<std::string> queries{"зарубил", "стали", "бегу", "qwerty",
                                         "Ёжиком", "сталью"};
  std::vector<std::vector<LemmaCandidate>> expected;
  for (const auto& q : queries) expected.push_back(dict.lemmatize(q));

  std::vector<int> mismatches(4, 0);
  std::vector<std::thread> readers;
  for (std::size_t t = 0; t < mismatches.size(); ++t) {
    readers.emplace_back([&, t] {
      for (int round = 0; round < 2000; ++round) {
        const std::size_t k = (round + t) % queries.size();
        if (dict.lemmatize(queries[k]) != expected[k]) ++mismatches[t];
      }
    });
  }
  for (auto& r : readers) r.join();
  EXPECT_EQ(mismatches, std::vector<int>(4, 0));
}

}  // namespace
}  // namespace paralemma
