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

#include "paralemma/murmur3.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <string>

#include "test_support.hpp"

namespace paralemma {
namespace {

struct Vector {
  std::string input;
  std::uint32_t hash;
};

std::vector<Vector> load_vectors() {
  std::ifstream in(testing::data_dir() / "murmur3_vectors.tsv",
                   std::ios::binary);
  std::vector<Vector> vectors;
  std::string line;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    vectors.push_back({line.substr(0, tab),
                       static_cast<std::uint32_t>(
                           std::stoul(line.substr(tab + 1)))});
  }
  return vectors;
}

TEST(Murmur3, EmptyInputIsZero) { EXPECT_EQ(murmur3_32(""), 0u); }

// Values from the reference generator in tests/oracles.
TEST(Murmur3, PinnedLemmaHashes) {
  EXPECT_EQ(murmur3_32("рубить"), 159649469u);
  EXPECT_EQ(murmur3_32("бежать"), 3503408173u);
  EXPECT_NE(murmur3_32("рубить"), murmur3_32("бежать"));
}

TEST(Murmur3, PublishedVectors) {
  // The mmh3 package returns signed -156908512 for "foo".
  EXPECT_EQ(murmur3_32("foo"), static_cast<std::uint32_t>(-156908512));
  EXPECT_EQ(murmur3_32("The quick brown fox jumps over the lazy dog"),
            0x2e4ff723u);
  EXPECT_EQ(murmur3_x86_32({}, 1), 0x514e28b7u);
}

TEST(Murmur3, AgreesWithReferenceVectorFile) {
  const auto vectors = load_vectors();
  ASSERT_GE(vectors.size(), 100u);
  for (const auto& v : vectors) {
    EXPECT_EQ(murmur3_32(v.input), v.hash) << "input \"" << v.input << "\"";
  }
}

TEST(Murmur3, EveryTailLengthIsCovered) {
  std::array<bool, 4> tails{};
  for (const auto& v : load_vectors()) tails[v.input.size() % 4] = true;
  EXPECT_EQ(tails, (std::array<bool, 4>{true, true, true, true}));
}

TEST(Murmur3, SeedChangesResult) {
  const std::string text = "лемма";
  const auto bytes = std::as_bytes(std::span(text.data(), text.size()));
  EXPECT_EQ(murmur3_x86_32(bytes, 0), murmur3_32(text));
  EXPECT_NE(murmur3_x86_32(bytes, 1), murmur3_32(text));
}

}  // namespace
}  // namespace paralemma
