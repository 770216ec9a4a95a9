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

#include "paralemma/normalize.hpp"

#include <unicode/uchar.h>

#include "paralemma/errors.hpp"
#include "paralemma/utf8.hpp"

namespace paralemma {
namespace {

constexpr char32_t kCapitalYo = U'Ё';
constexpr char32_t kSmallYo = U'ё';
constexpr char32_t kCapitalYe = U'Е';
constexpr char32_t kSmallYe = U'е';

bool is_space(char32_t cp) noexcept {
  return u_isUWhiteSpace(static_cast<UChar32>(cp));
}

}  // namespace

std::string normalize_token(std::string_view raw,
                            const NormalizeOptions& options) {
  const std::u32string decoded = utf8::decode(raw);
  std::size_t begin = 0;
  std::size_t end = decoded.size();
  while (begin < end && is_space(decoded[begin])) ++begin;
  while (end > begin && is_space(decoded[end - 1])) --end;
  if (begin == end) throw EmptyToken("empty token");

  std::string out;
  out.reserve(raw.size());
  for (std::size_t k = begin; k < end; ++k) {
    char32_t cp = decoded[k];
    if (is_space(cp)) {
      throw WhitespaceInToken("whitespace inside token \"" + std::string(raw) +
                              "\"");
    }
    if (options.fold_yo && cp == kCapitalYo) cp = kCapitalYe;
    cp = static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
    if (options.fold_yo && cp == kSmallYo) cp = kSmallYe;
    utf8::append(out, cp);
  }
  return out;
}

}  // namespace paralemma
