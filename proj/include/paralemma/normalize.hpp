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

#include <string>
#include <string_view>

namespace paralemma {

struct NormalizeOptions {
  /// Map ё/Ё to е before lookups and hashing.
  bool fold_yo = true;
};

/// Trims surrounding whitespace, lowercases every code point and optionally
/// folds ё to е. Throws EmptyToken, WhitespaceInToken or InvalidUtf8.
std::string normalize_token(std::string_view raw,
                            const NormalizeOptions& options = {});

}  // namespace paralemma
