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

#include <cstddef>
#include <string>
#include <string_view>

namespace paralemma::utf8 {

/// Decodes UTF-8 into code points. Throws InvalidUtf8 on malformed input
/// (overlong forms, surrogates and values above U+10FFFF included).
std::u32string decode(std::string_view text);

std::string encode(std::u32string_view code_points);
void append(std::string& out, char32_t code_point);

/// Number of code points in valid UTF-8 text.
std::size_t length(std::string_view text) noexcept;

bool is_valid(std::string_view text) noexcept;

}  // namespace paralemma::utf8
