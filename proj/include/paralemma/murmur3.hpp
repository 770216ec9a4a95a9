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
#include <span>
#include <string_view>

namespace paralemma {

/// Term id of a lemma: MurmurHash3 x86 32-bit of its UTF-8 bytes, seed 0,
/// read as unsigned.
using LemmaHash = std::uint32_t;

std::uint32_t murmur3_x86_32(std::span<const std::byte> data,
                             std::uint32_t seed = 0) noexcept;

inline LemmaHash murmur3_32(std::string_view text) noexcept {
  return murmur3_x86_32(std::as_bytes(std::span(text.data(), text.size())));
}

}  // namespace paralemma
