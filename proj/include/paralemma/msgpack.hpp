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
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace paralemma::msgpack {

/// Minimal MessagePack encoder covering the types the dictionary file uses.
/// Every value is written in its shortest encoding, so equal inputs give
/// equal bytes.
class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void map_header(std::size_t size);
  void array_header(std::size_t size);
  void uint(std::uint64_t value);
  void str(std::string_view value);

 private:
  void put(std::uint8_t byte);
  void put_be(std::uint64_t value, int bytes);

  std::ostream& out_;
};

/// MessagePack decoder over an in-memory buffer. Accepts any encoding the
/// format allows for a value (e.g. a small id stored as uint32 or as a
/// non-negative int8). Throws FormatError on type mismatch or truncation.
class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> data) : data_(data) {}

  std::size_t map_header();
  std::size_t array_header();
  std::uint64_t uint();
  std::string_view str();

  bool at_end() const noexcept { return pos_ == data_.size(); }
  std::size_t position() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return data_.size() - pos_; }

 private:
  std::uint8_t take();
  std::uint64_t take_be(int bytes);
  [[noreturn]] void mismatch(std::string_view expected, std::uint8_t tag) const;

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

}  // namespace paralemma::msgpack
