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

#include "paralemma/msgpack.hpp"

#include <cstdio>

#include "paralemma/errors.hpp"

namespace paralemma::msgpack {

void Writer::put(std::uint8_t byte) { out_.put(static_cast<char>(byte)); }

void Writer::put_be(std::uint64_t value, int bytes) {
  for (int shift = (bytes - 1) * 8; shift >= 0; shift -= 8) {
    put(static_cast<std::uint8_t>(value >> shift));
  }
}

void Writer::map_header(std::size_t size) {
  if (size < 16) {
    put(static_cast<std::uint8_t>(0x80 | size));
  } else if (size <= 0xFFFF) {
    put(0xDE);
    put_be(size, 2);
  } else {
    put(0xDF);
    put_be(size, 4);
  }
}

void Writer::array_header(std::size_t size) {
  if (size < 16) {
    put(static_cast<std::uint8_t>(0x90 | size));
  } else if (size <= 0xFFFF) {
    put(0xDC);
    put_be(size, 2);
  } else {
    put(0xDD);
    put_be(size, 4);
  }
}

void Writer::uint(std::uint64_t value) {
  if (value < 0x80) {
    put(static_cast<std::uint8_t>(value));
  } else if (value <= 0xFF) {
    put(0xCC);
    put_be(value, 1);
  } else if (value <= 0xFFFF) {
    put(0xCD);
    put_be(value, 2);
  } else if (value <= 0xFFFFFFFF) {
    put(0xCE);
    put_be(value, 4);
  } else {
    put(0xCF);
    put_be(value, 8);
  }
}

void Writer::str(std::string_view value) {
  const std::size_t size = value.size();
  if (size < 32) {
    put(static_cast<std::uint8_t>(0xA0 | size));
  } else if (size <= 0xFF) {
    put(0xD9);
    put_be(size, 1);
  } else if (size <= 0xFFFF) {
    put(0xDA);
    put_be(size, 2);
  } else {
    put(0xDB);
    put_be(size, 4);
  }
  out_.write(value.data(), static_cast<std::streamsize>(size));
}

std::uint8_t Reader::take() {
  if (pos_ >= data_.size()) {
    throw FormatError("unexpected end of data at byte " + std::to_string(pos_));
  }
  return data_[pos_++];
}

std::uint64_t Reader::take_be(int bytes) {
  std::uint64_t value = 0;
  for (int k = 0; k < bytes; ++k) value = (value << 8) | take();
  return value;
}

void Reader::mismatch(std::string_view expected, std::uint8_t tag) const {
  char hex[8];
  std::snprintf(hex, sizeof hex, "0x%02x", tag);
  throw FormatError("expected " + std::string(expected) + " at byte " +
                    std::to_string(pos_ - 1) + ", found type tag " + hex);
}

std::size_t Reader::map_header() {
  const std::uint8_t tag = take();
  if ((tag & 0xF0) == 0x80) return tag & 0x0F;
  if (tag == 0xDE) return take_be(2);
  if (tag == 0xDF) return take_be(4);
  mismatch("map", tag);
}

std::size_t Reader::array_header() {
  const std::uint8_t tag = take();
  if ((tag & 0xF0) == 0x90) return tag & 0x0F;
  if (tag == 0xDC) return take_be(2);
  if (tag == 0xDD) return take_be(4);
  mismatch("array", tag);
}

std::uint64_t Reader::uint() {
  const std::uint8_t tag = take();
  if (tag < 0x80) return tag;
  switch (tag) {
    case 0xCC: return take_be(1);
    case 0xCD: return take_be(2);
    case 0xCE: return take_be(4);
    case 0xCF: return take_be(8);
    case 0xD0: case 0xD1: case 0xD2: case 0xD3: {
      const int bytes = 1 << (tag - 0xD0);
      const std::uint64_t raw = take_be(bytes);
      const std::uint64_t sign_bit = std::uint64_t{1} << (bytes * 8 - 1);
      if (raw & sign_bit) {
        throw FormatError("negative integer at byte " +
                          std::to_string(pos_ - bytes - 1));
      }
      return raw;
    }
    default:
      break;
  }
  mismatch("unsigned integer", tag);
}

std::string_view Reader::str() {
  const std::uint8_t tag = take();
  std::size_t size = 0;
  if ((tag & 0xE0) == 0xA0) {
    size = tag & 0x1F;
  } else if (tag == 0xD9) {
    size = take_be(1);
  } else if (tag == 0xDA) {
    size = take_be(2);
  } else if (tag == 0xDB) {
    size = take_be(4);
  } else {
    mismatch("string", tag);
  }
  if (size > data_.size() - pos_) {
    throw FormatError("string of " + std::to_string(size) +
                      " bytes overruns data at byte " + std::to_string(pos_));
  }
  const auto* begin = reinterpret_cast<const char*>(data_.data() + pos_);
  pos_ += size;
  return {begin, size};
}

}  // namespace paralemma::msgpack
