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
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "paralemma/paradigm.hpp"

namespace paralemma {

/// Bijection between distinct paradigms and dense ids 0, 1, 2, ... assigned
/// in first-intern order.
class ParadigmTable {
 public:
  ParadigmTable() = default;

  /// Adopts `paradigms` as ids 0..n-1. Throws std::invalid_argument when two
  /// entries are equal.
  static ParadigmTable from_paradigms(std::vector<Paradigm> paradigms);

  ParadigmId intern(const Paradigm& paradigm);
  std::optional<ParadigmId> find(const Paradigm& paradigm) const;

  const Paradigm& at(ParadigmId id) const { return paradigms_.at(id); }
  bool contains(ParadigmId id) const noexcept { return id < paradigms_.size(); }
  std::size_t size() const noexcept { return paradigms_.size(); }
  bool empty() const noexcept { return paradigms_.empty(); }
  std::span<const Paradigm> paradigms() const noexcept { return paradigms_; }

  friend bool operator==(const ParadigmTable& a, const ParadigmTable& b) {
    return a.paradigms_ == b.paradigms_;
  }

 private:
  std::vector<Paradigm> paradigms_;
  std::unordered_map<Paradigm, ParadigmId> ids_;
};

}  // namespace paralemma
