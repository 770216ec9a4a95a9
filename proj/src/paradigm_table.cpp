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

#include "paralemma/paradigm_table.hpp"

#include <stdexcept>

namespace paralemma {

ParadigmTable ParadigmTable::from_paradigms(std::vector<Paradigm> paradigms) {
  ParadigmTable table;
  table.ids_.reserve(paradigms.size());
  for (std::size_t id = 0; id < paradigms.size(); ++id) {
    if (!table.ids_.emplace(paradigms[id], static_cast<ParadigmId>(id))
             .second) {
      throw std::invalid_argument("paradigm " + to_string(paradigms[id]) +
                                  " appears twice (id " + std::to_string(id) +
                                  ")");
    }
  }
  table.paradigms_ = std::move(paradigms);
  return table;
}

ParadigmId ParadigmTable::intern(const Paradigm& paradigm) {
  const auto next = static_cast<ParadigmId>(paradigms_.size());
  const auto [it, inserted] = ids_.try_emplace(paradigm, next);
  if (inserted) paradigms_.push_back(paradigm);
  return it->second;
}

std::optional<ParadigmId> ParadigmTable::find(const Paradigm& paradigm) const {
  const auto it = ids_.find(paradigm);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

}  // namespace paralemma
