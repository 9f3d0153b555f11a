// Copyright 2026 The GGQ Authors
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

#include "ggq/label_table.h"

#include "ggq/errors.h"

namespace ggq {

LabelTable::LabelTable(GroupSpec spec) : spec_(spec) {}

std::optional<LabelTable::Entry> LabelTable::Find(const LinearForm& f) const {
  auto it = forms_.find(f);
  if (it == forms_.end()) return std::nullopt;
  return it->second;
}

void LabelTable::Insert(const LinearForm& f, Label label, Index index) {
  if (label >= spec_.order()) throw InvariantError("label out of range");
  if (!forms_.emplace(f, Entry{label, index}).second) {
    throw InvariantError("form " + f.ToString() + " labeled twice");
  }
  auto [it, inserted] = labels_.try_emplace(label, LabelInfo{f, index});
  if (!inserted && index < it->second.index) it->second = LabelInfo{f, index};
}

Label LabelTable::FreshLabel(Rng& rng) const {
  if (labels_.size() >= spec_.order()) {
    throw InvariantError("no unused label left");
  }
  for (;;) {
    const Label l = static_cast<Label>(UniformBelow(rng, spec_.order()));
    if (!labels_.contains(l)) return l;
  }
}

const LabelTable::LabelInfo& LabelTable::Info(Label label) const {
  auto it = labels_.find(label);
  if (it == labels_.end()) {
    throw InvariantError("label " + std::to_string(label) +
                         " has no preimage in S");
  }
  return it->second;
}

const LinearForm& LabelTable::Representative(Label label) const {
  return Info(label).representative;
}

Index LabelTable::MaterializedIndex(Label label) const {
  return Info(label).index;
}

std::vector<Label> LabelTable::Labels() const {
  std::vector<Label> out;
  out.reserve(labels_.size());
  for (const auto& [l, info] : labels_) out.push_back(l);
  return out;
}

}  // namespace ggq
