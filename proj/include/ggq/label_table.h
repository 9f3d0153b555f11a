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

#ifndef GGQ_LABEL_TABLE_H_
#define GGQ_LABEL_TABLE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ggq/group.h"
#include "ggq/group_oracle.h"
#include "ggq/linear_form.h"
#include "ggq/rng.h"

namespace ggq {

using Label = std::uint32_t;

// The assignment L: S -> [N] together with the oracle index holding each
// form's image.
class LabelTable {
 public:
  struct Entry {
    Label label = 0;
    Index index = 0;
  };

  explicit LabelTable(GroupSpec spec);

  std::optional<Entry> Find(const LinearForm& f) const;
  // Throws InvariantError if `f` is already present.
  void Insert(const LinearForm& f, Label label, Index index);

  // Uniform over labels not yet in use. Throws InvariantError when all N
  // labels are taken.
  Label FreshLabel(Rng& rng) const;

  bool IsUsed(Label label) const { return labels_.contains(label); }
  // Form with the smallest materialized index carrying `label`.
  const LinearForm& Representative(Label label) const;
  Index MaterializedIndex(Label label) const;
  // Used labels in increasing order.
  std::vector<Label> Labels() const;

  std::size_t form_count() const { return forms_.size(); }
  std::size_t label_count() const { return labels_.size(); }
  const GroupSpec& spec() const { return spec_; }
  const std::unordered_map<LinearForm, Entry, LinearFormHash>& forms() const {
    return forms_;
  }

 private:
  struct LabelInfo {
    LinearForm representative;
    Index index = 0;
  };

  const LabelInfo& Info(Label label) const;

  GroupSpec spec_;
  std::unordered_map<LinearForm, Entry, LinearFormHash> forms_;
  std::map<Label, LabelInfo> labels_;
};

}  // namespace ggq

#endif  // GGQ_LABEL_TABLE_H_
