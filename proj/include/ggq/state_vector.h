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

#ifndef GGQ_STATE_VECTOR_H_
#define GGQ_STATE_VECTOR_H_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ggq/group.h"
#include "ggq/local_unitary.h"
#include "ggq/rng.h"

namespace ggq {

inline constexpr double kTolerance = 1e-9;
inline constexpr double kPruneThreshold = 1e-12;

// Flattened basis configuration: [W cells][Q_1 (b,i,j) .. Q_K][T_1 .. T_s].
using Config = std::vector<std::uint32_t>;

struct ConfigHash {
  std::size_t operator()(const Config& c) const noexcept;
};

enum class QueryField { kSign = 0, kTarget = 1, kControl = 2 };

// Cell layout of the composite register (W, Q_1..Q_K, T).
class RegisterLayout {
 public:
  RegisterLayout(std::vector<std::uint64_t> work_dims, std::size_t width,
                 std::size_t table_size, std::uint64_t order);

  std::size_t work_count() const { return work_dims_.size(); }
  std::size_t width() const { return width_; }
  std::size_t table_size() const { return table_size_; }
  std::uint64_t order() const { return order_; }
  const std::vector<std::uint64_t>& work_dims() const { return work_dims_; }

  std::size_t local_cell_count() const { return work_count() + 3 * width_; }
  std::size_t cell_count() const { return local_cell_count() + table_size_; }

  std::size_t WorkCell(std::size_t r) const;
  // `k` is 0-based.
  std::size_t QueryCell(std::size_t k, QueryField field) const;
  // `i` is the 1-based table index.
  std::size_t TableCell(std::size_t i) const;
  std::uint64_t dim(std::size_t cell) const;
  bool IsLocal(std::size_t cell) const { return cell < local_cell_count(); }

  std::vector<std::size_t> QueryCells(std::size_t k) const;
  std::vector<std::size_t> AllCells() const;

  friend bool operator==(const RegisterLayout&,
                         const RegisterLayout&) = default;

 private:
  std::vector<std::uint64_t> work_dims_;
  std::size_t width_;
  std::size_t table_size_;
  std::uint64_t order_;
};

// Bijection on the local (W, Q) cells of a configuration, edited in place.
using LocalPermutation = std::function<void(std::span<std::uint32_t>)>;

// Sparse pure state over the composite register.
class StateVector {
 public:
  using Map = std::unordered_map<Config, Complex, ConfigHash>;

  struct Branch;

  // The single basis state |aux, 0, inputs padded with 0>.
  static StateVector Init(RegisterLayout layout,
                          std::span<const Residue> inputs,
                          std::span<const std::uint32_t> work_init = {});

  const RegisterLayout& layout() const { return layout_; }
  const Map& amplitudes() const { return amps_; }
  std::size_t size() const { return amps_.size(); }
  double Norm() const;
  bool IsBasisState() const { return amps_.size() == 1; }

  // Applies `u` to `cells`, which must be distinct work/query cells.
  void ApplyLocal(std::span<const std::size_t> cells, const LocalUnitary& u);

  // Applies a classical reversible map on (W, Q). Collisions on the support
  // raise ValidationError.
  void ApplyPermutation(const LocalPermutation& f);

  // Rewrites every configuration in place. The map must be injective on the
  // support; oracle unitaries use this.
  void MapConfigs(const std::function<void(Config&)>& f);

  // Exact marginal over `cells`, keyed by the selected values in order.
  std::map<Config, double> Distribution(
      std::span<const std::size_t> cells) const;

  // All post-measurement branches in outcome order.
  std::vector<Branch> Branches(std::span<const std::size_t> cells) const;

  // Born-rule sample.
  Branch Measure(std::span<const std::size_t> cells, Rng& rng) const;

  // Canonically sorted JSON list of [config, re, im].
  std::string DebugJson() const;

 private:
  StateVector(RegisterLayout layout, Map amps);
  void CheckSelector(std::span<const std::size_t> cells) const;

  RegisterLayout layout_;
  Map amps_;
};

struct StateVector::Branch {
  Config outcome;
  double probability = 0;
  StateVector state;
};

}  // namespace ggq

#endif  // GGQ_STATE_VECTOR_H_
