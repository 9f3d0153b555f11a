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

#include "ggq/state_vector.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "ggq/errors.h"
#include "json.hpp"

namespace ggq {

std::size_t ConfigHash::operator()(const Config& c) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint32_t v : c) {
    h ^= v;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

RegisterLayout::RegisterLayout(std::vector<std::uint64_t> work_dims,
                               std::size_t width, std::size_t table_size,
                               std::uint64_t order)
    : work_dims_(std::move(work_dims)),
      width_(width),
      table_size_(table_size),
      order_(order) {
  for (std::uint64_t d : work_dims_) {
    if (d < 1 || d > UINT32_MAX) throw DomainError("bad work register size");
  }
  if (order_ < 2 || order_ > GroupSpec::kMaxOrder) {
    throw DomainError("bad group order in layout");
  }
  if (table_size_ >= UINT32_MAX) throw DomainError("table too large");
}

std::size_t RegisterLayout::WorkCell(std::size_t r) const {
  if (r >= work_count()) throw DomainError("no such work register");
  return r;
}

std::size_t RegisterLayout::QueryCell(std::size_t k, QueryField field) const {
  if (k >= width_) throw DomainError("no such query register");
  return work_count() + 3 * k + static_cast<std::size_t>(field);
}

std::size_t RegisterLayout::TableCell(std::size_t i) const {
  if (i < 1 || i > table_size_) {
    throw DomainError("table index " + std::to_string(i) + " outside 1.." +
                      std::to_string(table_size_));
  }
  return local_cell_count() + i - 1;
}

std::uint64_t RegisterLayout::dim(std::size_t cell) const {
  if (cell < work_count()) return work_dims_[cell];
  if (cell < local_cell_count()) {
    return (cell - work_count()) % 3 == 0 ? 2 : table_size_ + 1;
  }
  if (cell < cell_count()) return order_;
  throw DomainError("no such cell");
}

std::vector<std::size_t> RegisterLayout::QueryCells(std::size_t k) const {
  return {QueryCell(k, QueryField::kSign), QueryCell(k, QueryField::kTarget),
          QueryCell(k, QueryField::kControl)};
}

std::vector<std::size_t> RegisterLayout::AllCells() const {
  std::vector<std::size_t> cells(cell_count());
  for (std::size_t c = 0; c < cells.size(); ++c) cells[c] = c;
  return cells;
}

StateVector::StateVector(RegisterLayout layout, Map amps)
    : layout_(std::move(layout)), amps_(std::move(amps)) {}

StateVector StateVector::Init(RegisterLayout layout,
                              std::span<const Residue> inputs,
                              std::span<const std::uint32_t> work_init) {
  if (inputs.size() > layout.table_size()) {
    throw DomainError("more inputs than table slots");
  }
  if (work_init.size() > layout.work_count()) {
    throw DomainError("auxiliary string longer than the work register");
  }
  Config c(layout.cell_count(), 0);
  for (std::size_t r = 0; r < work_init.size(); ++r) {
    if (work_init[r] >= layout.dim(r)) throw DomainError("bad work value");
    c[r] = work_init[r];
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i] >= layout.order()) throw DomainError("input outside Z_N");
    c[layout.TableCell(i + 1)] = static_cast<std::uint32_t>(inputs[i]);
  }
  Map amps;
  amps.emplace(std::move(c), Complex(1.0));
  return StateVector(std::move(layout), std::move(amps));
}

double StateVector::Norm() const {
  double n = 0;
  for (const auto& [c, a] : amps_) n += std::norm(a);
  return n;
}

void StateVector::ApplyLocal(std::span<const std::size_t> cells,
                             const LocalUnitary& u) {
  const auto& dims = u.dims();
  if (cells.size() != dims.size()) {
    throw ValidationError("operator arity does not match target cells");
  }
  std::set<std::size_t> seen;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (!layout_.IsLocal(cells[k])) {
      throw ValidationError("local operators may not act on the table");
    }
    if (!seen.insert(cells[k]).second) {
      throw ValidationError("repeated target cell");
    }
    if (layout_.dim(cells[k]) != dims[k]) {
      throw ValidationError("operator dimension does not match cell");
    }
  }

  std::unordered_map<Config, SparseAmplitudes, ConfigHash> groups;
  for (const auto& [cfg, amp] : amps_) {
    Config rest = cfg;
    std::uint64_t flat = 0;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      flat = flat * dims[k] + cfg[cells[k]];
      rest[cells[k]] = 0;
    }
    groups[std::move(rest)].emplace_back(flat, amp);
  }

  Map out;
  out.reserve(amps_.size());
  SparseAmplitudes image;
  for (auto& [rest, in] : groups) {
    u.Apply(in, image);
    for (const auto& [flat, amp] : image) {
      if (std::abs(amp) < kPruneThreshold) continue;
      Config c = rest;
      std::uint64_t f = flat;
      for (std::size_t k = cells.size(); k-- > 0;) {
        c[cells[k]] = static_cast<std::uint32_t>(f % dims[k]);
        f /= dims[k];
      }
      out.emplace(std::move(c), amp);
    }
  }
  amps_ = std::move(out);
}

void StateVector::ApplyPermutation(const LocalPermutation& f) {
  const std::size_t local = layout_.local_cell_count();
  Map out;
  out.reserve(amps_.size());
  for (const auto& [cfg, amp] : amps_) {
    Config c = cfg;
    f(std::span<std::uint32_t>(c.data(), local));
    for (std::size_t cell = 0; cell < local; ++cell) {
      if (c[cell] >= layout_.dim(cell)) {
        throw ValidationError("permutation leaves the register range");
      }
    }
    if (!out.emplace(std::move(c), amp).second) {
      throw ValidationError("local map is not injective on the support");
    }
  }
  amps_ = std::move(out);
}

void StateVector::MapConfigs(const std::function<void(Config&)>& f) {
  Map out;
  out.reserve(amps_.size());
  for (const auto& [cfg, amp] : amps_) {
    Config c = cfg;
    f(c);
    if (!out.emplace(std::move(c), amp).second) {
      throw InvariantError("oracle map is not injective on the support");
    }
  }
  amps_ = std::move(out);
}

void StateVector::CheckSelector(std::span<const std::size_t> cells) const {
  if (cells.empty()) throw DomainError("empty register selector");
  for (std::size_t c : cells) {
    if (c >= layout_.cell_count()) throw DomainError("no such cell");
  }
}

std::map<Config, double> StateVector::Distribution(
    std::span<const std::size_t> cells) const {
  CheckSelector(cells);
  std::map<Config, double> dist;
  Config key(cells.size());
  for (const auto& [cfg, amp] : amps_) {
    for (std::size_t k = 0; k < cells.size(); ++k) key[k] = cfg[cells[k]];
    dist[key] += std::norm(amp);
  }
  return dist;
}

std::vector<StateVector::Branch> StateVector::Branches(
    std::span<const std::size_t> cells) const {
  CheckSelector(cells);
  std::map<Config, Map> parts;
  Config key(cells.size());
  for (const auto& [cfg, amp] : amps_) {
    for (std::size_t k = 0; k < cells.size(); ++k) key[k] = cfg[cells[k]];
    parts[key].emplace(cfg, amp);
  }
  std::vector<Branch> out;
  out.reserve(parts.size());
  for (auto& [outcome, part] : parts) {
    double p = 0;
    for (const auto& [c, a] : part) p += std::norm(a);
    const double scale = 1.0 / std::sqrt(p);
    for (auto& [c, a] : part) a *= scale;
    out.push_back(Branch{outcome, p, StateVector(layout_, std::move(part))});
  }
  return out;
}

StateVector::Branch StateVector::Measure(std::span<const std::size_t> cells,
                                         Rng& rng) const {
  std::map<Config, double> dist = Distribution(cells);
  double total = 0;
  for (const auto& [o, p] : dist) total += p;
  double r = UniformDouble(rng) * total;
  const Config* chosen = &dist.rbegin()->first;
  double chosen_p = dist.rbegin()->second;
  for (const auto& [o, p] : dist) {
    if (r < p) {
      chosen = &o;
      chosen_p = p;
      break;
    }
    r -= p;
  }
  Map part;
  const double scale = 1.0 / std::sqrt(chosen_p);
  for (const auto& [cfg, amp] : amps_) {
    bool match = true;
    for (std::size_t k = 0; k < cells.size() && match; ++k) {
      match = cfg[cells[k]] == (*chosen)[k];
    }
    if (match) part.emplace(cfg, amp * scale);
  }
  return Branch{*chosen, chosen_p, StateVector(layout_, std::move(part))};
}

std::string StateVector::DebugJson() const {
  std::vector<std::pair<Config, Complex>> sorted(amps_.begin(), amps_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [c, a] : sorted) {
    j.push_back({c, a.real(), a.imag()});
  }
  return j.dump();
}

}  // namespace ggq
