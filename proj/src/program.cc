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

#include "ggq/program.h"

#include <cmath>
#include <utility>

#include "ggq/errors.h"

namespace ggq {

double TotalVariation(const OutcomeDistribution& a,
                      const OutcomeDistribution& b) {
  double tv = 0;
  for (const auto& [o, p] : a) {
    auto it = b.find(o);
    tv += std::abs(p - (it == b.end() ? 0.0 : it->second));
  }
  for (const auto& [o, p] : b) {
    if (!a.contains(o)) tv += p;
  }
  return tv / 2;
}

std::size_t Program::CountSteps(StepKind kind) const {
  std::size_t n = 0;
  for (const Step& s : steps) n += s.kind == kind;
  return n;
}

std::size_t Program::QuantumDepth() const {
  return CountSteps(StepKind::kGroupOp);
}

std::size_t Program::QuantumOps() const {
  std::size_t n = 0;
  for (const Step& s : steps) {
    if (s.kind == StepKind::kGroupOp) n += s.width;
  }
  return n;
}

ProgramBuilder::ProgramBuilder(std::string name, RegisterLayout layout)
    : name_(std::move(name)), layout_(std::move(layout)) {}

ProgramBuilder& ProgramBuilder::Unitary(std::vector<std::size_t> cells,
                                        std::shared_ptr<const LocalUnitary> u) {
  Step s;
  s.kind = StepKind::kUnitary;
  s.label = u->name();
  s.cells = std::move(cells);
  s.unitary = std::move(u);
  steps_.push_back(std::move(s));
  return *this;
}

ProgramBuilder& ProgramBuilder::Fourier(std::vector<std::size_t> cells,
                                        bool inverse) {
  std::vector<std::uint64_t> dims;
  for (std::size_t c : cells) dims.push_back(layout_.dim(c));
  return Unitary(std::move(cells),
                 std::make_shared<FourierTransform>(std::move(dims), inverse));
}

ProgramBuilder& ProgramBuilder::Permutation(LocalPermutation f,
                                            std::string label) {
  Step s;
  s.kind = StepKind::kPermutation;
  s.label = std::move(label);
  s.permutation = std::move(f);
  steps_.push_back(std::move(s));
  return *this;
}

ProgramBuilder& ProgramBuilder::AddToQuery(std::size_t k, TripleFn f,
                                           bool subtract) {
  const std::size_t nw = layout_.work_count();
  const std::size_t base = layout_.QueryCell(k, QueryField::kSign);
  const std::uint64_t index_dim = layout_.table_size() + 1;
  return Permutation(
      [nw, base, index_dim, f = std::move(f),
       subtract](std::span<std::uint32_t> local) {
        const QueryTriple q = f(local.first(nw));
        if (q.b > 1 || q.i >= index_dim || q.j >= index_dim) {
          throw ValidationError("query triple outside the register range");
        }
        auto add = [subtract](std::uint32_t& cell, std::uint64_t v,
                              std::uint64_t dim) {
          cell = static_cast<std::uint32_t>(subtract ? (cell + dim - v) % dim
                                                     : (cell + v) % dim);
        };
        add(local[base], q.b, 2);
        add(local[base + 1], q.i, index_dim);
        add(local[base + 2], q.j, index_dim);
      },
      subtract ? "clear_query" : "set_query");
}

ProgramBuilder& ProgramBuilder::SetQuery(std::size_t k, TripleFn f) {
  return AddToQuery(k, std::move(f), false);
}

ProgramBuilder& ProgramBuilder::ClearQuery(std::size_t k, TripleFn f) {
  return AddToQuery(k, std::move(f), true);
}

ProgramBuilder& ProgramBuilder::SetQueryConstant(std::size_t k, QueryTriple q) {
  return SetQuery(k, [q](std::span<const std::uint32_t>) { return q; });
}

ProgramBuilder& ProgramBuilder::ClearQueryConstant(std::size_t k,
                                                   QueryTriple q) {
  return ClearQuery(k, [q](std::span<const std::uint32_t>) { return q; });
}

ProgramBuilder& ProgramBuilder::GroupOp(std::size_t width,
                                        std::vector<Index> qracm) {
  if (width < 1 || width > layout_.width()) {
    throw DomainError("parallel width outside 1..K");
  }
  Step s;
  s.kind = StepKind::kGroupOp;
  s.label = width == 1 ? "quantum_op" : "parallel_op";
  s.width = width;
  s.qracm = std::move(qracm);
  steps_.push_back(std::move(s));
  return *this;
}

ProgramBuilder& ProgramBuilder::Equality(std::size_t width) {
  if (width < 1 || width > layout_.width()) {
    throw DomainError("parallel width outside 1..K");
  }
  Step s;
  s.kind = StepKind::kEquality;
  s.label = "equality";
  s.width = width;
  steps_.push_back(std::move(s));
  return *this;
}

ProgramBuilder& ProgramBuilder::ClassicalGroupOp(std::size_t query) {
  if (query >= layout_.width()) throw DomainError("no such query register");
  Step s;
  s.kind = StepKind::kClassicalGroupOp;
  s.label = "classical_op";
  s.query = query;
  steps_.push_back(std::move(s));
  return *this;
}

ProgramBuilder& ProgramBuilder::ClassicalOpConstant(QueryTriple q) {
  SetQueryConstant(0, q);
  ClassicalGroupOp(0);
  return ClearQueryConstant(0, q);
}

ProgramBuilder& ProgramBuilder::ForcedMeasurement() {
  Step s;
  s.kind = StepKind::kForcedMeasurement;
  s.label = "forced_measurement";
  steps_.push_back(std::move(s));
  return *this;
}

ProgramBuilder& ProgramBuilder::WorkInit(std::vector<std::uint32_t> init) {
  work_init_ = std::move(init);
  return *this;
}

Program ProgramBuilder::Build(OutputSpec output) && {
  if (output.kind == OutputSpec::Kind::kClassical) {
    if (output.cells.empty()) throw DomainError("empty output selector");
    for (std::size_t c : output.cells) {
      if (c >= layout_.cell_count()) throw DomainError("no such output cell");
    }
  } else {
    layout_.TableCell(output.table_index);
  }
  return Program{std::move(name_), std::move(layout_), std::move(steps_),
                 std::move(output), std::move(work_init_)};
}

}  // namespace ggq
