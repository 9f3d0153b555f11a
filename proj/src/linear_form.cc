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

#include "ggq/linear_form.h"

#include "ggq/errors.h"

namespace ggq {

LinearForm LinearForm::Zero(std::size_t m) {
  return LinearForm(std::vector<Residue>(m + 1, 0));
}

LinearForm LinearForm::Variable(std::size_t m, std::size_t i) {
  if (i < 1 || i > m) throw DomainError("no such variable");
  std::vector<Residue> c(m + 1, 0);
  c[i] = 1;
  return LinearForm(std::move(c));
}

LinearForm LinearForm::FromCoefficients(std::vector<Residue> coeffs,
                                        const GroupSpec& spec) {
  if (coeffs.empty()) throw DomainError("a form needs a constant term");
  for (Residue& c : coeffs) c %= spec.order();
  return LinearForm(std::move(coeffs));
}

LinearForm LinearForm::Combine(const LinearForm& other, bool subtract,
                               const GroupSpec& spec) const {
  if (coeffs_.size() != other.coeffs_.size()) {
    throw InvariantError("combining forms over different variable sets");
  }
  std::vector<Residue> c(coeffs_.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = subtract ? spec.Sub(coeffs_[k], other.coeffs_[k])
                    : spec.Add(coeffs_[k], other.coeffs_[k]);
  }
  return LinearForm(std::move(c));
}

Residue LinearForm::Evaluate(std::span<const Residue> y,
                             const GroupSpec& spec) const {
  if (y.size() != variable_count()) {
    throw DomainError("evaluation point has the wrong arity");
  }
  Residue v = coeffs_.empty() ? 0 : coeffs_[0] % spec.order();
  for (std::size_t i = 0; i < y.size(); ++i) {
    v = spec.Add(v, spec.Mul(coeffs_[i + 1], y[i]));
  }
  return v;
}

std::string LinearForm::ToString() const {
  std::string s = coeffs_.empty() ? "0" : std::to_string(coeffs_[0]);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    s += " + " + std::to_string(coeffs_[i]) + "*Y" + std::to_string(i);
  }
  return s;
}

std::size_t LinearFormHash::operator()(const LinearForm& f) const noexcept {
  std::uint64_t h = 0x84222325cbf29ce4ULL;
  for (Residue c : f.coefficients()) {
    h ^= c;
    h *= 0x100000001b3ULL;
    h ^= h >> 31;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace ggq
