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

#ifndef GGQ_LINEAR_FORM_H_
#define GGQ_LINEAR_FORM_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ggq/group.h"

namespace ggq {

// c_0 + sum_i c_i Y_i over Z_N, stored reduced.
class LinearForm {
 public:
  LinearForm() = default;

  static LinearForm Zero(std::size_t m);
  // Y_i, 1-based.
  static LinearForm Variable(std::size_t m, std::size_t i);
  // (c_0, c_1, ..., c_m), reduced mod N.
  static LinearForm FromCoefficients(std::vector<Residue> coeffs,
                                     const GroupSpec& spec);

  LinearForm Combine(const LinearForm& other, bool subtract,
                     const GroupSpec& spec) const;
  Residue Evaluate(std::span<const Residue> y, const GroupSpec& spec) const;

  const std::vector<Residue>& coefficients() const { return coeffs_; }
  std::size_t variable_count() const {
    return coeffs_.empty() ? 0 : coeffs_.size() - 1;
  }
  std::string ToString() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend auto operator<=>(const LinearForm&, const LinearForm&) = default;

 private:
  explicit LinearForm(std::vector<Residue> coeffs)
      : coeffs_(std::move(coeffs)) {}

  std::vector<Residue> coeffs_;
};

struct LinearFormHash {
  std::size_t operator()(const LinearForm& f) const noexcept;
};

}  // namespace ggq

#endif  // GGQ_LINEAR_FORM_H_
