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

#include "ggq/local_unitary.h"

#include <cmath>
#include <numbers>

#include "ggq/errors.h"
#include "ggq/state_vector.h"

namespace ggq {

std::uint64_t LocalUnitary::total_dim() const {
  std::uint64_t total = 1;
  for (std::uint64_t d : dims()) total *= d;
  return total;
}

DenseUnitary::DenseUnitary(std::vector<std::uint64_t> dims,
                           std::vector<Complex> matrix, std::string name)
    : dims_(std::move(dims)),
      matrix_(std::move(matrix)),
      name_(std::move(name)) {
  if (dims_.empty()) throw ValidationError("unitary without target cells");
  const std::uint64_t n = total_dim();
  if (matrix_.size() != n * n) {
    throw ValidationError("matrix size does not match target dimensions");
  }
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      Complex dot = 0;
      for (std::uint64_t r = 0; r < n; ++r) {
        dot += std::conj(matrix_[r * n + a]) * matrix_[r * n + b];
      }
      const Complex expected = (a == b) ? 1.0 : 0.0;
      if (std::abs(dot - expected) > kTolerance) {
        throw ValidationError("operator '" + name_ + "' is not unitary");
      }
    }
  }
}

DenseUnitary DenseUnitary::Identity(std::vector<std::uint64_t> dims) {
  std::uint64_t n = 1;
  for (std::uint64_t d : dims) n *= d;
  std::vector<Complex> m(n * n, 0.0);
  for (std::uint64_t i = 0; i < n; ++i) m[i * n + i] = 1.0;
  return DenseUnitary(std::move(dims), std::move(m), "identity");
}

DenseUnitary DenseUnitary::Hadamard() {
  const double h = std::numbers::sqrt2 / 2;
  return DenseUnitary({2}, {h, h, h, -h}, "hadamard");
}

DenseUnitary DenseUnitary::Flip() {
  return DenseUnitary({2}, {0.0, 1.0, 1.0, 0.0}, "flip");
}

void DenseUnitary::Apply(const SparseAmplitudes& in,
                         SparseAmplitudes& out) const {
  const std::uint64_t n = total_dim();
  std::vector<Complex> acc(n, 0.0);
  for (const auto& [col, amp] : in) {
    for (std::uint64_t row = 0; row < n; ++row) {
      acc[row] += matrix_[row * n + col] * amp;
    }
  }
  out.clear();
  for (std::uint64_t row = 0; row < n; ++row) {
    if (std::abs(acc[row]) >= kPruneThreshold) out.emplace_back(row, acc[row]);
  }
}

FourierTransform::FourierTransform(std::vector<std::uint64_t> dims,
                                   bool inverse)
    : dims_(std::move(dims)), inverse_(inverse) {
  if (dims_.empty()) throw ValidationError("transform without target cells");
  std::uint64_t total = 1;
  for (std::uint64_t d : dims_) {
    if (d == 0) throw ValidationError("zero-dimensional register");
    total *= d;
    if (total > kMaxJointDim) {
      throw SizeError("joint Fourier transform space too large");
    }
    std::vector<Complex> tw(d);
    const double sign = inverse_ ? -1.0 : 1.0;
    for (std::uint64_t k = 0; k < d; ++k) {
      tw[k] =
          std::polar(1.0, sign * 2.0 * std::numbers::pi *
                              static_cast<double>(k) / static_cast<double>(d));
    }
    twiddles_.push_back(std::move(tw));
  }
}

void FourierTransform::Apply(const SparseAmplitudes& in,
                             SparseAmplitudes& out) const {
  const std::uint64_t total = total_dim();
  std::vector<Complex> buf(total, 0.0), next(total, 0.0);
  for (const auto& [idx, amp] : in) buf[idx] += amp;

  std::uint64_t stride = total;
  for (std::size_t axis = 0; axis < dims_.size(); ++axis) {
    const std::uint64_t d = dims_[axis];
    stride /= d;
    const std::vector<Complex>& tw = twiddles_[axis];
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::fill(next.begin(), next.end(), Complex(0.0));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const Complex v = buf[idx];
      if (v == Complex(0.0)) continue;
      const std::uint64_t x = (idx / stride) % d;
      const std::uint64_t base = idx - x * stride;
      const Complex sv = v * scale;
      std::uint64_t e = 0;
      for (std::uint64_t k = 0; k < d; ++k) {
        next[base + k * stride] += sv * tw[e];
        e += x;
        if (e >= d) e -= d;
      }
    }
    buf.swap(next);
  }
  out.clear();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (std::abs(buf[idx]) >= kPruneThreshold) out.emplace_back(idx, buf[idx]);
  }
}

}  // namespace ggq
