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

#ifndef GGQ_LOCAL_UNITARY_H_
#define GGQ_LOCAL_UNITARY_H_

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ggq {

using Complex = std::complex<double>;

// Sparse vector over a joint target space, indexed in mixed radix with the
// first target cell most significant.
using SparseAmplitudes = std::vector<std::pair<std::uint64_t, Complex>>;

// A unitary acting on a few work/query cells.
class LocalUnitary {
 public:
  virtual ~LocalUnitary() = default;

  // Dimension of each target cell.
  virtual const std::vector<std::uint64_t>& dims() const = 0;

  // Writes U|in> to `out` (cleared first). Every index appears at most once.
  virtual void Apply(const SparseAmplitudes& in,
                     SparseAmplitudes& out) const = 0;

  virtual std::string name() const = 0;

  std::uint64_t total_dim() const;
};

// Explicit matrix, validated unitary to within 1e-9 on construction.
class DenseUnitary : public LocalUnitary {
 public:
  // `matrix` is row-major, total_dim x total_dim, acting as out = U * in.
  DenseUnitary(std::vector<std::uint64_t> dims, std::vector<Complex> matrix,
               std::string name = "dense");

  static DenseUnitary Identity(std::vector<std::uint64_t> dims);
  static DenseUnitary Hadamard();
  // Pauli X on a qubit.
  static DenseUnitary Flip();

  const std::vector<std::uint64_t>& dims() const override { return dims_; }
  void Apply(const SparseAmplitudes& in, SparseAmplitudes& out) const override;
  std::string name() const override { return name_; }

  const std::vector<Complex>& matrix() const { return matrix_; }

 private:
  std::vector<std::uint64_t> dims_;
  std::vector<Complex> matrix_;
  std::string name_;
};

// Tensor product of Z_d Fourier transforms, one per target cell:
// |x> -> d^{-1/2} sum_k w^{xk} |k>, w = exp(2 pi i / d); the inverse uses
// w^{-xk}.
class FourierTransform : public LocalUnitary {
 public:
  // Largest joint target space handled with a dense scratch buffer.
  static constexpr std::uint64_t kMaxJointDim = std::uint64_t{1} << 24;

  FourierTransform(std::vector<std::uint64_t> dims, bool inverse);

  const std::vector<std::uint64_t>& dims() const override { return dims_; }
  void Apply(const SparseAmplitudes& in, SparseAmplitudes& out) const override;
  std::string name() const override { return inverse_ ? "qft_inv" : "qft"; }

  bool inverse() const { return inverse_; }

 private:
  std::vector<std::uint64_t> dims_;
  bool inverse_;
  std::vector<std::vector<Complex>> twiddles_;
};

}  // namespace ggq

#endif  // GGQ_LOCAL_UNITARY_H_
