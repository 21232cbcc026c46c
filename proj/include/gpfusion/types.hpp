// Copyright 2026 the gpfusion authors
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

#ifndef GPFUSION_TYPES_HPP
#define GPFUSION_TYPES_HPP

#include <Eigen/Dense>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpfusion {

// Dense storage is Eigen's (column-major by default). All kernels take these.
using DenseMatrix = Eigen::MatrixXd;
using DenseVector = Eigen::VectorXd;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// Numerical rank of a column submatrix fell below its column count.
struct RankDeficient : Error {
  using Error::Error;
};

struct InvalidInitialSupport : Error {
  using Error::Error;
};

struct InsufficientCandidates : Error {
  using Error::Error;
};

struct ConfigInvalid : Error {
  using Error::Error;
};

struct EmptyAggregate : Error {
  using Error::Error;
};

/// An ordered set of column indices. Immutable after construction; all
/// "mutating" operations return a new set. Indices are kept sorted ascending
/// and unique, which fixes the coefficient ordering contract downstream.
class SupportSet {
 public:
  SupportSet() = default;
  SupportSet(std::initializer_list<int> indices)
      : SupportSet(std::vector<int>(indices)) {}
  explicit SupportSet(std::vector<int> indices);

  int cardinality() const { return static_cast<int>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  bool contains(int index) const;
  const std::vector<int>& indices() const { return indices_; }

  /// Largest index, or -1 when empty.
  int max_index() const { return indices_.empty() ? -1 : indices_.back(); }

  /// Copy of this set with one more index.
  SupportSet with(int index) const;

  bool operator==(const SupportSet&) const = default;

 private:
  std::vector<int> indices_;
};

SupportSet set_union(const SupportSet& a, const SupportSet& b);
SupportSet set_intersection(const SupportSet& a, const SupportSet& b);

/// Output of every pursuit: a K-atom support, the least-squares coefficients
/// on it (ascending support order), and the norm of the final residual. The
/// densified signal has the coefficients at the support indices and zeros
/// everywhere else.
struct SparseEstimate {
  SupportSet support;
  DenseVector coefficients;
  double residual_norm = 0.0;
  int ambient_dim = 0;

  DenseVector dense() const;
};

}  // namespace gpfusion

#endif  // GPFUSION_TYPES_HPP
