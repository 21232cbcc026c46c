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

#ifndef GPFUSION_CORE_HPP
#define GPFUSION_CORE_HPP

#include "gpfusion/types.hpp"

namespace gpfusion {

/// A pivot below kRankTolerance times the largest pivot declares the
/// submatrix rank deficient.
inline constexpr double kRankTolerance = 1e-10;

struct LeastSquaresFit {
  DenseVector coefficients;  // one per support index, ascending order
  DenseVector residual;      // b - A_T * coefficients
};

/// Least-squares fit of b on the columns of A listed in T, via rank-revealing
/// QR with column pivoting. Empty T yields empty coefficients and residual b.
/// Throws RankDeficient when the numerical rank of A_T is below |T|.
LeastSquaresFit least_squares_on_support(const DenseMatrix& A,
                                         const DenseVector& b,
                                         const SupportSet& T);

/// Correlation of every column of A with r, i.e. A^T r.
DenseVector matched_filter(const DenseMatrix& A, const DenseVector& r);

/// The k indices with the largest |v_i| among indices not in `exclude`.
/// Ties break to the lower index. Throws InsufficientCandidates when fewer
/// than k eligible entries exist.
SupportSet top_k_magnitude(const DenseVector& v, int k,
                           const SupportSet& exclude);

/// Same selection rule restricted to the given candidate indices.
SupportSet top_k_magnitude_among(const std::vector<int>& candidates,
                                 const DenseVector& v, int k,
                                 const SupportSet& exclude);

/// Index of the largest entry of v outside `exclude`; by magnitude when
/// `use_magnitude`, by signed value otherwise. Ties break to the lower index.
int argmax_correlation(const DenseVector& v, const SupportSet& exclude,
                       bool use_magnitude);

}  // namespace gpfusion

#endif  // GPFUSION_CORE_HPP
