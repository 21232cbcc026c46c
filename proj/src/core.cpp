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

#include "gpfusion/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gpfusion {

SupportSet::SupportSet(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (!indices_.empty() && indices_.front() < 0) {
    throw std::invalid_argument("SupportSet: negative index");
  }
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw std::invalid_argument("SupportSet: duplicate index");
  }
}

bool SupportSet::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

SupportSet SupportSet::with(int index) const {
  std::vector<int> out = indices_;
  auto pos = std::lower_bound(out.begin(), out.end(), index);
  if (pos != out.end() && *pos == index) {
    throw std::invalid_argument("SupportSet::with: index already present");
  }
  out.insert(pos, index);
  SupportSet s;
  s.indices_ = std::move(out);
  return s;
}

SupportSet set_union(const SupportSet& a, const SupportSet& b) {
  std::vector<int> out;
  out.reserve(a.indices().size() + b.indices().size());
  std::set_union(a.indices().begin(), a.indices().end(), b.indices().begin(),
                 b.indices().end(), std::back_inserter(out));
  return SupportSet(std::move(out));
}

SupportSet set_intersection(const SupportSet& a, const SupportSet& b) {
  std::vector<int> out;
  std::set_intersection(a.indices().begin(), a.indices().end(),
                        b.indices().begin(), b.indices().end(),
                        std::back_inserter(out));
  return SupportSet(std::move(out));
}

DenseVector SparseEstimate::dense() const {
  DenseVector x = DenseVector::Zero(ambient_dim);
  const auto& idx = support.indices();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    x[idx[i]] = coefficients[static_cast<Eigen::Index>(i)];
  }
  return x;
}

namespace {

DenseMatrix select_columns(const DenseMatrix& A, const SupportSet& T) {
  DenseMatrix sub(A.rows(), T.cardinality());
  const auto& idx = T.indices();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    sub.col(static_cast<Eigen::Index>(i)) = A.col(idx[i]);
  }
  return sub;
}

}  // namespace

LeastSquaresFit least_squares_on_support(const DenseMatrix& A,
                                         const DenseVector& b,
                                         const SupportSet& T) {
  if (b.size() != A.rows()) {
    throw DimensionMismatch("least_squares_on_support: b has length " +
                            std::to_string(b.size()) + ", A has " +
                            std::to_string(A.rows()) + " rows");
  }
  if (T.max_index() >= A.cols()) {
    throw DimensionMismatch("least_squares_on_support: support index " +
                            std::to_string(T.max_index()) +
                            " out of range for " + std::to_string(A.cols()) +
                            " columns");
  }
  if (T.cardinality() > A.rows()) {
    throw DimensionMismatch(
        "least_squares_on_support: support larger than measurement count");
  }
  if (T.empty()) {
    return {DenseVector(0), b};
  }

  DenseMatrix At = select_columns(A, T);
  Eigen::ColPivHouseholderQR<DenseMatrix> qr(At);
  qr.setThreshold(kRankTolerance);
  if (qr.rank() < T.cardinality()) {
    throw RankDeficient("least_squares_on_support: numerical rank " +
                        std::to_string(qr.rank()) + " < |T| = " +
                        std::to_string(T.cardinality()));
  }
  DenseVector coefficients = qr.solve(b);
  DenseVector residual = b - At * coefficients;
  return {std::move(coefficients), std::move(residual)};
}

DenseVector matched_filter(const DenseMatrix& A, const DenseVector& r) {
  if (r.size() != A.rows()) {
    throw DimensionMismatch("matched_filter: r has length " +
                            std::to_string(r.size()) + ", A has " +
                            std::to_string(A.rows()) + " rows");
  }
  return A.transpose() * r;
}

namespace {

// Shared ordering for every magnitude selection: larger |v| first, ties to
// the lower index.
bool magnitude_before(const DenseVector& v, int a, int b) {
  const double ma = std::abs(v[a]);
  const double mb = std::abs(v[b]);
  if (ma != mb) return ma > mb;
  return a < b;
}

SupportSet take_top_k(std::vector<int>&& eligible, const DenseVector& v,
                      int k) {
  std::partial_sort(eligible.begin(), eligible.begin() + k, eligible.end(),
                    [&v](int a, int b) { return magnitude_before(v, a, b); });
  eligible.resize(k);
  return SupportSet(std::move(eligible));
}

}  // namespace

SupportSet top_k_magnitude(const DenseVector& v, int k,
                           const SupportSet& exclude) {
  if (k < 0) {
    throw std::invalid_argument("top_k_magnitude: negative k");
  }
  std::vector<int> eligible;
  eligible.reserve(v.size());
  for (int i = 0; i < v.size(); ++i) {
    if (!exclude.contains(i)) eligible.push_back(i);
  }
  if (static_cast<int>(eligible.size()) < k) {
    throw InsufficientCandidates("top_k_magnitude: need " + std::to_string(k) +
                                 " entries, only " +
                                 std::to_string(eligible.size()) +
                                 " eligible");
  }
  return take_top_k(std::move(eligible), v, k);
}

SupportSet top_k_magnitude_among(const std::vector<int>& candidates,
                                 const DenseVector& v, int k,
                                 const SupportSet& exclude) {
  if (k < 0) {
    throw std::invalid_argument("top_k_magnitude_among: negative k");
  }
  std::vector<int> eligible;
  eligible.reserve(candidates.size());
  for (int i : candidates) {
    if (!exclude.contains(i)) eligible.push_back(i);
  }
  if (static_cast<int>(eligible.size()) < k) {
    throw InsufficientCandidates("top_k_magnitude_among: need " +
                                 std::to_string(k) + " entries, only " +
                                 std::to_string(eligible.size()) +
                                 " eligible");
  }
  return take_top_k(std::move(eligible), v, k);
}

int argmax_correlation(const DenseVector& v, const SupportSet& exclude,
                       bool use_magnitude) {
  int best = -1;
  double best_value = 0.0;
  for (int i = 0; i < v.size(); ++i) {
    if (exclude.contains(i)) continue;
    const double value = use_magnitude ? std::abs(v[i]) : v[i];
    if (best < 0 || value > best_value) {
      best = i;
      best_value = value;
    }
  }
  if (best < 0) {
    throw InsufficientCandidates("argmax_correlation: no eligible entry");
  }
  return best;
}

}  // namespace gpfusion
