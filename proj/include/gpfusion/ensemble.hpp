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

#ifndef GPFUSION_ENSEMBLE_HPP
#define GPFUSION_ENSEMBLE_HPP

#include <cstdint>
#include <random>
#include <utility>

#include "gpfusion/types.hpp"

namespace gpfusion {

/// Splittable random stream.
///
/// A stream is identified by a 64-bit key. Substreams derive their key as
/// splitmix64(parent_key ^ splitmix64(id + 1)) and are independent of how
/// much the parent has been consumed, so trial-level parallelism cannot
/// change any generated object: (master seed, derivation path) fully
/// determines the output. Draws come from mt19937_64 seeded with the key;
/// normals use a stateless Box-Muller transform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key);

  /// Stream for a child identified by `id`, independent of this stream's
  /// consumption state.
  RngStream substream(std::uint64_t id) const;

  std::uint64_t key() const { return key_; }

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform01();
  /// Standard normal.
  double normal();
  /// Uniform on {0, 1, ..., bound-1} by rejection; bound >= 1.
  std::uint64_t uniform_below(std::uint64_t bound);

 private:
  std::uint64_t key_;
  std::uint64_t state_;
};

enum class SignalDistribution {
  kGaussian,    // nonzeros i.i.d. N(0, 1)
  kRademacher,  // nonzeros +1/-1 equiprobably
};

struct SignalSpec {
  int ambient_dim = 0;  // N
  int sparsity = 0;     // K
  SignalDistribution distribution = SignalDistribution::kGaussian;

  void validate() const;
};

/// Clean measurements or Gaussian noise calibrated to a target SMNR. Both
/// signal distributions have unit per-element power, so
/// sigma_n = sqrt(K / (M * 10^(SMNR/10))) serves both.
struct NoiseSpec {
  enum class Mode { kClean, kNoisyAtSmnr };

  Mode mode = Mode::kClean;
  double smnr_db = 0.0;

  static NoiseSpec clean() { return {}; }
  static NoiseSpec at_smnr_db(double db) {
    return {Mode::kNoisyAtSmnr, db};
  }

  bool is_clean() const { return mode == Mode::kClean; }
  /// Per-element noise standard deviation for a (K, M) problem.
  double sigma_n(int sparsity, int measurements) const;
};

/// M x N sensing matrix: entries i.i.d. N(0, 1/M), drawn column-major, then
/// each column scaled to unit Euclidean norm.
DenseMatrix gen_sensing_matrix(int measurements, int ambient_dim,
                               RngStream& rng);

/// Exactly K-sparse signal: K support locations drawn uniformly without
/// replacement, nonzero values filled in ascending index order.
std::pair<DenseVector, SupportSet> gen_sparse_signal(const SignalSpec& spec,
                                                     RngStream& rng);

/// b = A x + w. Clean mode sets w = 0; noisy mode draws w i.i.d.
/// N(0, sigma_n^2) with sigma_n derived from the exact sparsity of x.
std::pair<DenseVector, DenseVector> measure(const DenseMatrix& A,
                                            const DenseVector& x,
                                            const NoiseSpec& noise,
                                            RngStream& rng);

}  // namespace gpfusion

#endif  // GPFUSION_ENSEMBLE_HPP
