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

#ifndef GPFUSION_PURSUITS_HPP
#define GPFUSION_PURSUITS_HPP

#include "gpfusion/core.hpp"
#include "gpfusion/types.hpp"

namespace gpfusion {

struct PursuitConfig {
  int sparsity = 1;               // K
  int max_sp_iterations = 100;    // safety cap; SP terminates on its own
  int max_ifugp_iterations = 50;  // safety cap for the fusion loop
  // OMP atom selection: |a_i^T r| when true (default), signed a_i^T r when
  // false. The signed rule fails on signals with negative entries; it is kept
  // selectable for comparison.
  bool correlation_uses_magnitude = true;
};

struct TraceStep {
  int iteration = 0;
  SupportSet support;
  double residual_norm = 0.0;
  // True for steps on the returned lineage. A step that failed the
  // residual-decrease test is recorded with kept = false; the returned
  // support is the last kept step's (possibly padded, see below).
  bool kept = true;
};

struct PursuitTrace {
  std::vector<TraceStep> steps;
  bool iteration_cap_reached = false;
  // SP only: the loop exited on its first iteration, so the |T_init|-atom
  // support was padded to K atoms from the initial matched filter.
  bool initial_support_padded = false;
};

struct PursuitResult {
  SparseEstimate estimate;
  PursuitTrace trace;
};

/// Ingredient supports and the derived sets of one fusion step.
struct FusionReport {
  SupportSet omp_support;
  SupportSet sp_support;
  SupportSet common;  // intersection of the ingredient supports
  SupportSet joint;   // union of the ingredient supports
};

struct FusionResult {
  SparseEstimate estimate;
  FusionReport report;
};

/// Orthogonal matching pursuit warm-started from T_init (empty T_init is
/// classic OMP). Grows the support one atom per iteration, picking the column
/// with the largest correlation against the current residual, until it holds
/// exactly K atoms. The output always contains T_init.
PursuitResult omp(const DenseMatrix& A, const DenseVector& b,
                  const PursuitConfig& cfg, const SupportSet& T_init = {});

/// Subspace pursuit warm-started from T_init (empty T_init is classic SP).
/// Each iteration merges the K best matched-filter atoms into the previous
/// support, fits on the merged set, keeps the K largest coefficients, and
/// stops as soon as the residual norm fails to strictly decrease, returning
/// the previous iterate. T_init seeds the initial residual and support but,
/// unlike OMP, is not guaranteed to survive into the output.
PursuitResult sp(const DenseMatrix& A, const DenseVector& b,
                 const PursuitConfig& cfg, const SupportSet& T_init = {});

/// The fusion step applied to two K-atom ingredient supports: keep the atoms
/// both agree on, least-squares on the union, and fill the remaining slots
/// with the largest-magnitude coefficients. Requires 2K <= M.
FusionResult fuse_supports(const DenseMatrix& A, const DenseVector& b,
                           const PursuitConfig& cfg,
                           const SupportSet& omp_support,
                           const SupportSet& sp_support);

/// Fusion of greedy pursuits: run OMP and SP from scratch and fuse their
/// supports. Requires 2K <= M.
FusionResult fugp(const DenseMatrix& A, const DenseVector& b,
                  const PursuitConfig& cfg);

/// Iterative fusion: repeatedly re-run OMP and SP warm-started from the
/// current common support and fuse, while the residual norm keeps strictly
/// decreasing. Requires 2K <= M.
PursuitResult ifugp(const DenseMatrix& A, const DenseVector& b,
                    const PursuitConfig& cfg);

}  // namespace gpfusion

#endif  // GPFUSION_PURSUITS_HPP
