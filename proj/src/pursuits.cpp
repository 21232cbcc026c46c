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

#include "gpfusion/pursuits.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace gpfusion {

namespace {

// Loop exits compare residual norms with an absolute slack so that exactly
// converged iterates (r == 0) terminate instead of cycling on rounding noise.
double exit_slack(const DenseVector& b) { return 1e-12 * b.norm(); }

void validate_inputs(const DenseMatrix& A, const DenseVector& b,
                     const PursuitConfig& cfg, const SupportSet& T_init,
                     const char* who) {
  const std::string name(who);
  if (b.size() != A.rows()) {
    throw DimensionMismatch(name + ": b has length " +
                            std::to_string(b.size()) + ", A has " +
                            std::to_string(A.rows()) + " rows");
  }
  if (cfg.sparsity < 1) {
    throw ConfigInvalid(name + ": sparsity must be >= 1");
  }
  if (cfg.max_sp_iterations < 1 || cfg.max_ifugp_iterations < 1) {
    throw ConfigInvalid(name + ": iteration caps must be >= 1");
  }
  if (cfg.sparsity > A.rows()) {
    throw ConfigInvalid(name + ": sparsity " + std::to_string(cfg.sparsity) +
                        " exceeds measurement count " +
                        std::to_string(A.rows()));
  }
  if (T_init.cardinality() >= cfg.sparsity) {
    throw InvalidInitialSupport(name + ": |T_init| = " +
                                std::to_string(T_init.cardinality()) +
                                " must be <= K-1 = " +
                                std::to_string(cfg.sparsity - 1));
  }
  if (T_init.max_index() >= A.cols()) {
    throw InvalidInitialSupport(name + ": T_init index " +
                                std::to_string(T_init.max_index()) +
                                " out of range for " +
                                std::to_string(A.cols()) + " columns");
  }
}

void require_double_sparsity(const DenseMatrix& A, const PursuitConfig& cfg,
                             const char* who) {
  if (2 * cfg.sparsity > A.rows()) {
    throw ConfigInvalid(std::string(who) + ": fusion requires 2K <= M, got K = " +
                        std::to_string(cfg.sparsity) + ", M = " +
                        std::to_string(A.rows()));
  }
}

DenseVector densify(const SupportSet& support, const DenseVector& coefficients,
                    Eigen::Index n) {
  DenseVector v = DenseVector::Zero(n);
  const auto& idx = support.indices();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    v[idx[i]] = coefficients[static_cast<Eigen::Index>(i)];
  }
  return v;
}

SparseEstimate make_estimate(const SupportSet& support,
                             const LeastSquaresFit& fit, Eigen::Index n) {
  return SparseEstimate{support, fit.coefficients, fit.residual.norm(),
                        static_cast<int>(n)};
}

}  // namespace

PursuitResult omp(const DenseMatrix& A, const DenseVector& b,
                  const PursuitConfig& cfg, const SupportSet& T_init) {
  validate_inputs(A, b, cfg, T_init, "omp");
  const int K = cfg.sparsity;

  SupportSet support = T_init;
  LeastSquaresFit fit = least_squares_on_support(A, b, support);

  PursuitTrace trace;
  trace.steps.push_back(
      {support.cardinality(), support, fit.residual.norm(), true});

  for (int k = support.cardinality(); k < K; ++k) {
    const DenseVector correlation = matched_filter(A, fit.residual);
    const int atom = argmax_correlation(correlation, support,
                                        cfg.correlation_uses_magnitude);
    support = support.with(atom);
    fit = least_squares_on_support(A, b, support);
    trace.steps.push_back({k + 1, support, fit.residual.norm(), true});
  }

  return {make_estimate(support, fit, A.cols()), std::move(trace)};
}

PursuitResult sp(const DenseMatrix& A, const DenseVector& b,
                 const PursuitConfig& cfg, const SupportSet& T_init) {
  validate_inputs(A, b, cfg, T_init, "sp");
  const int K = cfg.sparsity;
  const double slack = exit_slack(b);

  SupportSet kept_support = T_init;
  LeastSquaresFit kept_fit = least_squares_on_support(A, b, kept_support);
  const DenseVector initial_residual = kept_fit.residual;
  double kept_norm = kept_fit.residual.norm();

  PursuitTrace trace;
  trace.steps.push_back({0, kept_support, kept_norm, true});

  for (int k = 1; k <= cfg.max_sp_iterations; ++k) {
    const DenseVector correlation = matched_filter(A, kept_fit.residual);
    const SupportSet filter_picks = top_k_magnitude(correlation, K, {});
    const SupportSet merged = set_union(filter_picks, kept_support);

    const LeastSquaresFit merged_fit = least_squares_on_support(A, b, merged);
    const DenseVector v = densify(merged, merged_fit.coefficients, A.cols());
    const SupportSet candidate =
        top_k_magnitude_among(merged.indices(), v, K, {});

    LeastSquaresFit candidate_fit = least_squares_on_support(A, b, candidate);
    const double candidate_norm = candidate_fit.residual.norm();

    if (candidate_norm >= kept_norm - slack) {
      trace.steps.push_back({k, candidate, candidate_norm, false});
      break;
    }
    trace.steps.push_back({k, candidate, candidate_norm, true});
    kept_support = candidate;
    kept_fit = std::move(candidate_fit);
    kept_norm = candidate_norm;

    if (k == cfg.max_sp_iterations) {
      trace.iteration_cap_reached = true;
    }
  }

  if (kept_support.cardinality() < K) {
    // The first iteration failed to improve on T_init, so the backtracked
    // support has fewer than K atoms. Pad from the initial matched filter so
    // every caller sees exactly K.
    const DenseVector correlation = matched_filter(A, initial_residual);
    const SupportSet padding = top_k_magnitude(
        correlation, K - kept_support.cardinality(), kept_support);
    kept_support = set_union(kept_support, padding);
    kept_fit = least_squares_on_support(A, b, kept_support);
    trace.initial_support_padded = true;
  }

  return {make_estimate(kept_support, kept_fit, A.cols()), std::move(trace)};
}

FusionResult fuse_supports(const DenseMatrix& A, const DenseVector& b,
                           const PursuitConfig& cfg,
                           const SupportSet& omp_support,
                           const SupportSet& sp_support) {
  require_double_sparsity(A, cfg, "fuse_supports");
  const int K = cfg.sparsity;
  if (omp_support.cardinality() != K || sp_support.cardinality() != K) {
    throw ConfigInvalid("fuse_supports: ingredient supports must have K = " +
                        std::to_string(K) + " atoms");
  }
  if (std::max(omp_support.max_index(), sp_support.max_index()) >= A.cols()) {
    throw DimensionMismatch("fuse_supports: support index out of range");
  }

  const SupportSet common = set_intersection(omp_support, sp_support);
  const SupportSet joint = set_union(omp_support, sp_support);

  const LeastSquaresFit joint_fit = least_squares_on_support(A, b, joint);
  const DenseVector v = densify(joint, joint_fit.coefficients, A.cols());
  const SupportSet filled = top_k_magnitude_among(
      joint.indices(), v, K - common.cardinality(), common);
  const SupportSet fused = set_union(common, filled);

  const LeastSquaresFit fit = least_squares_on_support(A, b, fused);
  return {make_estimate(fused, fit, A.cols()),
          FusionReport{omp_support, sp_support, common, joint}};
}

FusionResult fugp(const DenseMatrix& A, const DenseVector& b,
                  const PursuitConfig& cfg) {
  require_double_sparsity(A, cfg, "fugp");
  PursuitResult omp_result = omp(A, b, cfg);
  PursuitResult sp_result = sp(A, b, cfg);
  return fuse_supports(A, b, cfg, omp_result.estimate.support,
                       sp_result.estimate.support);
}

PursuitResult ifugp(const DenseMatrix& A, const DenseVector& b,
                    const PursuitConfig& cfg) {
  require_double_sparsity(A, cfg, "ifugp");
  validate_inputs(A, b, cfg, {}, "ifugp");
  const int K = cfg.sparsity;
  const double slack = exit_slack(b);

  PursuitTrace trace;
  SupportSet common;                  // warm start for the next round
  double kept_norm = b.norm();        // r_0 = b
  SparseEstimate kept;
  bool have_kept = false;

  for (int k = 1; k <= cfg.max_ifugp_iterations; ++k) {
    PursuitResult omp_result = omp(A, b, cfg, common);
    PursuitResult sp_result = sp(A, b, cfg, common);
    FusionResult fused = fuse_supports(A, b, cfg, omp_result.estimate.support,
                                       sp_result.estimate.support);
    const double norm = fused.estimate.residual_norm;

    if (norm >= kept_norm - slack) {
      // No improvement. The first fused estimate is still the best K-atom
      // answer available, so iteration 1 is returned rather than the empty
      // initial state.
      const bool returned = !have_kept;
      trace.steps.push_back({k, fused.estimate.support, norm, returned});
      if (returned) {
        kept = std::move(fused.estimate);
      }
      break;
    }

    trace.steps.push_back({k, fused.estimate.support, norm, true});
    kept = std::move(fused.estimate);
    have_kept = true;
    kept_norm = norm;

    if (fused.report.common.cardinality() == K) {
      // Both ingredients fully agree; warm-starting with K atoms is not
      // defined, so this is a fixed point.
      break;
    }
    common = fused.report.common;

    if (k == cfg.max_ifugp_iterations) {
      trace.iteration_cap_reached = true;
    }
  }

  return {std::move(kept), std::move(trace)};
}

}  // namespace gpfusion
