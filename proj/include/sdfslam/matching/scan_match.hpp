/*
 * Copyright 2026 The sdfslam Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SDFSLAM_MATCHING_SCAN_MATCH_HPP
#define SDFSLAM_MATCHING_SCAN_MATCH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sdfslam/core/laser_scan.hpp"
#include "sdfslam/mapping/sdf_grid.hpp"

namespace sdfslam {

// Value and gradient of the weighted distance field W * F at a point.
struct SdfSample {
  double value = 0.0;
  Eigen::Vector2d gradient = Eigen::Vector2d::Zero();
  // False when the point is outside the grid interior or any of the four
  // surrounding cells is unobserved.
  bool known = false;
};

// Bilinear interpolation of W * F over the four surrounding cell centers,
// with the exact derivative of the bilinear patch. Unknown points return
// (w_max * truncation, 0): constant cost and no pull.
SdfSample sample_sdf(const SdfGrid& grid, const Point2& p);

// Bilinear interpolation of F alone; nullopt where sample_sdf is unknown.
std::optional<double> interpolate_sdf(const SdfGrid& grid, const Point2& p);

// r^2 inside [-delta, delta], 2 delta |r| - delta^2 outside.
double huber_loss(double residual, double delta);

struct CostResult {
  double total = 0.0;
  std::vector<double> residuals;  // W * F per point
};

CostResult cost(const SdfGrid& grid, std::span<const Point2> scan_points,
                const Pose2& pose, double huber_delta);

struct GaussNewtonOptions {
  int max_iterations = 10;
  double convergence_eps = 1e-6;
  double huber_delta = 0.2;
};

struct GaussNewtonResult {
  Pose2 pose;
  double cost = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Robust Gauss-Newton on sum_i huber(W*F(pose * d_i)) with IRLS weights and
// Levenberg damping of 1e-6 * trace. Never returns a pose whose cost exceeds
// the cost at `init`.
//
// Throws SingularHessian if the normal matrix at `init` leaves a pose
// direction unconstrained.
GaussNewtonResult gauss_newton(const SdfGrid& grid, std::span<const Point2> scan_points,
                               const Pose2& init, const GaussNewtonOptions& options);

struct MatchConfig {
  int max_iters_stage1 = 10;
  int max_iters_stage2 = 20;
  double trim_threshold = 0.06;
  double huber_delta = 0.2;
  double convergence_eps = 1e-6;
  std::size_t min_points = 10;

  // Trim at the truncation distance and delta = w_max * truncation / 3.
  static MatchConfig for_grid(const SdfGrid& grid);
};

struct MatchResult {
  Pose2 pose;
  Pose2 stage1_pose;
  double final_cost = 0.0;
  int iterations_stage1 = 0;
  int iterations_stage2 = 0;
  std::size_t points_used = 0;
  std::size_t points_trimmed = 0;
  bool converged = false;

  double trimmed_fraction() const {
    const std::size_t total = points_used + points_trimmed;
    return total == 0 ? 0.0 : static_cast<double>(points_trimmed) / total;
  }
};

// Indices of points kept by the second stage: observed and |F| below the
// trim threshold at `pose`.
std::vector<std::size_t> trim_points(const SdfGrid& grid, std::span<const Point2> scan_points,
                                     const Pose2& pose, double trim_threshold);

// Stage 1 optimizes with every valid point. Stage 2 drops points whose |F|
// at the stage-1 pose reaches the trim threshold (or that fall in unknown
// space) and optimizes again from the stage-1 pose.
//
// Throws TooFewPoints if fewer than cfg.min_points survive trimming.
MatchResult match_two_stage(const SdfGrid& grid, const LaserScan& scan, const Pose2& init,
                            const MatchConfig& cfg);

struct TimedPose {
  double timestamp = 0.0;
  Pose2 pose;
};

// Constant-velocity prediction from the last two poses of `history`, taken
// in the body frame of the older one and scaled to `timestamp`. A single
// pose is returned unchanged. Requires a non-empty history.
Pose2 predict_pose(std::span<const TimedPose> history, double timestamp);
// Predicts one step ahead with the spacing of the last two poses.
Pose2 predict_pose(std::span<const TimedPose> history);

}  // namespace sdfslam

#endif  // SDFSLAM_MATCHING_SCAN_MATCH_HPP
