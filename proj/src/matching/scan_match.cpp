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

#include "sdfslam/matching/scan_match.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "sdfslam/core/error.hpp"

namespace sdfslam {
namespace {

// Relative floor under which a Hessian eigenvalue is treated as zero.
constexpr double kDamping = 1e-6;
// |F| within this of the trim threshold counts as saturated.
constexpr double kTrimTolerance = 1e-6;
constexpr int kMaxBacktracks = 5;

struct Corners {
  int col = 0;
  int row = 0;
  double fx = 0.0;
  double fy = 0.0;
};

// Lower-left support cell and fractional offsets, or nullopt if the 2x2
// support is not inside the grid or contains an unobserved cell.
std::optional<Corners> bilinear_support(const SdfGrid& grid, const Point2& p) {
  const GridGeometry& geometry = grid.geometry();
  const Point2 g = geometry.world_to_grid(p);
  if (!std::isfinite(g.x()) || !std::isfinite(g.y())) return std::nullopt;
  const double fc = std::floor(g.x());
  const double fr = std::floor(g.y());
  if (fc < 0.0 || fr < 0.0 || fc + 1.0 > geometry.width() - 1 ||
      fr + 1.0 > geometry.height() - 1) {
    return std::nullopt;
  }
  Corners c{static_cast<int>(fc), static_cast<int>(fr), g.x() - fc, g.y() - fr};
  for (int dr = 0; dr <= 1; ++dr) {
    for (int dc = 0; dc <= 1; ++dc) {
      if (!grid.is_known({c.col + dc, c.row + dr})) return std::nullopt;
    }
  }
  return c;
}

struct Linearization {
  double cost = 0.0;
  Eigen::Matrix3d hessian = Eigen::Matrix3d::Zero();
  Eigen::Vector3d gradient = Eigen::Vector3d::Zero();
};

Linearization linearize(const SdfGrid& grid, std::span<const Point2> points,
                        const Pose2& pose, double delta) {
  Linearization lin;
  const double c = std::cos(pose.theta());
  const double s = std::sin(pose.theta());
  for (const Point2& d : points) {
    const Point2 world = transform_point(pose, d);
    const SdfSample sample = sample_sdf(grid, world);
    const double r = sample.value;
    lin.cost += huber_loss(r, delta);
    if (!sample.known) continue;
    const Eigen::Vector3d jacobian(
        sample.gradient.x(), sample.gradient.y(),
        sample.gradient.x() * (-s * d.x() - c * d.y()) +
            sample.gradient.y() * (c * d.x() - s * d.y()));
    const double weight = std::abs(r) <= delta ? 1.0 : delta / std::abs(r);
    lin.hessian.noalias() += weight * jacobian * jacobian.transpose();
    lin.gradient.noalias() += weight * r * jacobian;
  }
  return lin;
}

bool is_rank_deficient(const Eigen::Matrix3d& hessian) {
  const double trace = hessian.trace();
  if (!(trace > 0.0)) return true;
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(hessian,
                                                              Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() < kDamping * trace;
}

double total_cost(const SdfGrid& grid, std::span<const Point2> points, const Pose2& pose,
                  double delta) {
  double total = 0.0;
  for (const Point2& d : points) {
    total += huber_loss(sample_sdf(grid, transform_point(pose, d)).value, delta);
  }
  return total;
}

}  // namespace

SdfSample sample_sdf(const SdfGrid& grid, const Point2& p) {
  const auto support = bilinear_support(grid, p);
  if (!support) {
    return {grid.w_max() * grid.truncation(), Eigen::Vector2d::Zero(), false};
  }
  const auto& [col, row, fx, fy] = *support;
  auto weighted = [&](int dc, int dr) {
    const SdfCell& cell = grid.cell({col + dc, row + dr});
    return static_cast<double>(cell.weight) * static_cast<double>(cell.sdf);
  };
  const double v00 = weighted(0, 0);
  const double v10 = weighted(1, 0);
  const double v01 = weighted(0, 1);
  const double v11 = weighted(1, 1);

  SdfSample sample;
  sample.known = true;
  sample.value = (1.0 - fx) * (1.0 - fy) * v00 + fx * (1.0 - fy) * v10 +
                 (1.0 - fx) * fy * v01 + fx * fy * v11;
  const double inv_res = 1.0 / grid.geometry().resolution();
  sample.gradient.x() = ((1.0 - fy) * (v10 - v00) + fy * (v11 - v01)) * inv_res;
  sample.gradient.y() = ((1.0 - fx) * (v01 - v00) + fx * (v11 - v10)) * inv_res;
  return sample;
}

std::optional<double> interpolate_sdf(const SdfGrid& grid, const Point2& p) {
  const auto support = bilinear_support(grid, p);
  if (!support) return std::nullopt;
  const auto& [col, row, fx, fy] = *support;
  auto sdf = [&](int dc, int dr) {
    return static_cast<double>(grid.cell({col + dc, row + dr}).sdf);
  };
  return (1.0 - fx) * (1.0 - fy) * sdf(0, 0) + fx * (1.0 - fy) * sdf(1, 0) +
         (1.0 - fx) * fy * sdf(0, 1) + fx * fy * sdf(1, 1);
}

double huber_loss(double residual, double delta) {
  const double a = std::abs(residual);
  if (a <= delta) return residual * residual;
  return 2.0 * delta * a - delta * delta;
}

CostResult cost(const SdfGrid& grid, std::span<const Point2> scan_points,
                const Pose2& pose, double huber_delta) {
  CostResult result;
  result.residuals.reserve(scan_points.size());
  for (const Point2& d : scan_points) {
    const double r = sample_sdf(grid, transform_point(pose, d)).value;
    result.residuals.push_back(r);
    result.total += huber_loss(r, huber_delta);
  }
  return result;
}

GaussNewtonResult gauss_newton(const SdfGrid& grid, std::span<const Point2> scan_points,
                               const Pose2& init, const GaussNewtonOptions& options) {
  GaussNewtonResult result;
  result.pose = init;

  Linearization lin = linearize(grid, scan_points, init, options.huber_delta);
  if (is_rank_deficient(lin.hessian)) {
    throw SingularHessian("normal matrix is rank deficient at the initial pose");
  }
  result.cost = lin.cost;

  for (int iteration = 1; iteration <= options.max_iterations; ++iteration) {
    if (iteration > 1) {
      lin = linearize(grid, scan_points, result.pose, options.huber_delta);
      if (is_rank_deficient(lin.hessian)) break;
    }
    Eigen::Matrix3d damped = lin.hessian;
    damped.diagonal().array() += kDamping * lin.hessian.trace();
    Eigen::Vector3d step = -damped.ldlt().solve(lin.gradient);

    Pose2 candidate;
    double candidate_cost = 0.0;
    bool improved = false;
    for (int attempt = 0; attempt <= kMaxBacktracks; ++attempt) {
      candidate = Pose2(result.pose.x() + step.x(), result.pose.y() + step.y(),
                        result.pose.theta() + step.z());
      candidate_cost = total_cost(grid, scan_points, candidate, options.huber_delta);
      if (candidate_cost <= result.cost) {
        improved = true;
        break;
      }
      step *= 0.5;
    }
    result.iterations = iteration;
    if (!improved) {
      // No descent along the Gauss-Newton direction: at a minimum.
      result.converged = true;
      break;
    }

    const double previous = result.cost;
    result.pose = candidate;
    result.cost = candidate_cost;
    const double change = previous > 0.0 ? (previous - candidate_cost) / previous : 0.0;
    if (change < options.convergence_eps) {
      result.converged = true;
      break;
    }
  }
  return result;
}

MatchConfig MatchConfig::for_grid(const SdfGrid& grid) {
  MatchConfig cfg;
  cfg.trim_threshold = grid.truncation();
  cfg.huber_delta = grid.w_max() * grid.truncation() / 3.0;
  return cfg;
}

std::vector<std::size_t> trim_points(const SdfGrid& grid, std::span<const Point2> scan_points,
                                     const Pose2& pose, double trim_threshold) {
  std::vector<std::size_t> kept;
  kept.reserve(scan_points.size());
  for (std::size_t i = 0; i < scan_points.size(); ++i) {
    const auto sdf = interpolate_sdf(grid, transform_point(pose, scan_points[i]));
    if (sdf && std::abs(*sdf) < trim_threshold - kTrimTolerance) {
      kept.push_back(i);
    }
  }
  return kept;
}

MatchResult match_two_stage(const SdfGrid& grid, const LaserScan& scan, const Pose2& init,
                            const MatchConfig& cfg) {
  const std::vector<Point2> points = scan_to_points(scan);
  const GaussNewtonOptions stage1_options{cfg.max_iters_stage1, cfg.convergence_eps,
                                          cfg.huber_delta};
  GaussNewtonResult stage1;
  try {
    stage1 = gauss_newton(grid, points, init, stage1_options);
  } catch (const SingularHessian&) {
    if (trim_points(grid, points, init, cfg.trim_threshold).size() < cfg.min_points) {
      throw TooFewPoints("fewer than " + std::to_string(cfg.min_points) +
                         " points inside the truncation band");
    }
    throw;
  }

  const std::vector<std::size_t> kept =
      trim_points(grid, points, stage1.pose, cfg.trim_threshold);
  if (kept.size() < cfg.min_points) {
    throw TooFewPoints(std::to_string(kept.size()) + " points survived trimming, need " +
                       std::to_string(cfg.min_points));
  }
  std::vector<Point2> survivors;
  survivors.reserve(kept.size());
  for (std::size_t i : kept) survivors.push_back(points[i]);

  const GaussNewtonOptions stage2_options{cfg.max_iters_stage2, cfg.convergence_eps,
                                          cfg.huber_delta};
  const GaussNewtonResult stage2 = gauss_newton(grid, survivors, stage1.pose, stage2_options);

  MatchResult result;
  result.pose = stage2.pose;
  result.stage1_pose = stage1.pose;
  result.final_cost = stage2.cost;
  result.iterations_stage1 = stage1.iterations;
  result.iterations_stage2 = stage2.iterations;
  result.points_used = survivors.size();
  result.points_trimmed = points.size() - survivors.size();
  result.converged = stage2.converged;
  return result;
}

Pose2 predict_pose(std::span<const TimedPose> history, double timestamp) {
  if (history.empty()) {
    throw Error("pose prediction needs at least one prior pose");
  }
  const TimedPose& last = history.back();
  if (history.size() == 1) return last.pose;
  const TimedPose& previous = history[history.size() - 2];
  const double dt = last.timestamp - previous.timestamp;
  if (!(dt > 0.0)) return last.pose;
  const double ratio = (timestamp - last.timestamp) / dt;
  const Pose2 motion = compose(inverse(previous.pose), last.pose);
  return compose(last.pose,
                 Pose2(motion.x() * ratio, motion.y() * ratio, motion.theta() * ratio));
}

Pose2 predict_pose(std::span<const TimedPose> history) {
  if (history.size() < 2) return predict_pose(history, 0.0);
  const double dt = history.back().timestamp - history[history.size() - 2].timestamp;
  return predict_pose(history, history.back().timestamp + dt);
}

}  // namespace sdfslam
