#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "urq/types.hpp"

namespace urq {

/// Planar rigid transform: rotation by theta (radians, wrapped to
/// (-pi, pi]) followed by translation t.
struct Se2Transform {
    double theta = 0.0;
    Eigen::Vector2d t = Eigen::Vector2d::Zero();
};

double wrap_angle(double theta);

Se2Transform se2_identity();
Se2Transform se2_compose(const Se2Transform& a, const Se2Transform& b);
Se2Transform se2_inverse(const Se2Transform& a);
Point se2_apply(const Se2Transform& a, const Point& p);
PointMatrix se2_apply(const Se2Transform& a, const PointMatrix& pts);

struct RansacConfig {
    double d = 0.5;               ///< inlier distance threshold, meters
    double r = 0.99;              ///< inlier-fraction early-stop threshold
    int s = 40000;                ///< max iterations
    std::uint64_t seed = 0;
    int min_correspondences = 2;  ///< fewer available inputs fail outright
    bool refit = true;            ///< least-squares refit on the inlier set
};

/// Exact rotation + translation mapping two source points onto two targets.
/// Throws DegeneratePair when the source points coincide (< 1e-9 m apart).
Se2Transform solve_rigid_2pt(const Point& src1, const Point& dst1, const Point& src2,
                             const Point& dst2);

/// Closed-form least-squares rigid alignment (no scale) of paired columns.
Se2Transform fit_rigid_least_squares(const PointMatrix& src, const PointMatrix& dst);

struct RansacResult {
    Se2Transform transform;
    std::vector<int> inliers;  ///< correspondence indices within d after transform
};

/// Two-point RANSAC over paired columns of src/dst. Returns nullopt when
/// fewer than min_correspondences pairs are available or no sampled model
/// gathers at least two inliers beyond its own sample.
std::optional<RansacResult> ransac_se2(const PointMatrix& src, const PointMatrix& dst,
                                       const RansacConfig& cfg);

}  // namespace urq
