#include "urq/registration.hpp"

#include <Eigen/Geometry>
#include <cmath>
#include <random>

namespace urq {

double wrap_angle(double theta) {
    theta = std::fmod(theta, 2.0 * M_PI);
    if (theta <= -M_PI) theta += 2.0 * M_PI;
    if (theta > M_PI) theta -= 2.0 * M_PI;
    return theta;
}

Se2Transform se2_identity() {
    return {};
}

Se2Transform se2_compose(const Se2Transform& a, const Se2Transform& b) {
    const Eigen::Rotation2Dd ra(a.theta);
    return {wrap_angle(a.theta + b.theta), a.t + ra * b.t};
}

Se2Transform se2_inverse(const Se2Transform& a) {
    const Eigen::Rotation2Dd rinv(-a.theta);
    return {wrap_angle(-a.theta), -(rinv * a.t)};
}

Point se2_apply(const Se2Transform& a, const Point& p) {
    return Eigen::Rotation2Dd(a.theta) * p + a.t;
}

PointMatrix se2_apply(const Se2Transform& a, const PointMatrix& pts) {
    return (Eigen::Rotation2Dd(a.theta).toRotationMatrix() * pts).colwise() + a.t;
}

Se2Transform solve_rigid_2pt(const Point& src1, const Point& dst1, const Point& src2,
                             const Point& dst2) {
    const Point ds = src2 - src1;
    const Point dd = dst2 - dst1;
    if (ds.norm() < 1e-9) throw DegeneratePair("solve_rigid_2pt: coincident source points");
    const double theta =
        wrap_angle(std::atan2(dd.y(), dd.x()) - std::atan2(ds.y(), ds.x()));
    const Point src_mid = 0.5 * (src1 + src2);
    const Point dst_mid = 0.5 * (dst1 + dst2);
    Se2Transform out;
    out.theta = theta;
    out.t = dst_mid - Eigen::Rotation2Dd(theta) * src_mid;
    return out;
}

Se2Transform fit_rigid_least_squares(const PointMatrix& src, const PointMatrix& dst) {
    const Eigen::Matrix3d h = Eigen::umeyama(src, dst, /*with_scaling=*/false);
    Se2Transform out;
    out.theta = wrap_angle(std::atan2(h(1, 0), h(0, 0)));
    out.t = h.block<2, 1>(0, 2);
    return out;
}

std::optional<RansacResult> ransac_se2(const PointMatrix& src, const PointMatrix& dst,
                                       const RansacConfig& cfg) {
    const int n = static_cast<int>(src.cols());
    if (n < 2 || n < cfg.min_correspondences) return std::nullopt;

    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    const double d2 = cfg.d * cfg.d;

    std::vector<int> best_inliers;
    Se2Transform best_model;
    // Degenerate samples do not consume an iteration; the retry budget still
    // has to be finite for inputs where nearly every pair coincides.
    long degenerate_budget = 10L * cfg.s;

    for (int it = 0; it < cfg.s; ++it) {
        int i = pick(rng);
        int j = pick(rng);
        while (j == i) j = pick(rng);
        if ((src.col(i) - src.col(j)).norm() < 1e-9) {
            if (--degenerate_budget <= 0) break;
            --it;
            continue;
        }
        const Se2Transform model = solve_rigid_2pt(src.col(i), dst.col(i), src.col(j), dst.col(j));
        const Eigen::Matrix2d rot = Eigen::Rotation2Dd(model.theta).toRotationMatrix();

        std::vector<int> inliers;
        inliers.reserve(n);
        for (int k = 0; k < n; ++k) {
            if ((rot * src.col(k) + model.t - dst.col(k)).squaredNorm() < d2) {
                inliers.push_back(k);
            }
        }
        if (inliers.size() > best_inliers.size()) {
            best_inliers = std::move(inliers);
            best_model = model;
            if (static_cast<double>(best_inliers.size()) / n >= cfg.r) break;
        }
    }

    if (static_cast<int>(best_inliers.size()) < 4) return std::nullopt;

    RansacResult out;
    out.inliers = std::move(best_inliers);
    if (cfg.refit) {
        PointMatrix s(2, out.inliers.size()), d(2, out.inliers.size());
        for (int k = 0; k < static_cast<int>(out.inliers.size()); ++k) {
            s.col(k) = src.col(out.inliers[k]);
            d.col(k) = dst.col(out.inliers[k]);
        }
        out.transform = fit_rigid_least_squares(s, d);
    } else {
        out.transform = best_model;
    }
    return out;
}

}  // namespace urq
