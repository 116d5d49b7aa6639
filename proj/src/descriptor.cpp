#include "urq/descriptor.hpp"

#include <cmath>
#include <complex>

namespace urq {

Point centroid(const PointMatrix& walk) {
    return walk.rowwise().mean();
}

BoundarySamples resample_boundary(const PointMatrix& walk, double step) {
    if (!(step > 0.0 && step < 1.0)) {
        throw InvalidStep("resample_boundary: step must lie in (0, 1)");
    }
    const int n = static_cast<int>(walk.cols());
    const Point c = centroid(walk);

    // Canonical anchor: farthest vertex from the centroid, earliest stored
    // position on ties. Makes the sample set independent of where the
    // stored walk happens to start.
    int anchor = 0;
    double best = (walk.col(0) - c).squaredNorm();
    for (int i = 1; i < n; ++i) {
        const double d = (walk.col(i) - c).squaredNorm();
        if (d > best) {
            best = d;
            anchor = i;
        }
    }

    Eigen::VectorXd seg(n);
    double perimeter = 0.0;
    for (int i = 0; i < n; ++i) {
        const int a = (anchor + i) % n;
        const int b = (anchor + i + 1) % n;
        seg(i) = (walk.col(b) - walk.col(a)).norm();
        perimeter += seg(i);
    }

    const int m = static_cast<int>(std::lround(1.0 / step));
    BoundarySamples out;
    out.step = step;
    out.perimeter = perimeter;
    out.points.resize(2, m);
    int k = 0;
    double consumed = 0.0;
    for (int j = 0; j < m; ++j) {
        const double s = j * step * perimeter;
        while (k < n - 1 && consumed + seg(k) <= s) consumed += seg(k++);
        const double t = seg(k) > 0.0 ? (s - consumed) / seg(k) : 0.0;
        const int a = (anchor + k) % n;
        const int b = (anchor + k + 1) % n;
        out.points.col(j) = (1.0 - t) * walk.col(a) + t * walk.col(b);
    }
    return out;
}

Eigen::VectorXd centroid_distance_signature(const BoundarySamples& samples, const Point& c) {
    return (samples.points.colwise() - c).colwise().squaredNorm().transpose();
}

PolygonDescriptor dft_magnitude(const Eigen::VectorXd& signature) {
    const int m = static_cast<int>(signature.size());
    PolygonDescriptor out;
    out.magnitudes.resize(m);
    const double w = -2.0 * M_PI / m;
    for (int k = 0; k < m; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (int t = 0; t < m; ++t) {
            acc += signature(t) * std::polar(1.0, w * k * t);
        }
        out.magnitudes(k) = std::abs(acc) / m;
    }
    return out;
}

PolygonDescriptor describe_polygon(const PointMatrix& walk, double step) {
    const BoundarySamples samples = resample_boundary(walk, step);
    PolygonDescriptor d = dft_magnitude(centroid_distance_signature(samples, centroid(walk)));
    d.vertex_count = static_cast<int>(walk.cols());
    return d;
}

double descriptor_distance(const PolygonDescriptor& a, const PolygonDescriptor& b) {
    if (a.magnitudes.size() != b.magnitudes.size()) {
        throw LengthMismatch("descriptor_distance: bin counts differ");
    }
    return (a.magnitudes - b.magnitudes).squaredNorm();
}

}  // namespace urq
