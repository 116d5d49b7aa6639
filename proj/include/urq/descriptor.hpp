#pragma once

#include <Eigen/Dense>

#include "urq/types.hpp"

namespace urq {

/// Points resampled at constant arc-length spacing along a polygon
/// boundary. The count m = round(1/step) is identical for every polygon at
/// a fixed step, so descriptors stay comparable.
struct BoundarySamples {
    PointMatrix points;
    double step = 0.0;
    double perimeter = 0.0;
};

/// Magnitude spectrum of the resampled centroid-distance signature.
/// Invariant to rigid motion, sampling start point, and traversal
/// direction of the source polygon.
struct PolygonDescriptor {
    Eigen::VectorXd magnitudes;
    int vertex_count = 0;
};

/// Arithmetic mean of the polygon's distinct vertices (vertex centroid,
/// not the area centroid). `walk` is a 2xN matrix of vertices in boundary
/// order.
Point centroid(const PointMatrix& walk);

/// Resamples m = round(1/step) points at arc positions k*step*perimeter.
/// The walk is anchored at the vertex farthest from the centroid (ties:
/// earliest in the stored walk) so a rotation of the stored vertex order
/// never changes the sample set. Throws InvalidStep unless 0 < step < 1.
BoundarySamples resample_boundary(const PointMatrix& walk, double step);

/// Squared Euclidean distance of every sample to the centroid.
Eigen::VectorXd centroid_distance_signature(const BoundarySamples& samples, const Point& c);

/// Length-m DFT magnitude of the signature, scaled by 1/m. All bins are
/// kept, the DC bin included; scale is discriminative for rigid data.
PolygonDescriptor dft_magnitude(const Eigen::VectorXd& signature);

/// Full signature pipeline for one polygon walk.
PolygonDescriptor describe_polygon(const PointMatrix& walk, double step);

/// Squared Euclidean distance between magnitude vectors.
/// Throws LengthMismatch when bin counts differ.
double descriptor_distance(const PolygonDescriptor& a, const PolygonDescriptor& b);

}  // namespace urq
