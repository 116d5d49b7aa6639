#pragma once

#include <vector>

#include "urq/types.hpp"

namespace urq {

/// Planar triangulation of a landmark set. Every internal edge is shared by
/// exactly two triangles, every hull edge by one; no input point lies
/// strictly inside any triangle's circumcircle.
struct Triangulation {
    PointMatrix points;
    std::vector<Edge> edges;
    std::vector<Triangle> triangles;
    /// Incident triangle ids per edge; second is -1 for hull edges.
    std::vector<std::array<int, 2>> edge_triangles;
    /// Convex hull vertex indices in counter-clockwise order.
    std::vector<int> hull;
};

/// Inputs closer than this are rejected as duplicates.
inline constexpr double kDuplicateTolerance = 1e-9;

/// Twice the signed area of triangle (a, b, c); positive when CCW.
double cross2(const Point& a, const Point& b, const Point& c);

/// Convex hull in CCW order (collinear boundary points excluded).
/// Throws DegenerateInput for fewer than 3 points or a fully collinear set.
std::vector<int> convex_hull(const PointMatrix& points);

/// Bowyer-Watson Delaunay triangulation.
/// Throws DegenerateInput (collinear) and DuplicatePoint (pairs < 1e-9 m).
Triangulation delaunay_triangulate(const PointMatrix& points);

/// True iff p lies strictly inside the circumcircle of triangle t.
bool circumcircle_contains(const Triangulation& tri, int t, const Point& p);
bool circumcircle_contains(const Point& a, const Point& b, const Point& c,
                           const Point& p);

/// Edge id of the longest edge of triangle t. Ties within 1e-12 m go to the
/// lexicographically smallest (min,max) endpoint pair.
int longest_edge(const Triangulation& tri, int t);

double triangle_area(const Triangulation& tri, int t);

/// Shoelace area of a closed vertex walk (absolute value).
double polygon_area(const PointMatrix& points, const std::vector<int>& walk);

}  // namespace urq
