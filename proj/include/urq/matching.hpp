#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "urq/descriptor.hpp"
#include "urq/urquhart.hpp"

namespace urq {

struct MatchConfig {
    double tau = 5.0;     ///< polygon descriptor distance threshold
    double eta = 0.5;     ///< triangle-validation ratio (strictly greater passes)
    int gamma = 0;        ///< per-observation polygon budget; 0 = unlimited
    int vertex_gap = 3;   ///< max |N| difference for a comparison
    double step = 0.04;   ///< boundary resampling step (m = 25 samples)
    std::uint64_t seed = 0;
};

/// Hierarchy plus descriptors for every retained polygon and every
/// Delaunay triangle of one observation.
struct ObservationFeatures {
    Hierarchy hierarchy;
    std::vector<PolygonDescriptor> polygon_desc;   ///< parallel to hierarchy.h2
    std::vector<PolygonDescriptor> triangle_desc;  ///< parallel to hierarchy.tri.triangles
    double step = 0.04;
};

ObservationFeatures featurize(const PointMatrix& points, double step);

/// One matching candidate: an h2 polygon (index into hierarchy.h2) or a
/// Delaunay triangle (index into the triangle list).
struct CandidateRef {
    bool is_triangle = false;
    int index = 0;
    int n_vertices = 0;
};

/// Budgeted candidate selection: polygons with 4 <= N <= 9 first (random
/// subset when over budget), then polygons with N > 9, then triangles.
/// With gamma = 0 every h2 polygon is returned and triangles stay out.
std::vector<CandidateRef> sample_polygons(const ObservationFeatures& f, int gamma,
                                          std::uint64_t seed);

struct CorrespondenceSet {
    std::vector<std::pair<int, int>> polygon_pairs;   ///< h2 positions (a, b)
    std::vector<std::pair<int, int>> triangle_pairs;  ///< triangle ids (a, b)
    std::vector<std::pair<int, int>> point_pairs;     ///< landmark indices (a, b)
    long polygon_comparisons = 0;  ///< descriptor distances evaluated at polygon level
};

/// Polygon-level gate: pairs within vertex_gap whose descriptor distance is
/// below tau; each left polygon keeps at most its minimum-distance
/// candidate, and collisions resolve one-to-one by ascending distance.
std::vector<std::pair<int, int>> match_polygons(const ObservationFeatures& a,
                                                const ObservationFeatures& b,
                                                const MatchConfig& cfg);

/// Matches the constituent triangles of a matched polygon pair (h2
/// positions). Returns the triangle pairs when the matched fraction of the
/// left polygon's triangles strictly exceeds eta, nullopt otherwise.
std::optional<std::vector<std::pair<int, int>>> validate_via_triangles(
    const std::pair<int, int>& polygon_pair, const ObservationFeatures& a,
    const ObservationFeatures& b, const MatchConfig& cfg);

/// Assigns edges of two triangles by the length permutation minimizing the
/// squared difference norm; ties keep the first permutation in enumeration
/// order (012, 021, 102, 120, 201, 210). Returns (edge id in a, edge id in b).
std::array<std::pair<int, int>, 3> match_triangle_edges(const Triangulation& ta, int tri_a,
                                                        const Triangulation& tb, int tri_b);

/// Vertex correspondences from matched triangle pairs: vertices sharing
/// corresponding edge pairs correspond. Duplicate candidates keep the pair
/// supported by the most triangle pairs (ties: first seen); the result is
/// one-to-one in both directions.
std::vector<std::pair<int, int>> derive_point_correspondences(
    const std::vector<std::pair<int, int>>& triangle_pairs, const ObservationFeatures& a,
    const ObservationFeatures& b);

/// Full cascade for one observation pair. seed_a/seed_b drive the gamma
/// sampling of each side.
CorrespondenceSet match_observations(const ObservationFeatures& a, const ObservationFeatures& b,
                                     const MatchConfig& cfg, std::uint64_t seed_a,
                                     std::uint64_t seed_b);

}  // namespace urq
