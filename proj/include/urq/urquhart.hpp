#pragma once

#include <optional>
#include <vector>

#include "urq/geometry.hpp"

namespace urq {

/// Closed boundary walk of a tessellation polygon. `edges[i]` joins
/// `vertices[i]` and `vertices[(i+1) % n]`; the walk is cyclic with no
/// explicit repeat of the first vertex. `triangles` lists the Delaunay
/// triangles merged into this polygon (the phi^1 image), sorted.
struct Cycle {
    std::vector<int> edges;
    std::vector<int> vertices;
    std::vector<int> triangles;
    /// Set when a dropped longest edge had no neighboring triangle (it lay
    /// on the convex hull), opening the region toward the outer face.
    bool open_boundary = false;
};

/// Delaunay graph with each triangle's longest edge removed.
/// Both vectors hold edge ids into the source Triangulation's edge table.
struct UrquhartGraph {
    std::vector<int> edges;    ///< surviving edge set E_U
    std::vector<int> removed;  ///< the longest-edge set (one entry per distinct edge)
};

/// Three-level primitive hierarchy of one observation: level 0 is the
/// Delaunay edge set, level 1 the Delaunay triangles, level 2 the polygons
/// of the Urquhart tessellation.
struct Hierarchy {
    Triangulation tri;
    /// Filtered cycle basis before boundary discarding. Entries flagged
    /// open_boundary never enter h2 but still tile the hull.
    std::vector<Cycle> basis;
    /// Indices into `basis` retained after boundary discarding.
    std::vector<int> h2;
    /// Raw walks dropped by hanging-edge filtering (no simple walk
    /// remained). Kept for diagnostics; their shoelace area still counts
    /// toward the hull tiling.
    std::vector<Cycle> rejected_walks;
};

/// Runs the longest-edge removal with incremental cycle detection, then
/// hanging-edge filtering and boundary discarding.
std::pair<UrquhartGraph, Hierarchy> build_urquhart(const Triangulation& tri);

/// Symmetric difference of two boundary walks sharing `shared_edge`: the
/// shared edge is rotated to the last position of `a` and the first of `b`,
/// then the walks are concatenated without it, preserving edge order.
/// Throws SharedEdgeMissing if either walk lacks the edge.
Cycle symmetric_difference_merge(const Cycle& a, const Cycle& b, int shared_edge);

/// Deletes edges traversed twice within the walk (hanging edges) and
/// re-closes it. Returns nullopt when the remainder is not a single simple
/// cycle of at least 3 edges.
std::optional<Cycle> filter_hanging_edges(const Cycle& c);

/// True when some vertex occurs more than once in the walk.
bool has_repeated_vertices(const Cycle& c);

/// Indices of cycles that keep no convex-hull edge in their walk.
std::vector<int> discard_boundary_polygons(const std::vector<Cycle>& cycles,
                                           const Triangulation& tri);

/// phi^1: constituent Delaunay triangles of a basis polygon.
const std::vector<int>& phi1(const Hierarchy& h, int basis_index);

/// phi^0: the three Delaunay edges of triangle t (removed ones included).
std::array<int, 3> phi0(const Hierarchy& h, int t);

double cycle_area(const Cycle& c, const PointMatrix& points);

/// Positions of the walk's distinct vertices, in walk order (2xN).
PointMatrix cycle_vertex_positions(const Cycle& c, const PointMatrix& points);

}  // namespace urq
