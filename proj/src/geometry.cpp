#include "urq/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace urq {

namespace {

// Edge key packing two non-negative vertex indices, order-free.
inline std::uint64_t edge_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

// In-circle determinant for CCW triangle (a,b,c) and query p.
// Positive when p is inside the circumcircle.
double incircle_det(const Point& a, const Point& b, const Point& c, const Point& p) {
    const double adx = a.x() - p.x(), ady = a.y() - p.y();
    const double bdx = b.x() - p.x(), bdy = b.y() - p.y();
    const double cdx = c.x() - p.x(), cdy = c.y() - p.y();
    const double ad = adx * adx + ady * ady;
    const double bd = bdx * bdx + bdy * bdy;
    const double cd = cdx * cdx + cdy * cdy;
    return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) +
           ad * (bdx * cdy - bdy * cdx);
}

// Magnitude-scaled threshold so exactly-cocircular points (det == 0 up to
// roundoff) count as outside. Keeps the triangulation deterministic for
// inputs like the four corners of a square.
double incircle_eps(const Point& a, const Point& b, const Point& c, const Point& p) {
    const double adx = a.x() - p.x(), ady = a.y() - p.y();
    const double bdx = b.x() - p.x(), bdy = b.y() - p.y();
    const double cdx = c.x() - p.x(), cdy = c.y() - p.y();
    const double ad = adx * adx + ady * ady;
    const double bd = bdx * bdx + bdy * bdy;
    const double cd = cdx * cdx + cdy * cdy;
    const double scale = std::abs(adx * bdy * cd) + std::abs(adx * bd * cdy) +
                         std::abs(ady * bdx * cd) + std::abs(ady * bd * cdx) +
                         std::abs(ad * bdx * cdy) + std::abs(ad * bdy * cdx);
    return 1e-12 * scale;
}

}  // namespace

double cross2(const Point& a, const Point& b, const Point& c) {
    return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

std::vector<int> convex_hull(const PointMatrix& points) {
    const int n = static_cast<int>(points.cols());
    if (n < 3) throw DegenerateInput("convex_hull: need at least 3 points");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (points(0, i) != points(0, j)) return points(0, i) < points(0, j);
        return points(1, i) < points(1, j);
    });

    // Monotone chain; strictly convex turns only.
    auto build = [&](auto begin, auto end) {
        std::vector<int> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   cross2(points.col(chain[chain.size() - 2]),
                          points.col(chain.back()), points.col(*it)) <= 0.0) {
                chain.pop_back();
            }
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<int> lower = build(order.begin(), order.end());
    std::vector<int> upper = build(order.rbegin(), order.rend());

    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() < 3) throw DegenerateInput("convex_hull: all points collinear");
    return lower;
}

bool circumcircle_contains(const Point& a, const Point& b, const Point& c,
                           const Point& p) {
    double det = incircle_det(a, b, c, p);
    if (cross2(a, b, c) < 0.0) det = -det;  // normalize to CCW orientation
    return det > incircle_eps(a, b, c, p);
}

bool circumcircle_contains(const Triangulation& tri, int t, const Point& p) {
    const Triangle& tr = tri.triangles[t];
    return circumcircle_contains(tri.points.col(tr.v[0]), tri.points.col(tr.v[1]),
                                 tri.points.col(tr.v[2]), p);
}

Triangulation delaunay_triangulate(const PointMatrix& points) {
    const int n = static_cast<int>(points.cols());
    if (n < 3) throw DegenerateInput("delaunay: need at least 3 points");
    if (!points.allFinite()) throw DegenerateInput("delaunay: non-finite coordinate");
    const double dup2 = kDuplicateTolerance * kDuplicateTolerance;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if ((points.col(i) - points.col(j)).squaredNorm() < dup2) {
                throw DuplicatePoint("delaunay: points " + std::to_string(i) + " and " +
                                     std::to_string(j) + " coincide");
            }
        }
    }
    // Detecting the collinear case up front also yields the hull for free.
    std::vector<int> hull = convex_hull(points);

    // Working vertex list: input points followed by 3 super-triangle vertices.
    const Point lo = points.rowwise().minCoeff();
    const Point hi = points.rowwise().maxCoeff();
    const Point center = 0.5 * (lo + hi);
    const double radius = std::max(0.5 * (hi - lo).norm(), 1.0);
    PointMatrix all(2, n + 3);
    all.leftCols(n) = points;
    for (int k = 0; k < 3; ++k) {
        const double ang = M_PI / 2.0 + 2.0 * M_PI * k / 3.0;
        all.col(n + k) = center + 8.0 * radius * Point(std::cos(ang), std::sin(ang));
    }

    struct Tri {
        std::array<int, 3> v;
        bool alive = true;
    };
    std::vector<Tri> work;
    work.push_back({{n, n + 1, n + 2}, true});

    std::vector<int> bad;
    std::unordered_map<std::uint64_t, std::pair<int, int>> boundary;  // key -> directed edge
    for (int p = 0; p < n; ++p) {
        bad.clear();
        boundary.clear();
        const Point q = all.col(p);
        for (int t = 0; t < static_cast<int>(work.size()); ++t) {
            if (!work[t].alive) continue;
            const auto& v = work[t].v;
            if (circumcircle_contains(all.col(v[0]), all.col(v[1]), all.col(v[2]), q)) {
                bad.push_back(t);
            }
        }
        // Cavity boundary: directed edges of bad triangles whose reverse is
        // not another bad triangle's edge.
        for (int t : bad) {
            const auto& v = work[t].v;
            for (int k = 0; k < 3; ++k) {
                const int a = v[k], b = v[(k + 1) % 3];
                auto it = boundary.find(edge_key(a, b));
                if (it != boundary.end()) {
                    boundary.erase(it);
                } else {
                    boundary.emplace(edge_key(a, b), std::make_pair(a, b));
                }
            }
            work[t].alive = false;
        }
        for (const auto& [key, e] : boundary) {
            (void)key;
            work.push_back({{e.first, e.second, p}, true});
        }
    }

    Triangulation out;
    out.points = points;
    out.hull = std::move(hull);

    std::unordered_map<std::uint64_t, int> edge_ids;
    for (const Tri& t : work) {
        if (!t.alive) continue;
        if (t.v[0] >= n || t.v[1] >= n || t.v[2] >= n) continue;  // touches super
        Triangle tri;
        tri.v = t.v;
        if (cross2(points.col(tri.v[0]), points.col(tri.v[1]), points.col(tri.v[2])) < 0.0) {
            std::swap(tri.v[1], tri.v[2]);
        }
        for (int k = 0; k < 3; ++k) {
            const int a = tri.v[k], b = tri.v[(k + 1) % 3];
            const std::uint64_t key = edge_key(a, b);
            auto it = edge_ids.find(key);
            int id;
            if (it == edge_ids.end()) {
                id = static_cast<int>(out.edges.size());
                edge_ids.emplace(key, id);
                Edge e;
                e.a = std::min(a, b);
                e.b = std::max(a, b);
                e.length = (points.col(a) - points.col(b)).norm();
                out.edges.push_back(e);
                out.edge_triangles.push_back({-1, -1});
            } else {
                id = it->second;
            }
            tri.e[k] = id;
        }
        const int tid = static_cast<int>(out.triangles.size());
        out.triangles.push_back(tri);
        for (int k = 0; k < 3; ++k) {
            auto& inc = out.edge_triangles[tri.e[k]];
            if (inc[0] < 0) {
                inc[0] = tid;
            } else {
                inc[1] = tid;
            }
        }
    }
    if (out.triangles.empty()) throw DegenerateInput("delaunay: no valid triangles");
    return out;
}

int longest_edge(const Triangulation& tri, int t) {
    const Triangle& tr = tri.triangles[t];
    int best = tr.e[0];
    for (int k = 1; k < 3; ++k) {
        const int cand = tr.e[k];
        const double dl = tri.edges[cand].length - tri.edges[best].length;
        if (dl > 1e-12) {
            best = cand;
        } else if (dl > -1e-12) {
            const Edge& ec = tri.edges[cand];
            const Edge& eb = tri.edges[best];
            if (ec.a < eb.a || (ec.a == eb.a && ec.b < eb.b)) best = cand;
        }
    }
    return best;
}

double triangle_area(const Triangulation& tri, int t) {
    const Triangle& tr = tri.triangles[t];
    return 0.5 * std::abs(cross2(tri.points.col(tr.v[0]), tri.points.col(tr.v[1]),
                                 tri.points.col(tr.v[2])));
}

double polygon_area(const PointMatrix& points, const std::vector<int>& walk) {
    double twice = 0.0;
    const int n = static_cast<int>(walk.size());
    for (int i = 0; i < n; ++i) {
        const Point& a = points.col(walk[i]);
        const Point& b = points.col(walk[(i + 1) % n]);
        twice += a.x() * b.y() - b.x() * a.y();
    }
    return 0.5 * std::abs(twice);
}

}  // namespace urq
