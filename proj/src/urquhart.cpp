#include "urq/urquhart.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace urq {

namespace {

// Rotate the walk left by k so edge position k becomes position 0.
Cycle rotated(const Cycle& c, int k) {
    const int n = static_cast<int>(c.edges.size());
    Cycle out;
    out.edges.reserve(n);
    out.vertices.reserve(n);
    for (int i = 0; i < n; ++i) {
        out.edges.push_back(c.edges[(k + i) % n]);
        out.vertices.push_back(c.vertices[(k + i) % n]);
    }
    out.triangles = c.triangles;
    out.open_boundary = c.open_boundary;
    return out;
}

// Reverse traversal direction, keeping the start vertex.
Cycle reversed(const Cycle& c) {
    const int n = static_cast<int>(c.edges.size());
    Cycle out;
    out.edges.reserve(n);
    out.vertices.reserve(n);
    out.vertices.push_back(c.vertices[0]);
    for (int i = n - 1; i >= 1; --i) out.vertices.push_back(c.vertices[i]);
    for (int i = n - 1; i >= 0; --i) out.edges.push_back(c.edges[i]);
    out.triangles = c.triangles;
    out.open_boundary = c.open_boundary;
    return out;
}

int find_edge(const Cycle& c, int edge) {
    for (int i = 0; i < static_cast<int>(c.edges.size()); ++i) {
        if (c.edges[i] == edge) return i;
    }
    return -1;
}

std::vector<int> merged_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

Cycle symmetric_difference_merge(const Cycle& a, const Cycle& b, int shared_edge) {
    const int ia = find_edge(a, shared_edge);
    const int ib = find_edge(b, shared_edge);
    if (ia < 0 || ib < 0) {
        throw SharedEdgeMissing("merge: edge " + std::to_string(shared_edge) +
                                " not present in both cycles");
    }
    const int n = static_cast<int>(a.edges.size());
    const int m = static_cast<int>(b.edges.size());

    // Shared edge goes last in a, first in b.
    Cycle ra = rotated(a, (ia + 1) % n);
    Cycle rb = rotated(b, ib);

    // Consistent face orientation traverses the shared edge in opposite
    // directions; flip b when the walks agree instead.
    if (rb.vertices[0] == ra.vertices[n - 1]) {
        rb = reversed(rb);
        rb = rotated(rb, find_edge(rb, shared_edge));
    }

    Cycle out;
    out.edges.reserve(n + m - 2);
    out.vertices.reserve(n + m - 2);
    out.edges.assign(ra.edges.begin(), ra.edges.end() - 1);
    out.edges.insert(out.edges.end(), rb.edges.begin() + 1, rb.edges.end());
    out.vertices = ra.vertices;
    out.vertices.insert(out.vertices.end(), rb.vertices.begin() + 2, rb.vertices.end());
    out.triangles = merged_sorted(a.triangles, b.triangles);
    out.open_boundary = a.open_boundary || b.open_boundary;
    return out;
}

bool has_repeated_vertices(const Cycle& c) {
    std::unordered_set<int> seen;
    for (int v : c.vertices) {
        if (!seen.insert(v).second) return true;
    }
    return false;
}

std::optional<Cycle> filter_hanging_edges(const Cycle& c) {
    const int n = static_cast<int>(c.edges.size());
    if (n < 3) return std::nullopt;

    std::unordered_map<int, int> mult;
    for (int e : c.edges) ++mult[e];
    const bool any_doubled =
        std::any_of(mult.begin(), mult.end(), [](const auto& kv) { return kv.second > 1; });
    if (!any_doubled) {
        if (has_repeated_vertices(c)) return std::nullopt;
        return c;
    }

    // Surviving occurrences keep their walk endpoints.
    struct Occ {
        int edge, u, v;
    };
    std::vector<Occ> rem;
    for (int i = 0; i < n; ++i) {
        if (mult[c.edges[i]] == 1) {
            rem.push_back({c.edges[i], c.vertices[i], c.vertices[(i + 1) % n]});
        }
    }
    if (rem.size() < 3) return std::nullopt;

    std::unordered_map<int, std::vector<int>> incident;  // vertex -> occurrence ids
    for (int k = 0; k < static_cast<int>(rem.size()); ++k) {
        incident[rem[k].u].push_back(k);
        incident[rem[k].v].push_back(k);
    }
    for (const auto& [v, occ] : incident) {
        (void)v;
        if (occ.size() != 2) return std::nullopt;  // pinched or split walk
    }

    // Re-close deterministically: start at the smallest vertex, step toward
    // the smaller-indexed neighbor.
    int start = incident.begin()->first;
    for (const auto& [v, occ] : incident) {
        (void)occ;
        start = std::min(start, v);
    }
    auto other = [&](const Occ& o, int v) { return o.u == v ? o.v : o.u; };
    const auto& first_pair = incident[start];
    int cur_occ = first_pair[0];
    if (other(rem[first_pair[1]], start) < other(rem[first_pair[0]], start)) {
        cur_occ = first_pair[1];
    }

    Cycle out;
    out.triangles = c.triangles;
    out.open_boundary = c.open_boundary;
    std::vector<char> used(rem.size(), 0);
    int cur = start;
    while (true) {
        out.vertices.push_back(cur);
        out.edges.push_back(rem[cur_occ].edge);
        used[cur_occ] = 1;
        cur = other(rem[cur_occ], cur);
        if (cur == start) break;
        const auto& pair = incident[cur];
        cur_occ = used[pair[0]] ? pair[1] : pair[0];
        if (used[cur_occ]) return std::nullopt;
    }
    if (out.edges.size() != rem.size()) return std::nullopt;  // disjoint loops
    if (out.edges.size() < 3) return std::nullopt;
    return out;
}

std::vector<int> discard_boundary_polygons(const std::vector<Cycle>& cycles,
                                           const Triangulation& tri) {
    std::unordered_set<std::uint64_t> hull_edges;
    const int hn = static_cast<int>(tri.hull.size());
    for (int i = 0; i < hn; ++i) {
        int a = tri.hull[i], b = tri.hull[(i + 1) % hn];
        if (a > b) std::swap(a, b);
        hull_edges.insert((static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b));
    }
    std::vector<int> kept;
    for (int i = 0; i < static_cast<int>(cycles.size()); ++i) {
        bool on_hull = false;
        for (int e : cycles[i].edges) {
            int a = tri.edges[e].a, b = tri.edges[e].b;
            if (hull_edges.count((static_cast<std::uint64_t>(a) << 32) |
                                 static_cast<std::uint64_t>(b))) {
                on_hull = true;
                break;
            }
        }
        if (!on_hull && !cycles[i].open_boundary) kept.push_back(i);
    }
    return kept;
}

std::pair<UrquhartGraph, Hierarchy> build_urquhart(const Triangulation& tri) {
    const int nt = static_cast<int>(tri.triangles.size());
    std::vector<int> parent(nt);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int t) {
        while (parent[t] != t) {
            parent[t] = parent[parent[t]];
            t = parent[t];
        }
        return t;
    };

    std::vector<Cycle> pool(nt);
    for (int t = 0; t < nt; ++t) {
        const Triangle& tr = tri.triangles[t];
        pool[t].vertices = {tr.v[0], tr.v[1], tr.v[2]};
        pool[t].edges = {tr.e[0], tr.e[1], tr.e[2]};
        pool[t].triangles = {t};
    }

    std::vector<char> dropped(tri.edges.size(), 0);
    for (int t = 0; t < nt; ++t) {
        const int el = longest_edge(tri, t);
        if (dropped[el]) continue;  // neighbor already handled the merge
        dropped[el] = 1;
        const auto& inc = tri.edge_triangles[el];
        const int nb = inc[0] == t ? inc[1] : inc[0];
        const int ra = find(t);
        if (nb < 0) {
            // Longest edge on the hull: the region opens toward the outer
            // face and can never become an interior polygon.
            pool[ra].open_boundary = true;
            continue;
        }
        const int rb = find(nb);
        if (ra == rb) continue;  // walk already holds the edge twice; filtered below
        Cycle merged = symmetric_difference_merge(pool[ra], pool[rb], el);
        parent[rb] = ra;
        pool[ra] = std::move(merged);
        pool[rb] = Cycle{};
    }

    Hierarchy h;
    h.tri = tri;
    std::vector<char> seen(nt, 0);
    for (int t = 0; t < nt; ++t) {
        const int r = find(t);
        if (seen[r]) continue;
        seen[r] = 1;
        auto filtered = filter_hanging_edges(pool[r]);
        if (filtered) {
            h.basis.push_back(std::move(*filtered));
        } else {
            h.rejected_walks.push_back(pool[r]);
        }
    }
    h.h2 = discard_boundary_polygons(h.basis, tri);

    UrquhartGraph g;
    for (int e = 0; e < static_cast<int>(tri.edges.size()); ++e) {
        (dropped[e] ? g.removed : g.edges).push_back(e);
    }
    return {std::move(g), std::move(h)};
}

const std::vector<int>& phi1(const Hierarchy& h, int basis_index) {
    return h.basis[basis_index].triangles;
}

std::array<int, 3> phi0(const Hierarchy& h, int t) {
    return h.tri.triangles[t].e;
}

double cycle_area(const Cycle& c, const PointMatrix& points) {
    return polygon_area(points, c.vertices);
}

PointMatrix cycle_vertex_positions(const Cycle& c, const PointMatrix& points) {
    PointMatrix out(2, c.vertices.size());
    for (int i = 0; i < static_cast<int>(c.vertices.size()); ++i) {
        out.col(i) = points.col(c.vertices[i]);
    }
    return out;
}

}  // namespace urq
