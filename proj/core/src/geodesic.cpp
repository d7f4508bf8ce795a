#include "polylight/geodesic.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace polylight {

namespace {

int area2_sign(const Pt& a, const Pt& b, const Pt& c) { return orient(a, b, c); }

bool point_in_closed_tri(const Pt& p, const Pt& a, const Pt& b, const Pt& c) {
    return orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0;
}

struct TriMesh {
    const Polygon& poly;
    std::vector<Triangle> tris;
    // adjacency: tri index -> list of (neighbor tri, shared edge endpoints)
    std::vector<std::vector<std::pair<int, std::pair<int, int>>>> adj;

    explicit TriMesh(const Polygon& p) : poly(p), tris(triangulate(p)) {
        std::map<std::pair<int, int>, std::vector<int>> by_edge;
        for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
            for (int e = 0; e < 3; ++e) {
                int u = tris[t][e], v = tris[t][(e + 1) % 3];
                by_edge[{std::min(u, v), std::max(u, v)}].push_back(t);
            }
        }
        adj.resize(tris.size());
        for (const auto& [edge, owners] : by_edge) {
            if (owners.size() != 2) continue;
            adj[owners[0]].push_back({owners[1], edge});
            adj[owners[1]].push_back({owners[0], edge});
        }
    }

    int locate(const Pt& p) const {
        for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
            if (point_in_closed_tri(p, poly.vertex(tris[t][0]), poly.vertex(tris[t][1]),
                                    poly.vertex(tris[t][2])))
                return t;
        }
        return -1;
    }
};

}  // namespace

std::vector<Pt> geodesic_path(const Polygon& poly, const Pt& from, const Pt& to) {
    if (from == to) return {from};
    TriMesh mesh(poly);
    int t_from = mesh.locate(from);
    int t_to = mesh.locate(to);
    if (t_from < 0 || t_to < 0) throw DegenerateInput("geodesic: endpoint outside polygon");

    // BFS over the triangulation dual (a tree), recording parents.
    std::vector<int> parent(mesh.tris.size(), -2);
    std::vector<std::pair<int, int>> parent_edge(mesh.tris.size());
    std::queue<int> bfs;
    bfs.push(t_from);
    parent[t_from] = -1;
    while (!bfs.empty()) {
        int t = bfs.front();
        bfs.pop();
        if (t == t_to) break;
        for (const auto& [nb, edge] : mesh.adj[t]) {
            if (parent[nb] != -2) continue;
            parent[nb] = t;
            parent_edge[nb] = edge;
            bfs.push(nb);
        }
    }
    if (parent[t_to] == -2) throw Error("geodesic: triangulation dual is disconnected");

    std::vector<std::pair<int, int>> portal_edges;  // from t_to back to t_from
    for (int t = t_to; parent[t] != -1; t = parent[t]) portal_edges.push_back(parent_edge[t]);
    std::reverse(portal_edges.begin(), portal_edges.end());

    // Portal list: (left, right) pairs oriented so the walk direction keeps
    // left on the left. Crossing a portal (u,v) into the next triangle whose
    // third vertex is w: orient(left, right, w) > 0.
    struct Portal {
        Pt l, r;
    };
    std::vector<Portal> portals;
    portals.push_back({from, from});
    int cur = t_from;
    std::vector<int> tri_path;
    tri_path.push_back(t_from);
    {
        int t = t_to;
        std::vector<int> rev;
        while (t != t_from) {
            rev.push_back(t);
            t = parent[t];
        }
        std::reverse(rev.begin(), rev.end());
        for (int x : rev) tri_path.push_back(x);
    }
    for (size_t i = 0; i + 1 < tri_path.size(); ++i) {
        auto [u, v] = portal_edges[i];
        int next_tri = tri_path[i + 1];
        int w = -1;
        for (int vert : mesh.tris[next_tri])
            if (vert != u && vert != v) w = vert;
        Pt pu = poly.vertex(u), pv = poly.vertex(v), pw = poly.vertex(w);
        if (orient(pu, pv, pw) > 0) portals.push_back({pu, pv});
        else portals.push_back({pv, pu});
        cur = next_tri;
    }
    (void)cur;
    portals.push_back({to, to});

    // Funnel walk. The funnel opens from the apex with boundary points
    // (left, right); interior points are strictly right of apex->left and
    // strictly left of apex->right.
    std::vector<Pt> path;
    path.push_back(from);
    Pt apex = from, left = from, right = from;
    size_t apex_i = 0, left_i = 0, right_i = 0;
    for (size_t i = 1; i < portals.size(); ++i) {
        const Pt& pl = portals[i].l;
        const Pt& pr = portals[i].r;

        // Tighten the right side.
        if (area2_sign(apex, right, pr) >= 0 || apex == right) {
            if (apex == right || area2_sign(apex, left, pr) < 0) {
                right = pr;
                right_i = i;
            } else {
                // Right chain swept past the left boundary: bend at left.
                path.push_back(left);
                apex = left;
                apex_i = left_i;
                left = apex;
                right = apex;
                left_i = right_i = apex_i;
                i = apex_i;
                continue;
            }
        }
        // Tighten the left side.
        if (area2_sign(apex, left, pl) <= 0 || apex == left) {
            if (apex == left || area2_sign(apex, right, pl) > 0) {
                left = pl;
                left_i = i;
            } else {
                path.push_back(right);
                apex = right;
                apex_i = right_i;
                left = apex;
                right = apex;
                left_i = right_i = apex_i;
                i = apex_i;
                continue;
            }
        }
    }
    if (path.back() != to) path.push_back(to);

    // Collapse repeats created by funnel restarts.
    std::vector<Pt> clean;
    for (const Pt& p : path)
        if (clean.empty() || clean.back() != p) clean.push_back(p);

    // Canonical form lists grazed vertices explicitly: a taut segment that
    // passes over a reflex vertex bends there with angle zero. (Cannot occur
    // for vertex endpoints when the polygon is in general position.)
    std::vector<Pt> out;
    for (size_t i = 0; i + 1 < clean.size(); ++i) {
        const Pt& a = clean[i];
        const Pt& b = clean[i + 1];
        out.push_back(a);
        std::vector<Pt> grazed;
        for (const Pt& w : poly.vertices())
            if (point_in_open_segment(w, a, b)) grazed.push_back(w);
        std::sort(grazed.begin(), grazed.end(), [&](const Pt& u, const Pt& v) {
            return dist2(a, u) < dist2(a, v);
        });
        for (const Pt& w : grazed) out.push_back(w);
    }
    out.push_back(clean.back());
    return out;
}

Pt geodesic_first_edge(const Polygon& poly, int u, int v) {
    if (poly.index(u) == poly.index(v)) throw DegenerateInput("geodesic_first_edge: u == v");
    auto path = geodesic_path(poly, poly.vertex(u), poly.vertex(v));
    if (path.size() < 2) throw Error("geodesic_first_edge: degenerate path");
    return path[1];
}

}  // namespace polylight
