#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace polylight::testing {

std::optional<NaiveRayHit> naive_ray_shoot(const Polygon& p, const Pt& origin, const Pt& dir) {
    std::optional<NaiveRayHit> best;
    int n = p.size();
    for (int i = 0; i < n; ++i) {
        Seg e = p.edge(i);
        // origin + t*dir == e.a + s*(e.b - e.a)
        Pt ed = e.b - e.a;
        Rat den = cross(dir, ed);
        if (sgn(den) != 0) {
            Rat t = cross(e.a - origin, ed) / den;
            Rat s = cross(e.a - origin, dir) / den;
            if (sgn(t) > 0 && s >= 0 && s <= 1) {
                if (!best || t < best->t) best = NaiveRayHit{origin + dir * t, t};
            }
        } else if (orient(origin, origin + dir, e.a) == 0) {
            for (const Pt* z : {&e.a, &e.b}) {
                Rat t = (dir.x != 0) ? Rat((z->x - origin.x) / dir.x)
                                     : Rat((z->y - origin.y) / dir.y);
                if (sgn(t) > 0 && (!best || t < best->t)) best = NaiveRayHit{*z, t};
            }
        }
    }
    return best;
}

bool naive_sees(const Polygon& p, const Pt& a, const Pt& b) {
    if (a == b) return p.contains(a);
    int n = p.size();
    for (int i = 0; i < n; ++i) {
        Seg e = p.edge(i);
        if (segments_cross_properly(a, b, e.a, e.b)) return false;
    }
    return p.contains(midpoint(a, b));
}

std::vector<int> visibility_graph_path(const Polygon& p, int u, int v) {
    int n = p.size();
    auto mutually_visible = [&](int i, int j) {
        return p.segment_inside(p.vertex(i), p.vertex(j));
    };
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && mutually_visible(i, j)) adj[i].push_back(j);

    std::vector<double> dist(n, 1e100);
    std::vector<int> prev(n, -1);
    auto w = [&](int i, int j) {
        double dx = to_double(p.vertex(j).x - p.vertex(i).x);
        double dy = to_double(p.vertex(j).y - p.vertex(i).y);
        return std::sqrt(dx * dx + dy * dy);
    };
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> q;
    dist[u] = 0;
    q.push({0, u});
    while (!q.empty()) {
        auto [d, i] = q.top();
        q.pop();
        if (d > dist[i]) continue;
        for (int j : adj[i]) {
            double nd = d + w(i, j);
            if (nd < dist[j] - 1e-12) {
                dist[j] = nd;
                prev[j] = i;
                q.push({nd, j});
            }
        }
    }
    std::vector<int> path;
    for (int x = v; x != -1; x = prev[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Pt> halfplane_kernel(const Polygon& p) {
    // Start from a box strictly containing P, clip by each edge half-plane.
    Rat xlo = p.vertex(0).x, xhi = xlo, ylo = p.vertex(0).y, yhi = ylo;
    for (const Pt& v : p.vertices()) {
        xlo = std::min(xlo, v.x);
        xhi = std::max(xhi, v.x);
        ylo = std::min(ylo, v.y);
        yhi = std::max(yhi, v.y);
    }
    xlo -= 1; ylo -= 1; xhi += 1; yhi += 1;
    std::vector<Pt> ring = {Pt(xlo, ylo), Pt(xhi, ylo), Pt(xhi, yhi), Pt(xlo, yhi)};

    int n = p.size();
    for (int i = 0; i < n && !ring.empty(); ++i) {
        const Pt a = p.vertex(i), b = p.vertex(i + 1);
        std::vector<Pt> next;
        int m = static_cast<int>(ring.size());
        for (int k = 0; k < m; ++k) {
            const Pt& cur = ring[k];
            const Pt& nxt = ring[(k + 1) % m];
            int oc = orient(a, b, cur);
            int on = orient(a, b, nxt);
            if (oc >= 0) next.push_back(cur);
            if ((oc > 0 && on < 0) || (oc < 0 && on > 0)) {
                auto x = line_intersection(a, b, cur, nxt);
                next.push_back(*x);
            }
        }
        // Drop exact duplicates introduced by vertices on the clip line.
        std::vector<Pt> clean;
        for (const Pt& q : next)
            if (clean.empty() || clean.back() != q) clean.push_back(q);
        if (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
        ring = std::move(clean);
        if (ring.size() < 3) return {};
    }
    // Positive area required.
    Rat area = 0;
    int m = static_cast<int>(ring.size());
    for (int k = 0; k < m; ++k) area += cross(ring[k], ring[(k + 1) % m]);
    if (sgn(area) <= 0) return {};
    return ring;
}

std::vector<Pt> sample_interior_points(const Polygon& p, int count, unsigned seed) {
    std::mt19937 rng(seed);
    Rat xlo = p.vertex(0).x, xhi = xlo, ylo = p.vertex(0).y, yhi = ylo;
    for (const Pt& v : p.vertices()) {
        xlo = std::min(xlo, v.x);
        xhi = std::max(xhi, v.x);
        ylo = std::min(ylo, v.y);
        yhi = std::max(yhi, v.y);
    }
    std::vector<Pt> out;
    const long denom = 9973;  // prime grid: samples rarely hit vertex lines
    std::uniform_int_distribution<long> dx(1, denom - 1);
    int guard = 0;
    while (static_cast<int>(out.size()) < count && guard++ < count * 1000) {
        Rat x = xlo + (xhi - xlo) * rat(dx(rng), denom);
        Rat y = ylo + (yhi - ylo) * rat(dx(rng), denom);
        Pt q(x, y);
        if (!p.strictly_contains(q)) continue;
        if (!p.off_critical_lines(q)) continue;
        out.push_back(q);
    }
    return out;
}

}  // namespace polylight::testing
