#include "polylight/triangulate.hpp"

namespace polylight {

static bool point_in_closed_triangle(const Pt& p, const Pt& a, const Pt& b, const Pt& c) {
    int o1 = orient(a, b, p);
    int o2 = orient(b, c, p);
    int o3 = orient(c, a, p);
    return o1 >= 0 && o2 >= 0 && o3 >= 0;
}

std::vector<Triangle> triangulate(const Polygon& poly) {
    int n = poly.size();
    std::vector<int> ring(n);
    for (int i = 0; i < n; ++i) ring[i] = i;

    std::vector<Triangle> tris;
    tris.reserve(n - 2);

    while (static_cast<int>(ring.size()) > 3) {
        int m = static_cast<int>(ring.size());
        bool clipped = false;
        for (int i = 0; i < m; ++i) {
            int ip = ring[(i + m - 1) % m];
            int ic = ring[i];
            int in = ring[(i + 1) % m];
            const Pt &a = poly.vertex(ip), &b = poly.vertex(ic), &c = poly.vertex(in);
            if (orient(a, b, c) <= 0) continue;  // reflex or degenerate corner
            bool blocked = false;
            for (int j = 0; j < m && !blocked; ++j) {
                int iv = ring[j];
                if (iv == ip || iv == ic || iv == in) continue;
                if (point_in_closed_triangle(poly.vertex(iv), a, b, c)) blocked = true;
            }
            if (blocked) continue;
            tris.push_back({ip, ic, in});
            ring.erase(ring.begin() + i);
            clipped = true;
            break;
        }
        if (!clipped) throw Error("triangulate: no ear found (invalid polygon?)");
    }
    tris.push_back({ring[0], ring[1], ring[2]});
    return tris;
}

}  // namespace polylight
