#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polylight/geodesic.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace polylight;
namespace T = polylight::testing;

TEST_CASE("triangulation covers the polygon") {
    for (const Polygon& p : {T::unit_square(), T::convex_pentagon(), T::l_hexagon(),
                             T::one_notch_square(), T::double_notch_square(), T::star_cross(),
                             T::dented_hexagon()}) {
        auto tris = triangulate(p);
        CHECK(static_cast<int>(tris.size()) == p.size() - 2);
        Rat total = 0;
        for (const auto& t : tris) {
            const Pt &a = p.vertex(t[0]), &b = p.vertex(t[1]), &c = p.vertex(t[2]);
            CHECK(orient(a, b, c) > 0);
            total += cross(b - a, c - a);
        }
        CHECK(total / 2 == p.area());
    }
}

TEST_CASE("geodesic in a convex polygon is the straight segment") {
    Polygon p = T::convex_pentagon();
    CHECK(geodesic_first_edge(p, 0, 2) == p.vertex(2));
    auto path = geodesic_path(p, p.vertex(0), p.vertex(3));
    CHECK(path.size() == 2);
}

TEST_CASE("geodesic bends around the L-hexagon reflex corner") {
    Polygon p = T::l_hexagon();
    // From (2,0) to (0,2): the path passes the reflex vertex (1,1).
    CHECK(geodesic_first_edge(p, 1, 5) == Pt(1L, 1L));
    auto path = geodesic_path(p, p.vertex(1), p.vertex(5));
    REQUIRE(path.size() >= 2);
    CHECK(path.front() == p.vertex(1));
    CHECK(path.back() == p.vertex(5));
}

TEST_CASE("geodesic rejects equal endpoints") {
    CHECK_THROWS_AS(geodesic_first_edge(T::unit_square(), 1, 1), DegenerateInput);
}

TEST_CASE("geodesic matches the visibility-graph oracle") {
    // Canonicalize oracle paths the same way: grazed vertices listed explicitly.
    auto expand = [](const Polygon& p, std::vector<Pt> pts) {
        std::vector<Pt> out;
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            out.push_back(pts[i]);
            std::vector<Pt> mid;
            for (const Pt& w : p.vertices())
                if (point_in_open_segment(w, pts[i], pts[i + 1])) mid.push_back(w);
            std::sort(mid.begin(), mid.end(), [&](const Pt& a, const Pt& b) {
                return dist2(pts[i], a) < dist2(pts[i], b);
            });
            for (const Pt& w : mid) out.push_back(w);
        }
        out.push_back(pts.back());
        return out;
    };
    for (const Polygon& p : {T::one_notch_square(), T::double_notch_square(), T::star_cross(),
                             T::dented_hexagon(), T::l_hexagon()}) {
        int n = p.size();
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                auto path = geodesic_path(p, p.vertex(u), p.vertex(v));
                auto ref_idx = T::visibility_graph_path(p, u, v);
                REQUIRE(ref_idx.size() >= 2);
                std::vector<Pt> ref;
                for (int k : ref_idx) ref.push_back(p.vertex(k));
                ref = expand(p, ref);
                REQUIRE(path.size() == ref.size());
                for (size_t i = 0; i < path.size(); ++i) CHECK(path[i] == ref[i]);
                // Consecutive path points must see each other.
                for (size_t i = 0; i + 1 < path.size(); ++i)
                    CHECK(p.segment_inside(path[i], path[i + 1]));
            }
        }
    }
}

TEST_CASE("first geodesic edge endpoint is visible from the start vertex") {
    for (const Polygon& p : {T::one_notch_square(), T::double_notch_square(), T::star_cross()}) {
        int n = p.size();
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                Pt first = geodesic_first_edge(p, u, v);
                CHECK(p.segment_inside(p.vertex(u), first));
            }
    }
}
