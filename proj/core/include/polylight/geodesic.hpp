#pragma once

#include "polylight/polygon.hpp"
#include "polylight/triangulate.hpp"

#include <vector>

namespace polylight {

// Euclidean shortest path between two points of cl(P), through the polygon
// interior. Triangulation + funnel; all decisions are orientation tests, so
// the result is exact. The returned sequence starts at `from` and ends at
// `to`; interior entries are polygon vertices.
std::vector<Pt> geodesic_path(const Polygon& poly, const Pt& from, const Pt& to);

// Second point of the geodesic from vertex u to vertex v (a polygon vertex,
// or v itself when uv is a straight sight line). Throws DegenerateInput when
// u == v.
Pt geodesic_first_edge(const Polygon& poly, int u, int v);

}  // namespace polylight
