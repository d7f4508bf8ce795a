#pragma once

#include "polylight/polygon.hpp"

#include <array>
#include <vector>

namespace polylight {

using Triangle = std::array<int, 3>;  // vertex indices, CCW

// Ear-clipping triangulation, O(n^2). Requires a valid general-position polygon.
std::vector<Triangle> triangulate(const Polygon& poly);

}  // namespace polylight
