#pragma once

#include "polylight/polygon.hpp"
#include "polylight/trace.hpp"

#include <functional>
#include <vector>

namespace polylight {

// A closed region of the plane with polygonal boundary, stored as directed
// boundary edges with the interior on the left. Supports exact boolean
// operations via planar-arrangement overlay; no snapping, no tolerances.
// The region may have several components and holes; area and membership are
// always exact.
class RegionSet {
  public:
    RegionSet() : area_(0) {}

    static RegionSet empty() { return RegionSet(); }
    static RegionSet from_ring(std::vector<Pt> ring);  // simple ring, any orientation
    static RegionSet from_polygon(const Polygon& p) { return from_ring(p.vertices()); }

    const std::vector<Seg>& edges() const { return edges_; }
    const Rat& area() const { return area_; }
    bool is_empty() const { return edges_.empty(); }

    Where locate(const Pt& p) const;
    bool contains(const Pt& p) const { return locate(p) != Where::outside; }

    // A point strictly inside the region. Throws EmptyKernel-style Error
    // when the region has no area.
    Pt interior_point() const;

    // Portions of this region's boundary that lie along the boundary of P.
    BoundaryTrace boundary_trace(const Polygon& p) const;

    // Positive-area connected components (each returned with its boundary).
    std::vector<RegionSet> components() const;

    bool operator==(const RegionSet&) const = default;

    static RegionSet from_edges(std::vector<Seg> edges);

  private:
    std::vector<Seg> edges_;
    Rat area_;
};

RegionSet region_union(const RegionSet& a, const RegionSet& b);
RegionSet region_intersection(const RegionSet& a, const RegionSet& b);
RegionSet region_difference(const RegionSet& a, const RegionSet& b);

// area(inner \ outer) == 0: containment up to a measure-zero set.
bool region_covers(const RegionSet& outer, const RegionSet& inner);

// Exact equality as regular closed sets: both differences have zero area.
bool region_equal_area(const RegionSet& a, const RegionSet& b);

// Builds the planar arrangement of `segments` and keeps every face whose
// interior satisfies `keep` (evaluated at an exact interior sample point of
// the face). The union of kept faces is returned with its boundary.
RegionSet faces_where(const std::vector<Seg>& segments,
                      const std::function<bool(const Pt&)>& keep);

}  // namespace polylight
