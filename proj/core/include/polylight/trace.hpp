#pragma once

#include "polylight/polygon.hpp"

#include <vector>

namespace polylight {

// One maximal run of boundary points within a single edge, as a parameter
// interval with per-end open/closed flags.
struct TraceInterval {
    int edge = 0;
    Rat lo, hi;
    bool closed_lo = true;
    bool closed_hi = true;

    Rat length() const { return hi - lo; }  // parameter measure
    bool degenerate() const { return lo == hi; }
};

// Canonical union of boundary subintervals: sorted by (edge, lo), pairwise
// disjoint, maximal within each edge. Only positive-length intervals are
// kept; isolated points carry no light in the area-level bookkeeping this
// library uses.
class BoundaryTrace {
  public:
    BoundaryTrace() = default;
    static BoundaryTrace of(std::vector<TraceInterval> intervals);

    const std::vector<TraceInterval>& intervals() const { return iv_; }
    bool empty() const { return iv_.empty(); }
    int count() const { return static_cast<int>(iv_.size()); }

    // Sum of parameter lengths (positivity/compare use only; edges are not
    // rescaled by euclidean length).
    Rat param_measure() const;

    bool contains(const BoundaryPoint& p) const;

    BoundaryTrace unite(const BoundaryTrace& o) const;
    BoundaryTrace intersect(const BoundaryTrace& o) const;

    // True when the two traces share a set of positive parameter measure.
    bool overlaps_positively(const BoundaryTrace& o) const;
    // Positive-length presence inside one edge's relative interior.
    bool covers_part_of_edge(int edge) const;

    // Marks interval ends that sit on polygon vertices as open (reflections
    // are forbidden at vertices; the trace endpoints at t=0 / t=1 are exactly
    // the vertex contacts).
    BoundaryTrace without_vertices() const;

    // True if this trace is contained in `o` up to isolated points.
    bool subset_of(const BoundaryTrace& o) const;

  private:
    std::vector<TraceInterval> iv_;
};

}  // namespace polylight
