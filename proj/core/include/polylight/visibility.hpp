#pragma once

#include "polylight/overlay.hpp"
#include "polylight/polygon.hpp"
#include "polylight/trace.hpp"

#include <optional>
#include <vector>

namespace polylight {

// A window chord of a visibility region: the sight-line boundary across which
// the region ends. For a point source the chord is anchored at a reflex
// vertex `a` lying between the source and the far endpoint `b`.
struct Window {
    Pt a;  // reflex pivot (a polygon vertex)
    Pt b;  // far endpoint, in the relative interior of an edge
    int a_index = -1;
    int b_edge = -1;
    Rat b_t;
    // Invisible boundary arc spanned by the window, walking CCW from
    // arc_begin to arc_end (the pocket side).
    BoundaryPoint arc_begin, arc_end;
};

struct VisibilityRegion {
    RegionSet region;
    BoundaryTrace trace;          // region boundary along ∂P (closed intervals)
    std::vector<Window> windows;  // boundary order
    std::vector<Pt> ring;         // point sources only: the region as one CCW ring
};

// Visibility polygon of a point strictly inside P, in general position with
// respect to the vertex lines. Throws SourceOutside / SourceOnCriticalLine.
VisibilityRegion visibility_from_point(const Polygon& poly, const Pt& s);

// Same construction for any source in cl(P) (boundary sources included);
// the caller vouches for genericity. Used internally by the region and
// radius machinery, whose constructed sources sit off the relevant lines.
VisibilityRegion visibility_from_point_any(const Polygon& poly, const Pt& s);

// Weak visibility region of a closed segment in cl(P): every point seen from
// at least one point of the segment. Throws DegenerateInput on a zero-length
// segment.
VisibilityRegion weak_visibility_from_segment(const Polygon& poly, const Seg& seg);

// Union of weak-visibility regions over all intervals of a boundary trace.
// Returns an empty region for an empty trace.
VisibilityRegion visibility_from_trace(const Polygon& poly, const BoundaryTrace& trace);

// Closed-sense predicate: does y see at least one point of seg?
// Exact for y off the lines spanned by two polygon vertices.
bool sees_any_of_segment(const Polygon& poly, const Pt& y, const Seg& seg);

// Strict predicate: is there x in the relative interior of seg with the open
// sight segment xy inside int(P)? Exact for all y.
bool strictly_sees_relint(const Polygon& poly, const Pt& y, const Seg& seg);

// Is there a chord of P crossing the relative interiors of both segments?
// (Equivalently: strict mutual visibility between their relative interiors.)
bool chord_crosses_both(const Polygon& poly, const Seg& s1, const Seg& s2);

}  // namespace polylight
