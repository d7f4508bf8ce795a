#pragma once

#include "polylight/point.hpp"

#include <optional>
#include <vector>

namespace polylight {

struct Seg {
    Pt a, b;
    Seg() = default;
    Seg(Pt a_, Pt b_) : a(std::move(a_)), b(std::move(b_)) {}
    Pt at(const Rat& t) const { return lerp(a, b, t); }
    bool degenerate() const { return a == b; }
};

bool point_on_segment(const Pt& p, const Pt& a, const Pt& b);         // closed
bool point_in_open_segment(const Pt& p, const Pt& a, const Pt& b);    // relative interior

// Intersection point of the (infinite) lines through a1a2 and b1b2.
// Empty when parallel or either pair degenerate.
std::optional<Pt> line_intersection(const Pt& a1, const Pt& a2,
                                    const Pt& b1, const Pt& b2);

// Parameter t on segment a->b where the line through l1l2 crosses it,
// or empty when parallel / outside [0,1].
std::optional<Rat> segment_line_param(const Pt& a, const Pt& b,
                                      const Pt& l1, const Pt& l2);

enum class SegCross {
    none,      // disjoint
    proper,    // single interior-interior crossing point
    touch,     // single shared point involving an endpoint
    overlap,   // collinear with a shared subsegment of positive length
};

struct SegCrossResult {
    SegCross kind = SegCross::none;
    Pt p;        // crossing / touch point (valid for proper and touch)
    Pt q1, q2;   // overlap range (valid for overlap)
};

SegCrossResult segment_intersection(const Pt& a, const Pt& b,
                                    const Pt& c, const Pt& d);

// True if any point is shared (crossing, touching, or overlap).
bool segments_meet(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

// True if the open segments share a single proper crossing point.
bool segments_cross_properly(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

}  // namespace polylight
