#include "polylight/geometry.hpp"

namespace polylight {

bool point_on_segment(const Pt& p, const Pt& a, const Pt& b) {
    if (orient(a, b, p) != 0) return false;
    if (a == b) return p == a;
    // p within the range of ab along the dominant axis.
    if (a.x != b.x) {
        const Rat &lo = a.x < b.x ? a.x : b.x, &hi = a.x < b.x ? b.x : a.x;
        return lo <= p.x && p.x <= hi;
    }
    const Rat &lo = a.y < b.y ? a.y : b.y, &hi = a.y < b.y ? b.y : a.y;
    return lo <= p.y && p.y <= hi;
}

bool point_in_open_segment(const Pt& p, const Pt& a, const Pt& b) {
    return point_on_segment(p, a, b) && p != a && p != b;
}

std::optional<Pt> line_intersection(const Pt& a1, const Pt& a2,
                                    const Pt& b1, const Pt& b2) {
    Pt da = a2 - a1, db = b2 - b1;
    Rat denom = cross(da, db);
    if (sgn(denom) == 0) return std::nullopt;
    Rat t = cross(b1 - a1, db) / denom;
    return lerp(a1, a2, t);
}

std::optional<Rat> segment_line_param(const Pt& a, const Pt& b,
                                      const Pt& l1, const Pt& l2) {
    Pt d = b - a, dl = l2 - l1;
    Rat denom = cross(d, dl);
    if (sgn(denom) == 0) return std::nullopt;
    Rat t = cross(l1 - a, dl) / denom;
    if (t < 0 || t > 1) return std::nullopt;
    return t;
}

SegCrossResult segment_intersection(const Pt& a, const Pt& b,
                                    const Pt& c, const Pt& d) {
    SegCrossResult res;
    int o1 = orient(a, b, c);
    int o2 = orient(a, b, d);
    int o3 = orient(c, d, a);
    int o4 = orient(c, d, b);

    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
        res.kind = SegCross::proper;
        Pt dab = b - a, dcd = d - c;
        Rat t = cross(c - a, dcd) / cross(dab, dcd);
        res.p = lerp(a, b, t);
        return res;
    }

    if (o1 == 0 && o2 == 0) {
        // Collinear: project onto the dominant axis of ab (or cd if ab degenerate).
        const Pt& ref1 = (a == b) ? c : a;
        const Pt& ref2 = (a == b) ? d : b;
        bool use_x = ref1.x != ref2.x;
        auto key = [&](const Pt& p) { return use_x ? p.x : p.y; };
        Rat alo = key(a), ahi = key(b);
        if (alo > ahi) std::swap(alo, ahi);
        Rat clo = key(c), chi = key(d);
        if (clo > chi) std::swap(clo, chi);
        Rat lo = alo > clo ? alo : clo;
        Rat hi = ahi < chi ? ahi : chi;
        int c0 = cmp(lo, hi);
        if (c0 > 0) return res;  // disjoint
        auto pt_at = [&](const Rat& k) {
            // Reconstruct the point with key k on the common line.
            if (key(a) == k) return a;
            if (key(b) == k) return b;
            if (key(c) == k) return c;
            return d;
        };
        if (c0 == 0) {
            res.kind = SegCross::touch;
            res.p = pt_at(lo);
            return res;
        }
        res.kind = SegCross::overlap;
        res.q1 = pt_at(lo);
        res.q2 = pt_at(hi);
        return res;
    }

    // Non-collinear with some zero orientation: possible endpoint touch.
    if (o1 == 0 && point_on_segment(c, a, b)) { res.kind = SegCross::touch; res.p = c; return res; }
    if (o2 == 0 && point_on_segment(d, a, b)) { res.kind = SegCross::touch; res.p = d; return res; }
    if (o3 == 0 && point_on_segment(a, c, d)) { res.kind = SegCross::touch; res.p = a; return res; }
    if (o4 == 0 && point_on_segment(b, c, d)) { res.kind = SegCross::touch; res.p = b; return res; }
    return res;
}

bool segments_meet(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    return segment_intersection(a, b, c, d).kind != SegCross::none;
}

bool segments_cross_properly(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    return segment_intersection(a, b, c, d).kind == SegCross::proper;
}

}  // namespace polylight
