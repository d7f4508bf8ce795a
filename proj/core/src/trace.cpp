#include "polylight/trace.hpp"

#include <algorithm>

namespace polylight {

BoundaryTrace BoundaryTrace::of(std::vector<TraceInterval> intervals) {
    std::vector<TraceInterval> in;
    for (auto& t : intervals) {
        if (t.lo > t.hi) std::swap(t.lo, t.hi);
        if (t.degenerate()) continue;
        in.push_back(t);
    }
    std::sort(in.begin(), in.end(), [](const TraceInterval& a, const TraceInterval& b) {
        if (a.edge != b.edge) return a.edge < b.edge;
        int c = cmp(a.lo, b.lo);
        if (c != 0) return c < 0;
        return cmp(a.hi, b.hi) < 0;
    });
    BoundaryTrace out;
    for (const auto& t : in) {
        if (!out.iv_.empty()) {
            TraceInterval& last = out.iv_.back();
            if (last.edge == t.edge && cmp(t.lo, last.hi) <= 0) {
                bool touching = (t.lo == last.hi);
                if (!touching || last.closed_hi || t.closed_lo) {
                    // merge
                    if (t.hi > last.hi) {
                        last.hi = t.hi;
                        last.closed_hi = t.closed_hi;
                    } else if (t.hi == last.hi) {
                        last.closed_hi = last.closed_hi || t.closed_hi;
                    }
                    if (t.lo == last.lo) last.closed_lo = last.closed_lo || t.closed_lo;
                    continue;
                }
            }
        }
        out.iv_.push_back(t);
    }
    return out;
}

Rat BoundaryTrace::param_measure() const {
    Rat m = 0;
    for (const auto& t : iv_) m += t.length();
    return m;
}

bool BoundaryTrace::contains(const BoundaryPoint& p) const {
    for (const auto& t : iv_) {
        // (edge, 0) is also reachable as the closed upper end of edge-1.
        if (t.edge != p.edge) {
            if (p.t == 0 && t.edge == p.edge - 1 && t.hi == 1 && t.closed_hi) return true;
            continue;
        }
        int clo = cmp(p.t, t.lo), chi = cmp(p.t, t.hi);
        if ((clo > 0 || (clo == 0 && t.closed_lo)) && (chi < 0 || (chi == 0 && t.closed_hi)))
            return true;
    }
    return false;
}

BoundaryTrace BoundaryTrace::unite(const BoundaryTrace& o) const {
    std::vector<TraceInterval> all = iv_;
    all.insert(all.end(), o.iv_.begin(), o.iv_.end());
    return of(std::move(all));
}

BoundaryTrace BoundaryTrace::intersect(const BoundaryTrace& o) const {
    std::vector<TraceInterval> out;
    for (const auto& a : iv_) {
        for (const auto& b : o.iv_) {
            if (a.edge != b.edge) continue;
            Rat lo = a.lo > b.lo ? a.lo : b.lo;
            Rat hi = a.hi < b.hi ? a.hi : b.hi;
            if (cmp(lo, hi) >= 0) continue;
            TraceInterval t;
            t.edge = a.edge;
            t.lo = lo;
            t.hi = hi;
            t.closed_lo = (lo == a.lo ? a.closed_lo : true) && (lo == b.lo ? b.closed_lo : true);
            t.closed_hi = (hi == a.hi ? a.closed_hi : true) && (hi == b.hi ? b.closed_hi : true);
            out.push_back(t);
        }
    }
    return of(std::move(out));
}

bool BoundaryTrace::overlaps_positively(const BoundaryTrace& o) const {
    return !intersect(o).empty();
}

bool BoundaryTrace::covers_part_of_edge(int edge) const {
    for (const auto& t : iv_)
        if (t.edge == edge) return true;  // canonical intervals have positive length
    return false;
}

BoundaryTrace BoundaryTrace::without_vertices() const {
    BoundaryTrace out;
    out.iv_ = iv_;
    for (auto& t : out.iv_) {
        if (t.lo == 0) t.closed_lo = false;
        if (t.hi == 1) t.closed_hi = false;
    }
    return out;
}

bool BoundaryTrace::subset_of(const BoundaryTrace& o) const {
    // Up to isolated points: the parameter measure of this minus o is zero.
    Rat inter = intersect(o).param_measure();
    return inter == param_measure();
}

}  // namespace polylight
