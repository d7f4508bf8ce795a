#include "polylight/visibility.hpp"

#include <algorithm>
#include <map>

namespace polylight {

namespace {

// Breakpoints of the sight structure along segment `seg` as seen from y:
// parameters where the line through y and a polygon vertex crosses seg.
std::vector<Rat> sight_breakpoints(const Polygon& poly, const Pt& y, const Seg& seg) {
    std::vector<Rat> ts{Rat(0), Rat(1)};
    for (const Pt& w : poly.vertices()) {
        if (w == y) continue;
        auto t = segment_line_param(seg.a, seg.b, y, w);
        if (t) ts.push_back(*t);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

}  // namespace

bool sees_any_of_segment(const Polygon& poly, const Pt& y, const Seg& seg) {
    auto ts = sight_breakpoints(poly, y, seg);
    for (const Rat& t : ts)
        if (poly.segment_inside(y, seg.at(t))) return true;
    for (size_t i = 0; i + 1 < ts.size(); ++i)
        if (poly.segment_inside(y, seg.at((ts[i] + ts[i + 1]) / 2))) return true;
    return false;
}

bool strictly_sees_relint(const Polygon& poly, const Pt& y, const Seg& seg) {
    auto ts = sight_breakpoints(poly, y, seg);
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
        Rat m = (ts[i] + ts[i + 1]) / 2;
        if (poly.segment_strictly_inside(y, seg.at(m))) return true;
    }
    return false;
}

bool chord_crosses_both(const Polygon& poly, const Seg& s1, const Seg& s2) {
    // A chord crossing both windows exists iff some point in relint(s1) has a
    // strict sight line into relint(s2): the open sight segment extends past
    // both windows into int(P) on either side. Strict sight status is
    // constant between tangency events along s1, so cell midpoints decide.
    std::vector<Rat> ts{Rat(0), Rat(1)};
    int n = poly.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            auto t = segment_line_param(s1.a, s1.b, poly.vertex(i), poly.vertex(j));
            if (t) ts.push_back(*t);
        }
        // Events where the visible sliver of s2 enters/exits its endpoints.
        for (const Pt* e : {&s2.a, &s2.b}) {
            if (*e == poly.vertex(i)) continue;
            auto t = segment_line_param(s1.a, s1.b, poly.vertex(i), *e);
            if (t) ts.push_back(*t);
        }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
        Rat m = (ts[i] + ts[i + 1]) / 2;
        if (strictly_sees_relint(poly, s1.at(m), s2)) return true;
    }
    return false;
}

namespace {

struct VisiblePiece {
    int edge;
    Rat lo, hi;
    Pt from() const { return from_pt; }
    Pt to() const { return to_pt; }
    Pt from_pt, to_pt;
};

// Maximal visible runs of each edge, from source s, in boundary order.
std::vector<VisiblePiece> visible_pieces(const Polygon& poly, const Pt& s) {
    std::vector<VisiblePiece> pieces;
    int n = poly.size();
    for (int e = 0; e < n; ++e) {
        Seg edge = poly.edge(e);
        std::vector<Rat> ts{Rat(0), Rat(1)};
        for (const Pt& w : poly.vertices()) {
            if (w == s) continue;
            auto t = segment_line_param(edge.a, edge.b, s, w);
            if (t) ts.push_back(*t);
        }
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        std::optional<std::pair<Rat, Rat>> open;
        for (size_t i = 0; i + 1 < ts.size(); ++i) {
            bool vis = poly.segment_inside(s, edge.at((ts[i] + ts[i + 1]) / 2));
            if (vis) {
                if (open) open->second = ts[i + 1];
                else open = {ts[i], ts[i + 1]};
            } else if (open) {
                pieces.push_back({e, open->first, open->second, edge.at(open->first),
                                  edge.at(open->second)});
                open.reset();
            }
        }
        if (open)
            pieces.push_back({e, open->first, open->second, edge.at(open->first),
                              edge.at(open->second)});
    }
    return pieces;
}

}  // namespace

VisibilityRegion visibility_from_point_any(const Polygon& poly, const Pt& s) {
    if (poly.locate(s) == Where::outside) throw SourceOutside("source outside polygon");
    auto pieces = visible_pieces(poly, s);
    if (pieces.empty()) throw Error("visibility: no visible boundary (corrupt input)");

    VisibilityRegion out;
    std::vector<TraceInterval> trace_parts;
    for (const auto& p : pieces) {
        TraceInterval t;
        t.edge = p.edge;
        t.lo = p.lo;
        t.hi = p.hi;
        trace_parts.push_back(t);
    }
    out.trace = BoundaryTrace::of(std::move(trace_parts));

    // Assemble the region ring; gaps between consecutive pieces are windows.
    int m = static_cast<int>(pieces.size());
    std::vector<Pt> ring;
    auto push = [&](const Pt& q) {
        if (ring.empty() || ring.back() != q) ring.push_back(q);
    };
    for (int i = 0; i < m; ++i) {
        const auto& cur = pieces[i];
        push(cur.from());
        push(cur.to());
        const auto& nxt = pieces[(i + 1) % m];
        Pt x = cur.to(), y = nxt.from();
        if (x == y) continue;
        // Window between x and y. One end is a reflex vertex collinear with s.
        bool x_vertex = (cur.hi == 1);
        bool y_vertex = (nxt.lo == 0);
        if (collinear(s, x, y) && (x_vertex != y_vertex)) {
            Window w;
            if (x_vertex) {
                w.a = x;
                w.b = y;
                w.a_index = poly.index(cur.edge + 1);
                w.b_edge = nxt.edge;
                w.b_t = nxt.lo;
            } else {
                w.a = y;
                w.b = x;
                w.a_index = nxt.edge;
                w.b_edge = cur.edge;
                w.b_t = cur.hi;
            }
            w.arc_begin = BoundaryPoint{cur.edge, cur.hi};
            w.arc_end = BoundaryPoint{nxt.edge, nxt.lo};
            if (!point_in_open_segment(w.a, s, w.b))
                throw SourceOnCriticalLine("window pivot not between source and far endpoint");
            out.windows.push_back(std::move(w));
        } else {
            throw SourceOnCriticalLine("degenerate window between " + to_string(x) + " and " +
                                       to_string(y));
        }
    }
    if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
    out.ring = ring;
    out.region = RegionSet::from_ring(std::move(ring));
    return out;
}

VisibilityRegion visibility_from_point(const Polygon& poly, const Pt& s) {
    if (!poly.strictly_contains(s)) throw SourceOutside("source not strictly inside polygon");
    if (!poly.off_critical_lines(s))
        throw SourceOnCriticalLine("source lies on a line spanned by two vertices");
    return visibility_from_point_any(poly, s);
}

namespace {

// Candidate window chords for weak visibility from the given segments:
// pieces of lines through (reflex, reflex) and (segment endpoint, reflex)
// pairs, restricted to P and to pieces containing a defining pivot.
std::vector<Seg> candidate_window_chords(const Polygon& poly, const std::vector<Seg>& sources) {
    std::vector<int> reflex = poly.reflex_vertices();
    std::vector<std::pair<Pt, Pt>> lines;
    for (size_t i = 0; i < reflex.size(); ++i) {
        const Pt& r1 = poly.vertex(reflex[i]);
        for (size_t j = i + 1; j < reflex.size(); ++j) {
            const Pt& r2 = poly.vertex(reflex[j]);
            if (poly.segment_inside(r1, r2)) lines.emplace_back(r1, r2);
        }
        for (const Seg& s : sources) {
            for (const Pt* e : {&s.a, &s.b}) {
                if (*e == r1) continue;
                if (poly.segment_inside(*e, r1)) lines.emplace_back(*e, r1);
            }
        }
    }
    std::vector<Seg> chords;
    for (const auto& [p, q] : lines) {
        for (const Seg& piece : poly.clip_line(p, q)) {
            bool has_pivot = point_on_segment(p, piece.a, piece.b) ||
                             point_on_segment(q, piece.a, piece.b);
            if (has_pivot) chords.push_back(piece);
        }
    }
    return chords;
}

// Maximal straight chords of the region boundary not lying along ∂P.
std::vector<Window> extract_segment_windows(const Polygon& poly, const RegionSet& region) {
    // Group interior boundary edges by supporting line, then chain them.
    std::vector<Seg> interior;
    for (const Seg& e : region.edges()) {
        bool on_boundary = false;
        for (int i = 0; i < poly.size() && !on_boundary; ++i) {
            Seg pe = poly.edge(i);
            if (point_on_segment(e.a, pe.a, pe.b) && point_on_segment(e.b, pe.a, pe.b))
                on_boundary = true;
        }
        if (!on_boundary) interior.push_back(e);
    }
    std::vector<Window> windows;
    std::vector<bool> used(interior.size(), false);
    for (size_t i = 0; i < interior.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        Pt lo = interior[i].a, hi = interior[i].b;
        bool grew = true;
        while (grew) {
            grew = false;
            for (size_t j = 0; j < interior.size(); ++j) {
                if (used[j]) continue;
                const Seg& c = interior[j];
                if (orient(lo, hi, c.a) != 0 || orient(lo, hi, c.b) != 0) continue;
                if (c.a == hi) { hi = c.b; used[j] = true; grew = true; }
                else if (c.b == hi) { hi = c.a; used[j] = true; grew = true; }
                else if (c.a == lo) { lo = c.b; used[j] = true; grew = true; }
                else if (c.b == lo) { lo = c.a; used[j] = true; grew = true; }
            }
        }
        Window w;
        w.a = lo;
        w.b = hi;
        for (int v = 0; v < poly.size(); ++v) {
            if (point_on_segment(poly.vertex(v), lo, hi) && poly.is_reflex(v)) {
                w.a = poly.vertex(v);
                w.a_index = v;
                w.b = (dist2(w.a, lo) > dist2(w.a, hi)) ? lo : hi;
                break;
            }
        }
        if (auto bp = poly.locate_on_boundary(w.b)) {
            w.b_edge = bp->edge;
            w.b_t = bp->t;
        }
        windows.push_back(std::move(w));
    }
    return windows;
}

VisibilityRegion weak_visibility_multi(const Polygon& poly, const std::vector<Seg>& sources) {
    std::vector<Seg> segs;
    for (int i = 0; i < poly.size(); ++i) segs.push_back(poly.edge(i));
    auto chords = candidate_window_chords(poly, sources);
    segs.insert(segs.end(), chords.begin(), chords.end());

    RegionSet region = faces_where(segs, [&](const Pt& q) {
        if (!poly.contains(q)) return false;
        for (const Seg& s : sources)
            if (sees_any_of_segment(poly, q, s)) return true;
        return false;
    });

    VisibilityRegion out;
    out.trace = region.boundary_trace(poly);
    out.windows = extract_segment_windows(poly, region);
    out.region = std::move(region);
    return out;
}

}  // namespace

VisibilityRegion weak_visibility_from_segment(const Polygon& poly, const Seg& seg) {
    if (seg.degenerate()) throw DegenerateInput("weak visibility of a zero-length segment");
    return weak_visibility_multi(poly, {seg});
}

VisibilityRegion visibility_from_trace(const Polygon& poly, const BoundaryTrace& trace) {
    if (trace.empty()) return VisibilityRegion{};
    std::vector<Seg> sources;
    for (const TraceInterval& iv : trace.intervals()) {
        Seg e = poly.edge(iv.edge);
        sources.emplace_back(e.at(iv.lo), e.at(iv.hi));
    }
    return weak_visibility_multi(poly, sources);
}

}  // namespace polylight
