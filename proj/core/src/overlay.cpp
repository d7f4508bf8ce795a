#include "polylight/overlay.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polylight {

namespace {

Rat param_on(const Seg& s, const Pt& p) {
    Pt d = s.b - s.a;
    return (d.x != 0) ? Rat((p.x - s.a.x) / d.x) : Rat((p.y - s.a.y) / d.y);
}

// Splits segments at all mutual intersections and overlaps, dropping
// duplicates, so the result is a set of interior-disjoint sub-segments.
std::vector<Seg> split_all(const std::vector<Seg>& input) {
    std::vector<Seg> segs;
    for (const Seg& s : input)
        if (!s.degenerate()) segs.push_back(s);
    int m = static_cast<int>(segs.size());
    std::vector<std::vector<Rat>> cuts(m);
    for (int i = 0; i < m; ++i) {
        cuts[i].push_back(Rat(0));
        cuts[i].push_back(Rat(1));
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            auto hit = segment_intersection(segs[i].a, segs[i].b, segs[j].a, segs[j].b);
            switch (hit.kind) {
                case SegCross::none: break;
                case SegCross::proper:
                case SegCross::touch:
                    cuts[i].push_back(param_on(segs[i], hit.p));
                    cuts[j].push_back(param_on(segs[j], hit.p));
                    break;
                case SegCross::overlap:
                    cuts[i].push_back(param_on(segs[i], hit.q1));
                    cuts[i].push_back(param_on(segs[i], hit.q2));
                    cuts[j].push_back(param_on(segs[j], hit.q1));
                    cuts[j].push_back(param_on(segs[j], hit.q2));
                    break;
            }
        }
    }
    std::set<std::pair<Pt, Pt>> seen;
    std::vector<Seg> out;
    for (int i = 0; i < m; ++i) {
        auto& c = cuts[i];
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        for (size_t k = 0; k + 1 < c.size(); ++k) {
            if (c[k] < 0 || c[k + 1] > 1) continue;
            Pt a = segs[i].at(c[k]);
            Pt b = segs[i].at(c[k + 1]);
            if (a == b) continue;
            auto key = (a < b) ? std::make_pair(a, b) : std::make_pair(b, a);
            if (seen.insert(key).second) out.push_back(Seg(key.first, key.second));
        }
    }
    return out;
}

// Counterclockwise angular order of directions, starting just above the +x axis.
bool dir_less(const Pt& d1, const Pt& d2) {
    auto half = [](const Pt& d) { return (sgn(d.y) < 0 || (sgn(d.y) == 0 && sgn(d.x) < 0)) ? 1 : 0; };
    int h1 = half(d1), h2 = half(d2);
    if (h1 != h2) return h1 < h2;
    return sgn(cross(d1, d2)) > 0;
}

struct Arrangement {
    std::vector<Pt> verts;
    std::vector<std::pair<int, int>> uedges;          // undirected, by vertex id
    std::vector<std::vector<int>> out_half;           // per vertex: sorted outgoing half-edge ids
    // half-edge h: uedge h/2; direction h%2 (0: u->v, 1: v->u)
    int half_count = 0;

    int source(int h) const { return h % 2 == 0 ? uedges[h / 2].first : uedges[h / 2].second; }
    int target(int h) const { return h % 2 == 0 ? uedges[h / 2].second : uedges[h / 2].first; }
    int twin(int h) const { return h ^ 1; }

    explicit Arrangement(const std::vector<Seg>& subsegs) {
        std::map<Pt, int> vid;
        auto id_of = [&](const Pt& p) {
            auto it = vid.find(p);
            if (it != vid.end()) return it->second;
            int id = static_cast<int>(verts.size());
            vid.emplace(p, id);
            verts.push_back(p);
            return id;
        };
        for (const Seg& s : subsegs) {
            int u = id_of(s.a), v = id_of(s.b);
            uedges.emplace_back(u, v);
        }
        half_count = 2 * static_cast<int>(uedges.size());
        out_half.assign(verts.size(), {});
        for (int h = 0; h < half_count; ++h) out_half[source(h)].push_back(h);
        for (size_t v = 0; v < verts.size(); ++v) {
            auto& lst = out_half[v];
            std::sort(lst.begin(), lst.end(), [&](int h1, int h2) {
                Pt d1 = verts[target(h1)] - verts[source(h1)];
                Pt d2 = verts[target(h2)] - verts[source(h2)];
                return dir_less(d1, d2);
            });
        }
    }

    // Next half-edge of the face lying to the LEFT of h: at the target vertex,
    // take the outgoing half-edge immediately clockwise of the reversed edge.
    int next(int h) const {
        int v = target(h);
        int back = twin(h);
        const auto& lst = out_half[v];
        int pos = -1;
        for (int i = 0; i < static_cast<int>(lst.size()); ++i)
            if (lst[i] == back) { pos = i; break; }
        int deg = static_cast<int>(lst.size());
        return lst[(pos - 1 + deg) % deg];
    }
};

}  // namespace

RegionSet RegionSet::from_edges(std::vector<Seg> edges) {
    RegionSet r;
    Rat a = 0;
    for (const Seg& e : edges) a += cross(e.a, e.b);
    r.edges_ = std::move(edges);
    r.area_ = a / 2;
    return r;
}

RegionSet RegionSet::from_ring(std::vector<Pt> ring) {
    Rat a = 0;
    int n = static_cast<int>(ring.size());
    for (int i = 0; i < n; ++i) a += cross(ring[i], ring[(i + 1) % n]);
    if (sgn(a) < 0) std::reverse(ring.begin(), ring.end());
    std::vector<Seg> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.emplace_back(ring[i], ring[(i + 1) % n]);
    return from_edges(std::move(edges));
}

Where RegionSet::locate(const Pt& p) const {
    for (const Seg& e : edges_)
        if (point_on_segment(p, e.a, e.b)) return Where::boundary;
    static const int dirs[][2] = {{1, 0}, {0, 1}, {1, 1},  {1, -1}, {2, 1},
                                  {1, 2}, {2, -1}, {1, -2}, {3, 1},  {1, 3},
                                  {3, 2}, {2, 3},  {3, -1}, {1, -3}, {5, 7}};
    for (const auto& dv : dirs) {
        Pt dir(rat(dv[0]), rat(dv[1]));
        Pt far = p + dir;
        bool clean = true;
        for (const Seg& e : edges_) {
            for (const Pt* z : {&e.a, &e.b}) {
                if (*z == p) continue;
                if (orient(p, far, *z) == 0 && sgn(dot(*z - p, dir)) > 0) {
                    clean = false;
                    break;
                }
            }
            if (!clean) break;
        }
        if (!clean) continue;
        int parity = 0;
        for (const Seg& e : edges_) {
            int o1 = orient(p, far, e.a);
            int o2 = orient(p, far, e.b);
            if (o1 == 0 || o2 == 0 || o1 == o2) continue;
            // Ray parameter of the crossing: t = cross(a-p, b-a) / cross(dir, b-a).
            Pt ab = e.b - e.a;
            Rat num = cross(e.a - p, ab);
            Rat den = cross(dir, ab);
            if (sgn(num) * sgn(den) > 0) parity ^= 1;
        }
        return parity ? Where::inside : Where::outside;
    }
    throw Error("RegionSet::locate: no clean ray direction found");
}

Pt RegionSet::interior_point() const {
    if (edges_.empty() || sgn(area_) == 0) throw Error("interior_point of empty region");
    // Walk candidate edges; the interior lies to the left of each directed edge.
    for (const Seg& e : edges_) {
        Pt m = midpoint(e.a, e.b);
        Pt d = e.b - e.a;
        Pt n(-d.y, d.x);  // left normal
        // First contact of the ray m + t*n with any other boundary edge.
        Rat tcap(1);
        bool capped = false;
        Pt far = m + n;
        for (const Seg& o : edges_) {
            if (o.a == e.a && o.b == e.b) continue;
            // Solve m + t*n on segment o.
            Pt od = o.b - o.a;
            Rat den = cross(n, od);
            if (sgn(den) != 0) {
                Rat t = cross(o.a - m, od) / den;
                Rat s = cross(o.a - m, n) / den;
                if (sgn(t) > 0 && s >= 0 && s <= 1) {
                    if (!capped || t < tcap) { tcap = t; capped = true; }
                }
            } else {
                // Parallel: collinear contacts ahead.
                if (orient(m, far, o.a) == 0) {
                    for (const Pt* z : {&o.a, &o.b}) {
                        Rat t = (n.x != 0) ? Rat((z->x - m.x) / n.x) : Rat((z->y - m.y) / n.y);
                        if (sgn(t) > 0 && (!capped || t < tcap)) { tcap = t; capped = true; }
                    }
                }
            }
        }
        Pt cand = m + n * (tcap / 2);
        if (locate(cand) == Where::inside) return cand;
    }
    throw Error("interior_point: all candidates failed");
}

BoundaryTrace RegionSet::boundary_trace(const Polygon& p) const {
    std::vector<TraceInterval> parts;
    int n = p.size();
    for (const Seg& e : edges_) {
        for (int i = 0; i < n; ++i) {
            Seg pe = p.edge(i);
            if (!point_on_segment(e.a, pe.a, pe.b)) continue;
            if (!point_on_segment(e.b, pe.a, pe.b)) continue;
            TraceInterval t;
            t.edge = i;
            t.lo = param_on(pe, e.a);
            t.hi = param_on(pe, e.b);
            parts.push_back(t);
            break;
        }
    }
    return BoundaryTrace::of(std::move(parts));
}

std::vector<RegionSet> RegionSet::components() const {
    std::map<Pt, int> comp_of;
    std::vector<int> parent(edges_.size() * 2);
    // Union-find over edge endpoints.
    std::vector<Pt> pts;
    std::map<Pt, int> pid;
    auto id_of = [&](const Pt& q) {
        auto it = pid.find(q);
        if (it != pid.end()) return it->second;
        int id = static_cast<int>(pts.size());
        pid.emplace(q, id);
        pts.push_back(q);
        return id;
    };
    std::vector<int> uf;
    std::function<int(int)> find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (const Seg& e : edges_) {
        int u = id_of(e.a), v = id_of(e.b);
        while (static_cast<int>(uf.size()) < static_cast<int>(pts.size())) uf.push_back(uf.size());
        uf[find(u)] = find(v);
    }
    std::map<int, std::vector<Seg>> groups;
    for (const Seg& e : edges_) groups[find(pid[e.a])].push_back(e);
    std::vector<RegionSet> out;
    for (auto& [root, es] : groups) out.push_back(from_edges(std::move(es)));
    return out;
}

RegionSet faces_where(const std::vector<Seg>& segments,
                      const std::function<bool(const Pt&)>& keep) {
    std::vector<Seg> subs = split_all(segments);
    if (subs.empty()) return RegionSet::empty();
    Arrangement arr(subs);

    std::vector<int> cycle_of(arr.half_count, -1);
    std::vector<std::vector<int>> cycles;
    for (int h0 = 0; h0 < arr.half_count; ++h0) {
        if (cycle_of[h0] != -1) continue;
        int cid = static_cast<int>(cycles.size());
        cycles.emplace_back();
        int h = h0;
        do {
            cycle_of[h] = cid;
            cycles[cid].push_back(h);
            h = arr.next(h);
        } while (h != h0);
    }

    // Classify each cycle by an exact sample point strictly inside the face on
    // its left: midpoint of one of its half-edges, offset along the left
    // normal by half the distance to the first boundary contact.
    std::vector<char> kept(cycles.size(), 0);
    for (size_t c = 0; c < cycles.size(); ++c) {
        int h = cycles[c][0];
        Pt a = arr.verts[arr.source(h)];
        Pt b = arr.verts[arr.target(h)];
        Pt m = midpoint(a, b);
        Pt d = b - a;
        Pt nrm(-d.y, d.x);
        Rat tcap(1);
        Pt far = m + nrm;
        for (const Seg& o : subs) {
            if ((o.a == a && o.b == b) || (o.a == b && o.b == a)) continue;
            Pt od = o.b - o.a;
            Rat den = cross(nrm, od);
            if (sgn(den) != 0) {
                Rat t = cross(o.a - m, od) / den;
                Rat s = cross(o.a - m, nrm) / den;
                if (sgn(t) > 0 && s >= 0 && s <= 1 && t < tcap) tcap = t;
            } else if (orient(m, far, o.a) == 0) {
                for (const Pt* z : {&o.a, &o.b}) {
                    Rat t = (nrm.x != 0) ? Rat((z->x - m.x) / nrm.x) : Rat((z->y - m.y) / nrm.y);
                    if (sgn(t) > 0 && t < tcap) tcap = t;
                }
            }
        }
        Pt sample = m + nrm * (tcap / 2);
        kept[c] = keep(sample) ? 1 : 0;
    }

    // Boundary of the union of kept faces: directed edges of kept cycles whose
    // twin's cycle is not kept.
    std::vector<Seg> out;
    for (size_t c = 0; c < cycles.size(); ++c) {
        if (!kept[c]) continue;
        for (int h : cycles[c]) {
            if (kept[cycle_of[arr.twin(h)]]) continue;
            out.emplace_back(arr.verts[arr.source(h)], arr.verts[arr.target(h)]);
        }
    }
    return RegionSet::from_edges(std::move(out));
}

RegionSet region_union(const RegionSet& a, const RegionSet& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    std::vector<Seg> segs = a.edges();
    segs.insert(segs.end(), b.edges().begin(), b.edges().end());
    return faces_where(segs, [&](const Pt& p) { return a.contains(p) || b.contains(p); });
}

RegionSet region_intersection(const RegionSet& a, const RegionSet& b) {
    if (a.is_empty() || b.is_empty()) return RegionSet::empty();
    std::vector<Seg> segs = a.edges();
    segs.insert(segs.end(), b.edges().begin(), b.edges().end());
    return faces_where(segs, [&](const Pt& p) { return a.contains(p) && b.contains(p); });
}

RegionSet region_difference(const RegionSet& a, const RegionSet& b) {
    if (a.is_empty()) return RegionSet::empty();
    if (b.is_empty()) return a;
    std::vector<Seg> segs = a.edges();
    segs.insert(segs.end(), b.edges().begin(), b.edges().end());
    return faces_where(segs, [&](const Pt& p) { return a.contains(p) && !b.contains(p); });
}

bool region_covers(const RegionSet& outer, const RegionSet& inner) {
    if (inner.is_empty()) return true;
    return sgn(region_difference(inner, outer).area()) == 0;
}

bool region_equal_area(const RegionSet& a, const RegionSet& b) {
    return region_covers(a, b) && region_covers(b, a);
}

}  // namespace polylight
