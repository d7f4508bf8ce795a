#include "polylight/polygon.hpp"

#include <algorithm>
#include <set>

namespace polylight {

std::string ValidationReport::summary() const {
    if (issues.empty()) return "valid";
    std::string s;
    for (const auto& issue : issues) {
        if (!s.empty()) s += "; ";
        s += issue.message;
    }
    return s;
}

static Rat ring_signed_area(const std::vector<Pt>& v) {
    Rat a = 0;
    int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i) a += cross(v[i], v[(i + 1) % n]);
    return a / 2;
}

ValidationReport Polygon::validate(const std::vector<Pt>& vertices) {
    ValidationReport rep;
    int n = static_cast<int>(vertices.size());
    if (n < 3) {
        rep.issues.push_back({ValidationIssue::Kind::too_few_vertices, {n, -1, -1},
                              "polygon needs at least 3 vertices, got " + std::to_string(n)});
        return rep;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (vertices[i] == vertices[j]) {
                rep.issues.push_back({ValidationIssue::Kind::duplicate_vertex, {i, j, -1},
                                      "duplicate vertex at indices " + std::to_string(i) + "," +
                                          std::to_string(j)});
                return rep;
            }

    // Simplicity: adjacent edges may share only their common vertex,
    // non-adjacent edges must be disjoint.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Pt &a = vertices[i], &b = vertices[(i + 1) % n];
            const Pt &c = vertices[j], &d = vertices[(j + 1) % n];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            auto hit = segment_intersection(a, b, c, d);
            if (hit.kind == SegCross::none) continue;
            if (adjacent && hit.kind == SegCross::touch) {
                const Pt& shared = (j == i + 1) ? b : a;
                if (hit.p == shared) continue;
            }
            rep.issues.push_back({ValidationIssue::Kind::non_simple, {i, j, -1},
                                  "edges " + std::to_string(i) + " and " + std::to_string(j) +
                                      " intersect"});
        }
    }
    if (!rep.issues.empty()) return rep;

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (collinear(vertices[i], vertices[j], vertices[k]))
                    rep.issues.push_back({ValidationIssue::Kind::collinear_triple, {i, j, k},
                                          "collinear vertices " + std::to_string(i) + "," +
                                              std::to_string(j) + "," + std::to_string(k)});
    if (!rep.issues.empty()) return rep;

    if (sgn(ring_signed_area(vertices)) < 0)
        rep.issues.push_back({ValidationIssue::Kind::clockwise, {-1, -1, -1},
                              "vertices are in clockwise order"});
    return rep;
}

Polygon Polygon::checked(std::vector<Pt> vertices, ValidationReport* report, bool allow_reverse) {
    ValidationReport rep = validate(vertices);
    bool reversed = false;
    if (!rep.ok() && allow_reverse && rep.issues.size() == 1 &&
        rep.issues[0].kind == ValidationIssue::Kind::clockwise) {
        std::reverse(vertices.begin(), vertices.end());
        reversed = true;
        rep = validate(vertices);
    }
    rep.reversed = reversed;
    if (report) *report = rep;
    if (!rep.ok()) throw ValidationError(rep.summary());
    return Polygon(std::move(vertices));
}

Rat Polygon::area() const { return ring_signed_area(v_); }

std::vector<int> Polygon::reflex_vertices() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (is_reflex(i)) out.push_back(i);
    return out;
}

Where Polygon::locate(const Pt& p) const {
    int n = size();
    for (int i = 0; i < n; ++i)
        if (point_on_segment(p, vertex(i), vertex(i + 1))) return Where::boundary;
    // Crossing number with the half-open rule; exact x-intersection compare.
    bool in = false;
    for (int i = 0; i < n; ++i) {
        const Pt& a = vertex(i);
        const Pt& b = vertex(i + 1);
        if ((a.y > p.y) == (b.y > p.y)) continue;
        // x coordinate of the edge at height p.y, compared to p.x.
        // sign of (a.x + (p.y-a.y)*(b.x-a.x)/(b.y-a.y) - p.x), scaled by (b.y-a.y).
        Rat lhs = (a.x - p.x) * (b.y - a.y) + (p.y - a.y) * (b.x - a.x);
        if (sgn(b.y - a.y) < 0) lhs = -lhs;
        if (sgn(lhs) > 0) in = !in;
    }
    return in ? Where::inside : Where::outside;
}

std::optional<BoundaryPoint> Polygon::locate_on_boundary(const Pt& p) const {
    int n = size();
    for (int i = 0; i < n; ++i) {
        const Pt& a = vertex(i);
        const Pt& b = vertex(i + 1);
        if (!point_on_segment(p, a, b) || p == b) continue;
        Pt d = b - a;
        Rat t = (d.x != 0) ? Rat((p.x - a.x) / d.x) : Rat((p.y - a.y) / d.y);
        return BoundaryPoint{i, t};
    }
    return std::nullopt;
}

bool Polygon::segment_inside(const Pt& p, const Pt& q) const {
    if (locate(p) == Where::outside || locate(q) == Where::outside) return false;
    if (p == q) return true;
    // Cut pq at every boundary contact, then check each piece's midpoint.
    std::vector<Rat> cuts{Rat(0), Rat(1)};
    int n = size();
    Pt d = q - p;
    auto param_of = [&](const Pt& x) {
        return (d.x != 0) ? Rat((x.x - p.x) / d.x) : Rat((x.y - p.y) / d.y);
    };
    for (int i = 0; i < n; ++i) {
        auto hit = segment_intersection(p, q, vertex(i), vertex(i + 1));
        switch (hit.kind) {
            case SegCross::none: break;
            case SegCross::proper: return false;
            case SegCross::touch: cuts.push_back(param_of(hit.p)); break;
            case SegCross::overlap:
                cuts.push_back(param_of(hit.q1));
                cuts.push_back(param_of(hit.q2));
                break;
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Pt m = lerp(p, q, (cuts[i] + cuts[i + 1]) / 2);
        if (locate(m) == Where::outside) return false;
    }
    return true;
}

bool Polygon::segment_strictly_inside(const Pt& p, const Pt& q) const {
    if (p == q) return strictly_contains(p);
    int n = size();
    for (int i = 0; i < n; ++i) {
        auto hit = segment_intersection(p, q, vertex(i), vertex(i + 1));
        switch (hit.kind) {
            case SegCross::none: break;
            case SegCross::proper: return false;
            case SegCross::touch:
                if (hit.p != p && hit.p != q) return false;
                break;
            case SegCross::overlap: return false;
        }
    }
    return strictly_contains(midpoint(p, q));
}

Polygon::RayHit Polygon::ray_shoot(const Pt& origin, const Pt& dir) const {
    if (dir.x == 0 && dir.y == 0) throw DegenerateInput("ray_shoot: zero direction");
    std::optional<RayHit> best;
    Pt far = origin + dir;
    int n = size();
    for (int i = 0; i < n; ++i) {
        const Pt& a = vertex(i);
        const Pt& b = vertex(i + 1);
        Pt e = b - a;
        Rat denom = cross(dir, e);
        Rat t_ray, t_edge;
        if (sgn(denom) != 0) {
            t_ray = cross(a - origin, e) / denom;
            t_edge = cross(a - origin, dir) / denom;
            if (sgn(t_ray) <= 0 || t_edge < 0 || t_edge > 1) continue;
        } else {
            // Parallel. Collinear edge: nearest endpoint strictly ahead.
            if (orient(origin, far, a) != 0) continue;
            auto ray_param = [&](const Pt& x) {
                return (dir.x != 0) ? Rat((x.x - origin.x) / dir.x)
                                    : Rat((x.y - origin.y) / dir.y);
            };
            Rat ta = ray_param(a), tb = ray_param(b);
            Rat tmin;
            if (sgn(ta) > 0 && sgn(tb) > 0) tmin = ta < tb ? ta : tb;
            else if (sgn(ta) > 0) tmin = ta;
            else if (sgn(tb) > 0) tmin = tb;
            else continue;
            t_ray = tmin;
            t_edge = 0;  // unused below except through the hit point
        }
        if (!best || t_ray < best->t_ray) {
            Pt hit = origin + dir * t_ray;
            best = RayHit{hit, i, t_ray};
        }
    }
    if (!best) throw Error("ray_shoot: ray never reaches the boundary");
    return *best;
}

std::vector<Seg> Polygon::clip_line(const Pt& l1, const Pt& l2) const {
    if (l1 == l2) throw DegenerateInput("clip_line: degenerate line");
    Pt dir = l2 - l1;
    auto line_param = [&](const Pt& p) {
        return (dir.x != 0) ? Rat((p.x - l1.x) / dir.x) : Rat((p.y - l1.y) / dir.y);
    };
    std::vector<Rat> cuts;
    int n = size();
    for (int i = 0; i < n; ++i) {
        const Pt &a = vertex(i), &b = vertex(i + 1);
        int oa = orient(l1, l2, a);
        int ob = orient(l1, l2, b);
        if (oa == 0) cuts.push_back(line_param(a));
        if (oa == 0 && ob == 0) continue;  // collinear edge: endpoints suffice
        if ((oa > 0 && ob < 0) || (oa < 0 && ob > 0)) {
            Pt x = *line_intersection(l1, l2, a, b);
            cuts.push_back(line_param(x));
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Seg> out;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Pt a = l1 + dir * cuts[i];
        Pt b = l1 + dir * cuts[i + 1];
        if (locate(midpoint(a, b)) != Where::outside) out.emplace_back(a, b);
    }
    // Merge touching pieces (interior midpoints across shared cut points).
    std::vector<Seg> merged;
    for (const Seg& s : out) {
        if (!merged.empty() && merged.back().b == s.a &&
            locate(s.a) == Where::inside) {
            merged.back().b = s.b;
        } else {
            merged.push_back(s);
        }
    }
    return merged;
}

std::vector<std::pair<int, int>> Polygon::vertex_pairs() const {
    std::vector<std::pair<int, int>> out;
    int n = size();
    out.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

bool Polygon::off_critical_lines(const Pt& p) const {
    int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (collinear(vertex(i), vertex(j), p)) return false;
    return true;
}

}  // namespace polylight
