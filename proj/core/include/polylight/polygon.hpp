#pragma once

#include "polylight/errors.hpp"
#include "polylight/geometry.hpp"
#include "polylight/point.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace polylight {

enum class Where { inside, boundary, outside };

// A point of the boundary, addressed as (edge index, parameter in [0,1))
// along that edge. Vertex i is (edge=i, t=0); (e, 1) normalizes to (e+1, 0).
struct BoundaryPoint {
    int edge = 0;
    Rat t;
    bool operator==(const BoundaryPoint& o) const { return edge == o.edge && t == o.t; }
};

struct ValidationIssue {
    enum class Kind { too_few_vertices, duplicate_vertex, non_simple, collinear_triple, clockwise };
    Kind kind;
    std::array<int, 3> indices{-1, -1, -1};  // offending vertex/edge indices
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool reversed = false;  // input was CW and auto-reversed
    bool ok() const { return issues.empty(); }
    std::string summary() const;
};

// Simple polygon, vertices in counterclockwise order, general position
// (no three collinear vertices). Edge i runs from vertex i to vertex i+1 mod n.
class Polygon {
  public:
    Polygon() = default;
    explicit Polygon(std::vector<Pt> vertices) : v_(std::move(vertices)) {}

    // Validates and constructs. With allow_reverse, a CW ring is reversed
    // (flagged in the report) instead of rejected. Throws ValidationError.
    static Polygon checked(std::vector<Pt> vertices, ValidationReport* report = nullptr,
                           bool allow_reverse = true);

    // Full validation of a raw vertex ring; never throws.
    static ValidationReport validate(const std::vector<Pt>& vertices);

    int size() const { return static_cast<int>(v_.size()); }
    const Pt& vertex(int i) const { return v_[index(i)]; }
    const std::vector<Pt>& vertices() const { return v_; }
    int index(int i) const {
        int n = size();
        int m = i % n;
        return m < 0 ? m + n : m;
    }

    Seg edge(int i) const { return Seg(vertex(i), vertex(i + 1)); }
    Pt boundary_point(const BoundaryPoint& bp) const { return edge(bp.edge).at(bp.t); }

    Rat area() const;  // positive for CCW

    bool is_reflex(int i) const {
        return orient(vertex(i - 1), vertex(i), vertex(i + 1)) < 0;
    }
    std::vector<int> reflex_vertices() const;

    Where locate(const Pt& p) const;
    bool contains(const Pt& p) const { return locate(p) != Where::outside; }
    bool strictly_contains(const Pt& p) const { return locate(p) == Where::inside; }

    // Identifies p on the boundary; empty if p is not on any edge.
    std::optional<BoundaryPoint> locate_on_boundary(const Pt& p) const;

    // Closed segment pq lies in the (closed) polygon.
    bool segment_inside(const Pt& p, const Pt& q) const;
    // Relative interior of pq lies in the open interior: no boundary contact
    // strictly between the endpoints. This is the sight predicate for chords
    // and diffuse-reflection path segments.
    bool segment_strictly_inside(const Pt& p, const Pt& q) const;

    // First boundary point strictly beyond origin along direction dir, with
    // the edge containing it. Linear scan. Throws DegenerateInput on a zero
    // direction and Error when no forward boundary point exists.
    struct RayHit {
        Pt point;
        int edge;
        Rat t_ray;  // parameter along the ray, > 0
    };
    RayHit ray_shoot(const Pt& origin, const Pt& dir) const;

    // Maximal subsegments of the line through l1,l2 lying in the closed polygon.
    std::vector<Seg> clip_line(const Pt& l1, const Pt& l2) const;

    // All distinct lines spanned by two vertices, as index pairs.
    std::vector<std::pair<int, int>> vertex_pairs() const;

    // p lies on no line spanned by two distinct vertices.
    bool off_critical_lines(const Pt& p) const;

    bool operator==(const Polygon& o) const { return v_ == o.v_; }

  private:
    std::vector<Pt> v_;
};

}  // namespace polylight
