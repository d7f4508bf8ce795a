#pragma once

#include "polylight/rational.hpp"

#include <compare>
#include <string>
#include <utility>

namespace polylight {

struct Pt {
    Rat x, y;

    Pt() = default;
    Pt(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}
    Pt(long x_, long y_) : x(rat(x_)), y(rat(y_)) {}

    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Pt& o) const { return !(*this == o); }
    // Lexicographic; used for ordered containers, not geometry.
    bool operator<(const Pt& o) const {
        int cx = cmp(x, o.x);
        if (cx != 0) return cx < 0;
        return cmp(y, o.y) < 0;
    }

    Pt operator+(const Pt& o) const { return Pt(x + o.x, y + o.y); }
    Pt operator-(const Pt& o) const { return Pt(x - o.x, y - o.y); }
    Pt operator*(const Rat& k) const { return Pt(x * k, y * k); }
};

inline Rat cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }

// Sign of the cross product (q-p) x (r-p): +1 CCW, 0 collinear, -1 CW.
inline int orient(const Pt& p, const Pt& q, const Pt& r) {
    Rat v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(v);
}

inline bool collinear(const Pt& p, const Pt& q, const Pt& r) {
    return orient(p, q, r) == 0;
}

inline Rat dist2(const Pt& a, const Pt& b) {
    Pt d = b - a;
    return d.x * d.x + d.y * d.y;
}

inline Pt midpoint(const Pt& a, const Pt& b) {
    return Pt((a.x + b.x) / 2, (a.y + b.y) / 2);
}

// Point at parameter t along a->b.
inline Pt lerp(const Pt& a, const Pt& b, const Rat& t) {
    return Pt(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t);
}

inline std::string to_string(const Pt& p) {
    return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

}  // namespace polylight
