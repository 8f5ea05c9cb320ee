#pragma once

#include <vector>

#include "lattes/ecurve.hpp"

namespace fx {

using namespace lattes;

inline QuadInt qi(RingId ring, long a, long b) { return QuadInt{ring, a, b}; }

inline KNum kn(RingId ring, long u, long v) { return KNum{ring, u, v}; }

inline mpq_class frac(long n, long d) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

// Rational and quadratic torsion points of the two default curves; each set
// is validated against the curve equation on first use.
inline const std::vector<Point>& gauss_points() {
    static const std::vector<Point> pts = [] {
        Curve c = Curve::gaussian_default();
        RingId g = c.ring;
        std::vector<Point> v{
            Point::infinity(g),
            Point::affine(kn(g, 0, 0), kn(g, 0, 0)),
            Point::affine(kn(g, 0, 1), kn(g, 0, 0)),
            Point::affine(kn(g, 0, -1), kn(g, 0, 0)),
        };
        for (const Point& p : v) pt_require_on_curve(c, p);
        return v;
    }();
    return pts;
}

inline const std::vector<Point>& eis_points() {
    static const std::vector<Point> pts = [] {
        Curve c = Curve::eisenstein_default();
        RingId e = c.ring;
        std::vector<Point> v{
            Point::infinity(e),
            Point::affine(kn(e, 0, 0), kn(e, 1, 0)),
            Point::affine(kn(e, 0, 0), kn(e, -1, 0)),
            Point::affine(kn(e, -1, 0), kn(e, 0, 0)),
            Point::affine(kn(e, 2, 0), kn(e, 3, 0)),
            Point::affine(kn(e, 2, 0), kn(e, -3, 0)),
        };
        for (const Point& p : v) pt_require_on_curve(c, p);
        return v;
    }();
    return pts;
}

inline const std::vector<Point>& curve_points(RingId ring) {
    return ring == RingId::gaussian ? gauss_points() : eis_points();
}

}  // namespace fx
