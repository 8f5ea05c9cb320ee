#include "lattes/ecurve.hpp"

namespace lattes {

Curve::Curve(RingId ring_, KNum A_, KNum B_)
    : ring(ring_), A(std::move(A_)), B(std::move(B_)) {
    if (A.ring != ring || B.ring != ring) {
        throw RingMismatchError("curve coefficients from another field");
    }
    if (ring == RingId::gaussian) {
        if (!B.is_zero() || A.is_zero()) {
            throw CurveError(
                "multiplication by i needs y^2 = x^3 + Ax with A != 0");
        }
    } else {
        if (!A.is_zero() || B.is_zero()) {
            throw CurveError(
                "multiplication by rho needs y^2 = x^3 + B with B != 0");
        }
    }
    KNum disc = KNum{ring, 4, 0} * A * A * A + KNum{ring, 27, 0} * B * B;
    if (disc.is_zero()) throw CurveError("singular curve");
}

Curve Curve::gaussian_default() {
    return Curve(RingId::gaussian, KNum::one(RingId::gaussian),
                 KNum::zero(RingId::gaussian));
}

Curve Curve::eisenstein_default() {
    return Curve(RingId::eisenstein, KNum::zero(RingId::eisenstein),
                 KNum::one(RingId::eisenstein));
}

bool operator==(const Curve& c1, const Curve& c2) {
    return c1.ring == c2.ring && c1.A == c2.A && c1.B == c2.B;
}

bool operator!=(const Curve& c1, const Curve& c2) { return !(c1 == c2); }

Poly curve_rhs(const Curve& c) {
    return Poly::from_coeffs(
        c.ring, {c.B, c.A, KNum::zero(c.ring), KNum::one(c.ring)});
}

bool operator==(const Point& p, const Point& q) {
    if (p.infinite || q.infinite) return p.infinite == q.infinite;
    return p.x == q.x && p.y == q.y;
}

bool operator!=(const Point& p, const Point& q) { return !(p == q); }

bool pt_on_curve(const Curve& c, const Point& p) {
    if (p.infinite) return true;
    if (p.ring() != c.ring) return false;
    return p.y * p.y == poly_eval(curve_rhs(c), p.x);
}

void pt_require_on_curve(const Curve& c, const Point& p) {
    if (!pt_on_curve(c, p)) {
        throw NotOnCurveError("point does not satisfy the curve equation");
    }
}

Point pt_neg(const Curve& c, const Point& p) {
    pt_require_on_curve(c, p);
    if (p.infinite) return p;
    return Point::affine(p.x, -p.y);
}

Point pt_add(const Curve& c, const Point& p, const Point& q) {
    pt_require_on_curve(c, p);
    pt_require_on_curve(c, q);
    if (p.infinite) return q;
    if (q.infinite) return p;
    KNum lambda = KNum::zero(c.ring);
    if (p.x == q.x) {
        if (p.y == -q.y) return Point::infinity(c.ring);
        // On-curve points sharing x have y = +-y, so here p == q: tangent.
        KNum three{c.ring, 3, 0};
        KNum two{c.ring, 2, 0};
        lambda = (three * p.x * p.x + c.A) / (two * p.y);
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
    }
    KNum x3 = lambda * lambda - p.x - q.x;
    KNum y3 = lambda * (p.x - x3) - p.y;
    return Point::affine(std::move(x3), std::move(y3));
}

Point pt_scalar(const Curve& c, const mpz_class& m, const Point& p) {
    pt_require_on_curve(c, p);
    if (m < 0) return pt_scalar(c, mpz_class(-m), pt_neg(c, p));
    Point acc = Point::infinity(c.ring);
    Point addend = p;
    mp_bitcnt_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    if (m == 0) return acc;
    for (mp_bitcnt_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(m.get_mpz_t(), i)) acc = pt_add(c, acc, addend);
        if (i + 1 < bits) addend = pt_add(c, addend, addend);
    }
    return acc;
}

bool operator==(const PreperiodicPair& a, const PreperiodicPair& b) {
    return a.n == b.n && a.k == b.k;
}

}  // namespace lattes
