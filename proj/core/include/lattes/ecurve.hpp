#pragma once

#include <optional>

#include "lattes/kfield.hpp"
#include "lattes/ratfunc.hpp"

namespace lattes {

// Short Weierstrass curve y^2 = x^3 + Ax + B over Q(sqrt(-d)) carrying the
// multiplier ring named by `ring`: Z[i] needs B = 0, Z[rho] needs A = 0.
struct Curve {
    RingId ring;
    KNum A;
    KNum B;

    Curve(RingId ring_, KNum A_, KNum B_);

    // y^2 = x^3 + x and y^2 = x^3 + 1, the standard members of each family.
    static Curve gaussian_default();
    static Curve eisenstein_default();
};

bool operator==(const Curve& c1, const Curve& c2);
bool operator!=(const Curve& c1, const Curve& c2);

// x^3 + Ax + B as a polynomial.
Poly curve_rhs(const Curve& c);

struct Point {
    bool infinite;
    KNum x;
    KNum y;

    static Point infinity(RingId ring) {
        return {true, KNum::zero(ring), KNum::zero(ring)};
    }
    static Point affine(KNum x, KNum y) {
        return {false, std::move(x), std::move(y)};
    }

    RingId ring() const { return x.ring; }
};

bool operator==(const Point& p, const Point& q);
bool operator!=(const Point& p, const Point& q);

bool pt_on_curve(const Curve& c, const Point& p);

// Throws NotOnCurveError unless p is Infinity or satisfies the equation.
void pt_require_on_curve(const Curve& c, const Point& p);

Point pt_neg(const Curve& c, const Point& p);
Point pt_add(const Curve& c, const Point& p, const Point& q);
Point pt_scalar(const Curve& c, const mpz_class& m, const Point& p);

// phi^(n+k)(P) = phi^n(P) with k > 0.
struct PreperiodicPair {
    long n;
    long k;
};

bool operator==(const PreperiodicPair& a, const PreperiodicPair& b);

// pair when a repeat was found within max_steps; steps = number of map
// applications performed.
struct OrbitResult {
    std::optional<PreperiodicPair> pair;
    long steps;
};

}  // namespace lattes
