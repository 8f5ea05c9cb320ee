#pragma once

#include "lattes/ecurve.hpp"

namespace lattes {

// Endomorphism in standard form (x, y) -> (X(x), y*Y(x)), or the zero map
// sending everything to Infinity.  Every non-zero value satisfies
// f(X) = f * Y^2 with f = x^3 + Ax + B of its curve; on such values X is
// nonconstant, Y is nonzero, and Y has poles only where X does.
class Endo {
public:
    static Endo zero_map(RingId ring);
    // Validates the curve identity f(X) = f*Y^2 and rejects constant X.
    static Endo from_maps(const Curve& c, RatFunc X, RatFunc Y);

    bool is_zero() const { return zero_; }
    RingId ring() const { return ring_; }
    const RatFunc& X() const;
    const RatFunc& Y() const;
    long degree() const { return zero_ ? 0 : X_.degree(); }

private:
    Endo(RingId ring, bool zero, RatFunc X, RatFunc Y)
        : ring_(ring), zero_(zero), X_(std::move(X)), Y_(std::move(Y)) {}
    static Endo unchecked(RatFunc X, RatFunc Y);

    RingId ring_;
    bool zero_;
    RatFunc X_;
    RatFunc Y_;

    friend Endo endo_identity(RingId ring);
    friend Endo endo_neg(const Endo& phi);
    friend Endo cm_generator(const Curve& c);
    friend Endo endo_add(const Curve& c, const Endo& phi, const Endo& psi,
                         long budget);
    friend Endo endo_compose(const Curve& c, const Endo& phi, const Endo& psi,
                             long budget);
};

// (x, 1).
Endo endo_identity(RingId ring);

// Post-composition with (x, y) -> (x, -y).
Endo endo_neg(const Endo& phi);

// The extra automorphism: [i] = (-x, sqrt(-1)) on y^2 = x^3 + Ax,
// [rho] = (zeta*x, 1) with zeta = (-1 + sqrt(-3))/2 on y^2 = x^3 + B.
Endo cm_generator(const Curve& c);

// Pointwise sum of morphisms via the chord-tangent law at the generic point.
Endo endo_add(const Curve& c, const Endo& phi, const Endo& psi,
              long budget = kDefaultDegreeBudget);

// phi after psi: X = X_phi(X_psi), Y = Y_phi(X_psi) * Y_psi.
Endo endo_compose(const Curve& c, const Endo& phi, const Endo& psi,
                  long budget = kDefaultDegreeBudget);

// [a + b*theta] = [a] + [b] composed with the generator; degree = norm(omega).
Endo endo_from_quadint(const Curve& c, const QuadInt& omega,
                       long budget = kDefaultDegreeBudget);

// k-fold self-composition; k = 0 gives the identity.
Endo endo_pow(const Curve& c, const Endo& phi, long k,
              long budget = kDefaultDegreeBudget);

bool endo_eq(const Endo& phi, const Endo& psi);

// The defining identity f(X) = f*Y^2, checked exactly.
bool endo_curve_compatible(const Curve& c, const Endo& phi);

// Image of a point; kernel points (poles of X) map to Infinity.
Point endo_apply(const Curve& c, const Endo& phi, const Point& p);

// The shadow of [omega] on the x-line.
struct LattesMap {
    RatFunc map;
    QuadInt source;
    Curve curve;
};

LattesMap lattes(const Curve& c, const QuadInt& omega,
                 long budget = kDefaultDegreeBudget);

// Iterates p, phi(p), phi^2(p), ... comparing exact coordinates; returns the
// minimal (n, k) with phi^(n+k)(p) = phi^n(p) found within max_steps.
OrbitResult orbit_detect(const Curve& c, const Endo& phi, const Point& p,
                         long max_steps);

}  // namespace lattes
