#include "lattes/endo.hpp"

#include <climits>
#include <stdexcept>
#include <vector>

namespace lattes {

namespace {

RatFunc rf_zero(RingId ring) {
    return RatFunc::constant(KNum::zero(ring));
}

RatFunc rf_const_int(RingId ring, long v) {
    return RatFunc::constant(KNum{ring, v, 0});
}

long widen_budget(long budget) {
    // Intermediate objects (multiplier components, scalar summands) stay
    // within a small factor of the requested map degree.
    if (budget > (LONG_MAX - 64) / 4) return LONG_MAX;
    return 4 * budget + 64;
}

void check_endo_ring(const Curve& c, const Endo& e) {
    if (e.ring() != c.ring) {
        throw RingMismatchError("endomorphism and curve rings differ");
    }
}

}  // namespace

Endo Endo::zero_map(RingId ring) {
    return Endo{ring, true, rf_zero(ring), rf_zero(ring)};
}

Endo Endo::unchecked(RatFunc X, RatFunc Y) {
    RingId ring = X.ring();
    return Endo{ring, false, std::move(X), std::move(Y)};
}

const RatFunc& Endo::X() const {
    if (zero_) throw ZeroInputError("zero map has no X component");
    return X_;
}

const RatFunc& Endo::Y() const {
    if (zero_) throw ZeroInputError("zero map has no Y component");
    return Y_;
}

Endo Endo::from_maps(const Curve& c, RatFunc X, RatFunc Y) {
    if (X.ring() != c.ring || Y.ring() != c.ring) {
        throw RingMismatchError("map coefficients from another field");
    }
    if (X.is_constant()) {
        throw CurveError("constant X is not an endomorphism in standard form");
    }
    Endo e = unchecked(std::move(X), std::move(Y));
    if (!endo_curve_compatible(c, e)) {
        throw CurveError("maps violate the curve identity f(X) = f*Y^2");
    }
    return e;
}

Endo endo_identity(RingId ring) {
    return Endo::unchecked(RatFunc::x(ring), rf_const_int(ring, 1));
}

Endo endo_neg(const Endo& phi) {
    if (phi.is_zero()) return phi;
    return Endo::unchecked(phi.X(), -phi.Y());
}

Endo cm_generator(const Curve& c) {
    if (c.ring == RingId::gaussian) {
        RatFunc X = rf_normalize(-Poly::x(c.ring),
                                 Poly::constant(KNum::one(c.ring)));
        return Endo::unchecked(std::move(X),
                               RatFunc::constant(KNum{c.ring, 0, 1}));
    }
    KNum zeta{c.ring, mpq_class(-1, 2), mpq_class(1, 2)};
    RatFunc X = rf_normalize(Poly::from_coeffs(c.ring, {KNum::zero(c.ring), zeta}),
                             Poly::constant(KNum::one(c.ring)));
    return Endo::unchecked(std::move(X), rf_const_int(c.ring, 1));
}

bool endo_curve_compatible(const Curve& c, const Endo& phi) {
    if (phi.is_zero()) return true;
    if (phi.ring() != c.ring) return false;
    RatFunc f = RatFunc::from_poly(curve_rhs(c));
    RatFunc lhs = rf_compose(f, phi.X(), LONG_MAX);
    RatFunc rhs = f * phi.Y() * phi.Y();
    return lhs == rhs;
}

Endo endo_add(const Curve& c, const Endo& phi, const Endo& psi, long budget) {
    if (phi.is_zero()) {
        check_endo_ring(c, psi);
        return psi;
    }
    if (psi.is_zero()) {
        check_endo_ring(c, phi);
        return phi;
    }
    check_endo_ring(c, phi);
    check_endo_ring(c, psi);
    const RingId ring = c.ring;
    const RatFunc& X1 = phi.X();
    const RatFunc& Y1 = phi.Y();
    const RatFunc& X2 = psi.X();
    const RatFunc& Y2 = psi.Y();
    RatFunc f = RatFunc::from_poly(curve_rhs(c));
    RatFunc X3 = rf_zero(ring);
    RatFunc Y3 = rf_zero(ring);
    if (X1 == X2) {
        if (Y1 == -Y2) return Endo::zero_map(ring);
        if (Y1 != Y2) {
            throw std::logic_error("multipliers differ beyond sign at equal X");
        }
        // Tangent case: lambda = (3X^2 + A) / (2*y*Y1), with y^2 = f(x).
        RatFunc tangent_num =
            rf_const_int(ring, 3) * X1 * X1 + RatFunc::constant(c.A);
        RatFunc half_den = rf_const_int(ring, 2) * f * Y1;
        RatFunc lambda2 = tangent_num * tangent_num /
                          (rf_const_int(ring, 2) * half_den * Y1);
        X3 = lambda2 - X1 - X1;
        Y3 = tangent_num * (X1 - X3) / half_den - Y1;
    } else {
        // Chord case: lambda = y*(Y2 - Y1)/(X2 - X1).
        RatFunc dX = X2 - X1;
        RatFunc dY = Y2 - Y1;
        RatFunc lambda2 = f * dY * dY / (dX * dX);
        X3 = lambda2 - X1 - X2;
        Y3 = dY * (X1 - X3) / dX - Y1;
    }
    if (X3.is_constant()) {
        // Sum collapsed onto a section; cannot happen for morphism sums of
        // standard-form endomorphisms other than the handled cases.
        throw std::logic_error("degenerate sum of endomorphisms");
    }
    if (X3.degree() > budget) {
        throw DegreeBudgetExceeded(X3.degree(), budget);
    }
    return Endo::unchecked(std::move(X3), std::move(Y3));
}

Endo endo_compose(const Curve& c, const Endo& phi, const Endo& psi,
                  long budget) {
    if (phi.is_zero() || psi.is_zero()) {
        return Endo::zero_map(c.ring);
    }
    check_endo_ring(c, phi);
    check_endo_ring(c, psi);
    RatFunc X = rf_compose(phi.X(), psi.X(), budget);
    // The multiplier of the composite: (Y_phi o X_psi) * Y_psi.  The inner
    // composition is already canonical; the only cross-cancellation that can
    // occur pairs its denominator with num(Y_psi), because den(Y_psi)
    // vanishes only at poles of X_psi, where Y_phi o X_psi takes the finite
    // nonzero value Y_phi(infinity) whenever Y_phi is degree-balanced.
    RatFunc comp = rf_compose(phi.Y(), psi.X(), widen_budget(budget));
    const RatFunc& base = psi.Y();
    Poly num_left = comp.num();
    Poly den_right = base.den();
    if (phi.Y().num().degree() < phi.Y().den().degree()) {
        Poly g1 = poly_gcd(num_left, den_right);
        if (g1.degree() > 0) {
            num_left = poly_divrem(num_left, g1).first;
            den_right = poly_divrem(den_right, g1).first;
        }
    }
    Poly g2 = poly_gcd(comp.den(), base.num());
    Poly num_right = base.num();
    Poly den_left = comp.den();
    if (g2.degree() > 0) {
        num_right = poly_divrem(num_right, g2).first;
        den_left = poly_divrem(den_left, g2).first;
    }
    Poly num = num_left * num_right;
    Poly den = den_left * den_right;
    KNum s = inv(den.leading());
    return Endo::unchecked(std::move(X),
                           RatFunc::from_canonical(s * num, s * den));
}

namespace {

Endo endo_scalar(const Curve& c, const mpz_class& m, long budget) {
    if (m == 0) return Endo::zero_map(c.ring);
    if (m < 0) return endo_neg(endo_scalar(c, mpz_class(-m), budget));
    Endo acc = Endo::zero_map(c.ring);
    Endo addend = endo_identity(c.ring);
    mp_bitcnt_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    for (mp_bitcnt_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(m.get_mpz_t(), i)) {
            acc = endo_add(c, acc, addend, budget);
        }
        if (i + 1 < bits) addend = endo_add(c, addend, addend, budget);
    }
    return acc;
}

}  // namespace

Endo endo_from_quadint(const Curve& c, const QuadInt& omega, long budget) {
    if (omega.ring != c.ring) {
        throw RingMismatchError("multiplier ring and curve ring differ");
    }
    if (omega.is_zero()) return Endo::zero_map(c.ring);
    mpz_class n = norm(omega);
    if (n > budget) {
        throw DegreeBudgetExceeded(
            n.fits_slong_p() ? n.get_si() : LONG_MAX, budget);
    }
    const long inner = widen_budget(budget);
    Endo ea = endo_scalar(c, omega.a, inner);
    if (omega.b == 0) return ea;
    Endo eb = endo_scalar(c, omega.b, inner);
    Endo ebt = endo_compose(c, eb, cm_generator(c), inner);
    return endo_add(c, ea, ebt, inner);
}

Endo endo_pow(const Curve& c, const Endo& phi, long k, long budget) {
    if (k < 0) throw std::invalid_argument("negative iteration count");
    if (k == 0) return endo_identity(c.ring);
    Endo acc = phi;
    for (long j = 1; j < k; ++j) acc = endo_compose(c, acc, phi, budget);
    return acc;
}

bool endo_eq(const Endo& phi, const Endo& psi) {
    if (phi.is_zero() || psi.is_zero()) {
        return phi.is_zero() == psi.is_zero();
    }
    return phi.X() == psi.X() && phi.Y() == psi.Y();
}

Point endo_apply(const Curve& c, const Endo& phi, const Point& p) {
    pt_require_on_curve(c, p);
    if (phi.is_zero() || p.infinite) return Point::infinity(c.ring);
    check_endo_ring(c, phi);
    std::optional<KNum> xv = rf_eval(phi.X(), p.x);
    if (!xv) return Point::infinity(c.ring);  // kernel point
    std::optional<KNum> yv = rf_eval(phi.Y(), p.x);
    if (!yv) {
        throw std::logic_error("multiplier pole off the kernel");
    }
    Point image = Point::affine(std::move(*xv), p.y * *yv);
    if (!pt_on_curve(c, image)) {
        throw std::logic_error("endomorphism image left the curve");
    }
    return image;
}

LattesMap lattes(const Curve& c, const QuadInt& omega, long budget) {
    if (omega.is_zero()) {
        throw ZeroInputError("the zero map has no shadow on the x-line");
    }
    Endo e = endo_from_quadint(c, omega, budget);
    return LattesMap{e.X(), omega, c};
}

OrbitResult orbit_detect(const Curve& c, const Endo& phi, const Point& p,
                         long max_steps) {
    if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
    pt_require_on_curve(c, p);
    std::vector<Point> seen{p};
    for (long m = 1; m <= max_steps; ++m) {
        Point next = endo_apply(c, phi, seen.back());
        for (long j = 0; j < m; ++j) {
            if (seen[static_cast<size_t>(j)] == next) {
                return OrbitResult{PreperiodicPair{j, m - j}, m};
            }
        }
        seen.push_back(std::move(next));
    }
    return OrbitResult{std::nullopt, max_steps};
}

}  // namespace lattes
