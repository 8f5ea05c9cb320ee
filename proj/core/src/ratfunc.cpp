#include "lattes/ratfunc.hpp"

#include <cassert>
#include <climits>
#include <stdexcept>

namespace lattes {

Poly Poly::constant(KNum value) {
    RingId ring = value.ring;
    if (value.is_zero()) return zero(ring);
    return Poly{ring, {std::move(value)}};
}

Poly Poly::x(RingId ring) {
    return Poly{ring, {KNum::zero(ring), KNum::one(ring)}};
}

Poly Poly::from_coeffs(RingId ring, std::vector<KNum> coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    return Poly{ring, std::move(coeffs)};
}

const KNum& Poly::leading() const {
    if (c.empty()) throw ZeroInputError("leading coefficient of zero");
    return c.back();
}

KNum Poly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c.size())) return KNum::zero(ring);
    return c[static_cast<size_t>(i)];
}

void check_same_ring(const Poly& f, const Poly& g) {
    if (f.ring != g.ring) {
        throw RingMismatchError("polynomials over different fields");
    }
}

bool operator==(const Poly& f, const Poly& g) {
    if (f.ring != g.ring || f.c.size() != g.c.size()) return false;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] != g.c[i]) return false;
    }
    return true;
}

bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

Poly operator+(const Poly& f, const Poly& g) {
    check_same_ring(f, g);
    std::vector<KNum> out;
    size_t n = std::max(f.c.size(), g.c.size());
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        out.push_back(f.coeff(static_cast<long>(i)) +
                      g.coeff(static_cast<long>(i)));
    }
    return Poly::from_coeffs(f.ring, std::move(out));
}

Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }

Poly operator-(const Poly& f) {
    std::vector<KNum> out;
    out.reserve(f.c.size());
    for (const KNum& k : f.c) out.push_back(-k);
    return Poly{f.ring, std::move(out)};
}

Poly operator*(const KNum& s, const Poly& f) {
    if (s.ring != f.ring) throw RingMismatchError("scalar from another field");
    if (s.is_zero() || f.is_zero()) return Poly::zero(f.ring);
    std::vector<KNum> out;
    out.reserve(f.c.size());
    for (const KNum& k : f.c) out.push_back(s * k);
    return Poly{f.ring, std::move(out)};
}

// ---------------------------------------------------------------------------
// Integer layer.  A polynomial over Q(sqrt(-d)) is a polynomial over the ring
// of integers Z[theta] divided by one positive integer denominator; products,
// compositions and remainder sequences run on the integer part with plain
// mpz arithmetic and convert back at the end.

namespace {

using ZV = std::vector<QuadInt>;

void ztrim(ZV& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

long zdeg(const ZV& v) { return static_cast<long>(v.size()) - 1; }

// Coordinates of k in the basis {1, theta} of Z[theta] tensored with Q.
std::pair<mpq_class, mpq_class> theta_coords(const KNum& k) {
    if (k.ring == RingId::gaussian) return {k.u, k.v};
    // u + v*sqrt(-3) = (u + v) + 2v*rho
    return {k.u + k.v, 2 * k.v};
}

struct Lift {
    RingId ring;
    ZV z;
    mpz_class den;  // positive
};

Lift lift(const Poly& f) {
    Lift out{f.ring, {}, 1};
    std::vector<std::pair<mpq_class, mpq_class>> coords;
    coords.reserve(f.c.size());
    for (const KNum& k : f.c) {
        coords.push_back(theta_coords(k));
        mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(),
                coords.back().first.get_den().get_mpz_t());
        mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(),
                coords.back().second.get_den().get_mpz_t());
    }
    out.z.reserve(coords.size());
    for (const auto& [qa, qb] : coords) {
        mpq_class a = qa * out.den;
        mpq_class b = qb * out.den;
        assert(a.get_den() == 1 && b.get_den() == 1);
        out.z.emplace_back(f.ring, a.get_num(), b.get_num());
    }
    return out;
}

KNum unlift_coeff(const QuadInt& z, const mpz_class& den) {
    if (z.ring == RingId::gaussian) {
        mpq_class u(z.a, den), v(z.b, den);
        u.canonicalize();
        v.canonicalize();
        return {z.ring, u, v};
    }
    // a + b*rho = (a - b/2) + (b/2)*sqrt(-3)
    mpq_class u(2 * z.a - z.b, 2 * den), v(z.b, 2 * den);
    u.canonicalize();
    v.canonicalize();
    return {z.ring, u, v};
}

Poly unlift(RingId ring, const ZV& z, const mpz_class& den) {
    std::vector<KNum> coeffs;
    coeffs.reserve(z.size());
    for (const QuadInt& q : z) coeffs.push_back(unlift_coeff(q, den));
    return Poly::from_coeffs(ring, std::move(coeffs));
}

ZV zmul(RingId ring, const ZV& p, const ZV& q) {
    if (p.empty() || q.empty()) return {};
    ZV out(p.size() + q.size() - 1, QuadInt::zero(ring));
    const bool eis = ring == RingId::eisenstein;
    for (size_t i = 0; i < p.size(); ++i) {
        const mpz_class& pa = p[i].a;
        const mpz_class& pb = p[i].b;
        if (pa == 0 && pb == 0) continue;
        for (size_t j = 0; j < q.size(); ++j) {
            QuadInt& o = out[i + j];
            const mpz_class& qa = q[j].a;
            const mpz_class& qb = q[j].b;
            mpz_addmul(o.a.get_mpz_t(), pa.get_mpz_t(), qa.get_mpz_t());
            mpz_submul(o.a.get_mpz_t(), pb.get_mpz_t(), qb.get_mpz_t());
            mpz_addmul(o.b.get_mpz_t(), pa.get_mpz_t(), qb.get_mpz_t());
            mpz_addmul(o.b.get_mpz_t(), pb.get_mpz_t(), qa.get_mpz_t());
            if (eis) {
                mpz_submul(o.b.get_mpz_t(), pb.get_mpz_t(), qb.get_mpz_t());
            }
        }
    }
    ztrim(out);
    return out;
}

ZV zscale(const ZV& v, const QuadInt& s) {
    ZV out;
    out.reserve(v.size());
    for (const QuadInt& c : v) out.push_back(c * s);
    ztrim(out);
    return out;
}

QuadInt zcontent(RingId ring, const ZV& v) {
    QuadInt g = QuadInt::zero(ring);
    for (const QuadInt& c : v) {
        g = gcd(g, c);
        if (is_unit(g)) break;
    }
    return g;
}

ZV zdiv_const(const ZV& v, const QuadInt& s) {
    ZV out;
    out.reserve(v.size());
    for (const QuadInt& c : v) {
        auto q = try_div(c, s);
        if (!q) throw std::logic_error("inexact division in remainder chain");
        out.push_back(*q);
    }
    ztrim(out);
    return out;
}

ZV zprimitive(RingId ring, const ZV& v) {
    if (v.empty()) return v;
    return zdiv_const(v, zcontent(ring, v));
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A = Q*B + R.
ZV zprem(RingId ring, const ZV& A, const ZV& B) {
    assert(!B.empty() && zdeg(A) >= zdeg(B));
    if (zdeg(B) == 0) return {};
    ZV R = A;
    const QuadInt d = B.back();
    long e = zdeg(A) - zdeg(B) + 1;
    while (!R.empty() && zdeg(R) >= zdeg(B)) {
        const long k = zdeg(R) - zdeg(B);
        const QuadInt lead = R.back();
        ZV next(R.size() - 1, QuadInt::zero(ring));
        for (long i = 0; i < zdeg(R); ++i) {
            QuadInt t = d * R[static_cast<size_t>(i)];
            if (i >= k) t = t - lead * B[static_cast<size_t>(i - k)];
            next[static_cast<size_t>(i)] = std::move(t);
        }
        ztrim(next);
        R = std::move(next);
        --e;
    }
    if (!R.empty() && e > 0) {
        R = zscale(R, pow(d, static_cast<unsigned long>(e)));
    }
    return R;
}

// Subresultant remainder sequence; inputs primitive and nonzero.  Returns a
// primitive associate of the gcd.
ZV zgcd(RingId ring, ZV A, ZV B) {
    if (zdeg(A) < zdeg(B)) std::swap(A, B);
    QuadInt g = QuadInt::one(ring);
    QuadInt h = QuadInt::one(ring);
    while (true) {
        const long delta = zdeg(A) - zdeg(B);
        ZV R = zprem(ring, A, B);
        if (R.empty()) return zprimitive(ring, B);
        QuadInt divisor = g * pow(h, static_cast<unsigned long>(delta));
        A = std::move(B);
        B = zdiv_const(R, divisor);
        g = A.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            auto q = try_div(pow(g, static_cast<unsigned long>(delta)),
                             pow(h, static_cast<unsigned long>(delta - 1)));
            if (!q) throw std::logic_error("remainder sequence drift");
            h = *q;
        }
    }
}

}  // namespace

Poly operator*(const Poly& f, const Poly& g) {
    check_same_ring(f, g);
    if (f.is_zero() || g.is_zero()) return Poly::zero(f.ring);
    Lift lf = lift(f);
    Lift lg = lift(g);
    return unlift(f.ring, zmul(f.ring, lf.z, lg.z), lf.den * lg.den);
}

std::pair<Poly, Poly> poly_divrem(const Poly& f, const Poly& g) {
    check_same_ring(f, g);
    if (g.is_zero()) throw ZeroInputError("polynomial division by zero");
    if (f.degree() < g.degree()) return {Poly::zero(f.ring), f};
    const long dg = g.degree();
    std::vector<KNum> quot(static_cast<size_t>(f.degree() - dg + 1),
                           KNum::zero(f.ring));
    std::vector<KNum> rem = f.c;
    const KNum lead_inv = inv(g.leading());
    for (long k = f.degree(); k >= dg; --k) {
        KNum& cur = rem[static_cast<size_t>(k)];
        if (cur.is_zero()) continue;
        KNum t = cur * lead_inv;
        for (long i = 0; i < dg; ++i) {
            rem[static_cast<size_t>(k - dg + i)] =
                rem[static_cast<size_t>(k - dg + i)] -
                t * g.c[static_cast<size_t>(i)];
        }
        cur = KNum::zero(f.ring);
        quot[static_cast<size_t>(k - dg)] = std::move(t);
    }
    rem.erase(rem.begin() + dg, rem.end());
    return {Poly::from_coeffs(f.ring, std::move(quot)),
            Poly::from_coeffs(f.ring, std::move(rem))};
}

namespace {

Poly poly_div_exact(const Poly& f, const Poly& g) {
    auto [q, r] = poly_divrem(f, g);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

}  // namespace

Poly poly_monic(const Poly& f) {
    if (f.is_zero()) return f;
    return inv(f.leading()) * f;
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    check_same_ring(f, g);
    if (f.is_zero() && g.is_zero()) return Poly::zero(f.ring);
    if (f.is_zero()) return poly_monic(g);
    if (g.is_zero()) return poly_monic(f);
    if (f.degree() == 0 || g.degree() == 0) {
        return Poly::constant(KNum::one(f.ring));
    }
    Poly a = f, b = g;
    if (a.degree() < b.degree()) std::swap(a, b);
    // A lopsided pair first gets cut down by ordinary division so that the
    // integer remainder sequence never sees a large degree gap.
    while (a.degree() - b.degree() > 24) {
        Poly r = poly_divrem(a, poly_monic(b)).second;
        a = std::move(b);
        if (r.is_zero()) return poly_monic(a);
        if (r.degree() == 0) return Poly::constant(KNum::one(f.ring));
        b = std::move(r);
    }
    ZV za = zprimitive(f.ring, lift(a).z);
    ZV zb = zprimitive(f.ring, lift(b).z);
    return poly_monic(unlift(f.ring, zgcd(f.ring, za, zb), 1));
}

Poly poly_derivative(const Poly& f) {
    if (f.degree() <= 0) return Poly::zero(f.ring);
    std::vector<KNum> out;
    out.reserve(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) {
        out.push_back(KNum{f.ring, mpq_class(static_cast<long>(i)), 0} *
                      f.c[i]);
    }
    return Poly::from_coeffs(f.ring, std::move(out));
}

KNum poly_eval(const Poly& f, const KNum& x) {
    if (x.ring != f.ring) throw RingMismatchError("point from another field");
    KNum acc = KNum::zero(f.ring);
    for (size_t i = f.c.size(); i-- > 0;) {
        acc = acc * x + f.c[i];
    }
    return acc;
}

Poly poly_pow(const Poly& f, unsigned long e) {
    Poly result = Poly::constant(KNum::one(f.ring));
    Poly base = f;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Rational functions.

RatFunc RatFunc::from_poly(Poly p) {
    RingId ring = p.ring;
    return RatFunc{std::move(p), Poly::constant(KNum::one(ring))};
}

RatFunc RatFunc::constant(KNum value) {
    RingId ring = value.ring;
    return RatFunc{Poly::constant(std::move(value)),
                   Poly::constant(KNum::one(ring))};
}

RatFunc RatFunc::x(RingId ring) {
    return RatFunc{Poly::x(ring), Poly::constant(KNum::one(ring))};
}

RatFunc RatFunc::from_canonical(Poly num, Poly den) {
    assert(!den.is_zero());
    assert(den.leading() == KNum::one(den.ring));
#ifndef NDEBUG
    if (!num.is_zero() && den.degree() > 0 &&
        std::max(num.degree(), den.degree()) <= 50) {
        assert(poly_gcd(num, den).degree() == 0);
    }
#endif
    return RatFunc{std::move(num), std::move(den)};
}

RatFunc rf_normalize(Poly num, Poly den) {
    check_same_ring(num, den);
    if (den.is_zero()) throw ZeroInputError("zero denominator");
    if (num.is_zero()) {
        return RatFunc::from_canonical(Poly::zero(num.ring),
                                       Poly::constant(KNum::one(num.ring)));
    }
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = poly_div_exact(num, g);
        den = poly_div_exact(den, g);
    }
    KNum s = inv(den.leading());
    return RatFunc::from_canonical(s * num, s * den);
}

bool operator==(const RatFunc& f, const RatFunc& g) {
    return f.num() == g.num() && f.den() == g.den();
}

bool operator!=(const RatFunc& f, const RatFunc& g) { return !(f == g); }

RatFunc operator+(const RatFunc& f, const RatFunc& g) {
    check_same_ring(f.num(), g.num());
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    Poly g0 = poly_gcd(f.den(), g.den());
    Poly bp = g0.degree() > 0 ? poly_div_exact(f.den(), g0) : f.den();
    Poly dp = g0.degree() > 0 ? poly_div_exact(g.den(), g0) : g.den();
    Poly num = f.num() * dp + g.num() * bp;
    RingId ring = f.ring();
    if (num.is_zero()) {
        return RatFunc::from_canonical(Poly::zero(ring),
                                       Poly::constant(KNum::one(ring)));
    }
    Poly h = poly_gcd(num, g0);
    Poly den = bp * dp;
    if (h.degree() > 0) {
        num = poly_div_exact(num, h);
        den = poly_div_exact(g0, h) * den;
    } else {
        den = g0 * den;
    }
    KNum s = inv(den.leading());
    return RatFunc::from_canonical(s * num, s * den);
}

RatFunc operator-(const RatFunc& f) {
    return RatFunc::from_canonical(-f.num(), f.den());
}

RatFunc operator-(const RatFunc& f, const RatFunc& g) { return f + (-g); }

RatFunc operator*(const RatFunc& f, const RatFunc& g) {
    check_same_ring(f.num(), g.num());
    RingId ring = f.ring();
    if (f.is_zero() || g.is_zero()) {
        return RatFunc::from_canonical(Poly::zero(ring),
                                       Poly::constant(KNum::one(ring)));
    }
    Poly g1 = poly_gcd(f.num(), g.den());
    Poly g2 = poly_gcd(g.num(), f.den());
    Poly a = g1.degree() > 0 ? poly_div_exact(f.num(), g1) : f.num();
    Poly d = g1.degree() > 0 ? poly_div_exact(g.den(), g1) : g.den();
    Poly c = g2.degree() > 0 ? poly_div_exact(g.num(), g2) : g.num();
    Poly b = g2.degree() > 0 ? poly_div_exact(f.den(), g2) : f.den();
    Poly num = a * c;
    Poly den = b * d;
    KNum s = inv(den.leading());
    return RatFunc::from_canonical(s * num, s * den);
}

RatFunc rf_inv(const RatFunc& f) {
    if (f.is_zero()) throw ZeroInputError("inverse of the zero function");
    KNum s = inv(f.num().leading());
    return RatFunc::from_canonical(s * f.den(), s * f.num());
}

RatFunc operator/(const RatFunc& f, const RatFunc& g) { return f * rf_inv(g); }

std::optional<KNum> rf_eval(const RatFunc& f, const KNum& x) {
    KNum den = poly_eval(f.den(), x);
    if (den.is_zero()) return std::nullopt;
    return poly_eval(f.num(), x) / den;
}

namespace {

long saturate_to_long(const mpz_class& v) {
    if (!v.fits_slong_p()) return LONG_MAX;
    return v.get_si();
}

}  // namespace

RatFunc rf_compose(const RatFunc& outer, const RatFunc& inner, long budget) {
    check_same_ring(outer.num(), inner.num());
    const RingId ring = outer.ring();
    if (outer.is_constant()) return outer;
    if (inner.is_constant()) {
        std::optional<KNum> v = rf_eval(outer, inner.num().coeff(0));
        if (!v) {
            throw ZeroInputError(
                "composition with a constant lying on a pole");
        }
        return RatFunc::constant(*v);
    }
    mpz_class attempted_z =
        mpz_class(outer.degree()) * mpz_class(inner.degree());
    if (attempted_z > budget) {
        throw DegreeBudgetExceeded(saturate_to_long(attempted_z), budget);
    }

    const long M = std::max(outer.num().degree(), outer.den().degree());
    Lift lp = lift(outer.num());
    Lift lq = lift(outer.den());
    Lift ln = lift(inner.num());
    Lift ld = lift(inner.den());
    mpz_class scale;
    mpz_lcm(scale.get_mpz_t(), ln.den.get_mpz_t(), ld.den.get_mpz_t());
    ZV n = zscale(ln.z, QuadInt{ring, scale / ln.den, 0});
    ZV d = zscale(ld.z, QuadInt{ring, scale / ld.den, 0});

    auto zcoeff = [&](const ZV& v, long i) {
        if (i < 0 || i > zdeg(v)) return QuadInt::zero(ring);
        return v[static_cast<size_t>(i)];
    };
    // acc_* = sum_i coeff_i * n^i * d^(M-i), shared powers of d built
    // incrementally alongside the Horner recurrence.
    ZV acc_num{zcoeff(lp.z, M)};
    ZV acc_den{zcoeff(lq.z, M)};
    ztrim(acc_num);
    ztrim(acc_den);
    ZV dpow{QuadInt::one(ring)};
    for (long i = M - 1; i >= 0; --i) {
        dpow = zmul(ring, dpow, d);
        acc_num = zmul(ring, acc_num, n);
        acc_den = zmul(ring, acc_den, n);
        QuadInt cp = zcoeff(lp.z, i);
        QuadInt cq = zcoeff(lq.z, i);
        if (!cp.is_zero()) {
            ZV t = zscale(dpow, cp);
            t.resize(std::max(t.size(), acc_num.size()),
                     QuadInt::zero(ring));
            for (size_t j = 0; j < acc_num.size(); ++j) {
                t[j] = t[j] + acc_num[j];
            }
            ztrim(t);
            acc_num = std::move(t);
        }
        if (!cq.is_zero()) {
            ZV t = zscale(dpow, cq);
            t.resize(std::max(t.size(), acc_den.size()),
                     QuadInt::zero(ring));
            for (size_t j = 0; j < acc_den.size(); ++j) {
                t[j] = t[j] + acc_den[j];
            }
            ztrim(t);
            acc_den = std::move(t);
        }
    }
    Poly num = unlift(ring, acc_num, lp.den);
    Poly den = unlift(ring, acc_den, lq.den);
    // Coprime inputs compose to a coprime fraction: a shared root would force
    // a shared root either on outer's parts or on inner's parts.
    KNum s = inv(den.leading());
    return RatFunc::from_canonical(s * num, s * den);
}

}  // namespace lattes
