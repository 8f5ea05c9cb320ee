#pragma once

#include <gmpxx.h>

#include "lattes/qring.hpp"

namespace lattes {

// Element u + v*sqrt(-d) of the CM field Q(sqrt(-d)), d = ring_d(ring).
// Coordinates are exact rationals and must stay canonical (mpq arithmetic
// preserves this; use make_ratio when building from a raw fraction).
struct KNum {
    RingId ring;
    mpq_class u;
    mpq_class v;

    KNum(RingId ring_, mpq_class u_, mpq_class v_)
        : ring(ring_), u(std::move(u_)), v(std::move(v_)) {}

    static KNum zero(RingId ring) { return {ring, 0, 0}; }
    static KNum one(RingId ring) { return {ring, 1, 0}; }

    bool is_zero() const { return u == 0 && v == 0; }
    bool is_rational() const { return v == 0; }
};

// num/den as a canonical rational, as the field element num/den + 0*sqrt(-d).
KNum make_ratio(RingId ring, const mpz_class& num, const mpz_class& den);

void check_same_ring(const KNum& p, const KNum& q);

bool operator==(const KNum& p, const KNum& q);
bool operator!=(const KNum& p, const KNum& q);

KNum operator+(const KNum& p, const KNum& q);
KNum operator-(const KNum& p, const KNum& q);
KNum operator-(const KNum& p);
KNum operator*(const KNum& p, const KNum& q);
KNum operator/(const KNum& p, const KNum& q);

KNum conj(const KNum& p);

// 1/p; throws ZeroInputError at zero.
KNum inv(const KNum& p);

// Norm to Q: u^2 + d*v^2.  Zero only at zero.
mpq_class norm(const KNum& p);

// Ring embedding into the field: Z[i] -> a + b*sqrt(-1);
// Z[rho] -> (a - b/2) + (b/2)*sqrt(-3).
KNum embed(const QuadInt& p);

KNum pow(const KNum& p, unsigned long e);

}  // namespace lattes
