#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "lattes/errors.hpp"

namespace lattes {

// The two imaginary quadratic orders with extra automorphisms:
//   gaussian:   Z[i],   theta = i,   theta^2 = -1
//   eisenstein: Z[rho], theta = rho, theta^2 = -1 - theta
enum class RingId { gaussian, eisenstein };

const char* ring_name(RingId ring);

// Squarefree d with fraction field Q(sqrt(-d)): 1 for Z[i], 3 for Z[rho].
int ring_d(RingId ring);

// a + b*theta with integer a, b.
struct QuadInt {
    RingId ring;
    mpz_class a;
    mpz_class b;

    QuadInt(RingId ring_, mpz_class a_, mpz_class b_)
        : ring(ring_), a(std::move(a_)), b(std::move(b_)) {}

    static QuadInt zero(RingId ring) { return {ring, 0, 0}; }
    static QuadInt one(RingId ring) { return {ring, 1, 0}; }
    static QuadInt theta(RingId ring) { return {ring, 0, 1}; }

    bool is_zero() const { return a == 0 && b == 0; }
};

void check_same_ring(const QuadInt& p, const QuadInt& q);

bool operator==(const QuadInt& p, const QuadInt& q);
bool operator!=(const QuadInt& p, const QuadInt& q);

QuadInt operator+(const QuadInt& p, const QuadInt& q);
QuadInt operator-(const QuadInt& p, const QuadInt& q);
QuadInt operator-(const QuadInt& p);
QuadInt operator*(const QuadInt& p, const QuadInt& q);

QuadInt conj(const QuadInt& p);

// Field norm; a^2 + b^2 over Z[i], a^2 - a*b + b^2 over Z[rho].
// Nonnegative, multiplicative, zero only at zero.
mpz_class norm(const QuadInt& p);

bool is_unit(const QuadInt& p);

// The unit group: 4 elements for Z[i], 6 for Z[rho].
const std::vector<QuadInt>& units(RingId ring);

QuadInt pow(const QuadInt& p, unsigned long e);

// Exact quotient p/q if q divides p in the ring; nullopt otherwise.
// Throws ZeroInputError if q == 0.
std::optional<QuadInt> try_div(const QuadInt& p, const QuadInt& q);

// Quotient-remainder with quotient rounded to the nearest lattice point:
// p = q*quot + rem with norm(rem) < norm(q).  Both rings are norm-Euclidean
// under nearest rounding (error norm <= 1/2 resp. 3/4).
std::pair<QuadInt, QuadInt> divmod_nearest(const QuadInt& p, const QuadInt& q);

// A greatest common divisor, normalized to the lexicographically greatest
// associate by (a, b).  gcd(0, 0) == 0.
QuadInt gcd(const QuadInt& p, const QuadInt& q);

// Least k >= 1 with p^k == q^k, i.e. the multiplicative order of p/q when
// that quotient is a root of unity; nullopt when it is not (in particular
// whenever norm(p) != norm(q) or q does not divide p).
// Throws ZeroInputError if either argument is zero.
std::optional<long> unit_root_order(const QuadInt& p, const QuadInt& q);

// Least k >= 1 with p^k == q^k or p^k == -q^k; nullopt when p/q is not a
// root of unity.  Throws ZeroInputError if either argument is zero.
std::optional<long> signed_root_order(const QuadInt& p, const QuadInt& q);

}  // namespace lattes
