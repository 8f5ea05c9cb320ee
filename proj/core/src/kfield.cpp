#include "lattes/kfield.hpp"

#include <string>

namespace lattes {

KNum make_ratio(RingId ring, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ZeroInputError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return {ring, q, 0};
}

void check_same_ring(const KNum& p, const KNum& q) {
    if (p.ring != q.ring) {
        throw RingMismatchError(std::string("field mismatch: Q(sqrt(-") +
                                std::to_string(ring_d(p.ring)) +
                                ")) vs Q(sqrt(-" +
                                std::to_string(ring_d(q.ring)) + "))");
    }
}

bool operator==(const KNum& p, const KNum& q) {
    return p.ring == q.ring && p.u == q.u && p.v == q.v;
}

bool operator!=(const KNum& p, const KNum& q) { return !(p == q); }

KNum operator+(const KNum& p, const KNum& q) {
    check_same_ring(p, q);
    return {p.ring, p.u + q.u, p.v + q.v};
}

KNum operator-(const KNum& p, const KNum& q) {
    check_same_ring(p, q);
    return {p.ring, p.u - q.u, p.v - q.v};
}

KNum operator-(const KNum& p) { return {p.ring, -p.u, -p.v}; }

KNum operator*(const KNum& p, const KNum& q) {
    check_same_ring(p, q);
    int d = ring_d(p.ring);
    return {p.ring, p.u * q.u - d * p.v * q.v, p.u * q.v + p.v * q.u};
}

KNum operator/(const KNum& p, const KNum& q) { return p * inv(q); }

KNum conj(const KNum& p) { return {p.ring, p.u, -p.v}; }

mpq_class norm(const KNum& p) {
    return p.u * p.u + ring_d(p.ring) * p.v * p.v;
}

KNum inv(const KNum& p) {
    if (p.is_zero()) throw ZeroInputError("division by zero field element");
    mpq_class n = norm(p);
    return {p.ring, p.u / n, -p.v / n};
}

KNum embed(const QuadInt& p) {
    if (p.ring == RingId::gaussian) {
        return {p.ring, mpq_class(p.a), mpq_class(p.b)};
    }
    // rho = (-1 + sqrt(-3))/2
    mpq_class half_b(p.b, 2);
    half_b.canonicalize();
    return {p.ring, mpq_class(p.a) - half_b, half_b};
}

KNum pow(const KNum& p, unsigned long e) {
    KNum result = KNum::one(p.ring);
    KNum base = p;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

}  // namespace lattes
