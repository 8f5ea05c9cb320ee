#include "lattes/qring.hpp"

#include <string>

namespace lattes {

const char* ring_name(RingId ring) {
    return ring == RingId::gaussian ? "gaussian" : "eisenstein";
}

int ring_d(RingId ring) { return ring == RingId::gaussian ? 1 : 3; }

void check_same_ring(const QuadInt& p, const QuadInt& q) {
    if (p.ring != q.ring) {
        throw RingMismatchError(std::string("ring mismatch: ") +
                                ring_name(p.ring) + " vs " +
                                ring_name(q.ring));
    }
}

bool operator==(const QuadInt& p, const QuadInt& q) {
    return p.ring == q.ring && p.a == q.a && p.b == q.b;
}

bool operator!=(const QuadInt& p, const QuadInt& q) { return !(p == q); }

QuadInt operator+(const QuadInt& p, const QuadInt& q) {
    check_same_ring(p, q);
    return {p.ring, p.a + q.a, p.b + q.b};
}

QuadInt operator-(const QuadInt& p, const QuadInt& q) {
    check_same_ring(p, q);
    return {p.ring, p.a - q.a, p.b - q.b};
}

QuadInt operator-(const QuadInt& p) { return {p.ring, -p.a, -p.b}; }

QuadInt operator*(const QuadInt& p, const QuadInt& q) {
    check_same_ring(p, q);
    mpz_class ac = p.a * q.a;
    mpz_class bd = p.b * q.b;
    mpz_class cross = p.a * q.b + p.b * q.a;
    if (p.ring == RingId::gaussian) {
        // theta^2 = -1
        return {p.ring, ac - bd, cross};
    }
    // theta^2 = -1 - theta
    return {p.ring, ac - bd, cross - bd};
}

QuadInt conj(const QuadInt& p) {
    if (p.ring == RingId::gaussian) return {p.ring, p.a, -p.b};
    return {p.ring, p.a - p.b, -p.b};
}

mpz_class norm(const QuadInt& p) {
    if (p.ring == RingId::gaussian) return p.a * p.a + p.b * p.b;
    return p.a * p.a - p.a * p.b + p.b * p.b;
}

bool is_unit(const QuadInt& p) { return norm(p) == 1; }

const std::vector<QuadInt>& units(RingId ring) {
    static const std::vector<QuadInt> gaussian_units = {
        {RingId::gaussian, 1, 0},
        {RingId::gaussian, -1, 0},
        {RingId::gaussian, 0, 1},
        {RingId::gaussian, 0, -1},
    };
    // {1, -1, rho, -rho, rho^2, -rho^2} with rho^2 = -1 - rho.
    static const std::vector<QuadInt> eisenstein_units = {
        {RingId::eisenstein, 1, 0},  {RingId::eisenstein, -1, 0},
        {RingId::eisenstein, 0, 1},  {RingId::eisenstein, 0, -1},
        {RingId::eisenstein, -1, -1}, {RingId::eisenstein, 1, 1},
    };
    return ring == RingId::gaussian ? gaussian_units : eisenstein_units;
}

QuadInt pow(const QuadInt& p, unsigned long e) {
    QuadInt result = QuadInt::one(p.ring);
    QuadInt base = p;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::optional<QuadInt> try_div(const QuadInt& p, const QuadInt& q) {
    check_same_ring(p, q);
    if (q.is_zero()) throw ZeroInputError("division by zero ring element");
    QuadInt num = p * conj(q);
    mpz_class den = norm(q);
    if (!mpz_divisible_p(num.a.get_mpz_t(), den.get_mpz_t()) ||
        !mpz_divisible_p(num.b.get_mpz_t(), den.get_mpz_t())) {
        return std::nullopt;
    }
    return QuadInt{p.ring, num.a / den, num.b / den};
}

namespace {

// Nearest integer to x/den for den > 0; ties round up.
mpz_class round_nearest(const mpz_class& x, const mpz_class& den) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) q += 1;
    return q;
}

}  // namespace

std::pair<QuadInt, QuadInt> divmod_nearest(const QuadInt& p, const QuadInt& q) {
    check_same_ring(p, q);
    if (q.is_zero()) throw ZeroInputError("division by zero ring element");
    QuadInt num = p * conj(q);
    mpz_class den = norm(q);
    QuadInt quot{p.ring, round_nearest(num.a, den), round_nearest(num.b, den)};
    QuadInt rem = p - q * quot;
    return {quot, rem};
}

QuadInt gcd(const QuadInt& p, const QuadInt& q) {
    check_same_ring(p, q);
    QuadInt x = p, y = q;
    while (!y.is_zero()) {
        QuadInt rem = divmod_nearest(x, y).second;
        x = y;
        y = rem;
    }
    if (x.is_zero()) return x;
    QuadInt best = x;
    for (const QuadInt& u : units(p.ring)) {
        QuadInt cand = x * u;
        int cmp_a = cmp(cand.a, best.a);
        if (cmp_a > 0 || (cmp_a == 0 && cand.b > best.b)) best = cand;
    }
    return best;
}

namespace {

std::optional<long> root_order(const QuadInt& p, const QuadInt& q,
                               bool allow_sign) {
    check_same_ring(p, q);
    if (p.is_zero() || q.is_zero()) {
        throw ZeroInputError("root-of-unity order needs nonzero elements");
    }
    if (norm(p) != norm(q)) return std::nullopt;
    std::optional<QuadInt> u = try_div(p, q);
    if (!u) return std::nullopt;
    const QuadInt one = QuadInt::one(p.ring);
    QuadInt acc = *u;
    long max_order = static_cast<long>(units(p.ring).size());
    for (long k = 1; k <= max_order; ++k) {
        if (acc == one) return k;
        if (allow_sign && acc == -one) return k;
        acc = acc * *u;
    }
    return std::nullopt;
}

}  // namespace

std::optional<long> unit_root_order(const QuadInt& p, const QuadInt& q) {
    return root_order(p, q, false);
}

std::optional<long> signed_root_order(const QuadInt& p, const QuadInt& q) {
    return root_order(p, q, true);
}

}  // namespace lattes
