#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lattes/kfield.hpp"

namespace lattes {

// Dense univariate polynomial over Q(sqrt(-d)).  Invariant: the coefficient
// vector has no trailing zero, so degree() == c.size() - 1 and the zero
// polynomial is the empty vector (degree -1).
struct Poly {
    RingId ring;
    std::vector<KNum> c;

    static Poly zero(RingId ring) { return Poly{ring, {}}; }
    static Poly constant(KNum value);
    static Poly x(RingId ring);
    // Coefficients in ascending order; trailing zeros are trimmed.
    static Poly from_coeffs(RingId ring, std::vector<KNum> coeffs);

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const KNum& leading() const;
    KNum coeff(long i) const;  // zero outside the stored range
};

void check_same_ring(const Poly& f, const Poly& g);

bool operator==(const Poly& f, const Poly& g);
bool operator!=(const Poly& f, const Poly& g);

Poly operator+(const Poly& f, const Poly& g);
Poly operator-(const Poly& f, const Poly& g);
Poly operator-(const Poly& f);
Poly operator*(const Poly& f, const Poly& g);
Poly operator*(const KNum& s, const Poly& f);

// Quotient and remainder with deg rem < deg g; throws ZeroInputError if
// g == 0.
std::pair<Poly, Poly> poly_divrem(const Poly& f, const Poly& g);

// Monic greatest common divisor: poly_gcd(f, 0) == monic(f) and
// poly_gcd(0, 0) == 0.  Computed by a subresultant remainder sequence over
// the ring of integers of the field after clearing denominators.
Poly poly_gcd(const Poly& f, const Poly& g);

Poly poly_monic(const Poly& f);
Poly poly_derivative(const Poly& f);
KNum poly_eval(const Poly& f, const KNum& x);
Poly poly_pow(const Poly& f, unsigned long e);

inline constexpr long kDefaultDegreeBudget = 2000;

// Quotient num/den of coprime polynomials with monic den != 0.  This
// canonical form is a class invariant: construct through rf_normalize (or
// the helpers below), never by mutating parts.
class RatFunc {
public:
    static RatFunc from_poly(Poly p);
    static RatFunc constant(KNum value);
    static RatFunc x(RingId ring);
    // Caller guarantees num, den coprime with den monic nonzero.
    static RatFunc from_canonical(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    RingId ring() const { return num_.ring; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    // Degree as a self-map of the projective line.
    long degree() const { return std::max(num_.degree(), den_.degree()); }

private:
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_;
    Poly den_;
};

// Reduce num/den to canonical form; throws ZeroInputError if den == 0.
RatFunc rf_normalize(Poly num, Poly den);

bool operator==(const RatFunc& f, const RatFunc& g);
bool operator!=(const RatFunc& f, const RatFunc& g);

RatFunc operator+(const RatFunc& f, const RatFunc& g);
RatFunc operator-(const RatFunc& f, const RatFunc& g);
RatFunc operator-(const RatFunc& f);
RatFunc operator*(const RatFunc& f, const RatFunc& g);
RatFunc operator/(const RatFunc& f, const RatFunc& g);

// 1/f; throws ZeroInputError at the zero function.
RatFunc rf_inv(const RatFunc& f);

// Value at x, or nullopt at a pole.
std::optional<KNum> rf_eval(const RatFunc& f, const KNum& x);

// outer(inner).  Throws DegreeBudgetExceeded when
// degree(outer)*degree(inner) > budget, before any expansion happens.
// Throws ZeroInputError when inner is a constant sitting on a pole of outer.
RatFunc rf_compose(const RatFunc& outer, const RatFunc& inner,
                   long budget = kDefaultDegreeBudget);

}  // namespace lattes
