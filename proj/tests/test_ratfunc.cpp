#include <doctest.h>

#include <random>
#include <vector>

#include "lattes/ratfunc.hpp"

using namespace lattes;

namespace {

mpq_class frac(long n, long d) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

// Schoolbook product straight over the field, independent of the
// integer-normalized fast path.
Poly naive_mul(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly::zero(f.ring);
    std::vector<KNum> out(f.c.size() + g.c.size() - 1, KNum::zero(f.ring));
    for (size_t a = 0; a < f.c.size(); ++a) {
        for (size_t b = 0; b < g.c.size(); ++b) {
            out[a + b] = out[a + b] + f.c[a] * g.c[b];
        }
    }
    return Poly::from_coeffs(f.ring, std::move(out));
}

// Plain Euclid over the field, independent of the subresultant path.
Poly euclid_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return poly_monic(a);
}

KNum random_knum(std::mt19937_64& rng, RingId r) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    return KNum{r, frac(num(rng), den(rng)), frac(num(rng), den(rng))};
}

Poly random_poly(std::mt19937_64& rng, RingId r, long maxdeg) {
    std::uniform_int_distribution<long> dd(0, maxdeg);
    long deg = dd(rng);
    std::vector<KNum> c;
    for (long i = 0; i <= deg; ++i) c.push_back(random_knum(rng, r));
    if (c.back().is_zero()) c.back() = KNum::one(r);
    return Poly::from_coeffs(r, std::move(c));
}

RatFunc random_ratfunc(std::mt19937_64& rng, RingId r, long maxdeg,
                       bool nonconstant = false) {
    for (;;) {
        Poly num = random_poly(rng, r, maxdeg);
        Poly den = random_poly(rng, r, maxdeg);
        RatFunc f = rf_normalize(num, den);
        if (!nonconstant || !f.is_constant()) return f;
    }
}

Poly poly_of(RingId r, std::vector<long> asc) {
    std::vector<KNum> c;
    for (long v : asc) c.push_back(KNum{r, v, 0});
    return Poly::from_coeffs(r, std::move(c));
}

const RingId kRings[] = {RingId::gaussian, RingId::eisenstein};

}  // namespace

TEST_CASE("poly basics") {
    RingId g = RingId::gaussian;
    Poly z = Poly::zero(g);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.coeff(3) == KNum::zero(g));
    CHECK_THROWS_AS(z.leading(), ZeroInputError);
    Poly p = Poly::from_coeffs(
        g, {KNum::one(g), KNum::zero(g), KNum::zero(g), KNum::zero(g)});
    CHECK(p.degree() == 0);  // trailing zeros trimmed
    CHECK(Poly::x(g).degree() == 1);
    CHECK(Poly::constant(KNum::zero(g)).is_zero());
    CHECK(poly_of(g, {1, 2}) + poly_of(g, {1, -2}) == poly_of(g, {2}));
    CHECK(poly_of(g, {0, 1}) * poly_of(g, {0, 1}) == poly_of(g, {0, 0, 1}));
    CHECK(poly_derivative(poly_of(g, {5, 3, 1})) == poly_of(g, {3, 2}));
    CHECK(poly_eval(poly_of(g, {1, 1, 1}), KNum{g, 2, 0}) == KNum{g, 7, 0});
}

TEST_CASE("product matches the schoolbook oracle") {
    std::mt19937_64 rng(2024);
    for (RingId r : kRings) {
        for (int trial = 0; trial < 200; ++trial) {
            Poly f = random_poly(rng, r, 12);
            Poly g = random_poly(rng, r, 12);
            CHECK(f * g == naive_mul(f, g));
        }
    }
}

TEST_CASE("divrem") {
    RingId g = RingId::gaussian;
    auto [q, r] = poly_divrem(poly_of(g, {1, 0, 0, 1}), poly_of(g, {1, 1}));
    CHECK(q == poly_of(g, {1, -1, 1}));
    CHECK(r.is_zero());
    CHECK_THROWS_AS(poly_divrem(poly_of(g, {1}), Poly::zero(g)),
                    ZeroInputError);
    std::mt19937_64 rng(606);
    for (RingId ring : kRings) {
        for (int trial = 0; trial < 150; ++trial) {
            Poly a = random_poly(rng, ring, 9);
            Poly b = random_poly(rng, ring, 5);
            auto [quot, rem] = poly_divrem(a, b);
            CHECK(quot * b + rem == a);
            CHECK(rem.degree() < b.degree());
        }
    }
}

TEST_CASE("gcd matches the euclid oracle") {
    std::mt19937_64 rng(71);
    for (RingId r : kRings) {
        for (int trial = 0; trial < 120; ++trial) {
            Poly common = random_poly(rng, r, 6);
            Poly a = naive_mul(common, random_poly(rng, r, 8));
            Poly b = naive_mul(common, random_poly(rng, r, 8));
            CHECK(poly_gcd(a, b) == euclid_gcd(a, b));
        }
    }
}

TEST_CASE("gcd contract") {
    RingId g = RingId::gaussian;
    Poly f = poly_of(g, {2, 4});
    CHECK(poly_gcd(f, Poly::zero(g)) == poly_monic(f));
    CHECK(poly_gcd(Poly::zero(g), f) == poly_monic(f));
    CHECK(poly_gcd(Poly::zero(g), Poly::zero(g)).is_zero());
    // 2x^2 and 2x have monic gcd x
    CHECK(poly_gcd(poly_of(g, {0, 0, 2}), poly_of(g, {0, 2})) ==
          poly_of(g, {0, 1}));
}

TEST_CASE("gcd with a large degree gap") {
    RingId e = RingId::eisenstein;
    std::vector<KNum> big(61, KNum::zero(e));
    big[0] = KNum{e, 2, 0};
    big[1] = KNum{e, 1, 0};
    big[60] = KNum{e, 1, 0};
    Poly tall = Poly::from_coeffs(e, big);       // x^60 + x + 2
    Poly common = poly_of(e, {3, 0, 1});         // x^2 + 3
    Poly a = naive_mul(common, tall);
    Poly b = naive_mul(common, poly_of(e, {5, 1}));
    CHECK(poly_gcd(a, b) == euclid_gcd(a, b));
    CHECK(poly_gcd(a, b) == poly_monic(common));
}

TEST_CASE("canonical form") {
    RingId g = RingId::gaussian;
    RatFunc f = rf_normalize(poly_of(g, {0, 0, 2}), poly_of(g, {0, 2}));
    CHECK(f.num() == poly_of(g, {0, 1}));
    CHECK(f.den() == poly_of(g, {1}));
    RatFunc h = rf_normalize(poly_of(g, {0, 1}), poly_of(g, {2}));
    CHECK(h.num() == Poly::from_coeffs(g, {KNum::zero(g), KNum{g, frac(1, 2), 0}}));
    CHECK(h.den() == poly_of(g, {1}));
    CHECK_THROWS_AS(rf_normalize(poly_of(g, {1}), Poly::zero(g)),
                    ZeroInputError);
}

TEST_CASE("field operations keep the form canonical") {
    std::mt19937_64 rng(8181);
    for (RingId r : kRings) {
        for (int trial = 0; trial < 80; ++trial) {
            RatFunc f = random_ratfunc(rng, r, 4);
            RatFunc g = random_ratfunc(rng, r, 4);
            for (const RatFunc& h : {f + g, f - g, f * g}) {
                CHECK(h.den().leading() == KNum::one(r));
                CHECK(euclid_gcd(h.num(), h.den()).degree() <= 0);
            }
            if (!g.is_zero()) {
                RatFunc q = f / g;
                CHECK(q.den().leading() == KNum::one(r));
                CHECK(euclid_gcd(q.num(), q.den()).degree() <= 0);
                CHECK(q * g == f);
            }
            CHECK(f + g == g + f);
            CHECK((f + g) - g == f);
        }
    }
}

TEST_CASE("evaluation") {
    RingId g = RingId::gaussian;
    RatFunc inv_x = rf_normalize(poly_of(g, {1}), poly_of(g, {0, 1}));
    CHECK_FALSE(rf_eval(inv_x, KNum::zero(g)).has_value());
    RatFunc x2 = RatFunc::from_poly(poly_of(g, {0, 0, 1}));
    CHECK(rf_eval(x2, KNum{g, 1, 1}) == KNum{g, 0, 2});

    std::mt19937_64 rng(11);
    for (RingId r : kRings) {
        for (int trial = 0; trial < 120; ++trial) {
            RatFunc f = random_ratfunc(rng, r, 4);
            RatFunc h = random_ratfunc(rng, r, 4);
            KNum at = random_knum(rng, r);
            auto fv = rf_eval(f, at);
            auto hv = rf_eval(h, at);
            auto sv = rf_eval(f + h, at);
            auto pv = rf_eval(f * h, at);
            if (fv && hv) {
                // sums and products cannot acquire new poles
                REQUIRE(sv.has_value());
                REQUIRE(pv.has_value());
                CHECK(*sv == *fv + *hv);
                CHECK(*pv == *fv * *hv);
            }
        }
    }
}

TEST_CASE("composition pinned cases") {
    RingId g = RingId::gaussian;
    RatFunc minus_x = rf_normalize(poly_of(g, {0, -1}), poly_of(g, {1}));
    CHECK(rf_compose(minus_x, minus_x) == RatFunc::x(g));
    RatFunc f5 = RatFunc::from_poly(poly_of(g, {0, 1, 0, 0, 0, 1}));
    CHECK(rf_compose(f5, f5).degree() == 25);
    RatFunc inv_x = rf_normalize(poly_of(g, {1}), poly_of(g, {0, 1}));
    CHECK(rf_compose(inv_x, inv_x) == RatFunc::x(g));
    // constant inner: plain evaluation, and a pole is an error
    RatFunc two = RatFunc::constant(KNum{g, 2, 0});
    CHECK(rf_compose(inv_x, two) == RatFunc::constant(KNum{g, frac(1, 2), 0}));
    CHECK_THROWS_AS(rf_compose(inv_x, RatFunc::constant(KNum::zero(g))),
                    ZeroInputError);
    // constant outer passes through
    CHECK(rf_compose(two, inv_x) == two);
}

TEST_CASE("composition is associative") {
    std::mt19937_64 rng(5150);
    for (RingId r : kRings) {
        for (int trial = 0; trial < 60; ++trial) {
            RatFunc f = random_ratfunc(rng, r, 3);
            RatFunc g = random_ratfunc(rng, r, 3, /*nonconstant=*/true);
            RatFunc h = random_ratfunc(rng, r, 3, /*nonconstant=*/true);
            CHECK(rf_compose(rf_compose(f, g), h) ==
                  rf_compose(f, rf_compose(g, h)));
        }
    }
}

TEST_CASE("composition degree budget") {
    RingId g = RingId::gaussian;
    std::vector<KNum> c(51, KNum::zero(g));
    c[0] = KNum::one(g);
    c[50] = KNum::one(g);
    RatFunc f = RatFunc::from_poly(Poly::from_coeffs(g, c));  // x^50 + 1
    CHECK_THROWS_AS(rf_compose(f, f), DegreeBudgetExceeded);
    try {
        rf_compose(f, f, 2000);
    } catch (const DegreeBudgetExceeded& e) {
        CHECK(e.attempted() == 2500);
        CHECK(e.limit() == 2000);
    }
    CHECK(rf_compose(f, f, 2500).degree() == 2500);
}
