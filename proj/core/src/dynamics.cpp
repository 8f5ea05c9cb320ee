#include "lattes/dynamics.hpp"

#include <climits>
#include <stdexcept>

namespace lattes {

namespace {

void require_nonzero_pair(const QuadInt& omega, const QuadInt& omega_prime) {
    if (omega.is_zero() || omega_prime.is_zero()) {
        throw ZeroInputError("pre-periodicity needs nonzero multipliers");
    }
    check_same_ring(omega, omega_prime);
}

void require_positive_k(long k) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
}

std::string curve_key(const Curve& c) {
    return std::string(ring_name(c.ring)) + '[' + c.A.u.get_str() + ',' +
           c.A.v.get_str() + ';' + c.B.u.get_str() + ',' + c.B.v.get_str() +
           ']';
}

std::string power_key(const Curve& c, const QuadInt& omega, long j) {
    return curve_key(c) + '|' + omega.a.get_str() + ',' + omega.b.get_str() +
           '^' + std::to_string(j);
}

long saturate(const mpz_class& v) {
    return v.fits_slong_p() ? v.get_si() : LONG_MAX;
}

// Degree of the larger side the symbolic verifier will build:
// norm(omega')^n * norm(omega)^k against norm(omega')^(n+k).
void check_symbolic_budget(const QuadInt& omega, const QuadInt& omega_prime,
                           long k, long n, long budget) {
    mpz_class lhs, rhs;
    mpz_pow_ui(lhs.get_mpz_t(), norm(omega).get_mpz_t(),
               static_cast<unsigned long>(k));
    mpz_pow_ui(rhs.get_mpz_t(), norm(omega_prime).get_mpz_t(),
               static_cast<unsigned long>(n + k));
    if (n > 0) {
        mpz_class extra;
        mpz_pow_ui(extra.get_mpz_t(), norm(omega_prime).get_mpz_t(),
                   static_cast<unsigned long>(n));
        lhs *= extra;
    }
    mpz_class worst = lhs > rhs ? lhs : rhs;
    if (worst > budget) throw DegreeBudgetExceeded(saturate(worst), budget);
}

}  // namespace

const char* level_name(Level level) {
    return level == Level::ee ? "ee" : "p1";
}

const char* outcome_name(VerifyOutcome outcome) {
    return outcome == VerifyOutcome::confirmed ? "confirmed" : "refuted";
}

bool operator==(const LevelStatus& lhs, const LevelStatus& rhs) {
    return lhs.preperiodic == rhs.preperiodic && lhs.minimal_k == rhs.minimal_k;
}

bool operator!=(const LevelStatus& lhs, const LevelStatus& rhs) {
    return !(lhs == rhs);
}

Verdict decide_diagonal(const QuadInt& omega, const QuadInt& omega_prime) {
    require_nonzero_pair(omega, omega_prime);
    Verdict v{embed(omega) * inv(embed(omega_prime)), {}, {}, {}};
    std::optional<long> full = unit_root_order(omega, omega_prime);
    std::optional<long> signed_k = signed_root_order(omega, omega_prime);
    if (full.has_value() != signed_k.has_value()) {
        throw std::logic_error("root-of-unity orders disagree on existence");
    }
    if (!full) {
        v.note = "quotient is not a root of unity; neither diagonal returns";
        return v;
    }
    v.ee = LevelStatus{true, full};
    v.p1 = LevelStatus{true, signed_k};
    long ratio = *full / *signed_k;
    if (*full % *signed_k != 0 || (ratio != 1 && ratio != 2)) {
        throw std::logic_error("minimal periods violate the 1-or-2 ratio");
    }
    if (ratio == 1) {
        v.note = "quotient^" + std::to_string(*full) +
                 " = 1; both diagonals first return at k = " +
                 std::to_string(*full);
    } else {
        v.note = "quotient^" + std::to_string(*signed_k) +
                 " = -1; the sign dies on the x-line, so the x-line diagonal "
                 "returns at k = " +
                 std::to_string(*signed_k) + " and the surface diagonal at " +
                 std::to_string(*full);
    }
    return v;
}

const Endo& SymbolicWorkspace::endo_power(const Curve& c, const QuadInt& omega,
                                          long j, long budget) {
    if (j < 1) throw std::invalid_argument("power must be >= 1");
    auto it = endos_.find(power_key(c, omega, j));
    if (it != endos_.end()) return it->second;
    const std::string base_key = power_key(c, omega, 1);
    if (endos_.find(base_key) == endos_.end()) {
        endos_.emplace(base_key, endo_from_quadint(c, omega, budget));
    }
    const Endo& base = endos_.at(base_key);
    const Endo* acc = &base;
    for (long i = 2; i <= j; ++i) {
        auto found = endos_.find(power_key(c, omega, i));
        if (found == endos_.end()) {
            found = endos_
                        .emplace(power_key(c, omega, i),
                                 endo_compose(c, *acc, base, budget))
                        .first;
        }
        acc = &found->second;
    }
    return *acc;
}

const RatFunc& SymbolicWorkspace::lattes_power(const Curve& c,
                                               const QuadInt& omega, long j,
                                               long budget) {
    if (j < 1) throw std::invalid_argument("power must be >= 1");
    auto it = maps_.find(power_key(c, omega, j));
    if (it != maps_.end()) return it->second;
    const std::string base_key = power_key(c, omega, 1);
    if (maps_.find(base_key) == maps_.end()) {
        maps_.emplace(base_key, lattes(c, omega, budget).map);
    }
    const RatFunc& base = maps_.at(base_key);
    const RatFunc* acc = &base;
    for (long i = 2; i <= j; ++i) {
        auto found = maps_.find(power_key(c, omega, i));
        if (found == maps_.end()) {
            found = maps_
                        .emplace(power_key(c, omega, i),
                                 rf_compose(*acc, base, budget))
                        .first;
        }
        acc = &found->second;
    }
    return *acc;
}

VerifyOutcome verify_pair_ring(Level level, const QuadInt& omega,
                               const QuadInt& omega_prime, long k) {
    require_positive_k(k);
    require_nonzero_pair(omega, omega_prime);
    QuadInt lhs = pow(omega, static_cast<unsigned long>(k));
    QuadInt rhs = pow(omega_prime, static_cast<unsigned long>(k));
    bool same = lhs == rhs;
    if (level == Level::p1) same = same || lhs == -rhs;
    return same ? VerifyOutcome::confirmed : VerifyOutcome::refuted;
}

VerifyOutcome verify_pair_symbolic(Level level, const Curve& c,
                                   const QuadInt& omega,
                                   const QuadInt& omega_prime, long k, long n,
                                   long budget, SymbolicWorkspace* ws) {
    require_positive_k(k);
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    require_nonzero_pair(omega, omega_prime);
    if (omega.ring != c.ring) {
        throw RingMismatchError("multiplier ring and curve ring differ");
    }
    check_symbolic_budget(omega, omega_prime, k, n, budget);
    SymbolicWorkspace local;
    SymbolicWorkspace& w = ws ? *ws : local;
    if (level == Level::ee) {
        const Endo& pk = w.endo_power(c, omega, k, budget);
        const Endo& rhs = w.endo_power(c, omega_prime, n + k, budget);
        if (n == 0) {
            return endo_eq(pk, rhs) ? VerifyOutcome::confirmed
                                    : VerifyOutcome::refuted;
        }
        Endo lhs = endo_compose(c, w.endo_power(c, omega_prime, n, budget), pk,
                                budget);
        return endo_eq(lhs, rhs) ? VerifyOutcome::confirmed
                                 : VerifyOutcome::refuted;
    }
    const RatFunc& pk = w.lattes_power(c, omega, k, budget);
    const RatFunc& rhs = w.lattes_power(c, omega_prime, n + k, budget);
    if (n == 0) {
        return pk == rhs ? VerifyOutcome::confirmed : VerifyOutcome::refuted;
    }
    RatFunc lhs =
        rf_compose(w.lattes_power(c, omega_prime, n, budget), pk, budget);
    return lhs == rhs ? VerifyOutcome::confirmed : VerifyOutcome::refuted;
}

ProjectionCheck projection_check(const Curve& c, const QuadInt& omega,
                                 const QuadInt& omega_prime, long k,
                                 long budget, SymbolicWorkspace* ws) {
    bool ring_ee =
        verify_pair_ring(Level::ee, omega, omega_prime, k) ==
        VerifyOutcome::confirmed;
    bool ring_p1 =
        verify_pair_ring(Level::p1, omega, omega_prime, k) ==
        VerifyOutcome::confirmed;
    if (ring_ee && !ring_p1) return ProjectionCheck::inconsistent;
    bool sym_ee = verify_pair_symbolic(Level::ee, c, omega, omega_prime, k, 0,
                                       budget, ws) == VerifyOutcome::confirmed;
    bool sym_p1 = verify_pair_symbolic(Level::p1, c, omega, omega_prime, k, 0,
                                       budget, ws) == VerifyOutcome::confirmed;
    if (sym_ee && !sym_p1) return ProjectionCheck::inconsistent;
    return ProjectionCheck::consistent;
}

}  // namespace lattes
