#pragma once

#include <map>
#include <optional>
#include <string>

#include "lattes/endo.hpp"

namespace lattes {

enum class Level { ee, p1 };
enum class VerifyOutcome { confirmed, refuted };
enum class ProjectionCheck { consistent, inconsistent };

const char* level_name(Level level);
const char* outcome_name(VerifyOutcome outcome);

/// Pre-periodicity status of one diagonal.  minimal_k is set exactly when
/// preperiodic is true; the minimal pair is then (0, *minimal_k).
struct LevelStatus {
    bool preperiodic = false;
    std::optional<long> minimal_k;
};

bool operator==(const LevelStatus& lhs, const LevelStatus& rhs);
bool operator!=(const LevelStatus& lhs, const LevelStatus& rhs);

/// Decision record for one pair of multipliers.
///
/// Invariants: ee.preperiodic == p1.preperiodic, and when both hold,
/// ee.minimal_k / p1.minimal_k is 1 or 2.
struct Verdict {
    KNum quotient;
    LevelStatus ee;
    LevelStatus p1;
    std::string note;
};

/// Decides pre-periodicity of the diagonal at both levels from ring
/// arithmetic alone.  Throws ZeroInputError / RingMismatchError.
Verdict decide_diagonal(const QuadInt& omega, const QuadInt& omega_prime);

/// Cache of symbolic iterates keyed by curve, multiplier and power.  Sweeps
/// that verify many pairs over the same curve share the expensive
/// compositions instead of rebuilding them per call.
class SymbolicWorkspace {
public:
    /// j-fold self-composition of the endomorphism of omega, j >= 1.
    const Endo& endo_power(const Curve& c, const QuadInt& omega, long j,
                           long budget = kDefaultDegreeBudget);
    /// j-fold self-composition of the Lattes map of omega, j >= 1.
    const RatFunc& lattes_power(const Curve& c, const QuadInt& omega, long j,
                                long budget = kDefaultDegreeBudget);

private:
    std::map<std::string, Endo> endos_;
    std::map<std::string, RatFunc> maps_;
};

/// Ring-level check: at EE, omega^k == omega'^k; at P1, equality up to sign.
VerifyOutcome verify_pair_ring(Level level, const QuadInt& omega,
                               const QuadInt& omega_prime, long k);

/// Symbolic check of the same identities on the actual maps.  At EE the
/// k-fold endomorphism compositions are compared with endo_eq; at P1 the
/// k-fold Lattes compositions are compared as canonical rational functions.
/// With n > 0 both sides are additionally pre-composed with n iterations of
/// omega', exercising the fact that the criterion does not depend on n.
/// Throws DegreeBudgetExceeded when the composed degree would pass budget.
VerifyOutcome verify_pair_symbolic(Level level, const Curve& c,
                                   const QuadInt& omega,
                                   const QuadInt& omega_prime, long k,
                                   long n = 0,
                                   long budget = kDefaultDegreeBudget,
                                   SymbolicWorkspace* ws = nullptr);

/// Bug trap for the one-way implication between levels: a confirmed EE
/// identity at k forces the P1 identity at k.  Runs both the ring and the
/// symbolic verifier and reports Inconsistent if either method violates it.
ProjectionCheck projection_check(const Curve& c, const QuadInt& omega,
                                 const QuadInt& omega_prime, long k,
                                 long budget = kDefaultDegreeBudget,
                                 SymbolicWorkspace* ws = nullptr);

}  // namespace lattes
