#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "horoflex/numeric.hpp"

namespace horoflex {

// feasibility of { x >= 0 : A x = b } over the rationals
struct LpResult {
    bool feasible = false;
    RatVec x;       // feasible point when feasible
    RatVec farkas;  // y with y^T A >= 0 and y^T b < 0 when infeasible
};
LpResult lp_feasible(const RatMat& A, const RatVec& b);

// maximum of x[j] over { x >= 0 : A x = b }; the system must be feasible
struct LpMax {
    enum Kind { Unbounded, Positive, Zero } kind = Unbounded;
    Rat value;   // Positive
    RatVec x;    // a feasible point attaining the outcome (Positive/Zero)
    RatVec dual; // Zero: u with u^T A_k >= delta_{kj} for all k and u^T b <= 0
};
LpMax lp_max_coordinate(const RatMat& A, const RatVec& b, std::size_t j);

// any rational solution of A x = b with x free, or nullopt
std::optional<RatVec> solve_rational(const RatMat& A, const RatVec& b);

struct FarkasCertificate {
    RatVec y;  // y^T A >= 0, y^T b < 0
};

struct CongruenceCertificate {
    Int modulus;                      // d > 0
    IntVec functional;                // u with u^T a_k = 0 (mod d) for covered k
    std::vector<std::size_t> columns; // covered column indices
};

struct ForcedZeroCertificate {
    std::size_t column;  // j
    RatVec dual;         // u with u^T A_k >= delta_{kj}, u^T b <= 0
};

struct IntFeasibility {
    enum class Kind {
        Solution,
        InfeasibleLP,
        InfeasibleCongruence,
        InfeasibleComposite,
        UnknownUpToBound,
    };
    Kind kind = Kind::UnknownUpToBound;
    IntVec solution;
    std::optional<FarkasCertificate> farkas;
    std::optional<CongruenceCertificate> congruence;
    std::vector<ForcedZeroCertificate> forced_zero;
    Int bound = 0;

    bool decided() const { return kind != Kind::UnknownUpToBound; }
    bool infeasible_certified() const {
        return kind == Kind::InfeasibleLP || kind == Kind::InfeasibleCongruence ||
               kind == Kind::InfeasibleComposite;
    }
};

// Decides existence of integral x >= 0 with sum_k x_k * columns[k] = b.
// Tries exact rational LP (Farkas certificate), then integer solvability over
// the column lattice (congruence certificate), then a forced-zero reduction
// combining both, and finally exhaustive search over sum x_k <= bound.
IntFeasibility solve_nonneg_integer(const IntMat& columns, const IntVec& b, const Int& bound);

// re-checks a certificate (or solution) against the system, from scratch
bool replay(const IntMat& columns, const IntVec& b, const IntFeasibility& r);

}  // namespace horoflex
