#pragma once

#include "greenseq/quiver.hpp"

namespace greenseq {

/// Two-variable Chebyshev-like polynomial values:
/// U_{-1} = 0, U_0 = 1, U_n(x,y) = x * U_{n-1}(y,x) - U_{n-2}(x,y).
/// Memoized; safe for concurrent callers.
Int chebyshev_u(long n, const Int& x, const Int& y);

/// Preinjective root ladder of the rank 2 subquiver on one arrow j -> i,
/// extended by zero to the ambient quiver. q_0 = e_j, q_{-1} = -e_i,
/// q_t(i) = U_{t-1}(b,a), q_t(j) = U_t(a,b) with a = d_ij, b = d_ji.
struct Rank2Ladder {
    int n = 0;
    int source = 0;  // j
    int target = 0;  // i
    Int a;           // d_ij (valuation entry named from the target side)
    Int b;           // d_ji

    /// Root q_t for t >= -1, as a vector in Z^n.
    std::vector<Int> root(long t) const;
};

/// Throws std::invalid_argument if the quiver has no arrow source -> target.
Rank2Ladder ladder(const ValuedQuiver& q, int source, int target);

/// Cross-check X_j^+ q_t = q'_{t-1} for 0 <= t <= t_max, where q' is the
/// ladder of the reversed arrow in the mutated quiver mu_j Q.
bool ladder_rotation_check(const ValuedQuiver& q, int source, int target, long t_max);

}  // namespace greenseq
