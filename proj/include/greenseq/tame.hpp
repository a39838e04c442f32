#pragma once

#include "greenseq/quiver.hpp"

namespace greenseq {

enum class TranslateDirection { Forward, Backward };

/// Exact linear-algebra context for an acyclic tame valued quiver: Euler
/// matrix, AR translation tau = -E^-1 E^t, the null root eta generating
/// ker(E + E^t), the period m with tau^m - I = eta * delta^t, and the defect
/// functional delta.
struct TameContext {
    IntMat e;
    std::vector<Int> d;
    RatMat tau;
    RatMat tau_inv;
    std::vector<Int> eta;
    int period = 0;           // m
    std::vector<Int> defect;  // delta, as a row functional

    int size() const { return e.rows(); }

    /// delta(x) = defect . x
    Int defect_of(const std::vector<Int>& x) const;
};

/// Builds the context; throws std::invalid_argument when ker(E + E^t) does not
/// have rank 1 (not connected tame) or no period <= cap exists.
TameContext make_tame_context(const ValuedQuiver& q, int period_cap = 64);

/// <x, y> = x^t E y
Int euler_pairing(const TameContext& ctx, const std::vector<Int>& x, const std::vector<Int>& y);

/// tau x (forward) or tau^-1 x (backward); throws invariant_error when the
/// exact rational image is not integral.
std::vector<Int> ar_translate(const TameContext& ctx, const std::vector<Int>& x,
                              TranslateDirection dir);

/// Null root: primitive positive generator of ker(E + E^t). Also available
/// standalone for quivers where the full context (period, defect) is not needed.
std::vector<Int> null_root(const IntMat& e);

/// Matrix whose i-th column is the projective root pi_i (solved from
/// E^t pi_i = f_i e_i).
IntMat projective_roots(const TameContext& ctx);

struct RootSets {
    std::vector<std::vector<Int>> preprojective;  // P_k, k*n vectors
    std::vector<std::vector<Int>> preinjective;   // I_k, k*n vectors
};

RootSets root_sets(const TameContext& ctx, int k);

struct RegionMembership {
    bool in_w = false;  // <x, alpha> > 0 for some alpha in P_k
    bool in_v = false;  // <x, beta> >= 0 for all beta in I_k
};

RegionMembership region_membership(const TameContext& ctx, const std::vector<Int>& x, int k);

/// V solved exactly from V^t E C = -D; integrality asserted.
IntMat cluster_dim_matrix(const TameContext& ctx, const IntMat& c);

enum class RegionClass { Inside, Outside };

struct RegionReport {
    RegionClass cls = RegionClass::Outside;  // against V_k \ W_k
    RegionMembership barycenter;
};

/// Classifies the cone R(T) of the cluster with c-matrix C against V_k \ W_k
/// by testing the column barycenter of V; a strict straddle across columns
/// raises invariant_error.
RegionReport region_class(const TameContext& ctx, const IntMat& c, int k);

}  // namespace greenseq
