#pragma once

#include "greenseq/matrix.hpp"

#include <json.hpp>

#include <vector>

namespace greenseq {

/// Valued arrow source -> target with valuation pair (d_st, d_ts).
/// Vertices are 1-based everywhere this type appears.
struct Arrow {
    int source = 0;
    int target = 0;
    Int d_st;
    Int d_ts;

    bool operator==(const Arrow&) const = default;
};

/// Quiver with positive integer arrow valuations and vertex weights f_i
/// satisfying d_st * f_t = d_ts * f_s on every arrow. No loops, no 2-cycles.
struct ValuedQuiver {
    int n = 0;
    std::vector<Int> weights;
    std::vector<Arrow> arrows;  // kept sorted by (source, target)

    void validate() const;  // throws std::invalid_argument on any broken invariant
    void canonicalize();    // sorts the arrow list

    bool operator==(const ValuedQuiver&) const = default;

    static ValuedQuiver from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

/// Skew-symmetrizable matrix B with diagonal symmetrizer D (as weight list).
struct ExchangeMatrix {
    IntMat b;
    std::vector<Int> d;

    int size() const { return b.rows(); }
    void validate() const;  // zero diagonal, diag(D)*B skew-symmetric, D positive

    bool operator==(const ExchangeMatrix&) const = default;

    static ExchangeMatrix from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

ExchangeMatrix exchange_from_quiver(const ValuedQuiver& q);
ValuedQuiver quiver_from_exchange(const ExchangeMatrix& ex);

/// E_ii = f_i, E_st = -d_st * f_t on arrows s->t, 0 elsewhere; the off-diagonal
/// entry is the bimodule dimension, so DB = E^t - E. Works for cyclic quivers
/// too (same rule applied verbatim).
IntMat euler_matrix(const ValuedQuiver& q);

/// Fomin-Zelevinsky matrix mutation in direction k (1-based) applied to an
/// m x n matrix with m >= n; covers both the n x n and the extended 2n x n case.
IntMat mutate_matrix(const IntMat& m, int k);

ExchangeMatrix mutate_exchange(const ExchangeMatrix& ex, int k);

/// The column-operation matrix X_j^eps: identity except row j, where the
/// (j,j) entry is -1 and (j,k) = max(eps * b_jk, 0).
IntMat x_matrix(const IntMat& b, int j, int sign);

/// Arrows s->t with d_st * d_ts >= 4 (representation-infinite rank 2 subquiver).
std::vector<Arrow> infinite_type_arrows(const ValuedQuiver& q);

/// Reads a quiver file that holds either the quiver JSON or the (B, D) JSON.
ExchangeMatrix load_exchange(const nlohmann::json& j);

}  // namespace greenseq
