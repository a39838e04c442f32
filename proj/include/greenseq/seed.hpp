#pragma once

#include "greenseq/quiver.hpp"

namespace greenseq {

enum class VertexColor { Green, Red };

enum class Sign { Plus, Minus };

/// Sign of a vector whose entries are all >= 0 or all <= 0.
/// Throws invariant_error on a mixed-sign or zero vector when zero is disallowed.
Sign coherent_sign(const std::vector<Int>& v, const std::string& what);

/// Extended seed along a mutation trajectory: current B together with the
/// c-matrix C, plus the initial B the trajectory started from.
struct Seed {
    ExchangeMatrix b;
    IntMat c;
    IntMat b0;

    int size() const { return b.size(); }

    /// det C = +-1, sign-coherent nonzero columns, NZ identity DB = C^t D B0 C.
    void validate() const;
};

Seed initial_seed(const ExchangeMatrix& b);

/// One mutation step: B by the entrywise rule, C by right-multiplication with
/// X_k^+ or X_k^- built from the current B, chosen by the sign of column k.
Seed mutate_seed(const Seed& s, int k);

/// G = (D C^-1 D^-1)^t, exactly; entries are integral by sign coherence.
IntMat g_matrix(const Seed& s);

VertexColor vertex_color(const Seed& s, int k);

/// Which k-hemisphere the c-matrix lies in: the sign of row k of G.
Sign hemisphere(const Seed& s, int k);

Sign hemisphere(const IntMat& g, int k);

/// Nakanishi-Zelevinsky consistency: diag(D) * B == C^t diag(D) B0 C.
bool check_nz(const Seed& s);

bool is_simple_plus(const std::vector<Int>& v, int k);   // v == +e_k (1-based k)
bool is_simple_minus(const std::vector<Int>& v, int k);  // v == -e_k

}  // namespace greenseq
