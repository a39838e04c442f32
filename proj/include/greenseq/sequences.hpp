#pragma once

#include "greenseq/seed.hpp"

#include <optional>

namespace greenseq {

/// 1-based permutation; sigma[j-1] = sigma(j).
struct Permutation {
    std::vector<int> map;

    int operator()(int j) const { return map[j - 1]; }
    int inverse(int k) const;
    bool operator==(const Permutation&) const = default;

    static Permutation identity(int n);
    std::string cycle_notation() const;  // e.g. "(1 3 2)", "id" for the identity
};

struct TrajectoryStep {
    int vertex = 0;              // k_s, 1-based
    std::vector<Int> c_vector;   // column k_s of C_s, taken before the step
    VertexColor color = VertexColor::Green;
    Seed after;
};

struct MutationTrajectory {
    ExchangeMatrix b0;
    Seed initial;
    std::vector<TrajectoryStep> steps;

    int length() const { return static_cast<int>(steps.size()); }
    const Seed& terminal() const { return steps.empty() ? initial : steps.back().after; }
    int red_count() const;
    std::vector<int> vertices() const;
};

enum class SequenceKind { NotReddening, Reddening, MaximalGreen };

struct SequenceClass {
    SequenceKind kind = SequenceKind::NotReddening;
    int red_count = 0;                 // meaningful when reddening
    std::optional<Permutation> sigma;  // set when reddening
};

MutationTrajectory run_sequence(const ExchangeMatrix& b0, const std::vector<int>& ks);

/// Reads the permutation off a negative permutation matrix -P_sigma
/// (column j equals -e_{sigma(j)}); empty if C is not of that form.
std::optional<Permutation> negative_permutation(const IntMat& c);

SequenceClass classify(const MutationTrajectory& t);

/// Rotation of a reddening sequence: (k_1..k_{m-1}, sigma^-1(k_0)) on mu_{k_0} B0.
/// The result is re-classified; identical sigma and red count are enforced.
std::pair<ExchangeMatrix, std::vector<int>> rotate(const ExchangeMatrix& b0,
                                                   const std::vector<int>& ks);

/// Lockstep check of C'_s = X_{k_0}^{eps(s)} C_s with eps read from the
/// k_0-hemisphere of C_s, for every s >= 1.
bool mutation_formula_check(const ExchangeMatrix& b0, const std::vector<int>& ks);

/// Suffix after the last red step (the whole trajectory when all steps are green).
MutationTrajectory maximal_green_tail(const MutationTrajectory& t);

struct OneMoreTimeCounts {
    int plus = 0;
    int minus = 0;
};

/// How many steps mutate the c-vector +e_k vs -e_k.
OneMoreTimeCounts one_more_time_counts(const MutationTrajectory& t, int k);

/// After the last mutation at c-vector e_{k_0}, the original c-vector labels
/// transport to the rotated ones by c_s = X_{k_0}^+ c'_s.
bool post_tail_transport_check(const ExchangeMatrix& b0, const std::vector<int>& ks);

}  // namespace greenseq
