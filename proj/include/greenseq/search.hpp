#pragma once

#include "greenseq/sequences.hpp"

#include <map>
#include <string>

namespace greenseq {

struct SearchConfig {
    int max_length = 1;
    int max_red = 0;
    bool prune_infinite_source = false;
    bool prune_repetition = true;
    int jobs = 1;  // >1 splits the top-level subtrees across threads

    void validate() const;
};

struct FoundSequence {
    std::vector<int> ks;
    int red_count = 0;
};

struct SearchResult {
    std::vector<FoundSequence> sequences;
    int bound = 0;
    bool pruned = false;
};

/// Permutation-invariant key for a c-matrix: its columns sorted
/// lexicographically, rendered as a string.
std::string canonical_c_key(const IntMat& c);

/// All maximal green sequences of length <= cfg.max_length, in lexicographic
/// order; each result is re-validated through classify().
SearchResult enumerate_mgs(const ExchangeMatrix& b0, const SearchConfig& cfg);

/// All reddening sequences with red count <= cfg.max_red and length <=
/// cfg.max_length. prune_infinite_source is rejected here when max_red > 0.
SearchResult enumerate_reddening(const ExchangeMatrix& b0, const SearchConfig& cfg);

/// Green vertices of the seed that are not sources of infinite-type arrows
/// of the current quiver (sound restriction for maximal green search only).
std::vector<int> prune_check(const Seed& s);

/// False (prune) iff some canonical class occurs more than max_red + 1 times.
bool repetition_prune_check(const std::map<std::string, int>& path_counts, int max_red);

struct ExchangeGraphSlice {
    struct Node {
        std::string key;
        IntMat c;  // representative c-matrix
        IntMat b;  // representative exchange matrix
        int depth = 0;
    };
    struct Edge {
        int from = 0;  // node index on the green side
        int to = 0;    // node index on the red side
        int vertex = 0;
    };
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    int depth_bound = 0;
};

/// BFS slice of the oriented exchange graph from the initial seed; edges are
/// oriented in the green direction.
ExchangeGraphSlice export_exchange_graph(const ExchangeMatrix& b0, int depth);

std::string to_dot(const ExchangeGraphSlice& g);

}  // namespace greenseq
