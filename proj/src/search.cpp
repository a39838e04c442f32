#include "greenseq/search.hpp"

#include <algorithm>
#include <future>
#include <queue>
#include <set>
#include <sstream>

namespace greenseq {

void SearchConfig::validate() const {
    if (max_length < 1) throw std::invalid_argument("max_length must be >= 1");
    if (max_red < 0) throw std::invalid_argument("max_red must be >= 0");
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    if (prune_infinite_source && max_red > 0)
        throw std::invalid_argument(
            "infinite-source pruning is only sound for maximal green search (max_red = 0)");
}

std::string canonical_c_key(const IntMat& c) {
    std::vector<std::vector<Int>> cols;
    cols.reserve(c.cols());
    for (int j = 0; j < c.cols(); ++j) cols.push_back(c.column(j));
    std::sort(cols.begin(), cols.end());
    std::ostringstream os;
    for (const auto& col : cols) {
        for (const Int& v : col) os << v << ",";
        os << "|";
    }
    return os.str();
}

std::vector<int> prune_check(const Seed& s) {
    ValuedQuiver q = quiver_from_exchange(s.b);
    std::set<int> bad_sources;
    for (const Arrow& a : infinite_type_arrows(q)) bad_sources.insert(a.source);
    std::vector<int> admissible;
    for (int k = 1; k <= s.size(); ++k)
        if (vertex_color(s, k) == VertexColor::Green && !bad_sources.count(k))
            admissible.push_back(k);
    return admissible;
}

bool repetition_prune_check(const std::map<std::string, int>& path_counts, int max_red) {
    for (const auto& [key, count] : path_counts)
        if (count > max_red + 1) return false;
    return true;
}

namespace {

struct Dfs {
    SearchConfig cfg;
    std::vector<FoundSequence> out;
    std::vector<int> path;
    std::map<std::string, int> key_counts;

    void go(const Seed& s, int red_used) {
        if (!path.empty() && negative_permutation(s.c))
            out.push_back({path, red_used});
        if (static_cast<int>(path.size()) >= cfg.max_length) return;

        std::vector<int> admissible;
        if (cfg.prune_infinite_source) admissible = prune_check(s);
        for (int k = 1; k <= s.size(); ++k) {
            VertexColor color = vertex_color(s, k);
            if (color == VertexColor::Red && red_used >= cfg.max_red) continue;
            if (color == VertexColor::Green && cfg.prune_infinite_source &&
                !std::binary_search(admissible.begin(), admissible.end(), k))
                continue;
            Seed child = mutate_seed(s, k);
            std::string key;
            if (cfg.prune_repetition) {
                key = canonical_c_key(child.c);
                if (++key_counts[key] > cfg.max_red + 1) {
                    --key_counts[key];
                    continue;
                }
            }
            path.push_back(k);
            go(child, red_used + (color == VertexColor::Red ? 1 : 0));
            path.pop_back();
            if (cfg.prune_repetition) --key_counts[key];
        }
    }
};

SearchResult enumerate(const ExchangeMatrix& b0, const SearchConfig& cfg) {
    cfg.validate();
    b0.validate();
    SearchResult result;
    result.bound = cfg.max_length;
    result.pruned = cfg.prune_infinite_source || cfg.prune_repetition;

    Seed root = initial_seed(b0);
    std::string root_key = canonical_c_key(root.c);

    if (cfg.jobs <= 1 || b0.size() <= 1) {
        Dfs dfs{cfg};
        dfs.key_counts[root_key] = 1;
        dfs.go(root, 0);
        result.sequences = std::move(dfs.out);
    } else {
        // Independent subtrees per first mutation, merged in vertex order.
        std::vector<std::future<std::vector<FoundSequence>>> futures;
        for (int k = 1; k <= b0.size(); ++k)
            futures.push_back(std::async(std::launch::async, [&, k]() -> std::vector<FoundSequence> {
                VertexColor color = vertex_color(root, k);
                if (color == VertexColor::Red && cfg.max_red < 1) return {};
                if (color == VertexColor::Green && cfg.prune_infinite_source) {
                    auto adm = prune_check(root);
                    if (!std::binary_search(adm.begin(), adm.end(), k)) return {};
                }
                Dfs dfs{cfg};
                dfs.key_counts[root_key] = 1;
                Seed child = mutate_seed(root, k);
                if (cfg.prune_repetition && ++dfs.key_counts[canonical_c_key(child.c)] > cfg.max_red + 1)
                    return {};
                dfs.path.push_back(k);
                dfs.go(child, color == VertexColor::Red ? 1 : 0);
                return std::move(dfs.out);
            }));
        for (auto& f : futures) {
            auto part = f.get();
            result.sequences.insert(result.sequences.end(), part.begin(), part.end());
        }
    }

    // Every emitted sequence re-validates through classify.
    for (const FoundSequence& f : result.sequences) {
        SequenceClass cls = classify(run_sequence(b0, f.ks));
        if (cls.kind == SequenceKind::NotReddening || cls.red_count != f.red_count)
            throw invariant_error("search emitted a sequence that fails re-classification");
    }
    return result;
}

}  // namespace

SearchResult enumerate_mgs(const ExchangeMatrix& b0, const SearchConfig& cfg) {
    SearchConfig c = cfg;
    c.max_red = 0;
    return enumerate(b0, c);
}

SearchResult enumerate_reddening(const ExchangeMatrix& b0, const SearchConfig& cfg) {
    return enumerate(b0, cfg);
}

ExchangeGraphSlice export_exchange_graph(const ExchangeMatrix& b0, int depth) {
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    b0.validate();
    ExchangeGraphSlice g;
    g.depth_bound = depth;

    Seed init = initial_seed(b0);
    std::map<std::string, int> index;
    std::vector<Seed> rep;  // representative seed per node

    auto add_node = [&](const Seed& s, int d) {
        std::string key = canonical_c_key(s.c);
        g.nodes.push_back({key, s.c, s.b.b, d});
        rep.push_back(s);
        index[key] = static_cast<int>(g.nodes.size()) - 1;
        return index[key];
    };

    std::queue<int> todo;
    todo.push(add_node(init, 0));
    std::set<std::pair<int, int>> edge_seen;

    while (!todo.empty()) {
        int u = todo.front();
        todo.pop();
        Seed seed_u = rep[u];
        int du = g.nodes[u].depth;
        for (int k = 1; k <= seed_u.size(); ++k) {
            Seed child = mutate_seed(seed_u, k);
            std::string key = canonical_c_key(child.c);
            int v;
            auto it = index.find(key);
            if (it != index.end()) {
                v = it->second;
            } else if (du < depth) {
                v = add_node(child, du + 1);
                todo.push(v);
            } else {
                continue;
            }
            bool green = vertex_color(seed_u, k) == VertexColor::Green;
            auto pair = std::minmax(u, v);
            if (edge_seen.insert({pair.first, pair.second}).second)
                g.edges.push_back({green ? u : v, green ? v : u, k});
        }
    }
    return g;
}

std::string to_dot(const ExchangeGraphSlice& g) {
    std::ostringstream os;
    os << "digraph exchange {\n";
    os << "  rankdir=LR;\n";
    for (size_t i = 0; i < g.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << i << "\", tooltip=\"" << to_string(g.nodes[i].c)
           << "\"];\n";
    for (const auto& e : g.edges)
        os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.vertex
           << "\", color=green];\n";
    os << "}\n";
    return os.str();
}

}  // namespace greenseq
