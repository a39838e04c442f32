#include "greenseq/quiver.hpp"
#include "greenseq/rank2.hpp"
#include "greenseq/search.hpp"
#include "greenseq/seed.hpp"
#include "greenseq/sequences.hpp"
#include "greenseq/tame.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace greenseq;

#ifndef GREENSEQ_DATA_DIR
#define GREENSEQ_DATA_DIR "data"
#endif

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

ExchangeMatrix load_exchange_file(const std::string& path) {
    return load_exchange(read_json_file(path));
}

ValuedQuiver load_quiver_file(const std::string& path) {
    json j = read_json_file(path);
    if (j.contains("arrows")) return ValuedQuiver::from_json(j);
    return quiver_from_exchange(load_exchange(j));
}

std::vector<int> parse_sequence(const std::string& s) {
    std::vector<int> ks;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        ks.push_back(std::stoi(tok));
    }
    if (ks.empty()) throw std::invalid_argument("empty mutation sequence");
    return ks;
}

std::string join_sequence(const std::vector<int>& ks) {
    std::ostringstream os;
    for (size_t i = 0; i < ks.size(); ++i) {
        if (i) os << ",";
        os << ks[i];
    }
    return os.str();
}

json mat_to_json(const IntMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(static_cast<long long>(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

std::string vec_to_string(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

std::string class_name(SequenceKind k) {
    switch (k) {
        case SequenceKind::MaximalGreen: return "maximal_green";
        case SequenceKind::Reddening: return "reddening";
        default: return "not_reddening";
    }
}

int cmd_seed(const std::string& quiver, const std::string& sequence, bool dump_c, bool dump_g,
             bool as_json) {
    ExchangeMatrix b0 = load_exchange_file(quiver);
    std::vector<int> ks = sequence.empty() ? std::vector<int>{} : parse_sequence(sequence);
    MutationTrajectory t = run_sequence(b0, ks);
    if (!dump_c && !dump_g) dump_c = true;

    std::vector<Seed> seeds{t.initial};
    for (const auto& step : t.steps) seeds.push_back(step.after);

    if (as_json) {
        json out;
        out["sequence"] = ks;
        if (dump_c) {
            out["c"] = json::array();
            for (const auto& s : seeds) out["c"].push_back(mat_to_json(s.c));
        }
        if (dump_g) {
            out["g"] = json::array();
            for (const auto& s : seeds) out["g"].push_back(mat_to_json(g_matrix(s)));
        }
        std::cout << out.dump() << "\n";
        return 0;
    }
    for (size_t s = 0; s < seeds.size(); ++s) {
        if (dump_c) std::cout << "C_" << s << "=" << mat_to_json(seeds[s].c).dump() << "\n";
        if (dump_g) std::cout << "G_" << s << "=" << mat_to_json(g_matrix(seeds[s])).dump() << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& quiver, const std::string& sequence, bool as_json) {
    ExchangeMatrix b0 = load_exchange_file(quiver);
    std::vector<int> ks = parse_sequence(sequence);
    MutationTrajectory t = run_sequence(b0, ks);
    SequenceClass cls = classify(t);
    if (as_json) {
        json out;
        out["class"] = class_name(cls.kind);
        out["length"] = static_cast<int>(ks.size());
        if (cls.kind != SequenceKind::NotReddening) {
            out["r"] = cls.red_count;
            out["sigma"] = cls.sigma->map;
        }
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "class=" << class_name(cls.kind);
    if (cls.kind == SequenceKind::Reddening) std::cout << " r=" << cls.red_count;
    std::cout << " length=" << ks.size();
    if (cls.sigma) std::cout << " sigma=" << cls.sigma->cycle_notation();
    std::cout << "\n";
    return 0;
}

int cmd_rotate(const std::string& quiver, const std::string& sequence, bool as_json) {
    ExchangeMatrix b0 = load_exchange_file(quiver);
    std::vector<int> ks = parse_sequence(sequence);
    auto [b1, rotated] = rotate(b0, ks);
    if (as_json) {
        json out;
        out["quiver"] = b1.to_json();
        out["sequence"] = rotated;
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << b1.to_json().dump() << "\n";
    std::cout << "sequence=" << join_sequence(rotated) << "\n";
    return 0;
}

int cmd_enumerate(const std::string& quiver, int max_len, int max_red, bool no_prune, int jobs,
                  bool as_json, bool mgs_only) {
    ExchangeMatrix b0 = load_exchange_file(quiver);
    SearchConfig cfg;
    cfg.max_length = max_len;
    cfg.max_red = mgs_only ? 0 : max_red;
    cfg.prune_repetition = !no_prune;
    cfg.jobs = jobs;
    SearchResult res = mgs_only ? enumerate_mgs(b0, cfg) : enumerate_reddening(b0, cfg);
    if (as_json) {
        json out;
        out["sequences"] = json::array();
        for (const auto& f : res.sequences) {
            json item;
            item["ks"] = f.ks;
            item["r"] = f.red_count;
            out["sequences"].push_back(item);
        }
        out["count"] = static_cast<int>(res.sequences.size());
        out["bound"] = res.bound;
        out["pruned"] = res.pruned;
        std::cout << out.dump() << "\n";
        return 0;
    }
    for (const auto& f : res.sequences) {
        std::cout << join_sequence(f.ks);
        if (!mgs_only) std::cout << " r=" << f.red_count;
        std::cout << "\n";
    }
    std::cout << "count=" << res.sequences.size() << " bound=" << res.bound
              << " pruned=" << (res.pruned ? "yes" : "no") << "\n";
    return 0;
}

int cmd_graph(const std::string& quiver, int depth, const std::string& dot_path, bool as_json) {
    ExchangeMatrix b0 = load_exchange_file(quiver);
    ExchangeGraphSlice g = export_exchange_graph(b0, depth);
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw std::invalid_argument("cannot write " + dot_path);
        out << to_dot(g);
    }
    if (as_json) {
        json out;
        out["nodes"] = static_cast<int>(g.nodes.size());
        out["edges"] = static_cast<int>(g.edges.size());
        out["depth"] = g.depth_bound;
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "nodes=" << g.nodes.size() << " edges=" << g.edges.size()
              << " depth=" << g.depth_bound << "\n";
    return 0;
}

int cmd_rank2(const std::string& quiver, const std::string& arrow, long t_max) {
    ValuedQuiver q = load_quiver_file(quiver);
    std::vector<int> jk = parse_sequence(arrow);
    if (jk.size() != 2) throw std::invalid_argument("--arrow expects J,I (source,target)");
    Rank2Ladder l = ladder(q, jk[0], jk[1]);
    for (long t = 0; t <= t_max; ++t)
        std::cout << "q" << t << "=" << vec_to_string(l.root(t)) << "\n";
    return 0;
}

int cmd_tame(const std::string& quiver, int k, const std::string& sequence) {
    ValuedQuiver q = load_quiver_file(quiver);
    TameContext ctx = make_tame_context(q);
    std::cout << "eta=" << vec_to_string(ctx.eta) << "\n";
    std::cout << "m=" << ctx.period << "\n";
    std::cout << "delta=" << vec_to_string(ctx.defect) << "\n";
    if (sequence.empty()) return 0;

    ExchangeMatrix b0 = exchange_from_quiver(q);
    std::vector<int> ks = parse_sequence(sequence);
    MutationTrajectory t = run_sequence(b0, ks);
    std::vector<Seed> seeds{t.initial};
    for (const auto& step : t.steps) seeds.push_back(step.after);
    for (size_t s = 0; s < seeds.size(); ++s) {
        RegionReport rep = region_class(ctx, seeds[s].c, k);
        std::cout << "s=" << s;
        if (s > 0)
            std::cout << " vertex=" << t.steps[s - 1].vertex << " color="
                      << (t.steps[s - 1].color == VertexColor::Green ? "green" : "red");
        std::cout << " class=" << (rep.cls == RegionClass::Inside ? "Inside" : "Outside")
                  << " in_V=" << (rep.barycenter.in_v ? "yes" : "no")
                  << " in_W=" << (rep.barycenter.in_w ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_selftest(const std::string& data_dir) {
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };
    auto path = [&](const std::string& f) { return data_dir + "/" + f; };

    try {
        ExchangeMatrix a3 = load_exchange_file(path("a3_linear.json"));
        MutationTrajectory t = run_sequence(a3, {2, 3, 1, 3, 2});
        SequenceClass cls = classify(t);
        report("a3 worked sequence is maximal green",
               cls.kind == SequenceKind::MaximalGreen && cls.sigma->cycle_notation() == "(1 3 2)");
        report("a3 rotation preserves sigma", [&] {
            auto [b1, rot] = rotate(a3, {2, 3, 1, 3, 2});
            return rot == std::vector<int>{3, 1, 3, 2, 3};
        }());
        report("a3 mutation formula", mutation_formula_check(a3, {2, 3, 1, 3, 2}));

        ExchangeMatrix kr = load_exchange_file(path("kronecker.json"));
        SearchConfig cfg;
        cfg.max_length = 20;
        SearchResult mg = enumerate_mgs(kr, cfg);
        report("kronecker unique maximal green sequence",
               mg.sequences.size() == 1 && mg.sequences[0].ks == std::vector<int>{1, 2});
        report("kronecker (1,2,1,1) is 1-reddening", [&] {
            SequenceClass c = classify(run_sequence(kr, {1, 2, 1, 1}));
            return c.kind == SequenceKind::Reddening && c.red_count == 1;
        }());

        ValuedQuiver krq = quiver_from_exchange(kr);
        TameContext ctx = make_tame_context(krq);
        report("kronecker null root", ctx.eta == std::vector<Int>{1, 1});
        report("kronecker defect", ctx.period == 1 && ctx.defect == std::vector<Int>{-2, 2});

        ExchangeMatrix mu = load_exchange_file(path("muller.json"));
        SearchConfig mcfg;
        mcfg.max_length = 12;
        SearchResult mm = enumerate_mgs(mu, mcfg);
        std::vector<std::vector<int>> got;
        for (const auto& f : mm.sequences) got.push_back(f.ks);
        report("muller quiver catalogue",
               got == std::vector<std::vector<int>>{{1, 2, 3}, {2, 1, 2, 3}, {2, 1, 3, 2}});
    } catch (const std::exception& e) {
        std::cout << "FAIL selftest aborted: " << e.what() << "\n";
        ++failures;
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact seed mutation, c-matrices, and green sequence search"};
    app.require_subcommand(1);

    std::string quiver, sequence, arrow, dot_path;
    std::string data_dir = GREENSEQ_DATA_DIR;
    bool dump_c = false, dump_g = false, as_json = false, no_prune = false;
    int max_len = 12, max_red = 1, jobs = 1, depth = 3, k = 1;
    long t_max = 8;

    auto* seed = app.add_subcommand("seed", "Run a mutation sequence and dump C (and G) matrices");
    seed->add_option("--quiver", quiver)->required();
    seed->add_option("--sequence", sequence);
    seed->add_flag("--dump-c", dump_c);
    seed->add_flag("--dump-g", dump_g);
    seed->add_flag("--json", as_json);

    auto* classify_cmd = app.add_subcommand("classify", "Classify a mutation sequence");
    classify_cmd->add_option("--quiver", quiver)->required();
    classify_cmd->add_option("--sequence", sequence)->required();
    classify_cmd->add_flag("--json", as_json);

    auto* rotate_cmd = app.add_subcommand("rotate", "Rotate a reddening sequence");
    rotate_cmd->add_option("--quiver", quiver)->required();
    rotate_cmd->add_option("--sequence", sequence)->required();
    rotate_cmd->add_flag("--json", as_json);

    auto* mgs = app.add_subcommand("mgs", "Enumerate maximal green sequences up to a bound");
    mgs->add_option("--quiver", quiver)->required();
    mgs->add_option("--max-len", max_len);
    mgs->add_flag("--no-prune", no_prune);
    mgs->add_option("--jobs", jobs);
    mgs->add_flag("--json", as_json);

    auto* red = app.add_subcommand("reddening", "Enumerate reddening sequences up to bounds");
    red->add_option("--quiver", quiver)->required();
    red->add_option("--max-len", max_len);
    red->add_option("--max-red", max_red);
    red->add_option("--jobs", jobs);
    red->add_flag("--json", as_json);

    auto* graph = app.add_subcommand("graph", "Export a BFS slice of the oriented exchange graph");
    graph->add_option("--quiver", quiver)->required();
    graph->add_option("--depth", depth);
    graph->add_option("--dot", dot_path);
    graph->add_flag("--json", as_json);

    auto* rank2 = app.add_subcommand("rank2", "Print the root ladder along one arrow");
    rank2->add_option("--quiver", quiver)->required();
    rank2->add_option("--arrow", arrow)->required();
    rank2->add_option("--t", t_max);

    auto* tame = app.add_subcommand("tame", "Null root, defect, and region classification");
    tame->add_option("--quiver", quiver)->required();
    tame->add_option("--k", k);
    tame->add_option("--classify-sequence", sequence);

    auto* selftest = app.add_subcommand("selftest", "Run the bundled regression fixtures");
    selftest->add_option("--data", data_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*seed) return cmd_seed(quiver, sequence, dump_c, dump_g, as_json);
        if (*classify_cmd) return cmd_classify(quiver, sequence, as_json);
        if (*rotate_cmd) return cmd_rotate(quiver, sequence, as_json);
        if (*mgs) return cmd_enumerate(quiver, max_len, 0, no_prune, jobs, as_json, true);
        if (*red) return cmd_enumerate(quiver, max_len, max_red, no_prune, jobs, as_json, false);
        if (*graph) return cmd_graph(quiver, depth, dot_path, as_json);
        if (*rank2) return cmd_rank2(quiver, arrow, t_max);
        if (*tame) return cmd_tame(quiver, k, sequence);
        if (*selftest) return cmd_selftest(data_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
