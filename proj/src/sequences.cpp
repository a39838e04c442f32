#include "greenseq/sequences.hpp"

#include <algorithm>
#include <sstream>

namespace greenseq {

int Permutation::inverse(int k) const {
    for (int j = 1; j <= static_cast<int>(map.size()); ++j)
        if (map[j - 1] == k) return j;
    throw std::invalid_argument("value not in permutation range");
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.map.resize(n);
    for (int i = 0; i < n; ++i) p.map[i] = i + 1;
    return p;
}

std::string Permutation::cycle_notation() const {
    int n = static_cast<int>(map.size());
    std::vector<bool> seen(n + 1, false);
    std::ostringstream os;
    bool any = false;
    for (int start = 1; start <= n; ++start) {
        if (seen[start] || map[start - 1] == start) continue;
        any = true;
        os << "(";
        int j = start;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << " ";
            os << j;
            first = false;
            j = map[j - 1];
        }
        os << ")";
    }
    return any ? os.str() : "id";
}

int MutationTrajectory::red_count() const {
    int r = 0;
    for (const auto& s : steps) r += s.color == VertexColor::Red;
    return r;
}

std::vector<int> MutationTrajectory::vertices() const {
    std::vector<int> v;
    v.reserve(steps.size());
    for (const auto& s : steps) v.push_back(s.vertex);
    return v;
}

MutationTrajectory run_sequence(const ExchangeMatrix& b0, const std::vector<int>& ks) {
    MutationTrajectory t;
    t.b0 = b0;
    t.initial = initial_seed(b0);
    const Seed* cur = &t.initial;
    for (int k : ks) {
        TrajectoryStep step;
        step.vertex = k;
        if (k < 1 || k > b0.size()) throw std::invalid_argument("sequence index out of range");
        step.c_vector = cur->c.column(k - 1);
        step.color = vertex_color(*cur, k);
        step.after = mutate_seed(*cur, k);
        t.steps.push_back(std::move(step));
        cur = &t.steps.back().after;
    }
    return t;
}

std::optional<Permutation> negative_permutation(const IntMat& c) {
    int n = c.rows();
    Permutation p;
    p.map.assign(n, 0);
    std::vector<bool> hit(n + 1, false);
    for (int j = 0; j < n; ++j) {
        int image = 0;
        for (int i = 0; i < n; ++i) {
            const Int& v = c(i, j);
            if (v == 0) continue;
            if (v != -1 || image != 0) return std::nullopt;
            image = i + 1;
        }
        if (image == 0 || hit[image]) return std::nullopt;
        hit[image] = true;
        p.map[j] = image;
    }
    return p;
}

SequenceClass classify(const MutationTrajectory& t) {
    SequenceClass cls;
    auto sigma = negative_permutation(t.terminal().c);
    if (!sigma) return cls;
    cls.red_count = t.red_count();
    cls.sigma = std::move(*sigma);
    cls.kind = cls.red_count == 0 ? SequenceKind::MaximalGreen : SequenceKind::Reddening;
    return cls;
}

std::pair<ExchangeMatrix, std::vector<int>> rotate(const ExchangeMatrix& b0,
                                                   const std::vector<int>& ks) {
    if (ks.empty()) throw std::invalid_argument("cannot rotate an empty sequence");
    MutationTrajectory t = run_sequence(b0, ks);
    SequenceClass cls = classify(t);
    if (cls.kind == SequenceKind::NotReddening)
        throw std::invalid_argument("rotate requires a reddening sequence");
    std::vector<int> rotated(ks.begin() + 1, ks.end());
    rotated.push_back(cls.sigma->inverse(ks.front()));
    ExchangeMatrix b0p = mutate_exchange(b0, ks.front());

    SequenceClass check = classify(run_sequence(b0p, rotated));
    if (check.kind == SequenceKind::NotReddening || *check.sigma != *cls.sigma ||
        check.red_count != cls.red_count)
        throw invariant_error("rotated sequence does not preserve sigma and red count");
    return {std::move(b0p), std::move(rotated)};
}

bool mutation_formula_check(const ExchangeMatrix& b0, const std::vector<int>& ks) {
    if (ks.empty()) throw std::invalid_argument("mutation formula needs a nonempty sequence");
    int k0 = ks.front();
    MutationTrajectory orig = run_sequence(b0, ks);
    MutationTrajectory shifted =
        run_sequence(mutate_exchange(b0, k0), std::vector<int>(ks.begin() + 1, ks.end()));

    IntMat xplus = x_matrix(b0.b, k0, 1);
    IntMat xminus = x_matrix(b0.b, k0, -1);
    for (size_t s = 1; s <= ks.size(); ++s) {
        const IntMat& cs = orig.steps[s - 1].after.c;
        const IntMat& cps = s == 1 ? shifted.initial.c : shifted.steps[s - 2].after.c;
        Sign h = hemisphere(orig.steps[s - 1].after, k0);
        const IntMat& x = h == Sign::Minus ? xplus : xminus;
        if (cps != x * cs) return false;
    }
    return true;
}

MutationTrajectory maximal_green_tail(const MutationTrajectory& t) {
    int last_red = -1;
    for (int i = 0; i < t.length(); ++i)
        if (t.steps[i].color == VertexColor::Red) last_red = i;
    MutationTrajectory tail;
    tail.b0 = t.b0;
    tail.initial = last_red < 0 ? t.initial : t.steps[last_red].after;
    tail.steps.assign(t.steps.begin() + (last_red + 1), t.steps.end());
    return tail;
}

OneMoreTimeCounts one_more_time_counts(const MutationTrajectory& t, int k) {
    OneMoreTimeCounts c;
    for (const auto& s : t.steps) {
        if (is_simple_plus(s.c_vector, k)) ++c.plus;
        if (is_simple_minus(s.c_vector, k)) ++c.minus;
    }
    return c;
}

bool post_tail_transport_check(const ExchangeMatrix& b0, const std::vector<int>& ks) {
    MutationTrajectory t = run_sequence(b0, ks);
    SequenceClass cls = classify(t);
    if (cls.kind == SequenceKind::NotReddening)
        throw std::invalid_argument("post-tail transport requires a reddening sequence");
    int k0 = ks.front();
    int m = static_cast<int>(ks.size());
    int last = 0;  // c_0 = e_{k0} always
    for (int s = 0; s < m; ++s)
        if (is_simple_plus(t.steps[s].c_vector, k0)) last = s;

    std::vector<int> rotated(ks.begin() + 1, ks.end());
    rotated.push_back(cls.sigma->inverse(k0));
    MutationTrajectory rot = run_sequence(mutate_exchange(b0, k0), rotated);

    IntMat xplus = x_matrix(b0.b, k0, 1);
    for (int s = last + 1; s < m; ++s)
        if (t.steps[s].c_vector != xplus.apply(rot.steps[s - 1].c_vector)) return false;
    return true;
}

}  // namespace greenseq
