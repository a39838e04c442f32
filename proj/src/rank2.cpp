#include "greenseq/rank2.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace greenseq {

Int chebyshev_u(long n, const Int& x, const Int& y) {
    if (n < -1) throw std::invalid_argument("chebyshev_u requires n >= -1");
    if (n == -1) return 0;
    if (n == 0) return 1;

    static std::mutex mu;
    static std::map<std::tuple<long, Int, Int>, Int> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({n, x, y});
        if (it != memo.end()) return it->second;
    }
    Int v = x * chebyshev_u(n - 1, y, x) - chebyshev_u(n - 2, x, y);
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::make_tuple(n, x, y), v);
    return v;
}

std::vector<Int> Rank2Ladder::root(long t) const {
    if (t < -1) throw std::invalid_argument("ladder index must be >= -1");
    std::vector<Int> v(n);
    if (t == -1) {
        v[target - 1] = -1;
        return v;
    }
    v[target - 1] = chebyshev_u(t - 1, b, a);
    v[source - 1] = chebyshev_u(t, a, b);
    return v;
}

Rank2Ladder ladder(const ValuedQuiver& q, int source, int target) {
    q.validate();
    for (const Arrow& ar : q.arrows)
        if (ar.source == source && ar.target == target)
            return Rank2Ladder{q.n, source, target, ar.d_ts, ar.d_st};
    throw std::invalid_argument("no arrow " + std::to_string(source) + "->" +
                                std::to_string(target) + " in the quiver");
}

bool ladder_rotation_check(const ValuedQuiver& q, int source, int target, long t_max) {
    if (t_max < 0) throw std::invalid_argument("t_max must be >= 0");
    ExchangeMatrix ex = exchange_from_quiver(q);
    Rank2Ladder orig = ladder(q, source, target);
    ValuedQuiver mutated = quiver_from_exchange(mutate_exchange(ex, source));
    Rank2Ladder rotated = ladder(mutated, target, source);

    IntMat x = x_matrix(ex.b, source, 1);
    for (long t = 0; t <= t_max; ++t)
        if (x.apply(orig.root(t)) != rotated.root(t - 1)) return false;
    return true;
}

}  // namespace greenseq
