#pragma once

#include "greenseq/quiver.hpp"

#include <json.hpp>

#include <fstream>
#include <random>

namespace greenseq::testing {

inline std::string data_path(const std::string& name) {
    return std::string(GREENSEQ_DATA_DIR) + "/" + name;
}

inline nlohmann::json read_fixture(const std::string& name) {
    std::ifstream in(data_path(name));
    if (!in) throw std::runtime_error("missing fixture " + name);
    nlohmann::json j;
    in >> j;
    return j;
}

inline ValuedQuiver fixture_quiver(const std::string& name) {
    return ValuedQuiver::from_json(read_fixture(name));
}

inline ExchangeMatrix fixture_exchange(const std::string& name) {
    return load_exchange(read_fixture(name));
}

inline IntMat mat(const std::vector<std::vector<long long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    IntMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    return m;
}

inline std::vector<Int> vec(const std::vector<long long>& v) {
    return std::vector<Int>(v.begin(), v.end());
}

/// Random valued quiver with at least one arrow; weights in 1..3, valuations
/// built as d_st = t*f_s/g, d_ts = t*f_t/g so d_st*f_t = d_ts*f_s holds.
inline ValuedQuiver random_quiver(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> fdist(1, 3), coin(0, 1), mult(1, 2);
    for (;;) {
        ValuedQuiver q;
        q.n = n;
        q.weights.clear();
        for (int i = 0; i < n; ++i) q.weights.push_back(fdist(rng));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                if (!coin(rng)) continue;
                int s = i, t = j;
                if (coin(rng)) std::swap(s, t);
                Int fs = q.weights[s - 1], ft = q.weights[t - 1];
                Int g = boost::multiprecision::gcd(fs, ft);
                Int m = mult(rng);
                q.arrows.push_back({s, t, m * fs / g, m * ft / g});
            }
        if (q.arrows.empty()) continue;
        q.canonicalize();
        q.validate();
        return q;
    }
}

inline ExchangeMatrix random_exchange(std::mt19937& rng, int n) {
    return exchange_from_quiver(random_quiver(rng, n));
}

inline std::vector<int> random_sequence(std::mt19937& rng, int n, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len), v(1, n);
    std::vector<int> ks(len(rng));
    for (int& k : ks) k = v(rng);
    return ks;
}

}  // namespace greenseq::testing
