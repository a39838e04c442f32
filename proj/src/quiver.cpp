#include "greenseq/quiver.hpp"

#include <algorithm>
#include <set>

namespace greenseq {

namespace {

void check_vertex(int v, int n) {
    if (v < 1 || v > n)
        throw std::invalid_argument("vertex index " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(n));
}

Int json_to_int(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer");
}

nlohmann::json int_to_json(const Int& v) {
    // Entries beyond int64 range round-trip as decimal strings.
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return static_cast<long long>(v);
    return v.str();
}

IntMat json_to_mat(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a matrix (array of arrays)");
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j[0].size()) : 0;
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols) throw std::invalid_argument("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m(i, c) = json_to_int(j[i][c]);
    }
    return m;
}

nlohmann::json mat_to_json(const IntMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

void ValuedQuiver::validate() const {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (static_cast<int>(weights.size()) != n)
        throw std::invalid_argument("weight list size does not match vertex count");
    for (int i = 0; i < n; ++i)
        if (weights[i] <= 0)
            throw std::invalid_argument("vertex weight f_" + std::to_string(i + 1) +
                                        " must be positive");
    std::set<std::pair<int, int>> seen;
    for (const Arrow& a : arrows) {
        check_vertex(a.source, n);
        check_vertex(a.target, n);
        if (a.source == a.target)
            throw std::invalid_argument("loop at vertex " + std::to_string(a.source));
        auto key = std::minmax(a.source, a.target);
        if (!seen.insert(key).second)
            throw std::invalid_argument("parallel arrows or 2-cycle between vertices " +
                                        std::to_string(key.first) + " and " +
                                        std::to_string(key.second));
        if (a.d_st <= 0 || a.d_ts <= 0)
            throw std::invalid_argument("arrow valuations must be positive");
        if (a.d_st * weights[a.target - 1] != a.d_ts * weights[a.source - 1])
            throw std::invalid_argument("arrow " + std::to_string(a.source) + "->" +
                                        std::to_string(a.target) +
                                        " violates d_st*f_t = d_ts*f_s");
    }
}

void ValuedQuiver::canonicalize() {
    std::sort(arrows.begin(), arrows.end(), [](const Arrow& x, const Arrow& y) {
        return std::tie(x.source, x.target) < std::tie(y.source, y.target);
    });
}

ValuedQuiver ValuedQuiver::from_json(const nlohmann::json& j) {
    ValuedQuiver q;
    q.n = j.at("n").get<int>();
    for (const auto& w : j.at("weights")) q.weights.push_back(json_to_int(w));
    if (j.contains("arrows"))
        for (const auto& a : j.at("arrows")) {
            if (!a.is_array() || a.size() != 4)
                throw std::invalid_argument("arrow must be [source, target, d_st, d_ts]");
            q.arrows.push_back({a[0].get<int>(), a[1].get<int>(), json_to_int(a[2]), json_to_int(a[3])});
        }
    q.canonicalize();
    q.validate();
    return q;
}

nlohmann::json ValuedQuiver::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["weights"] = nlohmann::json::array();
    for (const Int& w : weights) j["weights"].push_back(int_to_json(w));
    j["arrows"] = nlohmann::json::array();
    for (const Arrow& a : arrows)
        j["arrows"].push_back({a.source, a.target, int_to_json(a.d_st), int_to_json(a.d_ts)});
    return j;
}

void ExchangeMatrix::validate() const {
    int n = b.rows();
    if (b.cols() != n) throw std::invalid_argument("B must be square");
    if (static_cast<int>(d.size()) != n)
        throw std::invalid_argument("symmetrizer size does not match B");
    for (const Int& f : d)
        if (f <= 0) throw std::invalid_argument("symmetrizer entries must be positive");
    for (int i = 0; i < n; ++i) {
        if (b(i, i) != 0) throw std::invalid_argument("B must have zero diagonal");
        for (int j = 0; j < n; ++j)
            if (d[i] * b(i, j) != -d[j] * b(j, i))
                throw std::invalid_argument("diag(D)*B is not skew-symmetric at (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
}

ExchangeMatrix ExchangeMatrix::from_json(const nlohmann::json& j) {
    ExchangeMatrix ex;
    ex.b = json_to_mat(j.at("B"));
    for (const auto& v : j.at("D")) ex.d.push_back(json_to_int(v));
    ex.validate();
    return ex;
}

nlohmann::json ExchangeMatrix::to_json() const {
    nlohmann::json j;
    j["B"] = mat_to_json(b);
    j["D"] = nlohmann::json::array();
    for (const Int& v : d) j["D"].push_back(int_to_json(v));
    return j;
}

ExchangeMatrix exchange_from_quiver(const ValuedQuiver& q) {
    q.validate();
    ExchangeMatrix ex;
    ex.b = IntMat(q.n, q.n);
    ex.d = q.weights;
    // DB = E^t - E: an arrow s->t contributes b_st = d_ts and b_ts = -d_st.
    for (const Arrow& a : q.arrows) {
        ex.b(a.source - 1, a.target - 1) = a.d_ts;
        ex.b(a.target - 1, a.source - 1) = -a.d_st;
    }
    ex.validate();
    return ex;
}

ValuedQuiver quiver_from_exchange(const ExchangeMatrix& ex) {
    ex.validate();
    ValuedQuiver q;
    q.n = ex.size();
    q.weights = ex.d;
    for (int s = 0; s < q.n; ++s)
        for (int t = 0; t < q.n; ++t)
            if (ex.b(s, t) > 0) q.arrows.push_back({s + 1, t + 1, -ex.b(t, s), ex.b(s, t)});
    q.canonicalize();
    q.validate();
    return q;
}

IntMat euler_matrix(const ValuedQuiver& q) {
    q.validate();
    IntMat e(q.n, q.n);
    for (int i = 0; i < q.n; ++i) e(i, i) = q.weights[i];
    // -d_st * f_t is the dimension of the bimodule on the arrow; it is symmetric
    // in the two readings (d_st f_t = d_ts f_s) and makes DB = E^t - E hold.
    for (const Arrow& a : q.arrows)
        e(a.source - 1, a.target - 1) = -a.d_st * q.weights[a.target - 1];
    return e;
}

IntMat mutate_matrix(const IntMat& m, int k) {
    int rows = m.rows(), n = m.cols();
    if (k < 1 || k > n)
        throw std::invalid_argument("mutation index " + std::to_string(k) + " out of range 1.." +
                                    std::to_string(n));
    int kk = k - 1;
    IntMat r(rows, n);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == kk || j == kk)
                r(i, j) = -m(i, j);
            else if (m(i, kk) * m(kk, j) > 0)
                r(i, j) = m(i, j) + m(i, kk) * abs(m(kk, j));
            else
                r(i, j) = m(i, j);
        }
    return r;
}

ExchangeMatrix mutate_exchange(const ExchangeMatrix& ex, int k) {
    ExchangeMatrix r{mutate_matrix(ex.b, k), ex.d};
    r.validate();
    return r;
}

IntMat x_matrix(const IntMat& b, int j, int sign) {
    int n = b.rows();
    if (j < 1 || j > n) throw std::invalid_argument("X-matrix pivot out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("X-matrix sign must be +-1");
    IntMat x = IntMat::identity(n);
    int jj = j - 1;
    x(jj, jj) = -1;
    for (int k = 0; k < n; ++k) {
        if (k == jj) continue;
        Int v = sign * b(jj, k);
        x(jj, k) = v > 0 ? v : Int(0);
    }
    return x;
}

std::vector<Arrow> infinite_type_arrows(const ValuedQuiver& q) {
    q.validate();
    std::vector<Arrow> out;
    for (const Arrow& a : q.arrows)
        if (a.d_st * a.d_ts >= 4) out.push_back(a);
    return out;
}

ExchangeMatrix load_exchange(const nlohmann::json& j) {
    if (j.contains("B")) return ExchangeMatrix::from_json(j);
    return exchange_from_quiver(ValuedQuiver::from_json(j));
}

}  // namespace greenseq
