#include "greenseq/seed.hpp"

namespace greenseq {

Sign coherent_sign(const std::vector<Int>& v, const std::string& what) {
    bool has_pos = false, has_neg = false;
    for (const Int& x : v) {
        if (x > 0) has_pos = true;
        if (x < 0) has_neg = true;
    }
    if (has_pos && has_neg) throw invariant_error(what + ": mixed-sign vector");
    if (!has_pos && !has_neg) throw invariant_error(what + ": zero vector");
    return has_pos ? Sign::Plus : Sign::Minus;
}

void Seed::validate() const {
    b.validate();
    int n = size();
    if (c.rows() != n || c.cols() != n) throw invariant_error("c-matrix has wrong shape");
    Int dc = det(c);
    if (dc != 1 && dc != -1) throw invariant_error("det C must be +-1, got " + dc.str());
    for (int j = 0; j < n; ++j) coherent_sign(c.column(j), "c-vector " + std::to_string(j + 1));
    if (!check_nz(*this)) throw invariant_error("Nakanishi-Zelevinsky identity DB = C^t D B0 C fails");
}

Seed initial_seed(const ExchangeMatrix& b) {
    b.validate();
    return Seed{b, IntMat::identity(b.size()), b.b};
}

Seed mutate_seed(const Seed& s, int k) {
    int n = s.size();
    if (k < 1 || k > n) throw std::invalid_argument("mutation index out of range");
    Sign col = coherent_sign(s.c.column(k - 1), "c-vector " + std::to_string(k));
    IntMat x = x_matrix(s.b.b, k, col == Sign::Plus ? 1 : -1);
    Seed r{mutate_exchange(s.b, k), s.c * x, s.b0};

    // Lemma: a simple-root column +-e_j in C forces f_j = f_k.
    for (int j = 1; j <= n; ++j) {
        auto cj = r.c.column(j - 1);
        for (int i = 1; i <= n; ++i)
            if ((is_simple_plus(cj, i) || is_simple_minus(cj, i)) && r.b.d[i - 1] != r.b.d[j - 1])
                throw invariant_error("simple-root column violates f_k = f_j");
    }
    return r;
}

IntMat g_matrix(const Seed& s) {
    int n = s.size();
    IntMat cinv = inverse_unimodular(s.c);
    // G = (D C^-1 D^-1)^t; work in rationals and assert integrality.
    RatMat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(j, i) = Rat(s.b.d[i] * cinv(i, j), s.b.d[j]);
    IntMat gi = to_int_checked(g, "g-matrix");
    for (int i = 0; i < n; ++i) coherent_sign(gi.row(i), "g-matrix row " + std::to_string(i + 1));
    return gi;
}

VertexColor vertex_color(const Seed& s, int k) {
    if (k < 1 || k > s.size()) throw std::invalid_argument("vertex index out of range");
    Sign sign = coherent_sign(s.c.column(k - 1), "c-vector " + std::to_string(k));
    return sign == Sign::Plus ? VertexColor::Green : VertexColor::Red;
}

Sign hemisphere(const IntMat& g, int k) {
    if (k < 1 || k > g.rows()) throw std::invalid_argument("hemisphere index out of range");
    return coherent_sign(g.row(k - 1), "g-matrix row " + std::to_string(k));
}

Sign hemisphere(const Seed& s, int k) { return hemisphere(g_matrix(s), k); }

bool check_nz(const Seed& s) {
    int n = s.size();
    IntMat db(n, n), db0(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            db(i, j) = s.b.d[i] * s.b.b(i, j);
            db0(i, j) = s.b.d[i] * s.b0(i, j);
        }
    return db == s.c.transposed() * db0 * s.c;
}

bool is_simple_plus(const std::vector<Int>& v, int k) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != (static_cast<int>(i) == k - 1 ? 1 : 0)) return false;
    return true;
}

bool is_simple_minus(const std::vector<Int>& v, int k) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != (static_cast<int>(i) == k - 1 ? -1 : 0)) return false;
    return true;
}

}  // namespace greenseq
