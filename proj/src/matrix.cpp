#include "greenseq/matrix.hpp"

#include <sstream>

namespace greenseq {

RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

IntMat to_int_checked(const RatMat& m, const std::string& what) {
    IntMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& x = m(i, j);
            if (denominator(x) != 1)
                throw invariant_error(what + ": entry (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ") is not integral");
            r(i, j) = numerator(x);
        }
    return r;
}

Rat det(const RatMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows();
    RatMat a = m;
    Rat d = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            d = -d;
        }
        d *= a(col, col);
        Rat inv = Rat(1) / a(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            Rat f = a(i, col) * inv;
            for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return d;
}

Int det(const IntMat& m) {
    Rat d = det(to_rat(m));
    if (denominator(d) != 1) throw invariant_error("integer determinant came out fractional");
    return numerator(d);
}

RatMat inverse(const RatMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows();
    RatMat a = m;
    RatMat inv = RatMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) throw std::invalid_argument("matrix is singular");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        Rat p = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

IntMat inverse_unimodular(const IntMat& m) {
    Int d = det(m);
    if (d != 1 && d != -1)
        throw invariant_error("expected determinant +-1, got " + d.str());
    return to_int_checked(inverse(to_rat(m)), "unimodular inverse");
}

int rank(RatMat m) {
    int n = m.rows(), c = m.cols();
    int r = 0;
    for (int col = 0; col < c && r < n; ++col) {
        int pivot = -1;
        for (int i = r; i < n; ++i)
            if (m(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < c; ++j) std::swap(m(pivot, j), m(r, j));
        Rat inv = Rat(1) / m(r, col);
        for (int i = r + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) * inv;
            for (int j = col; j < c; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<Rat>> nullspace(RatMat m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
        Rat p = m(r, col);
        for (int j = 0; j < cols; ++j) m(r, j) /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (int j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols);
        v[free] = 1;
        for (int i = 0; i < r; ++i) v[pivot_col[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string to_string(const IntMat& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ",";
            os << m(i, j);
        }
    }
    os << "]";
    return os.str();
}

}  // namespace greenseq
