#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace greenseq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when a proven invariant fails at runtime (a bug, not bad input).
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Dense matrix with exact entries. Indices are 0-based internally;
/// anything user-facing converts to 1-based at the boundary.
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Mat&) const = default;

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        Mat r(rows_, other.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == 0) continue;
                for (int j = 0; j < other.cols_; ++j) r(i, j) += x * other(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw std::invalid_argument("matrix sum dimension mismatch");
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + other.a_[i];
        return r;
    }

    Mat operator-(const Mat& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw std::invalid_argument("matrix difference dimension mismatch");
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - other.a_[i];
        return r;
    }

    Mat operator-() const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }

    std::vector<T> column(int j) const {
        std::vector<T> c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    std::vector<T> row(int i) const {
        std::vector<T> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
        std::vector<T> r(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

private:
    int rows_, cols_;
    std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

RatMat to_rat(const IntMat& m);

/// Converts an exact-rational matrix back to integers; throws invariant_error
/// naming `what` if any entry has a nontrivial denominator.
IntMat to_int_checked(const RatMat& m, const std::string& what);

Rat det(const RatMat& m);
Int det(const IntMat& m);

/// Exact inverse by Gauss-Jordan elimination; throws std::invalid_argument if singular.
RatMat inverse(const RatMat& m);

/// Inverse of an integer matrix with det = +-1 (checked); result is integral.
IntMat inverse_unimodular(const IntMat& m);

int rank(RatMat m);

/// Basis of the right nullspace.
std::vector<std::vector<Rat>> nullspace(RatMat m);

std::string to_string(const IntMat& m);

}  // namespace greenseq
