#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "injcheck/errors.hpp"

// Dense row-major vectors/matrices sized for this project (n <= ~16).

namespace injcheck {

using Vec = std::vector<double>;

struct Mat {
    int rows = 0, cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c, double fill = 0.0)
        : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, fill) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    bool square() const { return rows == cols; }
};

inline Vec operator+(const Vec& x, const Vec& y) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

inline Vec operator-(const Vec& x, const Vec& y) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

inline Vec operator*(double s, const Vec& x) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = s * x[i];
    return r;
}

inline double dot(const Vec& x, const Vec& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline double norm2(const Vec& x) { return std::sqrt(dot(x, x)); }

inline double norm_inf(const Vec& x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::fabs(v));
    return m;
}

inline bool all_finite(const Vec& x) {
    for (double v : x)
        if (!std::isfinite(v)) return false;
    return true;
}

inline Vec matvec(const Mat& m, const Vec& x) {
    Vec r(static_cast<std::size_t>(m.rows), 0.0);
    for (int i = 0; i < m.rows; ++i) {
        double s = 0.0;
        for (int j = 0; j < m.cols; ++j) s += m(i, j) * x[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(i)] = s;
    }
    return r;
}

// m^T x
inline Vec mat_t_vec(const Mat& m, const Vec& x) {
    Vec r(static_cast<std::size_t>(m.cols), 0.0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            r[static_cast<std::size_t>(j)] += m(i, j) * x[static_cast<std::size_t>(i)];
    return r;
}

inline Mat matmul(const Mat& x, const Mat& y) {
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            double v = x(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
        }
    return r;
}

inline Mat transpose(const Mat& m) {
    Mat r(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r(j, i) = m(i, j);
    return r;
}

inline double norm_max(const Mat& m) {
    double v = 0.0;
    for (double e : m.a) v = std::max(v, std::fabs(e));
    return v;
}

inline double norm_fro(const Mat& m) {
    double s = 0.0;
    for (double e : m.a) s += e * e;
    return std::sqrt(s);
}

// LU factorization with partial pivoting. Never throws; inspect pivots for
// singularity. perm_sign is +-1 (permutation parity).
struct Lu {
    Mat lu;
    std::vector<int> perm;
    int perm_sign = 1;
    bool singular = false;  // met an exactly-zero pivot

    double min_abs_pivot() const {
        double m = HUGE_VAL;
        for (int i = 0; i < lu.rows; ++i) m = std::min(m, std::fabs(lu(i, i)));
        return m;
    }
    double max_abs_pivot() const {
        double m = 0.0;
        for (int i = 0; i < lu.rows; ++i) m = std::max(m, std::fabs(lu(i, i)));
        return m;
    }
};

Lu lu_factor(Mat m);
double lu_det(const Lu& f);
// Solve A x = b. Throws SingularJacobian if a pivot is exactly zero.
Vec lu_solve(const Lu& f, Vec b);
Mat lu_inverse(const Lu& f);

}  // namespace injcheck
