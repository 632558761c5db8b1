#include "injcheck/linalg.hpp"

#include <algorithm>

namespace injcheck {

Lu lu_factor(Mat m) {
    const int n = m.rows;
    Lu f;
    f.perm.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) f.perm[static_cast<std::size_t>(i)] = i;

    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::fabs(m(k, k));
        for (int i = k + 1; i < n; ++i) {
            double v = std::fabs(m(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            std::swap(f.perm[static_cast<std::size_t>(k)], f.perm[static_cast<std::size_t>(piv)]);
            f.perm_sign = -f.perm_sign;
        }
        const double pivot = m(k, k);
        if (pivot == 0.0) {
            f.singular = true;
            continue;
        }
        for (int i = k + 1; i < n; ++i) {
            m(i, k) /= pivot;
            const double l = m(i, k);
            if (l == 0.0) continue;
            for (int j = k + 1; j < n; ++j) m(i, j) -= l * m(k, j);
        }
    }
    f.lu = std::move(m);
    return f;
}

double lu_det(const Lu& f) {
    if (f.singular) return 0.0;
    double d = f.perm_sign;
    for (int i = 0; i < f.lu.rows; ++i) d *= f.lu(i, i);
    return d;
}

Vec lu_solve(const Lu& f, Vec b) {
    const int n = f.lu.rows;
    if (f.singular) throw SingularJacobian(b);
    Vec x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(f.perm[static_cast<std::size_t>(i)])];
    // forward substitution (unit lower)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) x[static_cast<std::size_t>(i)] -= f.lu(i, j) * x[static_cast<std::size_t>(j)];
    // back substitution
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) x[static_cast<std::size_t>(i)] -= f.lu(i, j) * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] /= f.lu(i, i);
    }
    return x;
}

Mat lu_inverse(const Lu& f) {
    const int n = f.lu.rows;
    Mat inv(n, n);
    Vec e(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
        e[static_cast<std::size_t>(j)] = 1.0;
        Vec col = lu_solve(f, e);
        e[static_cast<std::size_t>(j)] = 0.0;
        for (int i = 0; i < n; ++i) inv(i, j) = col[static_cast<std::size_t>(i)];
    }
    return inv;
}

}  // namespace injcheck
