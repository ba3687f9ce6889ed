#pragma once
// Dense symmetric positive-definite helpers sized for the small systems in
// variance-component fitting (a few dozen to a few hundred rows). Matrices
// are row-major std::vector<double>.

#include <cmath>
#include <cstddef>
#include <vector>

#include "varcomp/error.hpp"

namespace varcomp {

// In-place Cholesky A = L L'. Only the lower triangle of `a` is referenced;
// on return it holds L. Throws on a non-positive pivot.
inline void cholesky_inplace(std::vector<double>& a, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        double d = a[j * n + j];
        for (std::size_t k = 0; k < j; ++k) d -= a[j * n + k] * a[j * n + k];
        if (!(d > 0.0)) throw NumericFailure("matrix not positive definite");
        double lj = std::sqrt(d);
        a[j * n + j] = lj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a[i * n + j];
            for (std::size_t k = 0; k < j; ++k) s -= a[i * n + k] * a[j * n + k];
            a[i * n + j] = s / lj;
        }
    }
}

// Solves L L' x = b in place given the factor from cholesky_inplace.
inline void cholesky_solve(const std::vector<double>& l, std::size_t n, std::vector<double>& x) {
    for (std::size_t i = 0; i < n; ++i) {
        double s = x[i];
        for (std::size_t k = 0; k < i; ++k) s -= l[i * n + k] * x[k];
        x[i] = s / l[i * n + i];
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double s = x[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= l[k * n + ii] * x[k];
        x[ii] = s / l[ii * n + ii];
    }
}

inline double cholesky_logdet(const std::vector<double>& l, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::log(l[i * n + i]);
    return 2.0 * s;
}

// Full inverse via the factor; used by the scoring refinement where the
// whole projection matrix is needed.
inline std::vector<double> cholesky_inverse(const std::vector<double>& l, std::size_t n) {
    std::vector<double> inv(n * n, 0.0);
    std::vector<double> col(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(col.begin(), col.end(), 0.0);
        col[j] = 1.0;
        cholesky_solve(l, n, col);
        for (std::size_t i = 0; i < n; ++i) inv[i * n + j] = col[i];
    }
    return inv;
}

}  // namespace varcomp
