#pragma once
// Basic descriptive statistics shared across modules.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "varcomp/error.hpp"

namespace varcomp {

inline double mean(std::span<const double> xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

// Sample variance, (n-1) denominator.
inline double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2) return 0.0;
    double m = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size() - 1);
}

// Population variance, n denominator.
inline double population_variance(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    double m = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size());
}

// Empirical quantile with linear interpolation between order statistics
// (the convention used for both bootstrap intervals and tail thresholds).
inline double quantile(std::vector<double> xs, double q) {
    if (xs.empty()) throw EmptyTable("quantile of empty sample");
    if (q <= 0.0) return *std::min_element(xs.begin(), xs.end());
    if (q >= 1.0) return *std::max_element(xs.begin(), xs.end());
    std::sort(xs.begin(), xs.end());
    double h = q * static_cast<double>(xs.size() - 1);
    size_t lo = static_cast<size_t>(h);
    double frac = h - static_cast<double>(lo);
    if (lo + 1 >= xs.size()) return xs.back();
    return xs[lo] + frac * (xs[lo + 1] - xs[lo]);
}

inline double pearson_r(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw InsufficientData("correlation inputs differ in length");
    if (x.size() < 3) throw InsufficientData("correlation needs at least 3 observations");
    double mx = mean(x), my = mean(y);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) throw ZeroSpread("correlation with a constant variable");
    return sxy / std::sqrt(sxx * syy);
}

struct OlsLine {
    double intercept = 0.0;
    double slope = 0.0;
};

// Simple least squares of y on x.
inline OlsLine ols_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 3) throw InsufficientData("regression needs at least 3 observations");
    double mx = mean(x), my = mean(y);
    double sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx <= 0.0) throw ZeroSpread("regression with constant predictor");
    OlsLine line;
    line.slope = sxy / sxx;
    line.intercept = my - line.slope * mx;
    return line;
}

}  // namespace varcomp
