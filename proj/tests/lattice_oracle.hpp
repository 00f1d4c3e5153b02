#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

/// Riesz mean over cutoffs X in [x0, 2 x0] of sum_{0 < Q(m) <= X} Q(m)^{-s}
/// plus the volume tail, for a rank-4 Gram matrix and s > 2.
inline double epstein_brute_force(const Eigen::Matrix4d& a, double s, double x0) {
    const int whole = static_cast<int>(s);
    const auto power = [&](double q) {
        if (whole != s) return std::pow(q, -s);
        double p = 1;
        for (int i = 0; i < whole; ++i) p *= q;
        return 1 / p;
    };
    const double top = 2 * x0;
    const Eigen::Matrix4d inv = a.inverse();
    int bound[3];
    for (int i = 0; i < 3; ++i) bound[i] = static_cast<int>(std::sqrt(top * inv(i, i))) + 1;
    double sum = 0;
    for (int i = -bound[0]; i <= bound[0]; ++i)
        for (int j = -bound[1]; j <= bound[1]; ++j)
            for (int k = -bound[2]; k <= bound[2]; ++k) {
                // Q = a33 l^2 + 2 b l + c
                const double b = a(3, 0) * i + a(3, 1) * j + a(3, 2) * k;
                const double c = a(0, 0) * i * i + a(1, 1) * j * j + a(2, 2) * k * k +
                                 2 * (a(0, 1) * i * j + a(0, 2) * i * k + a(1, 2) * j * k);
                const double disc = b * b - a(3, 3) * (c - top);
                if (disc < 0) continue;
                const int lo = static_cast<int>(std::ceil((-b - std::sqrt(disc)) / a(3, 3)));
                const int hi = static_cast<int>(std::floor((-b + std::sqrt(disc)) / a(3, 3)));
                for (int l = lo; l <= hi; ++l) {
                    const double q = a(3, 3) * l * l + 2 * b * l + c;
                    if (q <= 1e-12 || q > top) continue;
                    const double w = q <= x0 ? 1.0 : (top - q) / x0;
                    sum += w * power(q);
                }
            }
    const double pi = std::numbers::pi;
    const double volume = pi * pi / 2 / std::sqrt(a.determinant());
    const double e = 3 - s;
    const double tail = e == 0 ? 2 * volume / (s - 2) * std::log(2.0) / x0
                               : 2 * volume / ((s - 2) * e * x0) * (std::pow(top, e) - std::pow(x0, e));
    return sum + tail;
}

/// r_4(m) = 8 * sum of divisors of m not divisible by 4.
inline std::vector<long long> jacobi_r4(int limit) {
    std::vector<long long> r(limit + 1, 0);
    for (int d = 1; d <= limit; ++d)
        if (d % 4 != 0)
            for (int m = d; m <= limit; m += d) r[m] += 8LL * d;
    return r;
}

/// sum_{m>=1} r_4(m) m^{-s} for s > 2: partial sum to `limit` plus the tail pi^2 M^{2-s}/(s-2).
inline double jacobi_epstein_z4(double s, int limit) {
    const auto r = jacobi_r4(limit);
    double sum = 0;
    for (int m = limit; m >= 1; --m) sum += r[m] * std::pow(double(m), -s);
    const double pi = std::numbers::pi;
    return sum + pi * pi * std::pow(double(limit) + 0.5, 2 - s) / (s - 2);
}

}  // namespace oracle
