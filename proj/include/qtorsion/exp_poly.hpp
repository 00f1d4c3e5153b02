#pragma once

#include "qtorsion/weight.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace qtorsion {

/// P(l) = sum_j c_j l^{n_j} exp(2 pi i l r_j), with phases carried as exact
/// rationals r_j in [0, 1) so that the r = 0 branch is decided exactly.
class ExponentialPolynomial {
public:
    struct Term {
        std::complex<double> coeff;
        int power = 0;
        Rational phase;
    };

    ExponentialPolynomial() = default;

    /// Adds c l^n e^{2 pi i l r}; r is reduced mod 1 and merged with an existing (n, r) term.
    void add(std::complex<double> c, int power, const Rational& phase);
    void add(const ExponentialPolynomial& other, std::complex<double> scale = 1.0);

    /// Terms in canonical order (by power, then phase).
    std::vector<Term> terms() const;
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    std::complex<double> operator()(std::int64_t l) const;

    /// Drops terms with |c| <= tol.
    void prune(double tol);

private:
    std::map<std::pair<int, Rational>, std::complex<double>> terms_;
};

}  // namespace qtorsion
