#pragma once

#include "qtorsion/exp_poly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace qtorsion {

/// Phases are exact rationals r with phi = 2 pi r. All functions below take
/// r and reduce it mod 1.

struct LerchValue {
    enum class Method { bernoulli_closed_form, rational_polylog_closed_form, euler_maclaurin };
    std::complex<double> value;
    Method method = Method::bernoulli_closed_form;
    double precision_estimate = 0.0;
};

std::string method_name(LerchValue::Method m);

/// Bernoulli number with B_1 = +1/2, exact.
boost::multiprecision::cpp_rational bernoulli_plus(int m);

/// zeta_L(-n, 2 pi r) = sum_{l >= 1} l^n e^{2 pi i l r}, continued.
LerchValue lerch_value(int n, const Rational& r);

/// d/ds zeta_L(s, 2 pi r) at s = -n. Throws NumericError when the
/// Euler-Maclaurin remainder cannot be pushed below `tol`.
LerchValue lerch_deriv(int n, const Rational& r, double tol = 1e-12);

/// Q(l) = (P(l) - P(-l)) / 2.
ExponentialPolynomial odd_part(const ExponentialPolynomial& p);

std::complex<double> zeta_apply(const ExponentialPolynomial& p);
std::complex<double> zeta_deriv_apply(const ExponentialPolynomial& p, double tol = 1e-12);

/// -sum over phase-zero terms of c p^{n+1} H_n / (4 (n+1)).
std::complex<double> p_star(const ExponentialPolynomial& poly, const Rational& p);

}  // namespace qtorsion
