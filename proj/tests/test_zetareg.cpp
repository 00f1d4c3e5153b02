#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtorsion/errors.hpp"
#include "qtorsion/zetareg.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <cmath>
#include <numbers>

using namespace qtorsion;

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

// zeta'(s) for real s >= 2 by direct summation plus an Euler-Maclaurin tail.
long double zeta_prime_positive(long double s) {
    const int N = 2000;
    long double sum = 0;
    for (int k = 2; k < N; ++k) sum -= std::log((long double)k) * std::pow((long double)k, -s);
    const long double n = N;
    const long double ln = std::log(n);
    // f(t) = -log t t^{-s}
    sum -= std::pow(n, 1 - s) * (ln / (s - 1) + 1 / ((s - 1) * (s - 1)));
    sum += 0.5L * (-ln * std::pow(n, -s));
    const long double fprime = std::pow(n, -s - 1) * (s * ln - 1);
    sum -= fprime / 12;
    return sum;
}

// zeta'(-m) through the functional equation.
long double zeta_prime_negative(int m) {
    if (m == 0) return -0.5L * std::log(2 * kPi);
    if (m % 2 == 0) {
        const int j = m / 2;
        const long double sign = j % 2 ? -1 : 1;
        return sign * boost::math::factorial<long double>(m) * boost::math::zeta<long double>(m + 1) /
               (2 * std::pow(2 * kPi, m));
    }
    const long double z = boost::math::zeta<long double>(-m);
    const long double s = m + 1;
    return z * (std::log(2 * kPi) - boost::math::digamma<long double>(s) -
                zeta_prime_positive(s) / boost::math::zeta<long double>(s));
}

// d/ds Li_s(e^{i phi}) at s = -n from the expansion around mu = 0.
std::complex<long double> polylog_deriv_oracle(int n, long double phi) {
    if (phi > kPi) return std::conj(polylog_deriv_oracle(n, 2 * kPi - phi));
    const std::complex<long double> mu(0, phi);
    const std::complex<long double> log_neg_mu(std::log(phi), -kPi / 2);
    const long double g = boost::math::factorial<long double>(n);
    std::complex<long double> value =
        g * std::exp(-(long double)(n + 1) * log_neg_mu) * (log_neg_mu - boost::math::digamma<long double>(n + 1));
    std::complex<long double> pw = 1;
    for (int k = 0; k < 140; ++k) {
        if (k > 0) pw *= mu / (long double)k;
        value += zeta_prime_negative(n + k) * pw;
    }
    return value;
}

}  // namespace

TEST_CASE("closed-form values") {
    CHECK(lerch_value(0, Rational(1, 2)).value == std::complex<double>(-0.5, 0.0));
    CHECK(lerch_value(1, Rational(0)).value.real() == doctest::Approx(-1.0 / 12).epsilon(1e-16));
    CHECK(lerch_value(0, Rational(0)).value.real() == -0.5);
    CHECK(lerch_value(0, Rational(0)).method == LerchValue::Method::bernoulli_closed_form);
    CHECK(lerch_value(0, Rational(1, 3)).method == LerchValue::Method::rational_polylog_closed_form);
    CHECK(bernoulli_plus(1) == boost::multiprecision::cpp_rational(1, 2));
    CHECK(bernoulli_plus(2) == boost::multiprecision::cpp_rational(1, 6));
    CHECK(bernoulli_plus(12) == boost::multiprecision::cpp_rational(-691, 2730));
    CHECK(bernoulli_plus(13) == 0);
    // zeta(-3) = 1/120
    CHECK(lerch_value(3, Rational(0)).value.real() == doctest::Approx(1.0 / 120).epsilon(1e-15));
    // sum (-1)^l l = -eta(-1) = -1/4
    CHECK(std::abs(lerch_value(1, Rational(1, 2)).value - std::complex<double>(-0.25, 0)) < 1e-15);
}

TEST_CASE("conjugation symmetry") {
    for (int n = 0; n < 6; ++n)
        for (const Rational r : {Rational(1, 3), Rational(2, 7), Rational(1, 10)}) {
            const auto a = lerch_value(n, r).value;
            const auto b = lerch_value(n, Rational(1) - r).value;
            CHECK(std::abs(a - std::conj(b)) < 1e-12 * std::max(1.0, std::abs(a)));
            const auto da = lerch_deriv(n, r).value;
            const auto db = lerch_deriv(n, Rational(1) - r).value;
            CHECK(std::abs(da - std::conj(db)) < 1e-12 * std::max(1.0, std::abs(da)));
        }
}

// Riesz means of order m carry a bias sum_j C(m,j) (-1/L)^j zeta_L(-n-j);
// one Richardson step between L/2 and L removes its leading term.
TEST_CASE("Riesz means of the divergent series") {
    const int L = 100000;
    for (int n = 0; n < 3; ++n)
        for (const Rational r : {Rational(1, 3), Rational(1, 2), Rational(3, 8)}) {
            CAPTURE(n);
            auto riesz = [&](int cut) {
                // Exact integer sums of (cut - l)^m l^n per residue class of l r mod 1.
                using boost::multiprecision::cpp_int;
                using Real = boost::multiprecision::cpp_bin_float_50;
                const auto den = r.denominator();
                std::vector<cpp_int> classes(den);
                for (int l = 1; l < cut; ++l) {
                    cpp_int t = boost::multiprecision::pow(cpp_int(cut - l), n + 2) * boost::multiprecision::pow(cpp_int(l), n);
                    classes[(std::int64_t(l) * r.numerator()) % den] += t;
                }
                const Real scale = boost::multiprecision::pow(Real(cut), n + 2);
                const Real pi = boost::math::constants::pi<Real>();
                Real re = 0, im = 0;
                for (std::int64_t j = 0; j < den; ++j) {
                    const Real v = Real(classes[j]) / scale;
                    re += v * cos(2 * pi * j / den);
                    im += v * sin(2 * pi * j / den);
                }
                return std::complex<double>(re.convert_to<double>(), im.convert_to<double>());
            };
            const auto extrapolated = 2.0 * riesz(L) - riesz(L / 2);
            CHECK(std::abs(extrapolated - lerch_value(n, r).value) < 1e-6);
        }
}

TEST_CASE("derivative fixtures") {
    const double log2pi = std::log(2 * std::numbers::pi);
    CHECK(std::abs(lerch_deriv(0, Rational(0)).value - std::complex<double>(-0.5 * log2pi, 0)) < 1e-10);
    CHECK(std::abs(lerch_deriv(0, Rational(1, 2)).value -
                   std::complex<double>(-0.5 * std::log(std::numbers::pi / 2), 0)) < 1e-10);
    const double glaisher = 1.28242712910062263687534256886979;
    CHECK(std::abs(lerch_deriv(1, Rational(0)).value.real() - (1.0 / 12 - std::log(glaisher))) < 1e-12);
    const double zeta3 = 1.2020569031595942853997381615114;
    CHECK(std::abs(lerch_deriv(2, Rational(0)).value.real() + zeta3 / (4 * std::numbers::pi * std::numbers::pi)) <
          1e-12);
}

TEST_CASE("derivative agrees with the polylog expansion oracle") {
    for (int n = 0; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(std::abs(lerch_deriv(n, Rational(0)).value.real() - (double)zeta_prime_negative(n)) < 1e-10);
        for (const Rational r : {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1, 5), Rational(7, 12),
                                 Rational(5, 97)}) {
            CAPTURE(to_string(r));
            const auto oracle = polylog_deriv_oracle(n, 2 * kPi * (long double)to_double(r));
            const auto got = lerch_deriv(n, r).value;
            const double scale = std::max(1.0L, std::abs(oracle));
            CHECK(std::abs(got.real() - (double)oracle.real()) < 1e-10 * scale);
            CHECK(std::abs(got.imag() - (double)oracle.imag()) < 1e-10 * scale);
        }
    }
}

TEST_CASE("unreachable tolerance is reported") {
    CHECK_THROWS_AS(lerch_deriv(0, Rational(1, 3), 1e-60), NumericError);
}

TEST_CASE("odd part") {
    ExponentialPolynomial sq;
    sq.add(1.0, 2, Rational(0));
    CHECK(odd_part(sq).empty());
    ExponentialPolynomial cube;
    cube.add(1.0, 3, Rational(0));
    const auto oc = odd_part(cube).terms();
    REQUIRE(oc.size() == 1);
    CHECK(oc[0].power == 3);
    CHECK(oc[0].coeff == std::complex<double>(1.0, 0.0));
    ExponentialPolynomial e;
    e.add(1.0, 0, Rational(2, 7));
    const auto oe = odd_part(e);
    for (int l = 1; l <= 10; ++l) {
        const double phi = 2 * std::numbers::pi * 2 / 7;
        CHECK(std::abs(oe(l) - std::complex<double>(0, std::sin(l * phi))) < 1e-12);
    }
    const auto terms = oe.terms();
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].phase == Rational(2, 7));
    CHECK(terms[1].phase == Rational(5, 7));
}

TEST_CASE("zeta functionals") {
    ExponentialPolynomial one;
    one.add(1.0, 0, Rational(0));
    CHECK(zeta_apply(one).real() == -0.5);
    ExponentialPolynomial ell;
    ell.add(1.0, 1, Rational(0));
    CHECK(zeta_apply(ell).real() == doctest::Approx(-1.0 / 12).epsilon(1e-16));
    CHECK(zeta_apply(ExponentialPolynomial{}) == std::complex<double>(0, 0));

    ExponentialPolynomial p;
    p.add({2.0, 1.0}, 0, Rational(1, 3));
    p.add(-3.0, 2, Rational(0));
    p.add(0.5, 3, Rational(0));
    p.add(1.5, 1, Rational(3, 4));
    ExponentialPolynomial even = p;
    even.add(odd_part(p), -1.0);
    CHECK(std::abs(zeta_apply(odd_part(p)) + zeta_apply(even) - zeta_apply(p)) < 1e-14);
    ExponentialPolynomial twice;
    twice.add(p, 2.0);
    CHECK(std::abs(zeta_apply(twice) - 2.0 * zeta_apply(p)) < 1e-14);
    CHECK(std::abs(zeta_deriv_apply(twice) - 2.0 * zeta_deriv_apply(p)) < 1e-12);
}

TEST_CASE("p_star") {
    ExponentialPolynomial sq;
    sq.add(1.0, 2, Rational(0));
    for (int p = 0; p < 6; ++p) CHECK(p_star(sq, Rational(p)).real() == doctest::Approx(-p * p * p / 8.0));
    ExponentialPolynomial lin;
    lin.add(1.0, 1, Rational(0));
    CHECK(p_star(lin, Rational(3)).real() == doctest::Approx(-9.0 / 8));
    ExponentialPolynomial osc;
    osc.add(1.0, 4, Rational(1, 5));
    CHECK(p_star(osc, Rational(7)) == std::complex<double>(0, 0));
    ExponentialPolynomial constant;
    constant.add(5.0, 0, Rational(0));
    CHECK(p_star(constant, Rational(4)) == std::complex<double>(0, 0));
}
