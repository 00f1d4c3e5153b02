#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lattice_oracle.hpp"
#include "qtorsion/errors.hpp"
#include "qtorsion/hyperkahler.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace qtorsion;
using boost::multiprecision::cpp_rational;

namespace {

const double kZeta3 = 1.2020569031595942854;
const double kZ4AtThree = 8 * (1 - 1.0 / 16) * kZeta3 * std::numbers::pi * std::numbers::pi / 6;

LatticeSpec random_lattice(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-0.35, 0.35);
    Eigen::MatrixXd b = Eigen::MatrixXd::Identity(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) b(i, j) += u(rng);
    return LatticeSpec::from_basis(b);
}

double completed(const LatticeSpec& l, double s) {
    return std::pow(std::numbers::pi, -s) * boost::math::tgamma(s) * lattice_zeta(l, s);
}

std::vector<std::complex<double>> as_complex(std::initializer_list<double> v) {
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("binomial collapse matches the second derivative of x(1-x)^{2n}") {
    for (int n = 1; n <= 6; ++n) {
        const cpp_rational expected = n == 1 ? 2 : 0;
        CHECK(collapse_second_derivative(n) == expected);
        for (int k = 0; k <= 10; k += 2) {
            INFO("n=" << n << " k=" << k);
            CHECK(binomial_collapse(n, k) == expected);
        }
    }
    CHECK_THROWS_AS(binomial_collapse(0, 0), ConfigurationError);
}

TEST_CASE("torsion combination is affine in k") {
    const auto z = as_complex({0.3, -1.1, 2.5, 0.7, -0.2});
    const auto h0 = hk_torsion_combination(z, 0);
    // q=1: 2(-1.1) ... direct sum of (-1)^{q+1} q(q+1) z_q
    CHECK(h0.t0.real() == doctest::Approx(-2 * -1.1 * -1 + 6 * 2.5 * -1 + 12 * 0.7 - 20 * -0.2 * 1).epsilon(1e-14));
    for (int k = 0; k <= 8; k += 2) {
        const auto h = hk_torsion_combination(z, k);
        CHECK(std::abs(h.total - (h0.t0 + double(k) * h0.t_dbar)) < 1e-13);
    }
    CHECK_THROWS_AS(hk_torsion_combination(z, 3), ConfigurationError);
    CHECK_THROWS_AS(hk_torsion_combination(as_complex({1.0, 2.0}), 0), ConfigurationError);
}

TEST_CASE("self-dual input with vanishing alternating sum is k-independent") {
    // zeta'_q = zeta'_{2n-q} and sum (-1)^q zeta'_q = 0, as for Dolbeault data with W = W*.
    const double c0 = 0.8, c1 = -0.45;
    const auto z = as_complex({c0, c1, 2 * c1 - 2 * c0, c1, c0});
    const auto base = hk_torsion_combination(z, 0).total;
    CHECK(std::abs(hk_torsion_combination(z, 0).t_dbar) < 1e-15);
    for (int k = 2; k <= 10; k += 2) CHECK(std::abs(hk_torsion_combination(z, k).total - base) < 1e-13);

    // Symmetry alone leaves t_dbar = n * sum (-1)^{q+1} zeta'_q.
    const auto sym = as_complex({1.0, 0.0, 0.0, 0.0, 1.0});
    CHECK(hk_torsion_combination(sym, 0).t_dbar.real() == doctest::Approx(-4.0));
}

TEST_CASE("Z^4 lattice zeta at s = 3 against the Jacobi four-square oracle") {
    const auto r = oracle::jacobi_r4(60);
    // Direct count of representations as a sum of four squares.
    for (int m = 1; m <= 60; ++m) {
        long long count = 0;
        for (int a = -8; a <= 8; ++a)
            for (int b = -8; b <= 8; ++b)
                for (int c = -8; c <= 8; ++c)
                    for (int d = -8; d <= 8; ++d) count += a * a + b * b + c * c + d * d == m;
        CHECK(count == r[m]);
    }
    const auto z4 = LatticeSpec::cubic(4);
    const double value = lattice_zeta(z4, 3.0);
    CHECK(value == doctest::Approx(14.82978).epsilon(1e-6));
    CHECK(std::abs(value - kZ4AtThree) < 1e-10);
    CHECK(std::abs(value - oracle::jacobi_epstein_z4(3.0, 2'000'000)) < 1e-10);
    CHECK(std::abs(value - oracle::epstein_brute_force(Eigen::Matrix4d::Identity(), 3.0, 2000)) < 1e-8);
}

TEST_CASE("random rank-4 lattices agree with brute-force summation") {
    std::mt19937 rng(20240917);
    for (int trial = 0; trial < 3; ++trial) {
        const auto lattice = random_lattice(rng);
        const Eigen::Matrix4d gram = lattice.dual_gram();
        for (double s : {3.0, 4.0}) {
            INFO("trial " << trial << " s=" << s);
            const double theta = lattice_zeta(lattice, s);
            const double brute = oracle::epstein_brute_force(gram, s, 2000);
            CHECK(std::abs(theta - brute) < 1e-8 * std::max(1.0, std::abs(brute)));
        }
    }
}

TEST_CASE("special values, scaling and the functional equation") {
    std::mt19937 rng(7);
    const auto lattice = random_lattice(rng);
    CHECK(lattice_zeta(lattice, 0.0) == -1.0);
    CHECK(lattice_zeta(lattice, -2.0) == 0.0);
    CHECK(std::abs(lattice_zeta(lattice, 1e-7) + 1.0) < 1e-5);
    CHECK_THROWS_AS(lattice_zeta(lattice, 2.0), DomainError);

    const double c = 1.7;
    for (double s : {0.4, 1.3, 3.0})
        CHECK(lattice_zeta(lattice.scaled(c), s) == doctest::Approx(std::pow(c, 2 * s) * lattice_zeta(lattice, s)).epsilon(1e-10));

    // pi^{-s} Gamma(s) Z_Lambda(s) = covol(Lambda) pi^{s-2} Gamma(2-s) Z_{Lambda dual}(2-s)
    const auto dual = lattice.dual();
    for (double s : {0.3, 0.9, 1.6, 3.2}) {
        INFO("s=" << s);
        CHECK(completed(lattice, s) == doctest::Approx(lattice.covolume() * completed(dual, 2 - s)).epsilon(1e-10));
    }

    const double h = 1e-4;
    const double numeric = (lattice_zeta(lattice, h) - lattice_zeta(lattice, -h)) / (2 * h);
    CHECK(lattice_zeta_deriv0(lattice) == doctest::Approx(numeric).epsilon(1e-7));
}

TEST_CASE("flat torus torsion") {
    const auto z4 = LatticeSpec::cubic(4);
    const auto t = torus_torsion(z4, 2);
    CHECK(t.n == 1);
    CHECK(t.coefficient == 2);
    CHECK(t.torsion == doctest::Approx(-2 * lattice_zeta_deriv0(z4)).epsilon(1e-14));
    // Same number from zeta'_q = C(2,q) zeta'(0).
    const double d = t.zeta_deriv0;
    CHECK(hk_torsion_combination(as_complex({d, 2 * d, d}), 2).total.real() == doctest::Approx(t.torsion).epsilon(1e-14));

    Eigen::MatrixXd b = Eigen::MatrixXd::Identity(8, 8);
    b(0, 1) = 0.2;
    const auto t8 = torus_torsion(LatticeSpec::from_basis(b), 4);
    CHECK(t8.n == 2);
    CHECK(t8.coefficient == 0);
    CHECK(t8.torsion == 0.0);

    CHECK_THROWS_AS(torus_torsion(LatticeSpec::cubic(3), 0), ConfigurationError);
    Eigen::MatrixXd singular = Eigen::MatrixXd::Zero(4, 4);
    CHECK_THROWS_AS(LatticeSpec::from_basis(singular), DomainError);
}
