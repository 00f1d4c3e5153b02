#include "qtorsion/hyperkahler.hpp"

#include "qtorsion/errors.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <string>

namespace qtorsion {

using boost::multiprecision::cpp_rational;

namespace {

cpp_rational binomial(int n, int r) {
    cpp_rational b = 1;
    for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
    return b;
}

/// Gamma(a, x) for x > 0 and any real a, via Gamma(a, x) = (Gamma(a+1, x) - x^a e^{-x}) / a below 0.
double upper_gamma(double a, double x) {
    if (a > 0) return boost::math::tgamma(a, x);
    if (a == 0) return boost::math::expint(1, x);
    return (upper_gamma(a + 1, x) - std::pow(x, a) * std::exp(-x)) / a;
}

/// Gamma(a, x) x^{-a}
double scaled_upper_gamma(double a, double x) { return upper_gamma(a, x) * std::pow(x, -a); }

void check_positive(const Eigen::MatrixXd& gram) {
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success) throw DomainError("lattice Gram matrix is not positive definite");
}

double theta_cutoff(double a, double b) { return 50.0 + 2.0 * std::max(std::abs(a), std::abs(b)); }

}  // namespace

HkTorsion hk_torsion_combination(const std::vector<std::complex<double>>& zeta_primes, int k) {
    if (zeta_primes.size() % 2 == 0) throw ConfigurationError("need 2n+1 values zeta'_q(0), q = 0..2n");
    if (k < 0 || k % 2 != 0) throw ConfigurationError("k must be even and nonnegative, got " + std::to_string(k));
    HkTorsion out;
    for (std::size_t q = 0; q < zeta_primes.size(); ++q) {
        const double sign = q % 2 ? 1.0 : -1.0;
        const double qd = static_cast<double>(q);
        out.t0 += sign * qd * (qd + 1.0) * zeta_primes[q];
        out.t_dbar += sign * qd * zeta_primes[q];
    }
    out.total = out.t0 + double(k) * out.t_dbar;
    return out;
}

cpp_rational binomial_collapse(int n, int k) {
    if (n < 1) throw ConfigurationError("n must be at least 1");
    cpp_rational sum = 0;
    for (int q = 0; q <= 2 * n; ++q) {
        const cpp_rational term = cpp_rational(q) * (q + k + 1) * binomial(2 * n, q);
        sum += q % 2 ? -term : term;
    }
    return sum;
}

cpp_rational collapse_second_derivative(int n) {
    if (n < 1) throw ConfigurationError("n must be at least 1");
    // x (1-x)^{2n} = sum_j (-1)^j C(2n, j) x^{j+1}
    cpp_rational sum = 0;
    for (int j = 0; j <= 2 * n; ++j) {
        const cpp_rational term = binomial(2 * n, j) * (j + 1) * j;
        sum += j % 2 ? -term : term;
    }
    return sum;
}

LatticeSpec LatticeSpec::from_basis(const Eigen::MatrixXd& basis) {
    if (basis.rows() != basis.cols() || basis.rows() == 0) throw ConfigurationError("lattice basis must be square");
    if (!(std::abs(basis.determinant()) > 1e-12)) throw DomainError("lattice basis is singular");
    LatticeSpec l;
    l.basis_ = basis;
    check_positive(l.gram());
    return l;
}

LatticeSpec LatticeSpec::cubic(int rank) { return from_basis(Eigen::MatrixXd::Identity(rank, rank)); }

LatticeSpec LatticeSpec::dual() const { return from_basis(basis_.transpose().inverse()); }

void for_each_lattice_point(const Eigen::MatrixXd& gram, double bound,
                            const std::function<void(const Eigen::VectorXi&, double)>& visit) {
    const int d = static_cast<int>(gram.rows());
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success) throw DomainError("lattice Gram matrix is not positive definite");
    // Q(m) = |R m|^2 with R upper triangular; enumerate m_{d-1}, ..., m_0 (Fincke-Pohst).
    const Eigen::MatrixXd r = llt.matrixU();
    Eigen::VectorXi m = Eigen::VectorXi::Zero(d);
    std::vector<double> partial(d + 1, 0.0);
    std::function<void(int)> descend = [&](int i) {
        if (i < 0) {
            if (partial[0] > 0.0) visit(m, partial[0]);
            return;
        }
        double centre = 0.0;
        for (int j = i + 1; j < d; ++j) centre += r(i, j) * m[j];
        centre /= r(i, i);
        const double room = bound - partial[i + 1];
        if (room < 0) return;
        const double half = std::sqrt(room) / r(i, i);
        const int lo = static_cast<int>(std::ceil(-centre - half - 1e-12));
        const int hi = static_cast<int>(std::floor(-centre + half + 1e-12));
        for (int v = lo; v <= hi; ++v) {
            m[i] = v;
            const double y = r(i, i) * (v + centre);
            partial[i] = partial[i + 1] + y * y;
            if (partial[i] <= bound * (1 + 1e-14)) descend(i - 1);
        }
        m[i] = 0;
    };
    descend(d - 1);
}

namespace {

/// Pieces of pi^{-s} Gamma(s) Z(s) = S1(s) + c S2(s) + c/(s - d/2) - 1/s.
struct ThetaSplit {
    double direct;
    double dual;
    double c;
};

ThetaSplit theta_split(const LatticeSpec& lattice, double s) {
    const double pi = boost::math::constants::pi<double>();
    const int d = lattice.rank();
    const double a_dual = d / 2.0 - s;
    const double cut = theta_cutoff(s, a_dual) / pi;
    ThetaSplit out{0.0, 0.0, lattice.covolume()};
    // Z sums over the dual lattice; the Poisson partner runs over Lambda itself.
    for_each_lattice_point(lattice.dual_gram(), cut, [&](const Eigen::VectorXi&, double q) {
        out.direct += scaled_upper_gamma(s, pi * q);
    });
    for_each_lattice_point(lattice.gram(), cut, [&](const Eigen::VectorXi&, double q) {
        out.dual += scaled_upper_gamma(a_dual, pi * q);
    });
    return out;
}

}  // namespace

double lattice_zeta(const LatticeSpec& lattice, double s) {
    const int d = lattice.rank();
    if (s == d / 2.0) throw DomainError("lattice zeta has its pole at s = " + std::to_string(d / 2.0));
    if (s <= 0 && s == std::floor(s)) return s == 0 ? -1.0 : 0.0;
    const double pi = boost::math::constants::pi<double>();
    const auto t = theta_split(lattice, s);
    const double completed = t.direct + t.c * t.dual + t.c / (s - d / 2.0) - 1.0 / s;
    return completed * std::pow(pi, s) / boost::math::tgamma(s);
}

double lattice_zeta_deriv0(const LatticeSpec& lattice) {
    // pi^s / Gamma(s) = s + (gamma + log pi) s^2 + O(s^3)
    const int d = lattice.rank();
    const double pi = boost::math::constants::pi<double>();
    const auto t = theta_split(lattice, 0.0);
    const double regular = t.direct + t.c * t.dual - t.c * 2.0 / d;
    return regular - boost::math::constants::euler<double>() - std::log(pi);
}

TorusTorsion torus_torsion(const LatticeSpec& lattice, int k) {
    if (lattice.rank() % 4 != 0) throw ConfigurationError("torus rank must be 4n");
    TorusTorsion out;
    out.n = lattice.rank() / 4;
    out.coefficient = binomial_collapse(out.n, k);
    out.zeta_deriv0 = lattice_zeta_deriv0(lattice);
    out.torsion = -out.coefficient.convert_to<double>() * out.zeta_deriv0;
    return out;
}

}  // namespace qtorsion
