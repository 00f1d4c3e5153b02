#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <functional>
#include <vector>

namespace qtorsion {

struct HkTorsion {
    std::complex<double> total;
    /// sum (-1)^{q+1} q(q+1) zeta'_q(0)
    std::complex<double> t0;
    /// Holomorphic torsion sum (-1)^{q+1} q zeta'_q(0).
    std::complex<double> t_dbar;
};

/// sum_{q=0}^{2n} (-1)^{q+1} q(q+k+1) zeta'_q(0) = t0 + k t_dbar; input has length 2n+1.
HkTorsion hk_torsion_combination(const std::vector<std::complex<double>>& zeta_primes, int k);

/// sum_q (-1)^q q(q+k+1) C(2n, q), exactly.
boost::multiprecision::cpp_rational binomial_collapse(int n, int k);
/// d^2/dx^2 [x (1-x)^{2n}] at x = 1, from the expanded polynomial.
boost::multiprecision::cpp_rational collapse_second_derivative(int n);

/// Full-rank lattice Lambda in R^rank; columns of `basis` generate it.
class LatticeSpec {
public:
    /// Throws DomainError for a singular basis.
    static LatticeSpec from_basis(const Eigen::MatrixXd& basis);
    static LatticeSpec cubic(int rank);

    int rank() const { return static_cast<int>(basis_.cols()); }
    const Eigen::MatrixXd& basis() const { return basis_; }
    /// Gram matrix of Lambda.
    Eigen::MatrixXd gram() const { return basis_.transpose() * basis_; }
    /// Gram matrix of the dual lattice, (B^T B)^{-1}.
    Eigen::MatrixXd dual_gram() const { return gram().inverse(); }
    double covolume() const { return std::abs(basis_.determinant()); }
    LatticeSpec dual() const;
    LatticeSpec scaled(double c) const { return from_basis(c * basis_); }

private:
    Eigen::MatrixXd basis_;
};

/// Calls `visit(m, Q)` for every nonzero integer vector with Q = m^T A m <= bound.
void for_each_lattice_point(const Eigen::MatrixXd& gram, double bound,
                            const std::function<void(const Eigen::VectorXi&, double)>& visit);

/// sum over nonzero mu in the dual lattice of |mu|^{-2s}, continued in s by the
/// theta split at t = 1. Throws DomainError at the pole s = rank/2 and for a
/// non-positive-definite Gram matrix.
double lattice_zeta(const LatticeSpec& lattice, double s);
/// s-derivative of lattice_zeta at s = 0.
double lattice_zeta_deriv0(const LatticeSpec& lattice);

struct TorusTorsion {
    int n = 0;
    /// binomial_collapse(n, k): 2 for n = 1, 0 otherwise.
    boost::multiprecision::cpp_rational coefficient;
    double zeta_deriv0 = 0.0;
    /// sum (-1)^{q+1} q(q+k+1) C(2n,q) zeta'(0) = -coefficient * zeta_deriv0.
    double torsion = 0.0;
};

/// Flat torus V/Lambda with trivial bundle; rank must be 4n.
TorusTorsion torus_torsion(const LatticeSpec& lattice, int k);

}  // namespace qtorsion
