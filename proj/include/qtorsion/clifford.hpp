#pragma once

#include "qtorsion/linsolve.hpp"
#include "qtorsion/weight.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace qtorsion {

using ExactRational = boost::multiprecision::cpp_rational;
using RatMatrix = ExactMatrix<ExactRational>;

/// Conventions for the musical maps. +1 means x^sharp = sigma(., x), -1 means sigma(x, .).
struct MusicalConventions {
    int h_sharp = 1;
    int e_sharp = 1;
};

/// Sym^{k+q} H (x) Lambda^r_0 E*, stored at [offset, offset + sym_dim * lambda_dim)
/// with the Lambda index running fastest.
struct TensorBlock {
    int q = 0;
    int r = 0;
    int l = 0;
    std::size_t offset = 0;
    std::size_t sym_dim = 0;
    std::size_t lambda_dim = 0;

    std::size_t dim() const { return sym_dim * lambda_dim; }
};

/// Fibre model of the d-complex of Sym^k H on a 4n-dimensional quaternionic
/// Kaehler manifold: H = C^2 with sigma_H(h1, h2) = 1, E = C^{2n} with
/// sigma_E(e_i, e_{n+i}) = 1. Vectors are coordinate lists over these bases.
class TensorModel {
public:
    static constexpr int kMaxN = 3;
    static constexpr int kMaxK = 4;

    /// Throws ResourceError beyond n <= 3, k <= 4 and ConfigurationError for odd or negative k.
    static TensorModel build(int n, int k, MusicalConventions conv = {});

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<TensorBlock>& blocks() const noexcept { return blocks_; }
    /// Index into blocks(), or -1 when (q, r) is not a block.
    int block_index(int q, int r) const;
    const MusicalConventions& conventions() const noexcept { return conv_; }

    ExactRational sigma_h(const std::vector<Rational>& h, const std::vector<Rational>& h2) const;
    ExactRational sigma_e(const std::vector<Rational>& e, const std::vector<Rational>& e2) const;

    /// h. : Sym^m H -> Sym^{m+1} H on the monomial basis h1^{m-j} h2^j.
    RatMatrix sym_mult(const std::vector<Rational>& h, int m) const;
    /// h^sharp contraction : Sym^m H -> Sym^{m-1} H.
    RatMatrix sym_contract(const std::vector<Rational>& h, int m) const;
    /// e^sharp wedge followed by the trace-free projection : Lambda^r_0 -> Lambda^{r+1}_0.
    RatMatrix lambda_wedge(const std::vector<Rational>& e, int r) const;
    /// Interior product with e : Lambda^r_0 -> Lambda^{r-1}_0.
    RatMatrix lambda_contract(const std::vector<Rational>& e, int r) const;
    /// Columns: a basis of Lambda^r_0 E* in the subset basis of Lambda^r E*.
    const RatMatrix& trace_free_basis(int r) const { return kernel_.at(r); }

    /// (1/sqrt 2)(h (x) e). as the four-term block operator.
    Eigen::MatrixXd clifford(const std::vector<Rational>& h, const std::vector<Rational>& e) const;
    /// sigma_d[h^sharp (x) e^sharp] on the blocks.
    Eigen::MatrixXd symbol_d(const std::vector<Rational>& h, const std::vector<Rational>& e) const;
    /// sigma_delta[h^sharp (x) e^sharp] on the blocks, read through Sym^{k+q} H (x) Lambda^{2n,2n-q} E*.
    Eigen::MatrixXd symbol_delta(const std::vector<Rational>& h, const std::vector<Rational>& e) const;

private:
    struct Term {
        ExactRational coeff;
        RatMatrix sym;
        RatMatrix lambda;
        int from = 0;
        int to = 0;
    };
    Eigen::MatrixXd assemble(const std::vector<Term>& terms) const;
    std::vector<Rational> e_sharp(const std::vector<Rational>& e) const;

    int n_ = 0;
    int k_ = 0;
    MusicalConventions conv_;
    std::size_t dim_ = 0;
    std::vector<TensorBlock> blocks_;
    /// Per r: subsets of {0..2n-1} of size r as bitmasks, and the inverse lookup.
    std::vector<std::vector<std::uint32_t>> subsets_;
    std::vector<RatMatrix> kernel_;
    /// Rows: coordinates along kernel_[r] of the projection along sigma_E ^ Lambda^{r-2}.
    std::vector<RatMatrix> projector_;
};

/// dim Lambda^r_0 E* = C(2n, r) - C(2n, r-2).
std::int64_t trace_free_dim(int n, int r);

/// (-1)^l (k+q-l)! (k+n+l+1)! / (k+q+1)! on the (q, r) block.
ExactRational printed_gamma(int n, int k, int q, int r);
std::vector<double> printed_gamma(const TensorModel& m);
/// printed_gamma times (-1)^{q(q+3)/2}.
std::vector<double> sign_corrected_gamma(const TensorModel& m);

struct CliffordReport {
    /// {v., w.} = lambda0 sigma_H sigma_E id.
    double lambda0 = 0.0;
    double max_residual = 0.0;
    /// Largest entry of an anticommutator outside the diagonal blocks.
    double max_off_block = 0.0;
    std::size_t trials = 0;
};

/// Basis pairs plus `trials` random pairs with small integer coordinates.
CliffordReport check_clifford_relation(const TensorModel& m, std::size_t trials, std::uint64_t seed);

struct DiracReport {
    double max_residual = 0.0;
    /// Residual after doubling gamma on block i alone.
    std::vector<double> perturbed_residuals;
    /// Residual after doubling gamma on every block.
    double global_scale_residual = 0.0;
    std::size_t trials = 0;
};

/// Compares sigma_d + gamma^{-1} sigma_delta gamma with (1/sqrt 2)(h (x) e).
DiracReport check_dirac_identity(const TensorModel& m, const std::vector<double>& gamma, std::size_t trials,
                                 std::uint64_t seed);

struct IdentityReport {
    /// h.h~^sharp - h~.h^sharp - (k+q) sigma_H(h, h~), exact on every Sym^{k+q}.
    bool sym_identity_exact = true;
    /// e contraction / trace-free wedge anticommutator identity on every Lambda^r_0.
    bool lambda_identity_exact = true;
    /// sigma_H(h,a) h~ - sigma_H(h~,a) h - sigma_H(h,h~) a on basis triples.
    bool sp1_identity_exact = true;
    /// sigma_d^2 and sigma_delta^2 at pure covectors.
    double max_square = 0.0;
};

IdentityReport check_identities(const TensorModel& m, std::size_t trials, std::uint64_t seed);

}  // namespace qtorsion
