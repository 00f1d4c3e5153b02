#pragma once

#include "qtorsion/characters.hpp"
#include "qtorsion/wolf.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace qtorsion {

/// Bundle data: lambda = k alpha + lambda_circ at the torus element X.
struct BundleSpec {
    int k = 0;
    /// Highest weight of the K0 module, as an ambient weight orthogonal to alpha.
    Weight lambda_circ;
    TorusElement x = TorusElement::identity(0);

    static BundleSpec make(const WolfSpaceData& w, int k, const Weight& lambda_circ, const TorusElement& x);
    Weight lambda(const WolfSpaceData& w) const;
};

/// Two readings of the closed form for Z(s). `reflected` writes the Psi0^+
/// series through chi_{rho+lambda-m(alpha+beta)} over m > p, which is what the
/// direct resummation of the spectrum produces. `printed` keeps
/// chi_{rho+lambda+l(alpha+beta)} over l > p with the l-emended denominator.
enum class ClosedFormVariant { reflected, printed };

struct ZetaSeries {
    std::complex<double> value;
    /// Bound on the omitted l-tail.
    double tail_bound = 0.0;
    std::size_t terms = 0;
};

/// Smallest s for which the l-series converges absolutely.
double convergence_threshold(const WolfSpaceData& w, const BundleSpec& b);

/// Z(s) summed until the tail bound is below tol * max(1, |Z|) or max_terms
/// per beta are used; throws DomainError below the convergence threshold and
/// NumericError if the tail bound stays above tol.
ZetaSeries zeta_closed_form(const WolfSpaceData& w, const BundleSpec& b, double s,
                            ClosedFormVariant variant = ClosedFormVariant::reflected, double tol = 1e-10,
                            std::size_t max_terms = 20'000'000);

/// Closed-form terms with eigenvalue (the half Casimir difference) <= cutoff.
std::complex<double> zeta_closed_form_partial(const WolfSpaceData& w, const BundleSpec& b, double s,
                                              const Rational& eigen_cutoff,
                                              ClosedFormVariant variant = ClosedFormVariant::reflected);

/// Explicit bound for the closed-form terms with eigenvalue > cutoff.
double zeta_tail_bound(const WolfSpaceData& w, const BundleSpec& b, double s, const Rational& eigen_cutoff);

struct TorsionParts {
    std::complex<double> zeta_prime_part;
    std::complex<double> p_star_part;
    std::complex<double> log_norm_part;
    std::complex<double> chi_log_part;
    std::complex<double> finite_sum_plus;
    std::complex<double> finite_sum_minus;
};

struct TorsionResult {
    std::complex<double> total;
    TorsionParts parts;
    std::string cartan_type;
    int k = 0;
    Weight lambda_circ;
    std::vector<Rational> element;
    bool identity = true;
    double precision_estimate = 0.0;
};

TorsionResult torsion(const WolfSpaceData& w, const BundleSpec& b, double tol = 1e-12);

struct SpectralTerm {
    Weight b_pi;
    /// (|b_pi|^2 - |rho+lambda|^2) / 2
    Rational eigenvalue;
    /// dim Hom_K for q = 0..2n.
    std::vector<std::int64_t> q_multiplicities;
    std::complex<double> char_at_x;
};

/// All b_pi with eigenvalue <= cutoff and some nonzero q-multiplicity.
std::vector<SpectralTerm> spectral_oracle(const WolfSpaceData& w, const BundleSpec& b, const Rational& eigen_cutoff);
std::vector<SpectralTerm> spectral_oracle(const BranchingEngine& engine, const BundleSpec& b,
                                          const Rational& eigen_cutoff);

/// sum over terms with nonzero eigenvalue of sum_q (-1)^{q+1} q mult chi eigenvalue^{-s}.
std::complex<double> oracle_partial_zeta(const std::vector<SpectralTerm>& terms, double s);

struct OccurCheck {
    std::complex<double> lhs;
    std::complex<double> rhs;
};

OccurCheck lemma_occur_check(const BranchingEngine& engine, const BundleSpec& b, const Weight& b_pi);
OccurCheck lemma_occur_check(const WolfSpaceData& w, const BundleSpec& b, const Weight& b_pi);

/// The two eigenvalue expressions for b_pi: half of (Cas_G - c k(k+2n+2) - Cas_K0(lambda_circ)),
/// and (|b_pi|^2 - |rho+lambda|^2)/2.
std::pair<Rational, Rational> casimir_eigenvalues(const WolfSpaceData& w, const BundleSpec& b, const Weight& b_pi);

/// Quillen log-norms per eigenvalue class of g (keyed by the phase r of exp(2 pi i r)):
/// log |.|^2_Q = log |.|^2_{L2} - T.
std::map<Rational, std::complex<double>> quillen_log_metric(const std::map<Rational, double>& l2_log,
                                                            const TorsionResult& t);

}  // namespace qtorsion
