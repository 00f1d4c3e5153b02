#pragma once

#include "qtorsion/rootsys.hpp"

#include <utility>
#include <vector>

namespace qtorsion {

/// Combinatorial skeleton of the quaternionic symmetric space attached to a
/// simple root system: the sp(1) root 2*alpha = theta, the weights of the
/// isotropy module E and the positive systems of K and of its complement K0.
struct WolfSpaceData {
    RootSystem rs;
    Weight alpha;
    /// Weights of E (closed under negation, 2n of them).
    std::vector<Weight> psi0;
    /// Positive roots of K: those of K0 together with 2*alpha.
    std::vector<Weight> sigma_k_plus;
    PositiveSystem k_system;
    PositiveSystem k_circ_system;
    Weight rho_k;
    Weight rho_k_circ;
    int n = 0;
    Rational kappa_over_8;

    /// Fundamental weights of the semisimple part of K0, in the span of its roots.
    std::vector<Weight> k_circ_fundamental_weights() const;
    /// lambda = k*alpha + sum_i c_i omega_i over the K0 fundamental weights.
    Weight make_lambda(int k, const std::vector<Rational>& k_circ_coords) const;
    /// Splits lambda into (k, lambda_circ) with lambda = k*alpha + lambda_circ, lambda_circ orthogonal to alpha.
    std::pair<Rational, Weight> split_lambda(const Weight& lambda) const;
};

/// Throws ConsistencyError if any structural identity fails, DomainError for rank-one input.
WolfSpaceData build_wolf_space(const RootSystem& rs);

struct PsiSplit {
    std::vector<Weight> plus;
    std::vector<Weight> minus;
};

/// Partitions psi0 by the sign of <(alpha+beta)^vee, rho+lambda>.
PsiSplit psi_split(const WolfSpaceData& w, const Weight& lambda);

}  // namespace qtorsion
