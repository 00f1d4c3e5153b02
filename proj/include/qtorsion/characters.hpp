#pragma once

#include "qtorsion/exp_poly.hpp"
#include "qtorsion/rootsys.hpp"
#include "qtorsion/wolf.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace qtorsion {

using BigRational = boost::multiprecision::cpp_rational;

using WeightCounts = std::unordered_map<Weight, std::int64_t, WeightHash>;

struct WeightMultiplicityTable {
    /// rho + highest weight.
    Weight head;
    std::map<Weight, std::int64_t> entries;

    std::int64_t total() const;
};

/// Dominant conjugate of `w` under the Weyl group of `ps` with the sign of the
/// conjugating element; the sign is 0 when `w` lies on a wall.
std::pair<Weight, int> dominant_conjugate(const PositiveSystem& ps, const Weight& w);

/// Weyl orbit of `w` under the reflections of `ps`.
std::vector<Weight> weyl_orbit(const PositiveSystem& ps, const Weight& w);

/// Freudenthal multiplicities of the dominant weights of the irreducible
/// module with the given dominant highest weight. Memoized per (ps, highest).
std::shared_ptr<const std::map<Weight, std::int64_t>> dominant_multiplicities(const PositiveSystem& ps,
                                                                              const Weight& highest);

/// All weights with multiplicity, obtained by orbit expansion of the dominant table.
WeightCounts all_multiplicities(const PositiveSystem& ps, const Weight& highest);

/// Alt{b}/Alt{rho} at a regular element. Throws DomainError at the identity or at non-regular X.
std::complex<double> character_value(const RootSystem& rs, const Weight& b, const TorusElement& x);

/// prod_{gamma > 0} <b, gamma>/<rho, gamma>; signed and zero for singular b.
BigRational dimension(const RootSystem& rs, const Weight& b);

/// Character at the identity (dimension) or at a regular element.
std::complex<double> character_at(const RootSystem& rs, const Weight& b, const TorusElement& x);

/// P(l) = chi_{base + l delta}(e^X) as an exponential polynomial in l.
ExponentialPolynomial character_ell_family(const RootSystem& rs, const Weight& base, const Weight& delta,
                                           const TorusElement& x);
/// Same with base = rho + lambda.
ExponentialPolynomial character_ell_family(const WolfSpaceData& w, const Weight& lambda, const Weight& delta,
                                           const TorusElement& x);

/// Full weight table of the G-module with b = rho + highest weight. b must be dominant regular.
WeightMultiplicityTable weight_multiplicities(const RootSystem& rs, const Weight& b);

/// Decompositions into irreducible K-modules and the Hom pairing between
/// V_pi restricted to K and Lambda^q E (x) Sym^{k+q} H (x) V^{K0}. K-modules
/// are labelled by their highest weight (without rho_K).
class BranchingEngine {
public:
    explicit BranchingEngine(const WolfSpaceData& w);

    const WolfSpaceData& wolf() const noexcept { return w_; }

    /// K-types of V_pi, b_pi = rho + highest weight.
    std::map<Weight, std::int64_t> restrict_to_k(const Weight& b_pi) const;
    /// K-types of the bundle fibre in degree q.
    std::shared_ptr<const std::map<Weight, std::int64_t>> bundle_types(int k, const Weight& lambda_circ, int q) const;
    std::int64_t dim_hom(const Weight& b_pi, int k, const Weight& lambda_circ, int q) const;
    /// dim_hom for q = 0..2n, sharing one restriction of V_pi.
    std::vector<std::int64_t> dim_hom_all(const Weight& b_pi, int k, const Weight& lambda_circ) const;

    /// Decomposes a W_K-invariant weight multiset into K-types (Brauer-Klimyk).
    std::map<Weight, std::int64_t> decompose(const WeightCounts& weights) const;

    /// Multiplicity of the K-type mu in V_pi, by Racah-Speiser over W_K.
    std::int64_t k_type_multiplicity(const Weight& b_pi, const Weight& mu) const;

private:
    WolfSpaceData w_;
    /// (rho_K - w rho_K, sign w) for w in W_K.
    std::vector<std::pair<Weight, int>> k_shifts_;
    mutable std::mutex mutex_;
    mutable std::map<std::tuple<int, Weight, int>, std::shared_ptr<const std::map<Weight, std::int64_t>>> bundle_cache_;
};

std::int64_t branch_dim_hom(const WolfSpaceData& w, const Weight& b_pi, int k, const Weight& lambda_circ, int q);

}  // namespace qtorsion
