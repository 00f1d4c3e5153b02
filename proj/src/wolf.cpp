#include "qtorsion/wolf.hpp"

#include "qtorsion/errors.hpp"
#include "qtorsion/linsolve.hpp"

#include <algorithm>
#include <set>

namespace qtorsion {

WolfSpaceData build_wolf_space(const RootSystem& rs) {
    WolfSpaceData w;
    w.rs = rs;
    const Weight& theta = rs.highest_root();
    w.alpha = Rational(1, 2) * theta;

    std::vector<Weight> k_circ_plus;
    std::set<Weight> complement;
    for (const auto& g : rs.positive_roots()) {
        const Rational p = RootSystem::coroot_pairing(g, theta);
        if (p == 0) {
            k_circ_plus.push_back(g);
        } else if (p == 1) {
            w.psi0.push_back(g - w.alpha);
            complement.insert(g);
        } else if (g != theta) {
            throw ConsistencyError("root " + g.str() + " pairs with the highest coroot outside {0, 1, 2}");
        }
    }
    if (w.psi0.empty()) throw DomainError(rs.cartan_type().name() + " has no quaternionic isotropy module");
    std::sort(w.psi0.begin(), w.psi0.end());
    w.n = static_cast<int>(w.psi0.size() / 2);

    const std::set<Weight> psi_set(w.psi0.begin(), w.psi0.end());
    for (const auto& b : w.psi0) {
        if (!psi_set.count(-b)) throw ConsistencyError("psi0 is not closed under negation");
        if (!complement.count(w.alpha + b)) throw ConsistencyError("alpha + beta is not a positive root");
        if (dot(b, w.alpha) != 0) throw ConsistencyError("psi0 weight not orthogonal to alpha");
    }
    if (w.psi0.size() != complement.size() || w.psi0.size() % 2 != 0) throw ConsistencyError("psi0 size mismatch");

    w.sigma_k_plus = k_circ_plus;
    w.sigma_k_plus.push_back(theta);
    const std::size_t d = rs.ambient_dim();
    w.k_circ_system = PositiveSystem::from_positive_roots(k_circ_plus, d);
    w.k_system = PositiveSystem::from_positive_roots(w.sigma_k_plus, d);
    w.rho_k_circ = w.k_circ_system.rho;
    w.rho_k = w.k_system.rho;
    if (w.rho_k != w.rho_k_circ + w.alpha) throw ConsistencyError("rho_K differs from rho_K0 + alpha");
    if (rs.rho() - w.rho_k_circ != Rational(w.n + 1) * w.alpha)
        throw ConsistencyError("rho - rho_K0 differs from (n+1) alpha");

    // Casimir of Sym^n H on the sp(1) factor: rho_sp1 = alpha.
    const Weight top = w.alpha + Rational(w.n) * w.alpha;
    w.kappa_over_8 = rs.norm2(top) - rs.norm2(w.alpha);
    return w;
}

std::vector<Weight> WolfSpaceData::k_circ_fundamental_weights() const {
    const auto& simple = k_circ_system.simple_roots;
    const std::size_t r = simple.size();
    ExactMatrix<Rational> m(r, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < r; ++i) m(j, i) = RootSystem::coroot_pairing(simple[i], simple[j]);
    std::vector<Weight> out;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Rational> e(r, Rational(0));
        e[i] = 1;
        const auto x = solve_exact(m, e);
        if (!x) throw ConsistencyError("singular K0 Cartan matrix");
        Weight f(rs.ambient_dim());
        for (std::size_t j = 0; j < r; ++j) f += (*x)[j] * simple[j];
        out.push_back(std::move(f));
    }
    return out;
}

Weight WolfSpaceData::make_lambda(int k, const std::vector<Rational>& k_circ_coords) const {
    const auto fw = k_circ_fundamental_weights();
    if (k_circ_coords.size() > fw.size())
        throw ConfigurationError("K0 weight has " + std::to_string(k_circ_coords.size()) +
                                 " coordinates but K0 has rank " + std::to_string(fw.size()));
    Weight lam = Rational(k) * alpha;
    for (std::size_t i = 0; i < k_circ_coords.size(); ++i) lam += k_circ_coords[i] * fw[i];
    return lam;
}

std::pair<Rational, Weight> WolfSpaceData::split_lambda(const Weight& lambda) const {
    const Rational k = dot(lambda, alpha) / dot(alpha, alpha);
    return {k, lambda - k * alpha};
}

PsiSplit psi_split(const WolfSpaceData& w, const Weight& lambda) {
    PsiSplit out;
    const Weight shifted = w.rs.rho() + lambda;
    for (const auto& b : w.psi0) {
        if (RootSystem::coroot_pairing(shifted, w.alpha + b) >= 0)
            out.plus.push_back(b);
        else
            out.minus.push_back(b);
    }
    return out;
}

}  // namespace qtorsion
