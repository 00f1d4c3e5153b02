#include "qtorsion/torsion.hpp"

#include "qtorsion/errors.hpp"
#include "qtorsion/zetareg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qtorsion {

namespace {

bool is_integral(const RootSystem& rs, const Weight& b) {
    for (const auto& a : rs.simple_roots())
        if (RootSystem::coroot_pairing(b, a).denominator() != 1) return false;
    return true;
}

/// Fast evaluation of l -> P(l) for l >= 1, with the bound |P(l)| <= abs_sum * l^degree.
class FamilyEval {
public:
    explicit FamilyEval(const ExponentialPolynomial& p) {
        for (const auto& t : p.terms()) {
            terms_.push_back({t.coeff, t.power, t.phase.numerator(), t.phase.denominator()});
            if (static_cast<std::size_t>(t.power) >= abs_by_power_.size()) abs_by_power_.resize(t.power + 1, 0.0);
            abs_by_power_[t.power] += std::abs(t.coeff);
            degree_ = std::max(degree_, t.power);
        }
    }

    std::complex<double> operator()(std::int64_t l) const {
        std::complex<double> sum = 0.0;
        const double x = static_cast<double>(l);
        for (const auto& t : terms_) {
            std::complex<double> v = t.coeff * std::pow(x, t.power);
            if (t.num != 0) {
                const std::int64_t red = ((l % t.den) + t.den) % t.den;
                const double angle = 2.0 * std::numbers::pi * static_cast<double>((red * t.num) % t.den) /
                                     static_cast<double>(t.den);
                v *= std::complex<double>(std::cos(angle), std::sin(angle));
            }
            sum += v;
        }
        return sum;
    }

    /// sum_{l > last} |P(l)| l^{-e}, bounded by the integral from `last`; needs e > degree + 1.
    double tail_integral(double last, double e) const {
        double sum = 0.0;
        for (std::size_t n = 0; n < abs_by_power_.size(); ++n)
            if (abs_by_power_[n] > 0) sum += abs_by_power_[n] * std::pow(last, double(n) - e + 1.0) / (e - double(n) - 1.0);
        return sum;
    }
    int degree() const { return degree_; }

private:
    struct Wave {
        std::complex<double> coeff;
        int power;
        std::int64_t num;
        std::int64_t den;
    };
    std::vector<Wave> terms_;
    std::vector<double> abs_by_power_;
    int degree_ = 0;
};

/// sign * sum_{j >= start} F(j) (2 / (|delta|^2 j (j + q)))^s
struct Series {
    FamilyEval family;
    double sign;
    std::int64_t start;
    Rational q;
    Rational delta_norm2;

    Rational eigenvalue(std::int64_t j) const { return delta_norm2 * Rational(j) * (Rational(j) + q) / 2; }

    std::complex<double> term(std::int64_t j, double s) const {
        return sign * family(j) * std::pow(1.0 / to_double(eigenvalue(j)), s);
    }

    /// Bound on the terms with j > last, for last >= max(1, 2|q|): there j + q >= j (1 - |q|/last).
    double integral_tail(std::int64_t last, double s) const {
        const double l = static_cast<double>(last);
        const double shrink = q < 0 ? 1.0 + to_double(q) / l : 1.0;
        return std::pow(2.0 / (to_double(delta_norm2) * shrink), s) * family.tail_integral(l, 2.0 * s);
    }

    std::int64_t tail_start() const {
        const Rational twice_q = 2 * (q < 0 ? -q : q);
        return std::max<std::int64_t>({1, start - 1, floor_of(twice_q) + 1});
    }
};

std::vector<Series> build_series(const WolfSpaceData& w, const BundleSpec& b, ClosedFormVariant variant) {
    std::vector<Series> out;
    const Weight shifted = w.rs.rho() + b.lambda(w);
    if (!is_integral(w.rs, shifted)) return out;
    for (const auto& beta : w.psi0) {
        const Weight delta = w.alpha + beta;
        const Rational p = RootSystem::coroot_pairing(shifted, delta);
        const Rational nd = w.rs.norm2(delta);
        if (p >= 0 && variant == ClosedFormVariant::reflected) {
            // chi_{rho+lambda+l delta} = -chi_{rho+lambda-(l+p) delta}; m = l + p > p.
            out.push_back({FamilyEval(character_ell_family(w, b.lambda(w), -delta, b.x)), -1.0, floor_of(p) + 1, -p, nd});
        } else if (p >= 0) {
            out.push_back({FamilyEval(character_ell_family(w, b.lambda(w), delta, b.x)), -1.0, floor_of(p) + 1, p, nd});
        } else {
            out.push_back({FamilyEval(character_ell_family(w, b.lambda(w), delta, b.x)), 1.0, floor_of(-p) + 1, p, nd});
        }
    }
    return out;
}

void require_convergent(const WolfSpaceData& w, const BundleSpec& b, double s) {
    const double threshold = convergence_threshold(w, b);
    if (!(s > threshold))
        throw DomainError("Z(s) needs s > " + std::to_string(threshold) + " here, got s = " + std::to_string(s));
}

}  // namespace

BundleSpec BundleSpec::make(const WolfSpaceData& w, int k, const Weight& lambda_circ, const TorusElement& x) {
    if (k < 0 || k % 2 != 0) throw ConfigurationError("k must be even and nonnegative, got " + std::to_string(k));
    if (lambda_circ.dim() != w.rs.ambient_dim() || x.coords().size() != w.rs.ambient_dim())
        throw ConfigurationError("dimension mismatch in bundle data");
    if (dot(lambda_circ, w.alpha) != 0) throw ConfigurationError("lambda_circ " + lambda_circ.str() + " is not orthogonal to alpha");
    if (!w.k_circ_system.is_dominant(lambda_circ))
        throw ConfigurationError("lambda_circ " + lambda_circ.str() + " is not K0-dominant");
    BundleSpec b;
    b.k = k;
    b.lambda_circ = lambda_circ;
    b.x = x;
    return b;
}

Weight BundleSpec::lambda(const WolfSpaceData& w) const { return Rational(k) * w.alpha + lambda_circ; }

double convergence_threshold(const WolfSpaceData& w, const BundleSpec& b) {
    if (!b.x.is_identity()) return 0.5;
    int d = 0;
    for (const auto& beta : w.psi0) {
        const Weight delta = w.alpha + beta;
        int count = 0;
        for (const auto& g : w.rs.positive_roots())
            if (dot(delta, g) != 0) ++count;
        d = std::max(d, count);
    }
    return (d + 1) / 2.0;
}

ZetaSeries zeta_closed_form(const WolfSpaceData& w, const BundleSpec& b, double s, ClosedFormVariant variant,
                            double tol, std::size_t max_terms) {
    require_convergent(w, b, s);
    const auto series = build_series(w, b, variant);
    ZetaSeries out;
    if (series.empty()) return out;

    std::vector<std::complex<double>> sums(series.size(), 0.0);
    std::vector<std::int64_t> next(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) next[i] = series[i].start;

    std::int64_t limit = 64;
    for (const auto& sr : series) limit = std::max(limit, 2 * sr.tail_start());
    while (true) {
        double tail = 0.0;
        std::complex<double> total = 0.0;
        for (std::size_t i = 0; i < series.size(); ++i) {
            for (; next[i] <= limit; ++next[i]) {
                sums[i] += series[i].term(next[i], s);
                ++out.terms;
            }
            total += sums[i];
            tail += series[i].integral_tail(limit, s);
        }
        out.value = total;
        out.tail_bound = tail;
        if (tail <= tol * std::max(1.0, std::abs(total))) return out;
        if (static_cast<std::size_t>(limit) >= max_terms)
            throw NumericError("closed-form series tail " + std::to_string(tail) + " above tolerance after " +
                                   std::to_string(limit) + " terms per weight",
                               tail);
        limit = std::min<std::int64_t>(2 * limit, static_cast<std::int64_t>(max_terms));
    }
}

std::complex<double> zeta_closed_form_partial(const WolfSpaceData& w, const BundleSpec& b, double s,
                                              const Rational& eigen_cutoff, ClosedFormVariant variant) {
    std::complex<double> sum = 0.0;
    for (const auto& sr : build_series(w, b, variant))
        for (std::int64_t j = sr.start; sr.eigenvalue(j) <= eigen_cutoff; ++j) sum += sr.term(j, s);
    return sum;
}

double zeta_tail_bound(const WolfSpaceData& w, const BundleSpec& b, double s, const Rational& eigen_cutoff) {
    require_convergent(w, b, s);
    double bound = 0.0;
    for (const auto& sr : build_series(w, b, ClosedFormVariant::reflected)) {
        std::int64_t j = sr.start;
        while (sr.eigenvalue(j) <= eigen_cutoff) ++j;
        const std::int64_t last = std::max(j - 1, sr.tail_start());
        for (; j <= last; ++j) bound += std::abs(sr.term(j, s));
        bound += sr.integral_tail(last, s);
    }
    return bound;
}

TorsionResult torsion(const WolfSpaceData& w, const BundleSpec& b, double tol) {
    const Weight lambda = b.lambda(w);
    const Weight shifted = w.rs.rho() + lambda;
    if (!is_integral(w.rs, shifted))
        throw DomainError("rho + lambda = " + shifted.str() + " is not integral for " + w.rs.cartan_type().name());

    TorsionResult r;
    r.cartan_type = w.rs.cartan_type().name();
    r.k = b.k;
    r.lambda_circ = b.lambda_circ;
    r.element = b.x.coords();
    r.identity = b.x.is_identity();

    const std::complex<double> chi0 = character_at(w.rs, shifted, b.x);
    auto& parts = r.parts;
    double coeff_mass = 0.0;
    for (const auto& beta : w.psi0) {
        const Weight delta = w.alpha + beta;
        const Rational p = RootSystem::coroot_pairing(shifted, delta);
        const double log_norm = std::log(2.0 / to_double(w.rs.norm2(delta)));
        const ExponentialPolynomial family = character_ell_family(w, lambda, -delta, b.x);
        const ExponentialPolynomial odd = odd_part(family);
        for (const auto& t : odd.terms()) coeff_mass += std::abs(t.coeff);

        parts.zeta_prime_part += -2.0 * zeta_deriv_apply(odd, tol);
        parts.p_star_part += -2.0 * p_star(family, p);
        parts.log_norm_part += -zeta_apply(family) * log_norm;
        if (p >= 0) {
            parts.chi_log_part += -chi0 * log_norm;
            for (std::int64_t l = 2; l <= floor_of(p); ++l)
                parts.finite_sum_plus -= character_at(w.rs, shifted - Rational(l) * delta, b.x) * std::log(double(l));
        } else {
            for (std::int64_t l = 2; l <= floor_of(-p); ++l)
                parts.finite_sum_minus += character_at(w.rs, shifted + Rational(l) * delta, b.x) * std::log(double(l));
        }
    }
    r.total = parts.zeta_prime_part + parts.p_star_part + parts.log_norm_part + parts.chi_log_part +
              parts.finite_sum_plus + parts.finite_sum_minus;
    r.precision_estimate = 2.0 * tol * std::max(1.0, coeff_mass);
    return r;
}

std::vector<SpectralTerm> spectral_oracle(const BranchingEngine& engine, const BundleSpec& b,
                                          const Rational& eigen_cutoff) {
    const WolfSpaceData& w = engine.wolf();
    const Weight shifted = w.rs.rho() + b.lambda(w);
    const Rational base = w.rs.norm2(shifted);
    std::vector<SpectralTerm> out;
    const Rational cas_cutoff = 2 * eigen_cutoff + base - w.rs.norm2(w.rs.rho());
    for (const auto& bp : dominant_weights_up_to(w.rs, cas_cutoff)) {
        SpectralTerm t;
        t.b_pi = bp;
        t.eigenvalue = (w.rs.norm2(bp) - base) / 2;
        if (t.eigenvalue > eigen_cutoff) continue;
        t.q_multiplicities = engine.dim_hom_all(bp, b.k, b.lambda_circ);
        if (std::all_of(t.q_multiplicities.begin(), t.q_multiplicities.end(), [](auto m) { return m == 0; })) continue;
        if (t.eigenvalue < 0)
            throw ConsistencyError("negative Laplace eigenvalue " + to_string(t.eigenvalue) + " at " + bp.str());
        t.char_at_x = character_at(w.rs, bp, b.x);
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<SpectralTerm> spectral_oracle(const WolfSpaceData& w, const BundleSpec& b, const Rational& eigen_cutoff) {
    return spectral_oracle(BranchingEngine(w), b, eigen_cutoff);
}

std::complex<double> oracle_partial_zeta(const std::vector<SpectralTerm>& terms, double s) {
    std::complex<double> sum = 0.0;
    for (const auto& t : terms) {
        if (t.eigenvalue == 0) continue;
        double weight = 0.0;
        for (std::size_t q = 1; q < t.q_multiplicities.size(); ++q)
            weight += (q % 2 ? 1.0 : -1.0) * double(q) * double(t.q_multiplicities[q]);
        sum += weight * t.char_at_x * std::pow(to_double(t.eigenvalue), -s);
    }
    return sum;
}

OccurCheck lemma_occur_check(const BranchingEngine& engine, const BundleSpec& b, const Weight& b_pi) {
    const WolfSpaceData& w = engine.wolf();
    if (!w.rs.is_dominant(b_pi) || !w.rs.is_regular(b_pi))
        throw DomainError("b_pi = " + b_pi.str() + " is not dominant regular");
    OccurCheck out;
    const auto mults = engine.dim_hom_all(b_pi, b.k, b.lambda_circ);
    std::int64_t weight = 0;
    for (std::size_t q = 1; q < mults.size(); ++q) weight += (q % 2 ? -1 : 1) * std::int64_t(q) * mults[q];
    if (weight != 0) out.lhs = double(weight) * character_at(w.rs, b_pi, b.x);

    const Weight shifted = w.rs.rho() + b.lambda(w);
    const Rational target = w.rs.norm2(b_pi);
    for (const auto& beta : w.psi0) {
        const Weight delta = w.alpha + beta;
        const Rational p = RootSystem::coroot_pairing(shifted, delta);
        const std::int64_t reach = floor_of(p < 0 ? -p : p) + 1;
        for (std::int64_t l = 1;; ++l) {
            const Weight v = shifted + Rational(l) * delta;
            if (l > reach && w.rs.norm2(v) > target) break;
            const auto [dom, sign] = w.rs.dominant_representative(v);
            if (sign != 0 && dom == b_pi) out.rhs -= character_at(w.rs, v, b.x);
        }
    }
    return out;
}

OccurCheck lemma_occur_check(const WolfSpaceData& w, const BundleSpec& b, const Weight& b_pi) {
    return lemma_occur_check(BranchingEngine(w), b, b_pi);
}

std::pair<Rational, Rational> casimir_eigenvalues(const WolfSpaceData& w, const BundleSpec& b, const Weight& b_pi) {
    const auto& rs = w.rs;
    const Rational cas_g = casimir(rs, b_pi);
    const Rational sp1 = w.kappa_over_8 * b.k * (b.k + 2 * w.n + 2) / (w.n * (w.n + 2));
    const Rational cas_k0 = rs.norm2(w.rho_k_circ + b.lambda_circ) - rs.norm2(w.rho_k_circ);
    const Rational via_casimir = (cas_g - sp1 - cas_k0) / 2;
    const Rational via_shift = (rs.norm2(b_pi) - rs.norm2(rs.rho() + b.lambda(w))) / 2;
    return {via_casimir, via_shift};
}

std::map<Rational, std::complex<double>> quillen_log_metric(const std::map<Rational, double>& l2_log,
                                                            const TorsionResult& t) {
    std::map<Rational, std::complex<double>> out;
    if (l2_log.empty()) {
        out.emplace(Rational(0), -t.total);
        return out;
    }
    for (const auto& [phase, value] : l2_log) out[frac_part(phase)] += value;
    for (auto& [phase, value] : out) value -= t.total;
    return out;
}

}  // namespace qtorsion
