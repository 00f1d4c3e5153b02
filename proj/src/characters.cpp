#include "qtorsion/characters.hpp"

#include "qtorsion/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace qtorsion {

namespace {

Weight reflect_in(const Weight& w, const Weight& root) {
    return w - (Rational(2) * dot(w, root) / dot(root, root)) * root;
}

using MemoKey = std::pair<std::vector<Weight>, Weight>;

std::mutex& memo_mutex() {
    static std::mutex m;
    return m;
}

std::map<MemoKey, std::shared_ptr<const std::map<Weight, std::int64_t>>>& memo() {
    static std::map<MemoKey, std::shared_ptr<const std::map<Weight, std::int64_t>>> m;
    return m;
}

std::map<Weight, std::int64_t> freudenthal(const PositiveSystem& ps, const Weight& highest) {
    std::map<Weight, std::int64_t> mult;
    if (ps.positive_roots.empty()) {
        mult.emplace(highest, 1);
        return mult;
    }
    // Dominant weights below the highest one are connected through dominant
    // weights by subtracting positive roots.
    std::set<Weight> dominant{highest};
    std::deque<Weight> queue{highest};
    while (!queue.empty()) {
        const Weight mu = queue.front();
        queue.pop_front();
        for (const auto& g : ps.positive_roots) {
            Weight nu = mu - g;
            if (ps.is_dominant(nu) && dominant.insert(nu).second) queue.push_back(std::move(nu));
        }
    }
    const Weight top = highest + ps.rho;
    const Rational top_norm = dot(top, top);
    std::vector<std::pair<Rational, Weight>> order;
    for (const auto& mu : dominant) order.emplace_back(top_norm - dot(mu + ps.rho, mu + ps.rho), mu);
    std::sort(order.begin(), order.end());

    auto lookup = [&](const Weight& nu) -> std::int64_t {
        const auto dom = dominant_conjugate(ps, nu).first;
        const auto it = mult.find(dom);
        return it == mult.end() ? 0 : it->second;
    };
    for (const auto& [gap, mu] : order) {
        if (mu == highest) {
            mult.emplace(mu, 1);
            continue;
        }
        if (gap <= 0) throw ConsistencyError("Freudenthal ordering broke at " + mu.str());
        Rational num(0);
        for (const auto& g : ps.positive_roots) {
            Weight nu = mu + g;
            for (;;) {
                const auto m = lookup(nu);
                if (m == 0) break;
                num += Rational(m) * dot(nu, g);
                nu += g;
            }
        }
        const Rational value = Rational(2) * num / gap;
        if (value.denominator() != 1) throw ConsistencyError("non-integral Freudenthal multiplicity at " + mu.str());
        if (value != 0) mult.emplace(mu, value.numerator());
    }
    return mult;
}

}  // namespace

std::int64_t WeightMultiplicityTable::total() const {
    std::int64_t t = 0;
    for (const auto& [w, m] : entries) t += m;
    return t;
}

std::pair<Weight, int> dominant_conjugate(const PositiveSystem& ps, const Weight& w) {
    Weight v = w;
    int sign = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& s : ps.simple_roots) {
            if (dot(v, s) < 0) {
                v = reflect_in(v, s);
                sign = -sign;
                changed = true;
            }
        }
    }
    for (const auto& s : ps.simple_roots)
        if (dot(v, s) == 0) return {v, 0};
    return {v, sign};
}

std::vector<Weight> weyl_orbit(const PositiveSystem& ps, const Weight& w) {
    std::set<Weight> seen{w};
    std::vector<Weight> out{w};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& s : ps.simple_roots) {
            Weight v = reflect_in(out[head], s);
            if (seen.insert(v).second) out.push_back(std::move(v));
        }
    }
    return out;
}

std::shared_ptr<const std::map<Weight, std::int64_t>> dominant_multiplicities(const PositiveSystem& ps,
                                                                              const Weight& highest) {
    if (!ps.is_dominant(highest)) throw DomainError("highest weight " + highest.str() + " is not dominant");
    MemoKey key{ps.simple_roots, highest};
    {
        std::lock_guard lock(memo_mutex());
        if (auto it = memo().find(key); it != memo().end()) return it->second;
    }
    auto table = std::make_shared<const std::map<Weight, std::int64_t>>(freudenthal(ps, highest));
    std::lock_guard lock(memo_mutex());
    return memo().emplace(std::move(key), table).first->second;
}

WeightCounts all_multiplicities(const PositiveSystem& ps, const Weight& highest) {
    const auto dom = dominant_multiplicities(ps, highest);
    WeightCounts out;
    for (const auto& [mu, m] : *dom)
        for (auto& v : weyl_orbit(ps, mu)) out.emplace(std::move(v), m);
    return out;
}

std::complex<double> character_value(const RootSystem& rs, const Weight& b, const TorusElement& x) {
    if (x.is_identity()) throw DomainError("character_value needs a regular element; use dimension at the identity");
    if (!is_regular_element(rs, x.coords())) throw DomainError("torus element is not regular");
    return alt_sum(rs, b, x) / weyl_denominator_product(rs, x);
}

BigRational dimension(const RootSystem& rs, const Weight& b) {
    BigRational d(1);
    for (const auto& g : rs.positive_roots()) {
        const Rational num = dot(b, g);
        if (num == 0) return BigRational(0);
        const Rational den = dot(rs.rho(), g);
        d *= BigRational(num.numerator(), num.denominator());
        d /= BigRational(den.numerator(), den.denominator());
    }
    return d;
}

std::complex<double> character_at(const RootSystem& rs, const Weight& b, const TorusElement& x) {
    if (x.is_identity()) return {dimension(rs, b).convert_to<double>(), 0.0};
    return character_value(rs, b, x);
}

ExponentialPolynomial character_ell_family(const RootSystem& rs, const Weight& base, const Weight& delta,
                                           const TorusElement& x) {
    ExponentialPolynomial p;
    if (x.is_identity()) {
        // prod_gamma (<base,gamma> + l <delta,gamma>) / <rho,gamma>
        std::vector<BigRational> coeffs{BigRational(1)};
        for (const auto& g : rs.positive_roots()) {
            const Rational a = dot(base, g) / dot(rs.rho(), g);
            const Rational s = dot(delta, g) / dot(rs.rho(), g);
            const BigRational ab(a.numerator(), a.denominator());
            const BigRational sb(s.numerator(), s.denominator());
            std::vector<BigRational> next(coeffs.size() + 1, BigRational(0));
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                next[i] += ab * coeffs[i];
                next[i + 1] += sb * coeffs[i];
            }
            coeffs = std::move(next);
        }
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) p.add({coeffs[i].convert_to<double>(), 0.0}, static_cast<int>(i), Rational(0));
        return p;
    }
    if (!is_regular_element(rs, x.coords())) throw DomainError("character family needs the identity or a regular element");
    const std::complex<double> denom = weyl_denominator_product(rs, x);
    for (const auto& w : rs.weyl_elements()) {
        const std::complex<double> c = double(w.sign) * unit_phase(x.pair(w.apply(base))) / denom;
        p.add(c, 0, x.pair(w.apply(delta)));
    }
    return p;
}

ExponentialPolynomial character_ell_family(const WolfSpaceData& w, const Weight& lambda, const Weight& delta,
                                           const TorusElement& x) {
    return character_ell_family(w.rs, w.rs.rho() + lambda, delta, x);
}

WeightMultiplicityTable weight_multiplicities(const RootSystem& rs, const Weight& b) {
    if (!rs.is_dominant(b) || !rs.is_regular(b)) throw DomainError("weight " + b.str() + " is not dominant regular");
    WeightMultiplicityTable t{b, {}};
    for (auto& [mu, m] : all_multiplicities(rs.positive_system(), b - rs.rho())) t.entries.emplace(mu, m);
    return t;
}

BranchingEngine::BranchingEngine(const WolfSpaceData& w) : w_(w) {
    // rho_K is K-regular, so its W_K orbit lists each element once; word
    // length parity along the search gives the sign.
    std::map<Weight, int> seen{{w_.rho_k, 1}};
    std::vector<Weight> order{w_.rho_k};
    for (std::size_t head = 0; head < order.size(); ++head) {
        const int sign = seen.at(order[head]);
        for (const auto& s : w_.k_system.simple_roots) {
            Weight v = reflect_in(order[head], s);
            if (seen.emplace(v, -sign).second) order.push_back(std::move(v));
        }
    }
    for (const auto& v : order) k_shifts_.emplace_back(w_.rho_k - v, seen.at(v));
}

std::int64_t BranchingEngine::k_type_multiplicity(const Weight& b_pi, const Weight& mu) const {
    const auto& gps = w_.rs.positive_system();
    const auto table = dominant_multiplicities(gps, b_pi - w_.rs.rho());
    std::int64_t n = 0;
    for (const auto& [shift, sign] : k_shifts_) {
        const auto it = table->find(dominant_conjugate(gps, mu + shift).first);
        if (it != table->end()) n += sign * it->second;
    }
    return n;
}

std::map<Weight, std::int64_t> BranchingEngine::decompose(const WeightCounts& weights) const {
    std::map<Weight, std::int64_t> out;
    for (const auto& [nu, m] : weights) {
        const auto [dom, sign] = dominant_conjugate(w_.k_system, nu + w_.rho_k);
        if (sign == 0) continue;
        out[dom - w_.rho_k] += sign * m;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second < 0) throw ConsistencyError("negative K-type multiplicity at " + it->first.str());
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

std::map<Weight, std::int64_t> BranchingEngine::restrict_to_k(const Weight& b_pi) const {
    const auto& rs = w_.rs;
    if (!rs.is_dominant(b_pi) || !rs.is_regular(b_pi)) throw DomainError("b_pi " + b_pi.str() + " is not dominant regular");
    return decompose(all_multiplicities(rs.positive_system(), b_pi - rs.rho()));
}

std::shared_ptr<const std::map<Weight, std::int64_t>> BranchingEngine::bundle_types(int k, const Weight& lambda_circ,
                                                                                   int q) const {
    auto key = std::make_tuple(k, lambda_circ, q);
    {
        std::lock_guard lock(mutex_);
        if (auto it = bundle_cache_.find(key); it != bundle_cache_.end()) return it->second;
    }
    const std::size_t dim = w_.rs.ambient_dim();
    // Lambda^q E: sums of q-element subsets of psi0.
    std::vector<WeightCounts> ext(1);
    ext[0].emplace(Weight(dim), 1);
    for (const auto& b : w_.psi0) {
        ext.emplace_back();
        for (std::size_t j = ext.size() - 1; j >= 1; --j)
            for (const auto& [mu, m] : ext[j - 1]) ext[j][mu + b] += m;
    }
    WeightCounts lam_q = q >= 0 && q < static_cast<int>(ext.size()) ? ext[q] : WeightCounts{};

    const auto k_circ = all_multiplicities(w_.k_circ_system, lambda_circ);
    WeightCounts fibre;
    for (int j = 0; j <= k + q; ++j) {
        const Weight h = Rational(k + q - 2 * j) * w_.alpha;
        for (const auto& [mu, m1] : lam_q)
            for (const auto& [nu, m2] : k_circ) fibre[h + mu + nu] += m1 * m2;
    }
    auto types = std::make_shared<const std::map<Weight, std::int64_t>>(decompose(fibre));
    std::lock_guard lock(mutex_);
    return bundle_cache_.emplace(std::move(key), types).first->second;
}


std::int64_t BranchingEngine::dim_hom(const Weight& b_pi, int k, const Weight& lambda_circ, int q) const {
    std::int64_t s = 0;
    for (const auto& [mu, m] : *bundle_types(k, lambda_circ, q)) s += m * k_type_multiplicity(b_pi, mu);
    return s;
}

std::vector<std::int64_t> BranchingEngine::dim_hom_all(const Weight& b_pi, int k, const Weight& lambda_circ) const {
    const auto& rs = w_.rs;
    if (!rs.is_dominant(b_pi) || !rs.is_regular(b_pi)) throw DomainError("b_pi " + b_pi.str() + " is not dominant regular");
    std::map<Weight, std::int64_t> pi_types;
    std::vector<std::int64_t> out;
    for (int q = 0; q <= 2 * w_.n; ++q) {
        std::int64_t s = 0;
        for (const auto& [mu, m] : *bundle_types(k, lambda_circ, q)) {
            auto it = pi_types.find(mu);
            if (it == pi_types.end()) it = pi_types.emplace(mu, k_type_multiplicity(b_pi, mu)).first;
            s += m * it->second;
        }
        out.push_back(s);
    }
    return out;
}

std::int64_t branch_dim_hom(const WolfSpaceData& w, const Weight& b_pi, int k, const Weight& lambda_circ, int q) {
    return BranchingEngine(w).dim_hom(b_pi, k, lambda_circ, q);
}

}  // namespace qtorsion
