#include "qtorsion/rootsys.hpp"

#include "qtorsion/errors.hpp"
#include "qtorsion/linsolve.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <numbers>
#include <set>
#include <unordered_map>

namespace qtorsion {

namespace {

Weight unit(std::size_t dim, std::size_t i, std::int64_t scale = 1) {
    Weight w(dim);
    w[i] = Rational(scale);
    return w;
}

Weight e_minus(std::size_t dim, std::size_t i, std::size_t j) { return unit(dim, i) - unit(dim, j); }

std::vector<Weight> bourbaki_simple_roots(const CartanType& t, std::size_t& dim) {
    const auto r = static_cast<std::size_t>(t.rank);
    std::vector<Weight> s;
    switch (t.family) {
    case CartanFamily::A:
        dim = r + 1;
        for (std::size_t i = 0; i < r; ++i) s.push_back(e_minus(dim, i, i + 1));
        break;
    case CartanFamily::B:
        dim = r;
        for (std::size_t i = 0; i + 1 < r; ++i) s.push_back(e_minus(dim, i, i + 1));
        s.push_back(unit(dim, r - 1));
        break;
    case CartanFamily::C:
        dim = r;
        for (std::size_t i = 0; i + 1 < r; ++i) s.push_back(e_minus(dim, i, i + 1));
        s.push_back(unit(dim, r - 1, 2));
        break;
    case CartanFamily::D:
        dim = r;
        for (std::size_t i = 0; i + 1 < r; ++i) s.push_back(e_minus(dim, i, i + 1));
        s.push_back(unit(dim, r - 2) + unit(dim, r - 1));
        break;
    case CartanFamily::E: {
        dim = 8;
        const Rational h(1, 2);
        Weight a1(dim);
        a1[0] = h;
        a1[7] = h;
        for (std::size_t i = 1; i < 7; ++i) a1[i] = -h;
        s.push_back(a1);
        s.push_back(unit(dim, 0) + unit(dim, 1));
        for (std::size_t i = 0; i + 2 < r; ++i) s.push_back(e_minus(dim, i + 1, i));
        break;
    }
    case CartanFamily::F: {
        dim = 4;
        s.push_back(e_minus(dim, 1, 2));
        s.push_back(e_minus(dim, 2, 3));
        s.push_back(unit(dim, 3));
        const Rational h(1, 2);
        s.push_back(Weight{h, -h, -h, -h});
        break;
    }
    case CartanFamily::G:
        dim = 3;
        s.push_back(Weight::from_ints({1, -1, 0}));
        s.push_back(Weight::from_ints({-2, 1, 1}));
        break;
    }
    return s;
}

std::uint64_t weyl_order_of(const CartanType& t) {
    auto fact = [](std::uint64_t n) {
        std::uint64_t f = 1;
        for (std::uint64_t i = 2; i <= n; ++i) f *= i;
        return f;
    };
    const auto r = static_cast<std::uint64_t>(t.rank);
    switch (t.family) {
    case CartanFamily::A: return fact(r + 1);
    case CartanFamily::B:
    case CartanFamily::C: return (std::uint64_t{1} << r) * fact(r);
    case CartanFamily::D: return (std::uint64_t{1} << (r - 1)) * fact(r);
    case CartanFamily::E: return r == 6 ? 51840ULL : r == 7 ? 2903040ULL : 696729600ULL;
    case CartanFamily::F: return 1152;
    case CartanFamily::G: return 12;
    }
    return 1;
}

std::vector<Rational> apply_matrix(const std::vector<Rational>& m, std::size_t dim,
                                   const std::vector<Rational>& v) {
    std::vector<Rational> out(dim, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < dim; ++j)
            if (m[i * dim + j] != 0 && v[j] != 0) s += m[i * dim + j] * v[j];
        out[i] = s;
    }
    return out;
}

std::vector<Rational> reflection_matrix(const Weight& root) {
    const std::size_t d = root.dim();
    std::vector<Rational> m(d * d, Rational(0));
    const Rational n2 = dot(root, root);
    for (std::size_t i = 0; i < d; ++i) {
        m[i * d + i] = 1;
        for (std::size_t j = 0; j < d; ++j) m[i * d + j] -= Rational(2) * root[i] * root[j] / n2;
    }
    return m;
}

std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t d) {
    std::vector<Rational> c(d * d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            if (a[i * d + k] == 0) continue;
            for (std::size_t j = 0; j < d; ++j)
                if (b[k * d + j] != 0) c[i * d + j] += a[i * d + k] * b[k * d + j];
        }
    return c;
}

std::vector<Rational> coefficients_in(const std::vector<Weight>& basis, const Weight& w) {
    if (basis.empty()) {
        if (!w.is_zero()) throw ConsistencyError("weight outside the span of an empty root system");
        return {};
    }
    ExactMatrix<Rational> a(w.dim(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < w.dim(); ++i) a(i, j) = basis[j][i];
    auto x = solve_exact(a, w.coords());
    if (!x) throw ConsistencyError("weight " + w.str() + " is not in the span of the simple roots");
    return *x;
}

}  // namespace

CartanType CartanType::parse(const std::string& raw) {
    std::string name;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) name.push_back(c);
    if (name.size() < 2) throw ConfigurationError("unknown Cartan type '" + raw + "'");
    CartanType t;
    switch (std::toupper(static_cast<unsigned char>(name[0]))) {
    case 'A': t.family = CartanFamily::A; break;
    case 'B': t.family = CartanFamily::B; break;
    case 'C': t.family = CartanFamily::C; break;
    case 'D': t.family = CartanFamily::D; break;
    case 'E': t.family = CartanFamily::E; break;
    case 'F': t.family = CartanFamily::F; break;
    case 'G': t.family = CartanFamily::G; break;
    default: throw ConfigurationError("unknown Cartan type '" + raw + "'");
    }
    const std::string digits = name.substr(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 2)
        throw ConfigurationError("unknown Cartan type '" + raw + "'");
    t.rank = std::stoi(digits);
    bool ok = false;
    switch (t.family) {
    case CartanFamily::A: ok = t.rank >= 1 && t.rank <= 8; break;
    case CartanFamily::B:
    case CartanFamily::C: ok = t.rank >= 2 && t.rank <= 8; break;
    case CartanFamily::D: ok = t.rank >= 4 && t.rank <= 8; break;
    case CartanFamily::E: ok = t.rank >= 6 && t.rank <= 8; break;
    case CartanFamily::F: ok = t.rank == 4; break;
    case CartanFamily::G: ok = t.rank == 2; break;
    }
    if (!ok) throw ConfigurationError("unsupported Cartan type '" + raw + "'");
    return t;
}

std::string CartanType::name() const {
    static constexpr char letters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
    return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

Weight WeylElement::apply(const Weight& w) const { return Weight(apply_matrix(matrix, dim, w.coords())); }

Weight reflect(const Weight& w, const Weight& root) {
    return w - (RootSystem::coroot_pairing(w, root) * root);
}

std::vector<WeylElement> generate_reflection_group(const std::vector<Weight>& generators,
                                                   const Weight& regular, std::size_t dim,
                                                   std::size_t bound) {
    std::vector<std::vector<Rational>> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) gens.push_back(reflection_matrix(g));

    std::vector<WeylElement> out;
    std::unordered_map<Weight, std::size_t, WeightHash> seen;
    WeylElement id;
    id.dim = dim;
    id.matrix.assign(dim * dim, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) id.matrix[i * dim + i] = 1;
    id.sign = 1;
    seen.emplace(regular, 0);
    out.push_back(id);
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& g : gens) {
            WeylElement next;
            next.dim = dim;
            next.matrix = multiply(g, out[head].matrix, dim);
            next.sign = -out[head].sign;
            Weight key(apply_matrix(next.matrix, dim, regular.coords()));
            if (seen.count(key)) continue;
            if (out.size() >= bound)
                throw ResourceError("reflection group exceeds the configured bound of " + std::to_string(bound));
            seen.emplace(std::move(key), out.size());
            out.push_back(std::move(next));
        }
    }
    return out;
}

PositiveSystem PositiveSystem::from_positive_roots(std::vector<Weight> positive, std::size_t dim) {
    PositiveSystem ps;
    std::set<Weight> pos_set(positive.begin(), positive.end());
    for (const auto& g : positive) {
        bool decomposable = false;
        for (const auto& h : positive) {
            if (h == g) continue;
            if (pos_set.count(g - h)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) ps.simple_roots.push_back(g);
    }
    std::sort(ps.simple_roots.begin(), ps.simple_roots.end());
    ps.rho = Weight(dim);
    for (const auto& g : positive) {
        ps.rho += g;
        const auto c = coefficients_in(ps.simple_roots, g);
        Rational h(0);
        for (const auto& x : c) {
            if (x < 0 || x.denominator() != 1) throw ConsistencyError("root " + g.str() + " is not a positive root");
            h += x;
        }
        ps.heights.push_back(static_cast<int>(h.numerator()));
    }
    ps.rho *= Rational(1, 2);
    ps.positive_roots = std::move(positive);
    return ps;
}

bool PositiveSystem::is_dominant(const Weight& w) const {
    for (const auto& s : simple_roots)
        if (dot(w, s) < 0) return false;
    return true;
}

struct RootSystem::Cache {
    std::mutex mutex;
    std::size_t bound = 0;
    std::shared_ptr<const std::vector<WeylElement>> elements;
};

RootSystem RootSystem::build(const CartanType& type) {
    RootSystem rs;
    rs.type_ = type;
    rs.simple_roots_ = bourbaki_simple_roots(type, rs.dim_);
    const std::size_t d = rs.dim_;

    std::set<Weight> roots(rs.simple_roots_.begin(), rs.simple_roots_.end());
    std::deque<Weight> queue(rs.simple_roots_.begin(), rs.simple_roots_.end());
    while (!queue.empty()) {
        Weight g = queue.front();
        queue.pop_front();
        for (const auto& s : rs.simple_roots_) {
            Weight r = reflect(g, s);
            if (roots.insert(r).second) queue.push_back(std::move(r));
        }
    }
    std::vector<Weight> positive;
    for (const auto& g : roots) {
        const auto c = coefficients_in(rs.simple_roots_, g);
        bool nonneg = true;
        for (const auto& x : c) nonneg = nonneg && x >= 0;
        if (nonneg) positive.push_back(g);
    }
    if (2 * positive.size() != roots.size()) throw ConsistencyError("root closure produced an unbalanced root set");
    rs.positive_ = PositiveSystem::from_positive_roots(std::move(positive), d);

    std::size_t top = 0;
    for (std::size_t i = 1; i < rs.positive_.heights.size(); ++i)
        if (rs.positive_.heights[i] > rs.positive_.heights[top]) top = i;
    rs.highest_root_ = rs.positive_.positive_roots[top];

    const Weight& theta = rs.highest_root_;
    rs.gram_scale_ = Rational(1) / dot(theta, theta + Rational(2) * rs.positive_.rho);
    rs.weyl_order_ = weyl_order_of(type);
    rs.cache_ = std::make_shared<Cache>();

    for (const auto& s : rs.simple_roots_)
        if (coroot_pairing(rs.rho(), s) != 1) throw ConsistencyError("rho fails <rho, gamma^vee> = 1");
    if (rs.inner(theta, theta + Rational(2) * rs.rho()) != 1)
        throw ConsistencyError("Killing normalization failed");
    return rs;
}

std::vector<std::vector<Rational>> RootSystem::gram() const {
    std::vector<std::vector<Rational>> g(dim_, std::vector<Rational>(dim_, Rational(0)));
    for (std::size_t i = 0; i < dim_; ++i) g[i][i] = gram_scale_;
    return g;
}

Rational RootSystem::coroot_pairing(const Weight& b, const Weight& gamma) {
    return Rational(2) * dot(b, gamma) / dot(gamma, gamma);
}

std::vector<Rational> RootSystem::simple_coefficients(const Weight& w) const {
    return coefficients_in(simple_roots_, w);
}

bool RootSystem::is_positive_root(const Weight& w) const {
    return std::find(positive_roots().begin(), positive_roots().end(), w) != positive_roots().end();
}

std::vector<Weight> RootSystem::fundamental_weights() const {
    const std::size_t r = rank();
    ExactMatrix<Rational> m(r, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) m(j, k) = coroot_pairing(simple_roots_[k], simple_roots_[j]);
    std::vector<Weight> out;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Rational> e(r, Rational(0));
        e[i] = 1;
        auto x = solve_exact(m, e);
        if (!x) throw ConsistencyError("singular Cartan matrix");
        Weight w(dim_);
        for (std::size_t k = 0; k < r; ++k) w += (*x)[k] * simple_roots_[k];
        out.push_back(std::move(w));
    }
    return out;
}

bool RootSystem::is_dominant(const Weight& b) const { return positive_.is_dominant(b); }

bool RootSystem::is_regular(const Weight& b) const {
    for (const auto& g : positive_roots())
        if (dot(b, g) == 0) return false;
    return true;
}

std::pair<Weight, int> RootSystem::dominant_representative(const Weight& b) const {
    Weight w = b;
    int sign = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& s : simple_roots_) {
            if (dot(w, s) < 0) {
                w = reflect(w, s);
                sign = -sign;
                changed = true;
            }
        }
    }
    for (const auto& s : simple_roots_)
        if (dot(w, s) == 0) return {w, 0};
    return {w, sign};
}

const std::vector<WeylElement>& RootSystem::weyl_elements(std::size_t bound) const {
    std::lock_guard lock(cache_->mutex);
    if (!cache_->elements) {
        if (weyl_order_ > bound)
            throw ResourceError("Weyl group of " + type_.name() + " has " + std::to_string(weyl_order_) +
                                " elements, above the bound " + std::to_string(bound));
        auto els = generate_reflection_group(simple_roots_, rho(), dim_, bound);
        if (els.size() != weyl_order_) throw ConsistencyError("Weyl group enumeration count mismatch");
        cache_->elements = std::make_shared<const std::vector<WeylElement>>(std::move(els));
    }
    return *cache_->elements;
}

TorusElement TorusElement::identity(std::size_t dim) {
    return TorusElement(std::vector<Rational>(dim, Rational(0)), Kind::identity);
}

bool is_regular_element(const RootSystem& rs, const std::vector<Rational>& x) {
    if (x.size() != rs.ambient_dim()) return false;
    const Weight xw(x);
    for (const auto& g : rs.positive_roots())
        if (dot(g, xw).denominator() == 1) return false;
    return true;
}

TorusElement TorusElement::regular(const RootSystem& rs, std::vector<Rational> x) {
    if (x.size() != rs.ambient_dim())
        throw DomainError("torus element has " + std::to_string(x.size()) + " coordinates, expected " +
                          std::to_string(rs.ambient_dim()));
    if (!is_regular_element(rs, x)) throw DomainError("torus element is not regular: some root takes an integer value");
    return TorusElement(std::move(x), Kind::regular);
}

Rational TorusElement::pair(const Weight& b) const {
    Rational s(0);
    for (std::size_t i = 0; i < x_.size(); ++i)
        if (x_[i] != 0) s += b[i] * x_[i];
    return s;
}

TorusElement TorusElement::moved_by(const WeylElement& w) const {
    return TorusElement(apply_matrix(w.matrix, w.dim, x_), kind_);
}

std::complex<double> unit_phase(const Rational& r) {
    const Rational f = frac_part(r);
    if (f == 0) return {1.0, 0.0};
    if (f == Rational(1, 2)) return {-1.0, 0.0};
    if (f == Rational(1, 4)) return {0.0, 1.0};
    if (f == Rational(3, 4)) return {0.0, -1.0};
    const double t = 2.0 * std::numbers::pi * to_double(f);
    return {std::cos(t), std::sin(t)};
}

std::complex<double> alt_sum(const RootSystem& rs, const Weight& b, const TorusElement& x) {
    std::complex<double> sum{0.0, 0.0};
    for (const auto& w : rs.weyl_elements()) sum += double(w.sign) * unit_phase(x.pair(w.apply(b)));
    return sum;
}

std::complex<double> weyl_denominator_product(const RootSystem& rs, const TorusElement& x) {
    std::complex<double> prod{1.0, 0.0};
    for (const auto& g : rs.positive_roots()) {
        const double t = std::numbers::pi * to_double(x.pair(g));
        prod *= std::complex<double>(0.0, 2.0 * std::sin(t));
    }
    return prod;
}

Rational casimir(const RootSystem& rs, const Weight& b) { return rs.norm2(b) - rs.norm2(rs.rho()); }

std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, const Rational& cutoff) {
    std::vector<Weight> out;
    if (cutoff < 0) return out;
    const auto fw = rs.fundamental_weights();
    const std::size_t r = fw.size();
    Weight current = rs.rho();
    // Casimir is increasing in each fundamental-weight coordinate.
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == r) {
            out.push_back(current);
            return;
        }
        const Weight saved = current;
        while (casimir(rs, current) <= cutoff) {
            self(self, i + 1);
            current += fw[i];
        }
        current = saved;
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        const auto ca = casimir(rs, a);
        const auto cb = casimir(rs, b);
        return ca != cb ? ca < cb : a < b;
    });
    return out;
}

}  // namespace qtorsion
