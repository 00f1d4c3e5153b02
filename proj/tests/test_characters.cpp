#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtorsion/characters.hpp"
#include "qtorsion/errors.hpp"

#include <random>

using namespace qtorsion;

namespace {

TorusElement sample_regular(const RootSystem& rs, std::mt19937& gen) {
    std::uniform_int_distribution<int> num(1, 996);
    for (;;) {
        std::vector<Rational> x;
        for (std::size_t i = 0; i < rs.ambient_dim(); ++i) x.emplace_back(num(gen), 997);
        if (is_regular_element(rs, x)) return TorusElement::regular(rs, x);
    }
}

// Weyl character as an explicit sum over the weight table.
std::complex<double> character_from_table(const WeightMultiplicityTable& t, const TorusElement& x) {
    std::complex<double> s{0.0, 0.0};
    for (const auto& [mu, m] : t.entries) s += double(m) * unit_phase(x.pair(mu));
    return s;
}

}  // namespace

TEST_CASE("dimension fixtures") {
    const auto rs = RootSystem::build("C2");
    CHECK(dimension(rs, rs.rho()) == 1);
    CHECK(dimension(rs, Weight::from_ints({-1, -2})) == -1);
    CHECK(dimension(rs, rs.rho() + rs.highest_root()) == 10);
    CHECK(dimension(rs, Weight::from_ints({1, 1})) == 0);
    const auto g2 = RootSystem::build("G2");
    CHECK(dimension(g2, g2.rho() + g2.highest_root()) == 14);
    const auto fw = g2.fundamental_weights();
    CHECK((dimension(g2, g2.rho() + fw[0]) == 7 || dimension(g2, g2.rho() + fw[1]) == 7));
}

TEST_CASE("Freudenthal tables") {
    const auto rs = RootSystem::build("C2");
    const auto adj = weight_multiplicities(rs, rs.rho() + rs.highest_root());
    CHECK(adj.total() == 10);
    CHECK(adj.entries.size() == 9);
    CHECK(adj.entries.at(Weight(2)) == 2);
    const auto triv = weight_multiplicities(rs, rs.rho());
    CHECK(triv.entries.size() == 1);

    const auto a1 = RootSystem::build("A1");
    for (int k = 0; k < 6; ++k) {
        const auto t = weight_multiplicities(a1, a1.rho() + Rational(k, 2) * a1.highest_root());
        CHECK(t.entries.size() == std::size_t(k + 1));
        for (const auto& [mu, m] : t.entries) CHECK(m == 1);
    }
    CHECK_THROWS_AS(weight_multiplicities(rs, Weight::from_ints({-1, -2})), DomainError);
}

TEST_CASE("Freudenthal total equals Weyl dimension below a cutoff") {
    for (const char* name : {"C2", "G2", "A3"}) {
        CAPTURE(name);
        const auto rs = RootSystem::build(name);
        for (const auto& b : dominant_weights_up_to(rs, Rational(4))) {
            const auto t = weight_multiplicities(rs, b);
            CHECK(BigRational(t.total()) == dimension(rs, b));
            // Weyl invariance of the table
            for (const auto& [mu, m] : t.entries)
                for (const auto& v : weyl_orbit(rs.positive_system(), mu)) CHECK(t.entries.at(v) == m);
        }
    }
}

TEST_CASE("character value against the weight table") {
    std::mt19937 gen(11);
    for (const char* name : {"C2", "G2"}) {
        CAPTURE(name);
        const auto rs = RootSystem::build(name);
        const auto x = sample_regular(rs, gen);
        CHECK(std::abs(character_value(rs, rs.rho(), x) - 1.0) < 1e-10);
        for (const auto& b : dominant_weights_up_to(rs, Rational(3))) {
            const auto t = weight_multiplicities(rs, b);
            CHECK(std::abs(character_value(rs, b, x) - character_from_table(t, x)) < 1e-9);
        }
    }
    const auto rs = RootSystem::build("C2");
    CHECK_THROWS_AS(character_value(rs, rs.rho(), TorusElement::identity(2)), DomainError);
}

TEST_CASE("A1 adjoint character") {
    const auto rs = RootSystem::build("A1");
    const auto x = TorusElement::regular(rs, {Rational(1, 9), Rational(0)});
    // weights +-theta and 0; theta(X) = 1/9
    const std::complex<double> expect = unit_phase(Rational(1, 9)) + 1.0 + unit_phase(Rational(-1, 9));
    CHECK(std::abs(character_value(rs, rs.rho() + rs.highest_root(), x) - expect) < 1e-12);
}

TEST_CASE("signed convention") {
    std::mt19937 gen(5);
    const auto rs = RootSystem::build("C2");
    const auto x = sample_regular(rs, gen);
    const Weight b = Weight::from_ints({4, 1});
    const auto base = character_value(rs, b, x);
    for (const auto& w : rs.weyl_elements()) {
        CHECK(std::abs(character_value(rs, w.apply(b), x) - double(w.sign) * base) < 1e-10);
        CHECK(dimension(rs, w.apply(b)) == w.sign * dimension(rs, b));
    }
    CHECK(std::abs(character_value(rs, Weight::from_ints({2, 2}), x)) < 1e-12);
}

TEST_CASE("ell family at the identity") {
    const auto w = build_wolf_space(RootSystem::build("C2"));
    const Weight delta = -(w.alpha + Weight::from_ints({0, 1}));
    const auto p = character_ell_family(w, Weight(2), delta, TorusElement::identity(2));
    CHECK(std::abs(p(0) - 1.0) < 1e-12);
    CHECK(std::abs(p(1)) < 1e-12);
    CHECK(std::abs(p(2)) < 1e-12);
    CHECK(std::abs(p(3) + 1.0) < 1e-12);
    for (int l = -10; l <= 10; ++l) {
        const auto exact = dimension(w.rs, w.rs.rho() + Rational(l) * delta).convert_to<double>();
        CHECK(std::abs(p(l) - exact) < 1e-9 * std::max(1.0, std::abs(exact)));
    }
    for (const auto& t : p.terms()) CHECK(t.phase == 0);
}

TEST_CASE("ell family at a regular element") {
    std::mt19937 gen(3);
    for (const char* name : {"C2", "G2"}) {
        CAPTURE(name);
        const auto w = build_wolf_space(RootSystem::build(name));
        const auto x = sample_regular(w.rs, gen);
        const Weight lambda = Rational(2) * w.alpha;
        for (const auto& b : w.psi0) {
            const Weight delta = -(w.alpha + b);
            const auto p = character_ell_family(w, lambda, delta, x);
            for (int l = 0; l <= 5; ++l) {
                const auto direct = character_value(w.rs, w.rs.rho() + lambda + Rational(l) * delta, x);
                CHECK(std::abs(p(l) - direct) < 1e-10);
            }
        }
    }
}

TEST_CASE("trivial branching") {
    const auto w = build_wolf_space(RootSystem::build("C2"));
    CHECK(branch_dim_hom(w, w.rs.rho(), 0, Weight(2), 0) == 1);
    for (int q = 1; q <= 2; ++q) CHECK(branch_dim_hom(w, w.rs.rho(), 0, Weight(2), q) == 0);
}

TEST_CASE("restriction to K preserves dimension") {
    for (const char* name : {"C2", "G2", "A3"}) {
        CAPTURE(name);
        const auto w = build_wolf_space(RootSystem::build(name));
        const BranchingEngine eng(w);
        const auto& kps = w.k_system;
        auto k_dim = [&](const Weight& mu) {
            BigRational d(1);
            for (const auto& g : kps.positive_roots) {
                const Rational r = dot(mu + kps.rho, g) / dot(kps.rho, g);
                d *= BigRational(r.numerator(), r.denominator());
            }
            return d;
        };
        for (const auto& b : dominant_weights_up_to(w.rs, Rational(3))) {
            BigRational total(0);
            for (const auto& [mu, m] : eng.restrict_to_k(b)) total += BigRational(m) * k_dim(mu);
            CHECK(total == dimension(w.rs, b));
        }
    }
}

TEST_CASE("bundle types have the fibre dimension") {
    const auto w = build_wolf_space(RootSystem::build("G2"));
    const BranchingEngine eng(w);
    auto k_dim = [&](const Weight& mu) {
        BigRational d(1);
        for (const auto& g : w.k_system.positive_roots) {
            const Rational r = dot(mu + w.k_system.rho, g) / dot(w.k_system.rho, g);
            d *= BigRational(r.numerator(), r.denominator());
        }
        return d;
    };
    const int binom4[] = {1, 4, 6, 4, 1};
    for (int k : {0, 2})
        for (int q = 0; q <= 4; ++q) {
            BigRational total(0);
            for (const auto& [mu, m] : *eng.bundle_types(k, Weight(3), q)) total += BigRational(m) * k_dim(mu);
            CHECK(total == binom4[q] * (k + q + 1));
        }
}

TEST_CASE("Racah-Speiser K-type multiplicities match the full restriction") {
    for (const char* name : {"C2", "G2"}) {
        CAPTURE(name);
        const auto w = build_wolf_space(RootSystem::build(name));
        const BranchingEngine eng(w);
        for (const auto& b : dominant_weights_up_to(w.rs, Rational(3))) {
            for (const auto& [mu, m] : eng.restrict_to_k(b)) CHECK(eng.k_type_multiplicity(b, mu) == m);
            for (int q = 0; q <= 2 * w.n; ++q) {
                std::int64_t direct = 0;
                const auto pi = eng.restrict_to_k(b);
                for (const auto& [mu, m] : *eng.bundle_types(2, Weight(w.rs.ambient_dim()), q))
                    if (auto it = pi.find(mu); it != pi.end()) direct += m * it->second;
                CHECK(eng.dim_hom(b, 2, Weight(w.rs.ambient_dim()), q) == direct);
            }
        }
    }
}
