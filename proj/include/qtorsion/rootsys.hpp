#pragma once

#include "qtorsion/weight.hpp"

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace qtorsion {

enum class CartanFamily { A, B, C, D, E, F, G };

struct CartanType {
    CartanFamily family = CartanFamily::A;
    int rank = 1;

    /// Accepts "C2", "c2", "G2", "E6", ...; throws ConfigurationError otherwise.
    static CartanType parse(const std::string& name);
    std::string name() const;
};

/// A Weyl group element acting on ambient coordinates.
struct WeylElement {
    std::vector<Rational> matrix;  // row-major, dim x dim
    std::size_t dim = 0;
    int sign = 1;

    Weight apply(const Weight& w) const;
};

/// Reflection in the hyperplane orthogonal to `root`.
Weight reflect(const Weight& w, const Weight& root);

/// Enumerates the group generated by the reflections in `generators`,
/// breadth first from the identity. `regular` must have trivial stabilizer.
/// Throws ResourceError when more than `bound` elements appear.
std::vector<WeylElement> generate_reflection_group(const std::vector<Weight>& generators,
                                                   const Weight& regular, std::size_t dim,
                                                   std::size_t bound);

/// A positive system of a (possibly reducible, possibly empty) reduced root
/// system sitting inside the ambient coordinates of some RootSystem.
struct PositiveSystem {
    std::vector<Weight> positive_roots;
    std::vector<Weight> simple_roots;
    /// Height of each positive root with respect to simple_roots.
    std::vector<int> heights;
    Weight rho;

    /// Derives simple roots, heights and rho from a set of positive roots.
    static PositiveSystem from_positive_roots(std::vector<Weight> positive, std::size_t dim);

    bool is_dominant(const Weight& w) const;
};

class RootSystem {
public:
    static constexpr std::size_t kDefaultWeylBound = 1'000'000;

    /// Builds the system in Bourbaki orthogonal coordinates and fixes the
    /// Killing scale so that the Casimir of the adjoint representation is 1.
    static RootSystem build(const CartanType& type);
    static RootSystem build(const std::string& name) { return build(CartanType::parse(name)); }

    const CartanType& cartan_type() const noexcept { return type_; }
    std::size_t rank() const noexcept { return simple_roots_.size(); }
    std::size_t ambient_dim() const noexcept { return dim_; }

    const std::vector<Weight>& simple_roots() const noexcept { return simple_roots_; }
    const std::vector<Weight>& positive_roots() const noexcept { return positive_.positive_roots; }
    const PositiveSystem& positive_system() const noexcept { return positive_; }
    const Weight& rho() const noexcept { return positive_.rho; }
    const Weight& highest_root() const noexcept { return highest_root_; }
    std::uint64_t weyl_order() const noexcept { return weyl_order_; }

    /// Killing-normalized inner product: scale * (Euclidean dot).
    Rational inner(const Weight& a, const Weight& b) const { return gram_scale_ * dot(a, b); }
    Rational norm2(const Weight& a) const { return inner(a, a); }
    const Rational& gram_scale() const noexcept { return gram_scale_; }
    /// The inner-product matrix on ambient coordinates.
    std::vector<std::vector<Rational>> gram() const;

    /// <b, gamma^vee> = 2 <b, gamma> / <gamma, gamma>.
    static Rational coroot_pairing(const Weight& b, const Weight& gamma);

    /// Coefficients of a weight in the span of the roots with respect to the simple roots.
    std::vector<Rational> simple_coefficients(const Weight& w) const;
    bool is_positive_root(const Weight& w) const;
    std::vector<Weight> fundamental_weights() const;

    bool is_dominant(const Weight& b) const;
    /// True when <b, gamma> != 0 for every root gamma.
    bool is_regular(const Weight& b) const;
    /// Returns (w b, sign w) with w b dominant; sign is 0 when b is singular.
    std::pair<Weight, int> dominant_representative(const Weight& b) const;

    /// All Weyl group elements with their signs, cached after the first call.
    const std::vector<WeylElement>& weyl_elements(std::size_t bound = kDefaultWeylBound) const;

private:
    struct Cache;

    CartanType type_;
    std::size_t dim_ = 0;
    std::vector<Weight> simple_roots_;
    PositiveSystem positive_;
    Weight highest_root_;
    Rational gram_scale_{1};
    std::uint64_t weyl_order_ = 1;
    std::shared_ptr<Cache> cache_;
};

/// Point of the Lie algebra of the maximal torus, in the coordinates dual to
/// the weight coordinates (beta(X) is the coordinate pairing).
class TorusElement {
public:
    enum class Kind { identity, regular };

    static TorusElement identity(std::size_t dim);
    /// Validates beta(X) not in Z for every root; throws DomainError otherwise.
    static TorusElement regular(const RootSystem& rs, std::vector<Rational> x);

    Kind kind() const noexcept { return kind_; }
    bool is_identity() const noexcept { return kind_ == Kind::identity; }
    const std::vector<Rational>& coords() const noexcept { return x_; }
    /// Exact value of the pairing b(X).
    Rational pair(const Weight& b) const;
    /// The element w X (w acting through its ambient matrix).
    TorusElement moved_by(const WeylElement& w) const;

private:
    TorusElement(std::vector<Rational> x, Kind kind) : x_(std::move(x)), kind_(kind) {}
    std::vector<Rational> x_;
    Kind kind_;
};

/// Returns true when beta(X) is not an integer for all roots beta.
bool is_regular_element(const RootSystem& rs, const std::vector<Rational>& x);

/// exp(2 pi i r), with r reduced exactly mod 1 first.
std::complex<double> unit_phase(const Rational& r);

/// Alt_G{b}(X) = sum_w sign(w) exp(2 pi i <w b, X>).
std::complex<double> alt_sum(const RootSystem& rs, const Weight& b, const TorusElement& x);

/// prod_{beta > 0} 2 i sin(pi beta(X)).
std::complex<double> weyl_denominator_product(const RootSystem& rs, const TorusElement& x);

/// Dominant integral b = rho + mu with |b|^2 - |rho|^2 <= cutoff, sorted by Casimir.
std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, const Rational& casimir_cutoff);

/// |b|^2 - |rho|^2 in the Killing normalization.
Rational casimir(const RootSystem& rs, const Weight& b);

}  // namespace qtorsion
