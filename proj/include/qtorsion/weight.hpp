#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

// Boost 1.74 rational mixed equality recurses forever under C++20 reversed
// candidates; these exact matches win overload resolution.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) {
    return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator!=(const rational<std::int64_t>& a, int b) { return !(a == b); }
inline bool operator!=(int b, const rational<std::int64_t>& a) { return !(a == b); }
inline bool operator==(const rational<std::int64_t>& a, long b) {
    return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(long b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator!=(const rational<std::int64_t>& a, long b) { return !(a == b); }
inline bool operator!=(long b, const rational<std::int64_t>& a) { return !(a == b); }
}  // namespace boost

namespace qtorsion {

using Rational = boost::rational<std::int64_t>;

double to_double(const Rational& r);
std::string to_string(const Rational& r);
/// Parses "3", "-1/2" or "0.25" (finite decimals only).
Rational parse_rational(const std::string& text);
/// Floor of a rational as an integer.
std::int64_t floor_of(const Rational& r);
/// r - floor(r), in [0, 1).
Rational frac_part(const Rational& r);

/// Exact covector on the Cartan torus in orthogonal coordinates.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t dim) : coords_(dim, Rational(0)) {}
    explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

    static Weight from_ints(std::initializer_list<std::int64_t> values);

    std::size_t dim() const noexcept { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    bool is_zero() const;

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    Weight& operator*=(const Rational& scale);

    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
    friend Weight operator*(Weight a, const Rational& s) { return a *= s; }
    friend Weight operator-(Weight a) { return a *= Rational(-1); }

    friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    /// Lexicographic order, used only for container keys.
    friend bool operator<(const Weight& a, const Weight& b) { return a.coords_ < b.coords_; }

    std::string str() const;

private:
    std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

/// Euclidean coordinate pairing; the Killing scale is applied by RootSystem::inner.
Rational dot(const Weight& a, const Weight& b);

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept;
};

}  // namespace qtorsion
