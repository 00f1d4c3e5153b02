#include "qtorsion/weight.hpp"

#include "qtorsion/errors.hpp"

#include <sstream>

namespace qtorsion {

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (c != ' ') text.push_back(c);
    if (text.empty()) throw ConfigurationError("empty rational");
    try {
        if (auto slash = text.find('/'); slash != std::string::npos) {
            std::size_t used_num = 0;
            std::size_t used_den = 0;
            const auto num = std::stoll(text.substr(0, slash), &used_num);
            const auto den = std::stoll(text.substr(slash + 1), &used_den);
            if (used_num != slash || used_den != text.size() - slash - 1 || den == 0)
                throw ConfigurationError("malformed rational '" + raw + "'");
            return Rational(num, den);
        }
        if (auto point = text.find('.'); point != std::string::npos) {
            const std::string int_part = text.substr(0, point);
            const std::string frac = text.substr(point + 1);
            if (frac.size() > 15 || frac.find_first_not_of("0123456789") != std::string::npos)
                throw ConfigurationError("malformed decimal '" + raw + "'");
            const bool negative = !int_part.empty() && int_part[0] == '-';
            std::int64_t den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
            const std::string digits = (negative ? int_part.substr(1) : int_part);
            if (digits.find_first_not_of("0123456789+") != std::string::npos)
                throw ConfigurationError("malformed decimal '" + raw + "'");
            const std::int64_t whole = digits.empty() ? 0 : std::stoll(digits);
            const std::int64_t part = frac.empty() ? 0 : std::stoll(frac);
            Rational value(whole * den + part, den);
            return negative ? -value : value;
        }
        std::size_t used = 0;
        const auto value = std::stoll(text, &used);
        if (used != text.size()) throw ConfigurationError("malformed rational '" + raw + "'");
        return Rational(value);
    } catch (const std::logic_error&) {
        throw ConfigurationError("malformed rational '" + raw + "'");
    }
}

std::int64_t floor_of(const Rational& r) {
    const auto n = r.numerator();
    const auto d = r.denominator();
    auto q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

Rational frac_part(const Rational& r) { return r - Rational(floor_of(r)); }

Weight Weight::from_ints(std::initializer_list<std::int64_t> values) {
    std::vector<Rational> c;
    c.reserve(values.size());
    for (auto v : values) c.emplace_back(v);
    return Weight(std::move(c));
}

bool Weight::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

Weight& Weight::operator+=(const Weight& other) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& other) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

Weight& Weight::operator*=(const Rational& scale) {
    for (auto& c : coords_) c *= scale;
    return *this;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
    os << '(';
    for (std::size_t i = 0; i < w.dim(); ++i) {
        if (i) os << ", ";
        os << to_string(w[i]);
    }
    return os << ')';
}

Rational dot(const Weight& a, const Weight& b) {
    Rational sum(0);
    for (std::size_t i = 0; i < a.dim(); ++i) sum += a[i] * b[i];
    return sum;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& c : w.coords()) {
        h ^= std::hash<std::int64_t>{}(c.numerator()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<std::int64_t>{}(c.denominator()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace qtorsion
