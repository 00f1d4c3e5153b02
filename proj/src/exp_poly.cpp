#include "qtorsion/exp_poly.hpp"

#include "qtorsion/rootsys.hpp"

#include <cmath>

namespace qtorsion {

void ExponentialPolynomial::add(std::complex<double> c, int power, const Rational& phase) {
    if (c == std::complex<double>(0.0, 0.0)) return;
    const std::pair<int, Rational> key{power, frac_part(phase)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == std::complex<double>(0.0, 0.0)) terms_.erase(it);
}

void ExponentialPolynomial::add(const ExponentialPolynomial& other, std::complex<double> scale) {
    for (const auto& [key, c] : other.terms_) add(scale * c, key.first, key.second);
}

std::vector<ExponentialPolynomial::Term> ExponentialPolynomial::terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [key, c] : terms_) out.push_back(Term{c, key.first, key.second});
    return out;
}

std::complex<double> ExponentialPolynomial::operator()(std::int64_t l) const {
    std::complex<double> sum{0.0, 0.0};
    for (const auto& [key, c] : terms_) {
        const double lp = key.first == 0 ? 1.0 : std::pow(static_cast<double>(l), key.first);
        sum += c * lp * unit_phase(Rational(l) * key.second);
    }
    return sum;
}

void ExponentialPolynomial::prune(double tol) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) <= tol)
            it = terms_.erase(it);
        else
            ++it;
    }
}

}  // namespace qtorsion
