#include "qtorsion/zetareg.hpp"

#include "qtorsion/errors.hpp"
#include "qtorsion/rootsys.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace qtorsion {

namespace {

using boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_bin_float_50;

cpp_rational binomial(int n, int k) {
    cpp_rational c(1);
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

// B_m with B_1 = -1/2.
const std::vector<cpp_rational>& bernoulli_table(int upto) {
    static std::mutex m;
    static std::vector<cpp_rational> table{cpp_rational(1)};
    std::lock_guard lock(m);
    while (static_cast<int>(table.size()) <= upto) {
        const int k = static_cast<int>(table.size());
        cpp_rational s(0);
        for (int j = 0; j < k; ++j) s += binomial(k + 1, j) * table[j];
        table.push_back(-s / (k + 1));
    }
    return table;
}

cpp_rational bernoulli_minus(int m) { return bernoulli_table(m)[m]; }

Real to_real(const cpp_rational& q) {
    return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

// B_m(x), standard convention.
Real bernoulli_poly(int m, const Real& x) {
    Real s = 0;
    for (int k = 0; k <= m; ++k) s += to_real(binomial(m, k) * bernoulli_minus(k)) * pow(x, m - k);
    return s;
}

// d/ds zeta_H(s, x) at s = -n by Euler-Maclaurin with N shifted terms.
// Returns the value and the size of the last retained correction.
std::pair<Real, Real> hurwitz_deriv(int n, const Real& x) {
    const int N = std::max(30, n + 10);
    Real sum = 0;
    for (int m = 0; m < N; ++m) {
        const Real t = m + x;
        sum -= log(t) * pow(t, n);
    }
    const Real a = N + x;
    const Real loga = log(a);
    sum += pow(a, n + 1) * (loga / (n + 1) - Real(1) / Real((n + 1) * (n + 1)));
    sum -= loga * pow(a, n) / 2;

    Real fact = 1;  // (2j)!
    Real last = 0;
    for (int j = 1; j <= 120; ++j) {
        fact *= Real(2 * j - 1) * Real(2 * j);
        // P(s) = s (s+1) ... (s+2j-2) and P'(s) at s = -n, by forward accumulation.
        Real p = 1;
        Real dp = 0;
        for (int i = 0; i <= 2 * j - 2; ++i) {
            const Real f = Real(i - n);
            dp = dp * f + p;
            p *= f;
        }
        const Real b = to_real(bernoulli_minus(2 * j)) / fact;
        const Real term = b * (dp - p * loga) * pow(a, n - 2 * j + 1);
        sum += term;
        last = abs(term);
        if (last < Real("1e-45") && 2 * j - 1 > n) break;
    }
    return {sum, last};
}

}  // namespace

std::string method_name(LerchValue::Method m) {
    switch (m) {
    case LerchValue::Method::bernoulli_closed_form: return "bernoulli-closed-form";
    case LerchValue::Method::rational_polylog_closed_form: return "rational-polylog-closed-form";
    case LerchValue::Method::euler_maclaurin: return "euler-maclaurin";
    }
    return "unknown";
}

cpp_rational bernoulli_plus(int m) {
    if (m == 1) return cpp_rational(1, 2);
    return bernoulli_minus(m);
}

LerchValue lerch_value(int n, const Rational& r) {
    if (n < 0) throw DomainError("lerch_value needs n >= 0");
    const Rational f = frac_part(r);
    LerchValue out;
    if (f == 0) {
        out.value = -(bernoulli_plus(n + 1) / (n + 1)).convert_to<double>();
        out.method = LerchValue::Method::bernoulli_closed_form;
        return out;
    }
    // Li_{-n}(z) = sum_k k! S(n+1, k+1) w^{k+1}, w = z/(1-z) = -1/2 + (i/2) cot(pi r).
    const double cot = f == Rational(1, 2) ? 0.0 : 1.0 / std::tan(std::numbers::pi * to_double(f));
    const std::complex<double> w(-0.5, 0.5 * cot);
    // Stirling numbers of the second kind, row n+1.
    std::vector<std::vector<double>> s(n + 2, std::vector<double>(n + 2, 0.0));
    s[0][0] = 1.0;
    for (int i = 1; i <= n + 1; ++i)
        for (int k = 1; k <= i; ++k) s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
    std::complex<double> sum{0.0, 0.0};
    std::complex<double> wp = w;
    double fact = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) fact *= k;
        sum += fact * s[n + 1][k + 1] * wp;
        wp *= w;
    }
    out.value = sum;
    out.method = LerchValue::Method::rational_polylog_closed_form;
    out.precision_estimate = std::abs(sum) * 1e-15;
    return out;
}

namespace {

/// b^n (zeta_H'(-n, j/b) - log b zeta_H(-n, j/b)) for j = 1..b with truncation errors;
/// shared by all phases with denominator b.
struct HurwitzRow {
    std::vector<Real> values;
    Real error = 0;
};

std::shared_ptr<const HurwitzRow> hurwitz_row(int n, std::int64_t b) {
    static std::mutex m;
    static std::map<std::pair<int, std::int64_t>, std::shared_ptr<const HurwitzRow>> cache;
    {
        std::lock_guard lock(m);
        if (auto it = cache.find({n, b}); it != cache.end()) return it->second;
    }
    auto row = std::make_shared<HurwitzRow>();
    const Real bn = pow(Real(b), n);
    const Real logb = log(Real(b));
    for (std::int64_t j = 1; j <= b; ++j) {
        const Real x = Real(j) / Real(b);
        const Real h = -bernoulli_poly(n + 1, x) / (n + 1);
        const auto [dh, e] = hurwitz_deriv(n, x);
        row->values.push_back(bn * (dh - logb * h));
        row->error += bn * e;
    }
    std::lock_guard lock(m);
    return cache.emplace(std::pair{n, b}, std::move(row)).first->second;
}

}  // namespace

LerchValue lerch_deriv(int n, const Rational& r, double tol) {
    if (n < 0) throw DomainError("lerch_deriv needs n >= 0");
    const Rational f = frac_part(r);
    const auto a = f.numerator();
    const auto b = f.denominator();
    const Real pi = boost::math::constants::pi<Real>();
    const auto row = hurwitz_row(n, b);
    Real re = 0;
    Real im = 0;
    // zeta_L(s) = b^{-s} sum_j omega^j zeta_H(s, j/b)
    for (std::int64_t j = 1; j <= b; ++j) {
        const Real& v = row->values[j - 1];
        const Real angle = 2 * pi * Real((a * j) % b) / Real(b);
        re += v * cos(angle);
        im += v * sin(angle);
    }
    LerchValue out;
    out.value = {re.convert_to<double>(), im.convert_to<double>()};
    out.method = LerchValue::Method::euler_maclaurin;
    const double scale = std::max(1.0, std::abs(out.value));
    const double truncation = row->error.convert_to<double>();
    out.precision_estimate = truncation + 1e-16 * scale;
    if (truncation > tol * scale)
        throw NumericError("Lerch derivative at n=" + std::to_string(n) + " did not reach tolerance",
                           out.precision_estimate);
    return out;
}

ExponentialPolynomial odd_part(const ExponentialPolynomial& p) {
    ExponentialPolynomial q;
    for (const auto& t : p.terms()) {
        q.add(0.5 * t.coeff, t.power, t.phase);
        const double sign = t.power % 2 == 0 ? 1.0 : -1.0;
        q.add(-0.5 * sign * t.coeff, t.power, -t.phase);
    }
    return q;
}

std::complex<double> zeta_apply(const ExponentialPolynomial& p) {
    std::complex<double> s{0.0, 0.0};
    for (const auto& t : p.terms()) s += t.coeff * lerch_value(t.power, t.phase).value;
    return s;
}

std::complex<double> zeta_deriv_apply(const ExponentialPolynomial& p, double tol) {
    std::complex<double> s{0.0, 0.0};
    for (const auto& t : p.terms()) s += t.coeff * lerch_deriv(t.power, t.phase, tol).value;
    return s;
}

std::complex<double> p_star(const ExponentialPolynomial& poly, const Rational& p) {
    std::complex<double> s{0.0, 0.0};
    const double pd = to_double(p);
    for (const auto& t : poly.terms()) {
        if (t.phase != 0) continue;
        double harmonic = 0.0;
        for (int l = 1; l <= t.power; ++l) harmonic += 1.0 / l;
        s -= t.coeff * std::pow(pd, t.power + 1) / (4.0 * (t.power + 1)) * harmonic;
    }
    return s;
}

}  // namespace qtorsion
