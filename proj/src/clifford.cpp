#include "qtorsion/clifford.hpp"

#include "qtorsion/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <random>

namespace qtorsion {

namespace {

ExactRational big(const Rational& r) { return ExactRational(r.numerator(), r.denominator()); }

RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

RatMatrix add(RatMatrix a, const RatMatrix& b) {
    for (std::size_t i = 0; i < a.data.size(); ++i) a.data[i] += b.data[i];
    return a;
}

RatMatrix scaled(const ExactRational& s, RatMatrix a) {
    for (auto& v : a.data) v *= s;
    return a;
}

bool equal(const RatMatrix& a, const RatMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
}

/// Basis of the null space as columns, from the reduced row echelon form.
RatMatrix nullspace(RatMatrix a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
        std::size_t piv = row;
        while (piv < a.rows && a(piv, col) == 0) ++piv;
        if (piv == a.rows) continue;
        for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(piv, j), a(row, j));
        const ExactRational inv = 1 / a(row, col);
        for (std::size_t j = 0; j < a.cols; ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == row || a(i, col) == 0) continue;
            const ExactRational f = a(i, col);
            for (std::size_t j = 0; j < a.cols; ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < a.cols; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.push_back(c);
    RatMatrix basis(a.cols, free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        basis(free[f], f) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], f) = -a(i, free[f]);
    }
    return basis;
}

RatMatrix inverse(const RatMatrix& a) {
    RatMatrix inv(a.rows, a.cols);
    for (std::size_t c = 0; c < a.cols; ++c) {
        std::vector<ExactRational> rhs(a.rows, ExactRational(0));
        rhs[c] = 1;
        const auto x = solve_exact(a, rhs);
        if (!x) throw ConsistencyError("singular Lefschetz splitting");
        for (std::size_t r = 0; r < a.rows; ++r) inv(r, c) = (*x)[r];
    }
    return inv;
}

int parity_below(std::uint32_t set, int i) { return std::popcount(set & ((1u << i) - 1u)) % 2; }

std::int64_t binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    std::int64_t b = 1;
    for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
    return b;
}

ExactRational factorial(int n) {
    ExactRational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

std::vector<Rational> unit(std::size_t dim, std::size_t i) {
    std::vector<Rational> v(dim, Rational(0));
    v[i] = 1;
    return v;
}

std::vector<Rational> random_vector(std::size_t dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coord(-3, 3);
    std::vector<Rational> v;
    for (std::size_t i = 0; i < dim; ++i) v.emplace_back(coord(rng));
    return v;
}

}  // namespace

std::int64_t trace_free_dim(int n, int r) {
    if (r > n) return 0;
    return binomial(2 * n, r) - binomial(2 * n, r - 2);
}

TensorModel TensorModel::build(int n, int k, MusicalConventions conv) {
    if (k < 0 || k % 2 != 0) throw ConfigurationError("k must be even and nonnegative, got " + std::to_string(k));
    if (n < 1) throw ConfigurationError("n must be at least 1");
    if (n > kMaxN || k > kMaxK)
        throw ResourceError("tensor model limited to n <= " + std::to_string(kMaxN) + ", k <= " + std::to_string(kMaxK));
    TensorModel m;
    m.n_ = n;
    m.k_ = k;
    m.conv_ = conv;
    const int dim_e = 2 * n;

    m.subsets_.resize(dim_e + 1);
    for (std::uint32_t s = 0; s < (1u << dim_e); ++s) m.subsets_[std::popcount(s)].push_back(s);

    auto index_of = [&](int r, std::uint32_t s) {
        const auto& v = m.subsets_[r];
        return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), s) - v.begin());
    };
    // sigma_E ^ : Lambda^{r-2} -> Lambda^r and the dual contraction Lambda^r -> Lambda^{r-2}.
    auto sigma_wedge = [&](int r) {
        RatMatrix w(m.subsets_[r].size(), m.subsets_[r - 2].size());
        for (std::size_t c = 0; c < m.subsets_[r - 2].size(); ++c) {
            const std::uint32_t s = m.subsets_[r - 2][c];
            for (int i = 0; i < n; ++i) {
                const std::uint32_t a = 1u << i, b = 1u << (n + i);
                if (s & (a | b)) continue;
                // e^i ^ e^{n+i} ^ e^S
                const int sign = (parity_below(s, n + i) + parity_below(s | b, i)) % 2 ? -1 : 1;
                w(index_of(r, s | a | b), c) += sign;
            }
        }
        return w;
    };
    auto sigma_contract = [&](int r) {
        RatMatrix w(m.subsets_[r - 2].size(), m.subsets_[r].size());
        for (std::size_t c = 0; c < m.subsets_[r].size(); ++c) {
            const std::uint32_t s = m.subsets_[r][c];
            for (int i = 0; i < n; ++i) {
                const std::uint32_t a = 1u << i, b = 1u << (n + i);
                if ((s & (a | b)) != (a | b)) continue;
                // i_{e_{n+i}} i_{e_i}
                const int sign = (parity_below(s, i) + parity_below(s ^ a, n + i)) % 2 ? -1 : 1;
                w(index_of(r - 2, s ^ a ^ b), c) += sign;
            }
        }
        return w;
    };

    m.kernel_.resize(dim_e + 1);
    m.projector_.resize(n + 1);
    for (int r = 0; r <= dim_e; ++r) {
        m.kernel_[r] = r < 2 ? identity(m.subsets_[r].size()) : nullspace(sigma_contract(r));
        if (static_cast<std::int64_t>(m.kernel_[r].cols) != trace_free_dim(n, r))
            throw ConsistencyError("trace-free dimension mismatch at r = " + std::to_string(r));
    }
    for (int r = 0; r <= n; ++r) {
        const std::size_t full = m.subsets_[r].size();
        const std::size_t kept = m.kernel_[r].cols;
        RatMatrix split(full, full);
        for (std::size_t i = 0; i < full; ++i)
            for (std::size_t j = 0; j < kept; ++j) split(i, j) = m.kernel_[r](i, j);
        if (r >= 2) {
            const RatMatrix w = sigma_wedge(r);
            for (std::size_t i = 0; i < full; ++i)
                for (std::size_t j = 0; j < w.cols; ++j) split(i, kept + j) = w(i, j);
        }
        const RatMatrix inv = inverse(split);
        RatMatrix proj(kept, full);
        for (std::size_t i = 0; i < kept; ++i)
            for (std::size_t j = 0; j < full; ++j) proj(i, j) = inv(i, j);
        m.projector_[r] = std::move(proj);
    }

    for (int q = 0; q <= dim_e; ++q)
        for (int r = q % 2; r <= std::min(q, dim_e - q); r += 2) {
            TensorBlock b;
            b.q = q;
            b.r = r;
            b.l = (q - r) / 2;
            b.offset = m.dim_;
            b.sym_dim = static_cast<std::size_t>(k + q + 1);
            b.lambda_dim = m.kernel_[r].cols;
            m.dim_ += b.dim();
            m.blocks_.push_back(b);
        }
    return m;
}

int TensorModel::block_index(int q, int r) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i].q == q && blocks_[i].r == r) return static_cast<int>(i);
    return -1;
}

ExactRational TensorModel::sigma_h(const std::vector<Rational>& h, const std::vector<Rational>& h2) const {
    return big(h[0] * h2[1] - h[1] * h2[0]);
}

ExactRational TensorModel::sigma_e(const std::vector<Rational>& e, const std::vector<Rational>& e2) const {
    Rational s(0);
    for (int i = 0; i < n_; ++i) s += e[i] * e2[n_ + i] - e[n_ + i] * e2[i];
    return big(s);
}

std::vector<Rational> TensorModel::e_sharp(const std::vector<Rational>& e) const {
    // sigma_E(e_i, e) for the + convention
    std::vector<Rational> eta(2 * n_);
    for (int i = 0; i < n_; ++i) {
        eta[i] = Rational(conv_.e_sharp) * e[n_ + i];
        eta[n_ + i] = Rational(-conv_.e_sharp) * e[i];
    }
    return eta;
}

RatMatrix TensorModel::sym_mult(const std::vector<Rational>& h, int m) const {
    RatMatrix out(m + 2, m + 1);
    for (int j = 0; j <= m; ++j) {
        out(j, j) += big(h[0]);
        out(j + 1, j) += big(h[1]);
    }
    return out;
}

RatMatrix TensorModel::sym_contract(const std::vector<Rational>& h, int m) const {
    RatMatrix out(std::max(m, 0), m + 1);
    // alpha = sigma_H(., h): alpha(h1) = h_2, alpha(h2) = -h_1
    const ExactRational a1 = big(Rational(conv_.h_sharp) * h[1]);
    const ExactRational a2 = big(Rational(-conv_.h_sharp) * h[0]);
    for (int j = 0; j <= m; ++j) {
        if (m - j > 0) out(j, j) += (m - j) * a1;
        if (j > 0) out(j - 1, j) += j * a2;
    }
    return out;
}

RatMatrix TensorModel::lambda_wedge(const std::vector<Rational>& e, int r) const {
    if (r + 1 > n_) return RatMatrix(0, kernel_[r].cols);
    const auto eta = e_sharp(e);
    const auto& from = subsets_[r];
    const auto& to = subsets_[r + 1];
    RatMatrix w(to.size(), from.size());
    for (std::size_t c = 0; c < from.size(); ++c)
        for (int i = 0; i < 2 * n_; ++i) {
            if (from[c] & (1u << i) || eta[i] == 0) continue;
            const auto row = std::lower_bound(to.begin(), to.end(), from[c] | (1u << i)) - to.begin();
            w(row, c) += (parity_below(from[c], i) ? -1 : 1) * big(eta[i]);
        }
    return mul(projector_[r + 1], mul(w, kernel_[r]));
}

RatMatrix TensorModel::lambda_contract(const std::vector<Rational>& e, int r) const {
    if (r == 0) return RatMatrix(0, 1);
    const auto& from = subsets_[r];
    const auto& to = subsets_[r - 1];
    RatMatrix w(to.size(), from.size());
    for (std::size_t c = 0; c < from.size(); ++c)
        for (int i = 0; i < 2 * n_; ++i) {
            if (!(from[c] & (1u << i)) || e[i] == 0) continue;
            const auto row = std::lower_bound(to.begin(), to.end(), from[c] ^ (1u << i)) - to.begin();
            w(row, c) += (parity_below(from[c], i) ? -1 : 1) * big(e[i]);
        }
    return mul(projector_[r - 1], mul(w, kernel_[r]));
}

Eigen::MatrixXd TensorModel::assemble(const std::vector<Term>& terms) const {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim_, dim_);
    for (const auto& t : terms) {
        const auto& src = blocks_[t.from];
        const auto& dst = blocks_[t.to];
        const double c = t.coeff.convert_to<double>();
        for (std::size_t s2 = 0; s2 < t.sym.rows; ++s2)
            for (std::size_t s1 = 0; s1 < t.sym.cols; ++s1) {
                if (t.sym(s2, s1) == 0) continue;
                const double sv = c * t.sym(s2, s1).convert_to<double>();
                for (std::size_t l2 = 0; l2 < t.lambda.rows; ++l2)
                    for (std::size_t l1 = 0; l1 < t.lambda.cols; ++l1) {
                        if (t.lambda(l2, l1) == 0) continue;
                        out(dst.offset + s2 * dst.lambda_dim + l2, src.offset + s1 * src.lambda_dim + l1) +=
                            sv * t.lambda(l2, l1).convert_to<double>();
                    }
            }
    }
    return out;
}

Eigen::MatrixXd TensorModel::clifford(const std::vector<Rational>& h, const std::vector<Rational>& e) const {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        const auto& b = blocks_[i];
        const int m = k_ + b.q;
        const ExactRational c = ExactRational(1) / (m + 1);
        const ExactRational nr = n_ - b.r + 1;
        const int up_wedge = block_index(b.q + 1, b.r + 1);
        const int up_contract = block_index(b.q + 1, b.r - 1);
        const int down_wedge = block_index(b.q - 1, b.r + 1);
        const int down_contract = block_index(b.q - 1, b.r - 1);
        const int from = static_cast<int>(i);
        if (up_wedge >= 0) terms.push_back({c, sym_mult(h, m), lambda_wedge(e, b.r), from, up_wedge});
        if (up_contract >= 0)
            terms.push_back({-c * (b.l + 1) / nr, sym_mult(h, m), lambda_contract(e, b.r), from, up_contract});
        if (down_wedge >= 0)
            terms.push_back({c * (k_ + n_ + b.l + 1), sym_contract(h, m), lambda_wedge(e, b.r), from, down_wedge});
        if (down_contract >= 0)
            terms.push_back({c * (m - b.l) * (n_ - b.r - b.l + 1) / nr, sym_contract(h, m), lambda_contract(e, b.r),
                             from, down_contract});
    }
    return assemble(terms);
}

Eigen::MatrixXd TensorModel::symbol_d(const std::vector<Rational>& h, const std::vector<Rational>& e) const {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        const auto& b = blocks_[i];
        const int m = k_ + b.q;
        const ExactRational c = ExactRational(1) / (m + 1);
        const int up_wedge = block_index(b.q + 1, b.r + 1);
        const int up_contract = block_index(b.q + 1, b.r - 1);
        const int from = static_cast<int>(i);
        if (up_wedge >= 0) terms.push_back({c, sym_mult(h, m), lambda_wedge(e, b.r), from, up_wedge});
        if (up_contract >= 0)
            terms.push_back({-c * (b.l + 1) / (n_ - b.r + 1), sym_mult(h, m), lambda_contract(e, b.r), from, up_contract});
    }
    return assemble(terms);
}

Eigen::MatrixXd TensorModel::symbol_delta(const std::vector<Rational>& h, const std::vector<Rational>& e) const {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        const auto& b = blocks_[i];
        const int m = k_ + b.q;
        const ExactRational sign = b.q % 2 ? -1 : 1;
        const int down_wedge = block_index(b.q - 1, b.r + 1);
        const int down_contract = block_index(b.q - 1, b.r - 1);
        const int from = static_cast<int>(i);
        if (down_wedge >= 0) terms.push_back({sign, sym_contract(h, m), lambda_wedge(e, b.r), from, down_wedge});
        if (down_contract >= 0)
            terms.push_back({-sign * ExactRational(n_ - b.r - b.l + 1) / (n_ - b.r + 1), sym_contract(h, m),
                             lambda_contract(e, b.r), from, down_contract});
    }
    return assemble(terms);
}

ExactRational printed_gamma(int n, int k, int q, int r) {
    const int l = (q - r) / 2;
    const ExactRational g = factorial(k + q - l) * factorial(k + n + l + 1) / factorial(k + q + 1);
    return l % 2 ? -g : g;
}

std::vector<double> printed_gamma(const TensorModel& m) {
    std::vector<double> g;
    for (const auto& b : m.blocks()) g.push_back(printed_gamma(m.n(), m.k(), b.q, b.r).convert_to<double>());
    return g;
}

std::vector<double> sign_corrected_gamma(const TensorModel& m) {
    auto g = printed_gamma(m);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const int q = m.blocks()[i].q;
        if ((q * (q + 3) / 2) % 2) g[i] = -g[i];
    }
    return g;
}

CliffordReport check_clifford_relation(const TensorModel& m, std::size_t trials, std::uint64_t seed) {
    std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> vectors;
    const std::size_t de = 2 * m.n();
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t i = 0; i < de; ++i) vectors.emplace_back(unit(2, a), unit(de, i));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i; j < vectors.size(); ++j) pairs.emplace_back(i, j);
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        vectors.emplace_back(random_vector(2, rng), random_vector(de, rng));
        vectors.emplace_back(random_vector(2, rng), random_vector(de, rng));
        pairs.emplace_back(vectors.size() - 2, vectors.size() - 1);
    }

    std::vector<Eigen::MatrixXd> ops;
    for (const auto& [h, e] : vectors) ops.push_back(m.clifford(h, e));

    CliffordReport rep;
    rep.trials = trials;
    bool measured = false;
    double mu = 0.0;
    std::vector<std::pair<Eigen::MatrixXd, double>> results;
    for (const auto& [i, j] : pairs) {
        const Eigen::MatrixXd anti = ops[i] * ops[j] + ops[j] * ops[i];
        const double form = (m.sigma_h(vectors[i].first, vectors[j].first) *
                             m.sigma_e(vectors[i].second, vectors[j].second))
                                .convert_to<double>();
        if (!measured && form != 0.0) {
            mu = anti.trace() / (form * static_cast<double>(m.dim()));
            measured = true;
        }
        for (const auto& src : m.blocks())
            for (const auto& dst : m.blocks())
                if (src.offset != dst.offset)
                    rep.max_off_block = std::max(rep.max_off_block,
                                                 max_abs(anti.block(dst.offset, src.offset, dst.dim(), src.dim())));
        results.emplace_back(anti, form);
    }
    for (const auto& [anti, form] : results) {
        const Eigen::MatrixXd expected = mu * form * Eigen::MatrixXd::Identity(m.dim(), m.dim());
        rep.max_residual = std::max(rep.max_residual, max_abs(anti - expected));
    }
    // (h (x) e). = sqrt 2 times the operator assembled by clifford().
    rep.lambda0 = 2.0 * mu;
    return rep;
}

namespace {

double dirac_residual(const TensorModel& m, const std::vector<double>& gamma,
                      const std::vector<std::array<Eigen::MatrixXd, 3>>& ops) {
    Eigen::VectorXd g(m.dim());
    for (std::size_t i = 0; i < m.blocks().size(); ++i)
        g.segment(m.blocks()[i].offset, m.blocks()[i].dim()).setConstant(gamma[i]);
    double worst = 0.0;
    for (const auto& [d, delta, cliff] : ops) {
        // gamma^{-1} delta gamma
        const Eigen::MatrixXd conj = g.cwiseInverse().asDiagonal() * delta * g.asDiagonal();
        worst = std::max(worst, max_abs(d + conj - cliff));
    }
    return worst;
}

}  // namespace

DiracReport check_dirac_identity(const TensorModel& m, const std::vector<double>& gamma, std::size_t trials,
                                 std::uint64_t seed) {
    if (gamma.size() != m.blocks().size()) throw ConfigurationError("gamma needs one scalar per block");
    std::mt19937_64 rng(seed);
    const std::size_t de = 2 * m.n();
    std::vector<std::array<Eigen::MatrixXd, 3>> ops;
    auto add = [&](const std::vector<Rational>& h, const std::vector<Rational>& e) {
        ops.push_back({m.symbol_d(h, e), m.symbol_delta(h, e), m.clifford(h, e)});
    };
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t i = 0; i < de; ++i) add(unit(2, a), unit(de, i));
    for (std::size_t t = 0; t < trials; ++t) add(random_vector(2, rng), random_vector(de, rng));

    DiracReport rep;
    rep.trials = trials;
    rep.max_residual = dirac_residual(m, gamma, ops);
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        auto g = gamma;
        g[i] *= 2.0;
        rep.perturbed_residuals.push_back(dirac_residual(m, g, ops));
    }
    auto doubled = gamma;
    for (auto& v : doubled) v *= 2.0;
    rep.global_scale_residual = dirac_residual(m, doubled, ops);
    return rep;
}

IdentityReport check_identities(const TensorModel& m, std::size_t trials, std::uint64_t seed) {
    IdentityReport rep;
    std::mt19937_64 rng(seed);
    const std::size_t de = 2 * m.n();
    std::vector<std::vector<Rational>> hs{unit(2, 0), unit(2, 1)};
    std::vector<std::vector<Rational>> es;
    for (std::size_t i = 0; i < de; ++i) es.push_back(unit(de, i));
    for (std::size_t t = 0; t < trials; ++t) {
        hs.push_back(random_vector(2, rng));
        es.push_back(random_vector(de, rng));
    }

    for (const auto& a : hs)
        for (const auto& b : hs) {
            for (const auto& c : hs) {
                const ExactRational lhs0 = m.sigma_h(a, c) * big(b[0]) - m.sigma_h(b, c) * big(a[0]) - m.sigma_h(a, b) * big(c[0]);
                const ExactRational lhs1 = m.sigma_h(a, c) * big(b[1]) - m.sigma_h(b, c) * big(a[1]) - m.sigma_h(a, b) * big(c[1]);
                if (lhs0 != 0 || lhs1 != 0) rep.sp1_identity_exact = false;
            }
            for (int deg = std::max(1, m.k()); deg <= m.k() + 2 * m.n(); ++deg) {
                const RatMatrix lhs = add(mul(m.sym_mult(a, deg - 1), m.sym_contract(b, deg)),
                                          scaled(-1, mul(m.sym_mult(b, deg - 1), m.sym_contract(a, deg))));
                if (!equal(lhs, scaled(deg * m.sigma_h(a, b), identity(deg + 1)))) rep.sym_identity_exact = false;
            }
        }

    for (const auto& e : es)
        for (const auto& f : es)
            for (int r = 0; r <= m.n(); ++r) {
                const std::size_t d = m.trace_free_basis(r).cols;
                RatMatrix lhs(d, d);
                if (r + 1 <= m.n()) lhs = add(lhs, mul(m.lambda_contract(e, r + 1), m.lambda_wedge(f, r)));
                RatMatrix rhs = scaled(m.sigma_e(e, f), identity(d));
                if (r >= 1) {
                    lhs = add(lhs, mul(m.lambda_wedge(f, r - 1), m.lambda_contract(e, r)));
                    rhs = add(rhs, scaled(ExactRational(1, m.n() - r + 1), mul(m.lambda_wedge(e, r - 1), m.lambda_contract(f, r))));
                }
                if (!equal(lhs, rhs)) rep.lambda_identity_exact = false;
            }

    for (std::size_t t = 0; t < std::max<std::size_t>(trials, 1); ++t) {
        const auto h = random_vector(2, rng);
        const auto e = random_vector(de, rng);
        const Eigen::MatrixXd d = m.symbol_d(h, e);
        const Eigen::MatrixXd delta = m.symbol_delta(h, e);
        rep.max_square = std::max({rep.max_square, max_abs(d * d), max_abs(delta * delta)});
    }
    return rep;
}

}  // namespace qtorsion
