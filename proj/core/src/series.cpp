#include "clq/series.hpp"

namespace clq {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw Error("negative truncation order");
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int order, const std::vector<Rational>& coeffs) : TruncatedSeries(order) {
    for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = coeffs[k];
}

TruncatedSeries TruncatedSeries::variable(int order) {
    TruncatedSeries t(order);
    if (order >= 1) t[1] = 1;
    return t;
}

TruncatedSeries TruncatedSeries::from_dims(int order, const std::vector<BigInt>& dims) {
    TruncatedSeries h(order);
    for (std::size_t n = 1; n <= dims.size() && n <= static_cast<std::size_t>(order); ++n)
        h[static_cast<int>(n)] = Rational(dims[n - 1]);
    return h;
}

bool TruncatedSeries::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.order() != order()) throw Error("series orders differ");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (o.order() != order()) throw Error("series orders differ");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw Error("series orders differ");
    TruncatedSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= a.order(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

TruncatedSeries operator*(const Rational& s, TruncatedSeries a) {
    for (int k = 0; k <= a.order(); ++k) a[k] *= s;
    return a;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& g) const {
    if (g.order() != order()) throw Error("series orders differ");
    if (g[0] != 0) throw Error("compose: inner series has a constant term");
    TruncatedSeries r(order());
    for (int k = order(); k >= 0; --k) {
        r = r * g;
        r[0] += c_[static_cast<std::size_t>(k)];
    }
    return r;
}

TruncatedSeries TruncatedSeries::negate_variable() const {
    TruncatedSeries r = *this;
    for (int k = 1; k <= order(); k += 2) r[k] = -r[k];
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt narayana(int n, int k) {
    if (k < 0 || k > n - 2) throw Error("narayana: need 0 <= k <= n - 2");
    return binomial(n - 2, k) * binomial(n - 1, k) / (k + 1);
}

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

namespace {

BigInt ipow(BigInt b, int e) {
    if (e < 0) throw Error("negative exponent");
    BigInt r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

BigInt dim_formula(DimFormula which, int n, const FormulaParams& p) {
    if (n < 1) throw Error("dim_formula: arity must be positive");
    if (p.m < 1) throw Error("dim_formula: m must be positive");
    if (n == 1) return 1;
    const BigInt m = p.m;
    BigInt total = 0;
    switch (which) {
        case DimFormula::Cli:
            return ipow(m, n * (n + 1) / 2);
        case DimFormula::NC:
            for (int k = 0; k <= n - 2; ++k) total += ipow(m, n + k + 1) * ipow(m - 1, n - k - 2) * narayana(n, k);
            return total;
        case DimFormula::NCdual:
            for (int k = 0; k <= n - 2; ++k)
                total += ipow(m, n + 1) * ipow(m * (m - 1) + 1, k) * ipow(m * (m - 1), n - k - 2) * narayana(n, k);
            return total;
        case DimFormula::Inf:
            for (int k = 0; k <= n; ++k) total += ipow(m - 1, k) * narayana(n + 2, k);
            return total;
        case DimFormula::Lab:
            return BigInt(p.b) * ipow(p.e, n) * ipow(p.d, (n + 1) * (n - 2) / 2);
        case DimFormula::WNC:
            for (int k = 0; k <= n - 2; ++k) total += ipow(m, k) * ipow(m - 1, n - k - 2) * narayana(n, k);
            return total;
    }
    return total;
}

std::vector<BigInt> dim_formula_table(DimFormula which, int n_max, const FormulaParams& params) {
    std::vector<BigInt> out;
    for (int n = 1; n <= n_max; ++n) out.push_back(dim_formula(which, n, params));
    return out;
}

std::vector<BivariateTerm> hilbert_equation(HilbertEquation which, std::optional<int> m) {
    auto need_m = [&] {
        if (!m || *m < 1) throw Error("this equation needs the magma size m");
        return BigInt(*m);
    };
    switch (which) {
        case HilbertEquation::NC: {
            const BigInt k = need_m();
            return {{1, 1, 0},
                    {k * k * k - 2 * k * k + 2 * k - 1, 2, 0},
                    {2 * k * k - 3 * k + 2, 1, 1},
                    {-1, 0, 1},
                    {k - 1, 0, 2}};
        }
        case HilbertEquation::NCdual: {
            const BigInt k = need_m();
            return {{1, 1, 0},
                    {k - 1, 2, 0},
                    {2 * k * k - 3 * k + 2, 1, 1},
                    {-1, 0, 1},
                    {k * k * k - 2 * k * k + 2 * k - 1, 0, 2}};
        }
        case HilbertEquation::E2sub:
            return {{1, 1, 0}, {1, 1, 1}, {-1, 0, 1}, {2, 1, 2}, {1, 0, 2}};
        case HilbertEquation::MotzSub:
            return {{1, 1, 0}, {1, 1, 1}, {-1, 0, 1}, {1, 1, 2}};
        case HilbertEquation::NCP:
            return {{1, 1, 0}, {-1, 0, 1}, {2, 0, 2}, {-1, 0, 3}};
        case HilbertEquation::FF4:
            return {{1, 1, 0}, {2, 1, 1}, {-1, 0, 1}, {2, 0, 2}};
    }
    return {};
}

TruncatedSeries check_hilbert_equation(HilbertEquation which, std::optional<int> m, const TruncatedSeries& h) {
    const int order = h.order();
    const auto eq = hilbert_equation(which, m);
    int max_h = 0;
    for (const auto& term : eq) max_h = std::max(max_h, term.h_power);
    std::vector<TruncatedSeries> hp{TruncatedSeries(order)};
    hp[0][0] = 1;
    for (int b = 1; b <= max_h; ++b) hp.push_back(hp.back() * h);
    TruncatedSeries r(order);
    for (const auto& term : eq)
        for (int k = 0; k + term.t_power <= order; ++k)
            r[k + term.t_power] += Rational(term.coeff) * hp[static_cast<std::size_t>(term.h_power)][k];
    return r;
}

TruncatedSeries solve_hilbert_equation(HilbertEquation which, std::optional<int> m, int order) {
    // Every equation reads -H + (terms of t-adic valuation > that of H) = 0.
    TruncatedSeries h(order);
    for (int it = 0; it <= order + 1; ++it) h += check_hilbert_equation(which, m, h);
    if (!check_hilbert_equation(which, m, h).is_zero()) throw std::logic_error("fixed point did not converge");
    return h;
}

TruncatedSeries koszul_inverse_check(int m, int order) {
    FormulaParams p;
    p.m = m;
    const auto hnc = TruncatedSeries::from_dims(order, dim_formula_table(DimFormula::NC, order, p));
    const auto hdual = TruncatedSeries::from_dims(order, dim_formula_table(DimFormula::NCdual, order, p));
    return hnc.compose(-hdual.negate_variable());
}

}  // namespace clq
