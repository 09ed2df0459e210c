#pragma once

#include <optional>
#include <vector>

#include "clq/linops.hpp"

namespace clq {

/// Power series in t cut after t^order, exact rational coefficients.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order = 0);
    /// Coefficients c[0], c[1], ...; extra ones are dropped, missing ones are 0.
    TruncatedSeries(int order, const std::vector<Rational>& coeffs);
    static TruncatedSeries variable(int order);
    /// sum_{n >= 1} dims[n - 1] t^n.
    static TruncatedSeries from_dims(int order, const std::vector<BigInt>& dims);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    Rational& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
    const std::vector<Rational>& coefficients() const { return c_; }
    bool is_zero() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a);
    TruncatedSeries operator-() const { return Rational(-1) * *this; }
    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

    /// f(g) by Horner's rule; g must have no constant term.
    TruncatedSeries compose(const TruncatedSeries& g) const;
    /// f(-t).
    TruncatedSeries negate_variable() const;

private:
    std::vector<Rational> c_;
};

BigInt binomial(int n, int k);
/// nar(n, k) = C(n-2, k) C(n-1, k) / (k + 1) for 0 <= k <= n - 2.
BigInt narayana(int n, int k);
BigInt catalan(int n);

enum class DimFormula { Cli, NC, NCdual, Inf, Lab, WNC };

struct FormulaParams {
    int m = 2;
    int b = 1, e = 1, d = 1;  // for Lab
};

/// Closed-form dimension at arity n (every formula gives 1 at n = 1).
BigInt dim_formula(DimFormula which, int n, const FormulaParams& params);
std::vector<BigInt> dim_formula_table(DimFormula which, int n_max, const FormulaParams& params);

enum class HilbertEquation { NC, NCdual, E2sub, MotzSub, NCP, FF4 };

/// Integer polynomial in t and H, terms c t^a H^b.
struct BivariateTerm {
    BigInt coeff;
    int t_power;
    int h_power;
};
std::vector<BivariateTerm> hilbert_equation(HilbertEquation which, std::optional<int> m);

/// Substitutes H into the equation; zero through the truncation order when
/// H satisfies it.
TruncatedSeries check_hilbert_equation(HilbertEquation which, std::optional<int> m, const TruncatedSeries& h);

/// The unique solution with H(0) = 0, by fixed-point iteration.
TruncatedSeries solve_hilbert_equation(HilbertEquation which, std::optional<int> m, int order);

/// H_NC(-H_NC!(-t)) from the closed forms; equals t when the operads are
/// Koszul dual.
TruncatedSeries koszul_inverse_check(int m, int order);

}  // namespace clq
