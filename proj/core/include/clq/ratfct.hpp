#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "clq/linops.hpp"

namespace clq {

/// Polynomial in u_1, ..., u_n with integer coefficients. Exponent vectors
/// have length n; zero coefficients are never stored.
class Poly {
public:
    using Exponents = std::vector<int>;

    explicit Poly(int nvars = 0) : nvars_(nvars) {}
    static Poly constant(int nvars, const BigInt& c);
    static Poly variable(int nvars, int j);
    /// u_x + ... + u_{y-1}.
    static Poly interval(int nvars, int x, int y);

    int nvars() const { return nvars_; }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Exponents& e, const BigInt& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly pow(int e) const;
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    /// Replaces u_j by images[j - 1]; all images share one variable count.
    Poly substitute(const std::vector<Poly>& images) const;

private:
    int nvars_;
    std::map<Exponents, BigInt> terms_;
};

/// Monomials in decreasing lexicographic order of exponents, e.g.
/// `u1^2*u3 - 2*u2`.
std::string to_string(const Poly& p);

/// Element of RatFct(n). Fractions are never reduced; equality
/// cross-multiplies.
class RatFct {
public:
    RatFct(Poly num, Poly den);
    static RatFct one(int arity) { return RatFct(Poly::constant(arity, 1), Poly::constant(arity, 1)); }
    static RatFct zero(int arity) { return RatFct(Poly(arity), Poly::constant(arity, 1)); }

    int arity() const { return num_.nvars(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    RatFct inverse() const;

    friend RatFct operator+(const RatFct& a, const RatFct& b);
    friend RatFct operator-(const RatFct& a, const RatFct& b);
    friend RatFct operator*(const RatFct& a, const RatFct& b);
    friend RatFct operator*(const BigInt& c, const RatFct& a);
    /// Same arity and num * o.den == o.num * den.
    bool operator==(const RatFct& o) const;

private:
    Poly num_;
    Poly den_;
};

/// `num / den`, or just `num` when the denominator is 1.
std::string to_string(const RatFct& f);

/// f(u_1, ..., u_{i-1}, u_i + ... + u_{i+m-1}, u_{i+m}, ...) g(u_i, ..., u_{i+m-1}).
RatFct ratfct_compose(const RatFct& f, int i, const RatFct& g);

/// Product of powers of the linear forms u_x + ... + u_{y-1}, keyed by the
/// interval (x, y). Distinct intervals give distinct irreducible factors, so
/// equality is equality of the exponent maps.
class IntervalProduct {
public:
    explicit IntervalProduct(int arity) : arity_(arity) {}
    int arity() const { return arity_; }
    const std::map<std::pair<int, int>, std::int64_t>& exponents() const { return exps_; }
    void multiply(int x, int y, std::int64_t e);

    IntervalProduct inverse() const;
    friend IntervalProduct operator*(const IntervalProduct& a, const IntervalProduct& b);
    bool operator==(const IntervalProduct& o) const = default;

    RatFct expand() const;

private:
    int arity_;
    std::map<std::pair<int, int>, std::int64_t> exps_;
};

/// Factored display, e.g. `(u1+u2)^2*u4 / (u1*(u5+u6))`.
std::string to_string(const IntervalProduct& f);

IntervalProduct interval_compose(const IntervalProduct& f, int i, const IntervalProduct& g);

/// The map F_theta sending a clique to the product over its arcs of
/// (u_x + ... + u_{y-1})^theta(label). theta must be a rank function.
class FracMap {
public:
    /// Throws when theta is not a unitary magma morphism to Z.
    FracMap(MagmaPtr magma, std::function<std::int64_t(Elem)> theta);
    /// Over Z with the identity as rank function.
    static FracMap identity();

    IntervalProduct operator()(const Clique& p) const;
    RatFct operator()(const LinComb& f) const;

private:
    MagmaPtr magma_;
    std::function<std::int64_t(Elem)> theta_;
};

/// Arc-wise product of two cliques of the same arity over the same magma.
Clique star(const Clique& p, const Clique& q);

/// Z-clique of the given arity, each arc labeled uniformly in [lo, hi].
Clique random_integer_clique(std::mt19937_64& rng, int arity, int lo, int hi);

struct FracCheckReport {
    std::size_t checked = 0;
    std::vector<std::string> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};

/// F_Id(p o_i q) = F_Id(p) o_i F_Id(q) on random pairs of arity <= max_arity
/// with labels in [-2, 2], compared factored and, with expanded, also as
/// expanded fractions.
FracCheckReport check_frac_morphism(std::uint64_t seed, int samples, int max_arity, bool expanded);
/// F_Id(p) F_Id(q) = F_Id(p * q) and 1 / F_Id(p) = F_Id(-p) on random
/// cliques of equal arity.
FracCheckReport check_star_and_inverse(std::uint64_t seed, int samples, int max_arity);

}  // namespace clq
