#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clq/clique.hpp"

namespace clq {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Finite formal linear combination with exact rational coefficients.
/// Zero coefficients are never stored.
template <class Key>
class Combination {
public:
    using Terms = std::map<Key, Rational>;

    Combination() = default;
    explicit Combination(const Key& k, Rational c = 1) { add(k, std::move(c)); }

    void add(const Key& k, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Combination& operator+=(const Combination& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    Combination& operator-=(const Combination& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    Combination& operator*=(const Rational& s) {
        if (s == 0) terms_.clear();
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }
    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
    friend Combination operator*(const Rational& s, Combination a) { return a *= s; }
    bool operator==(const Combination& o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
};

using LinComb = Combination<Clique>;

/// Row-echelon basis of a subspace, built incrementally by exact Gaussian
/// elimination. Each stored row has coefficient 1 on its pivot, the
/// smallest key of the row.
template <class Key>
class EchelonBasis {
public:
    Combination<Key> reduce(Combination<Key> v) const {
        for (;;) {
            const Key* hit = nullptr;
            Rational c;
            for (const auto& [k, x] : v.terms())
                if (rows_.count(k)) {
                    hit = &k;
                    c = x;
                    break;
                }
            if (!hit) return v;
            v -= c * rows_.at(*hit);
        }
    }

    /// True when v was independent of the rows so far.
    bool insert(const Combination<Key>& v) {
        Combination<Key> r = reduce(v);
        if (r.is_zero()) return false;
        const auto& [pivot, c] = *r.terms().begin();
        const Key key = pivot;
        r *= Rational(1) / c;
        rows_.emplace(key, std::move(r));
        return true;
    }

    bool contains(const Combination<Key>& v) const { return reduce(v).is_zero(); }
    std::size_t rank() const { return rows_.size(); }

private:
    std::map<Key, Combination<Key>> rows_;
};

template <class Key>
std::size_t rank_of(const std::vector<Combination<Key>>& vectors) {
    EchelonBasis<Key> basis;
    for (const auto& v : vectors) basis.insert(v);
    return basis.rank();
}

/// Arity shared by every term, or nothing for the zero combination.
/// Throws when the terms have different arities.
std::optional<int> homogeneous_arity(const LinComb& f);

/// Bilinear extension of clique composition.
LinComb lc_compose(const LinComb& f, int i, const LinComb& g);

/// True iff f o_1 f = f o_2 f. For finite magmas the coefficient conditions
/// on triangles are evaluated too and must agree.
bool is_associative_element(const LinComb& f);

/// Coefficient conditions characterizing associative binary elements.
bool associativity_conditions(const LinComb& f);

struct AxiomReport {
    std::size_t sequential_checked = 0;
    std::size_t parallel_checked = 0;
    std::size_t unit_checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Composition that may vanish (nullopt), as in a quotient.
using PartialCompose = std::function<std::optional<Clique>(const Clique&, int, const Clique&)>;

/// Both associativity shapes and the unit law for op over every triple of
/// the domain. A vanishing intermediate makes the whole side vanish.
AxiomReport check_axioms_on(const std::vector<Clique>& domain, const PartialCompose& op, int jobs = 1);

/// Exhaustive check of both associativity shapes and the unit law over all
/// cliques of arity <= max_arity.
AxiomReport check_operad_axioms(const MagmaPtr& magma, int max_arity, int jobs = 1);

/// Pairing of labels commutes with composition: phi(p (x) q) o_i
/// phi(p' (x) q') = phi((p o_i p') (x) (q o_i q')).
AxiomReport check_hadamard_iso(const MagmaPtr& m1, const MagmaPtr& m2, int max_arity);

struct SymmetryReport {
    std::size_t reflection_checked = 0;
    std::size_t rotation_checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Over all cliques of arity <= max_arity: ret(p o_i q) = ret(p) o_{n-i+1}
/// ret(q), and the rotation axioms rho(unit) = unit, rho^{n+1} = id,
/// rho(p o_1 q) = rho(q) o_m rho(p) and rho(p o_i q) = rho(p) o_{i-1} q.
SymmetryReport check_symmetries(const MagmaPtr& magma, int max_arity);

/// Two distinct arity-2 cliques x, x' and q, i with x o_i q = x' o_i q, if
/// any. None exists exactly when the magma is right cancellable.
struct BasicCollision {
    Clique x;
    Clique y;
    int i = 1;
    Clique q;
};
std::optional<BasicCollision> find_basic_collision(const MagmaPtr& magma);

/// The M1 x M2 clique carrying the labels of p and q side by side.
Clique hadamard_pair(const MagmaPtr& prod, const Clique& p, const Clique& q);

/// `<coeff> * <clique> + ...`; the zero combination prints as `0`. The parser
/// also accepts `-` between terms.
std::string to_string(const LinComb& f);
LinComb parse_lincomb(const MagmaPtr& magma, std::string_view text);

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace clq
