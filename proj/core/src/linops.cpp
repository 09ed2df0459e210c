#include "clq/linops.hpp"

#include <cctype>

#include "clq/parallel.hpp"

namespace clq {

std::optional<int> homogeneous_arity(const LinComb& f) {
    std::optional<int> n;
    for (const auto& [p, c] : f.terms()) {
        if (n && *n != p.arity()) throw Error("linear combination is not homogeneous");
        n = p.arity();
    }
    return n;
}

LinComb lc_compose(const LinComb& f, int i, const LinComb& g) {
    const auto nf = homogeneous_arity(f);
    homogeneous_arity(g);
    LinComb out;
    if (!nf || g.is_zero()) return out;
    if (i < 1 || i > *nf) throw Error("lc_compose: index out of range");
    for (const auto& [p, a] : f.terms())
        for (const auto& [q, b] : g.terms()) out.add(compose(p, i, q), a * b);
    return out;
}

bool associativity_conditions(const LinComb& f) {
    if (f.is_zero()) return true;
    const MagmaPtr& mg = f.terms().begin()->first.magma();
    if (!mg->is_finite()) throw Error("associativity conditions need a finite magma");
    if (homogeneous_arity(f) != 2) throw Error("associativity conditions need a binary element");
    const auto m = static_cast<Elem>(mg->size());
    std::vector<Rational> lam(static_cast<std::size_t>(m * m * m));
    auto idx = [m](Elem b, Elem e1, Elem e2) { return static_cast<std::size_t>((b * m + e1) * m + e2); };
    for (const auto& [p, c] : f.terms()) lam[idx(p.base(), p.edge(1), p.edge(2))] = c;
    auto L = [&](Elem b, Elem e1, Elem e2) -> const Rational& { return lam[idx(b, e1, e2)]; };

    for (Elem a0 = 0; a0 < m; ++a0)
        for (Elem a = 0; a < m; ++a)
            for (Elem b1 = 0; b1 < m; ++b1)
                for (Elem b2 = 0; b2 < m; ++b2) {
                    // (1): p0 = a0, p2 = a, q1 = b1, q2 = b2; (3): p0 = a0, p1 = a.
                    for (Elem delta = 1; delta < m; ++delta) {
                        Rational s1 = 0, s3 = 0;
                        for (Elem x = 0; x < m; ++x)
                            for (Elem q0 = 0; q0 < m; ++q0)
                                if (mg->op(x, q0) == delta) {
                                    s1 += L(a0, x, a) * L(q0, b1, b2);
                                    s3 += L(a0, a, x) * L(q0, b1, b2);
                                }
                        if (s1 != 0 || s3 != 0) return false;
                    }
                    Rational s2 = 0;
                    for (Elem p1 = 0; p1 < m; ++p1)
                        for (Elem q0 = 0; q0 < m; ++q0)
                            if (mg->op(p1, q0) == kUnit)
                                s2 += L(a0, p1, a) * L(q0, b1, b2) - L(a0, b1, p1) * L(q0, b2, a);
                    if (s2 != 0) return false;
                }
    return true;
}

bool is_associative_element(const LinComb& f) {
    const auto n = homogeneous_arity(f);
    if (n && *n != 2) throw Error("is_associative_element: element must be binary");
    const bool direct = lc_compose(f, 1, f) == lc_compose(f, 2, f);
    if (!f.is_zero() && f.terms().begin()->first.magma()->is_finite() &&
        associativity_conditions(f) != direct)
        throw std::logic_error("associativity: coefficient conditions disagree with direct check");
    return direct;
}

namespace {

using Opt = std::optional<Clique>;

Opt then(const Opt& a, int i, const Opt& b, const PartialCompose& op) {
    if (!a || !b) return std::nullopt;
    return op(*a, i, *b);
}

}  // namespace

AxiomReport check_axioms_on(const std::vector<Clique>& domain, const PartialCompose& op, int jobs) {
    AxiomReport total;
    if (domain.empty()) return total;
    const Clique unit = Clique::unit(domain.front().magma());
    std::vector<AxiomReport> parts(domain.size());
    parallel_for(domain.size(), jobs, [&](std::size_t k) {
        AxiomReport& rep = parts[k];
        const Clique& p = domain[k];
        auto fail = [&](const std::string& what, const Clique& q, const Clique* r) {
            if (rep.violations.size() < 20)
                rep.violations.push_back(what + ": " + to_string(p) + " | " + to_string(q) +
                                         (r ? " | " + to_string(*r) : std::string()));
        };
        for (int i = 1; i <= p.arity(); ++i) {
            ++rep.unit_checked;
            if (op(p, i, unit) != Opt(p)) fail("right unit", unit, nullptr);
        }
        ++rep.unit_checked;
        if (op(unit, 1, p) != Opt(p)) fail("left unit", unit, nullptr);
        for (const Clique& q : domain) {
            std::vector<Opt> pq(p.arity() + 1);
            for (int i = 1; i <= p.arity(); ++i) pq[i] = op(p, i, q);
            for (const Clique& r : domain) {
                for (int j = 1; j <= q.arity(); ++j) {
                    const Opt qr = op(q, j, r);
                    for (int i = 1; i <= p.arity(); ++i) {
                        ++rep.sequential_checked;
                        if (then(pq[i], i + j - 1, Opt(r), op) != then(Opt(p), i, qr, op))
                            fail("sequential i=" + std::to_string(i) + " j=" + std::to_string(j), q, &r);
                    }
                }
                for (int i = 1; i <= p.arity(); ++i)
                    for (int j = i + 1; j <= p.arity(); ++j) {
                        ++rep.parallel_checked;
                        const Opt left = then(pq[i], j + q.arity() - 1, Opt(r), op);
                        const Opt right = then(op(p, j, r), i, Opt(q), op);
                        if (left != right)
                            fail("parallel i=" + std::to_string(i) + " j=" + std::to_string(j), q, &r);
                    }
            }
        }
    });
    for (auto& part : parts) {
        total.sequential_checked += part.sequential_checked;
        total.parallel_checked += part.parallel_checked;
        total.unit_checked += part.unit_checked;
        for (auto& v : part.violations) total.violations.push_back(std::move(v));
    }
    return total;
}

AxiomReport check_operad_axioms(const MagmaPtr& magma, int max_arity, int jobs) {
    if (!magma->is_finite()) throw Error("check_operad_axioms: finite magma required");
    std::vector<Clique> domain;
    for (int n = 1; n <= max_arity; ++n)
        for (auto& c : all_cliques(magma, n)) domain.push_back(std::move(c));
    return check_axioms_on(domain, [](const Clique& p, int i, const Clique& q) -> Opt { return compose(p, i, q); },
                           jobs);
}

SymmetryReport check_symmetries(const MagmaPtr& magma, int max_arity) {
    SymmetryReport rep;
    auto note = [&](const std::string& what, const Clique& p, int i, const Clique& q) {
        if (rep.violations.size() < 20)
            rep.violations.push_back(what + ": " + to_string(p) + " o" + std::to_string(i) + " " + to_string(q));
    };
    const Clique unit = Clique::unit(magma);
    if (!(rotate(unit) == unit)) rep.violations.push_back("rho(unit) != unit");
    std::vector<std::vector<Clique>> levels(static_cast<std::size_t>(max_arity) + 1);
    for (int n = 1; n <= max_arity; ++n) {
        levels[static_cast<std::size_t>(n)] = all_cliques(magma, n);
        for (const auto& p : levels[static_cast<std::size_t>(n)]) {
            Clique r = p;
            for (int k = 0; k <= n; ++k) r = rotate(r);
            ++rep.rotation_checked;
            if (!(r == p)) note("rho^(n+1) != id", p, 1, unit);
        }
    }
    for (int n = 1; n <= max_arity; ++n)
        for (int m = 1; m <= max_arity; ++m)
            for (const auto& p : levels[static_cast<std::size_t>(n)])
                for (const auto& q : levels[static_cast<std::size_t>(m)])
                    for (int i = 1; i <= n; ++i) {
                        const Clique c = compose(p, i, q);
                        ++rep.reflection_checked;
                        if (!(returned(c) == compose(returned(p), n - i + 1, returned(q)))) note("ret", p, i, q);
                        ++rep.rotation_checked;
                        const Clique rhs = i == 1 ? compose(rotate(q), m, rotate(p)) : compose(rotate(p), i - 1, q);
                        if (!(rotate(c) == rhs)) note("rho", p, i, q);
                    }
    return rep;
}

std::optional<BasicCollision> find_basic_collision(const MagmaPtr& magma) {
    const auto triangles = all_cliques(magma, 2);
    for (const auto& q : triangles)
        for (int i = 1; i <= 2; ++i) {
            std::map<Clique, Clique> seen;
            for (const auto& x : triangles) {
                auto [it, fresh] = seen.try_emplace(compose(x, i, q), x);
                if (!fresh) return BasicCollision{it->second, x, i, q};
            }
        }
    return std::nullopt;
}

Clique hadamard_pair(const MagmaPtr& prod, const Clique& p, const Clique& q) {
    if (p.arity() != q.arity()) throw Error("hadamard_pair: arity mismatch");
    const Magma& m2 = *q.magma();
    std::vector<LabeledArc> arcs;
    for (const auto& l : p.arcs()) arcs.push_back({l.arc, pair_elem(m2, l.label, q.at(l.arc.x, l.arc.y))});
    for (const auto& l : q.arcs())
        if (p.at(l.arc.x, l.arc.y) == kUnit) arcs.push_back({l.arc, pair_elem(m2, kUnit, l.label)});
    return Clique(prod, p.arity(), std::move(arcs));
}

AxiomReport check_hadamard_iso(const MagmaPtr& m1, const MagmaPtr& m2, int max_arity) {
    const MagmaPtr prod = product(m1, m2);
    AxiomReport rep;
    std::vector<std::pair<Clique, Clique>> pairs;
    for (int n = 1; n <= max_arity; ++n)
        for (const auto& p : all_cliques(m1, n))
            for (const auto& q : all_cliques(m2, n)) pairs.emplace_back(p, q);
    for (const auto& [p, q] : pairs) {
        const Clique left = hadamard_pair(prod, p, q);
        for (const auto& [p2, q2] : pairs) {
            const Clique right = hadamard_pair(prod, p2, q2);
            for (int i = 1; i <= p.arity(); ++i) {
                ++rep.sequential_checked;
                if (compose(left, i, right) != hadamard_pair(prod, compose(p, i, p2), compose(q, i, q2)) &&
                    rep.violations.size() < 20)
                    rep.violations.push_back(to_string(left) + " o" + std::to_string(i) + " " + to_string(right));
            }
        }
    }
    return rep;
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        if (s.empty() || s == "-") throw Error("bad rational");
        for (std::size_t k = (s.front() == '-' ? 1 : 0); k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw Error("bad rational '" + std::string(s) + "'");
        return BigInt(std::string(s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error("rational with zero denominator");
    return Rational(parse_int(text.substr(0, slash)), den);
}

std::string to_string(const LinComb& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& [p, c] : f.terms()) {
        if (!s.empty()) s += " + ";
        s += to_string(c) + " * " + to_string(p);
    }
    return s;
}

LinComb parse_lincomb(const MagmaPtr& magma, std::string_view text) {
    TextReader in(text);
    LinComb out;
    if (in.try_consume("0") && in.at_end()) return out;
    in = TextReader(text);
    bool negate = in.try_consume("-");
    for (;;) {
        Rational c = parse_rational(in.read_label());
        in.expect("*");
        Clique p = read_clique(magma, in);
        out.add(p, negate ? Rational(-c) : c);
        if (in.try_consume("-"))
            negate = true;
        else if (in.try_consume("+"))
            negate = false;
        else
            break;
    }
    if (!in.at_end()) in.fail("trailing input");
    homogeneous_arity(out);
    return out;
}

}  // namespace clq
