#include "clq/bases.hpp"

namespace clq {

namespace {

bool erasable(const Clique& p, Arc a, BasisTag tag) {
    if (tag == BasisTag::H) return !p.is_diagonal(a);
    return p.is_diagonal(a);
}

// Calls f(p', h(p', p)) for every p' obtained by erasing some solid arcs
// selected by tag.
template <class F>
void for_each_erasure(const Clique& p, BasisTag tag, F&& f) {
    std::vector<Arc> arcs;
    for (const auto& la : p.arcs())
        if (erasable(p, la.arc, tag)) arcs.push_back(la.arc);
    if (arcs.size() > 24) throw Error("basis change: too many solid arcs");
    const std::size_t n = arcs.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Clique q = p;
        int h = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (std::size_t{1} << j)) {
                q = q.with(arcs[j], kUnit);
                ++h;
            }
        f(q, h);
    }
}

Rational sign(int h) { return h % 2 ? Rational(-1) : Rational(1); }

LinComb expand(const LinComb& f, BasisTag tag, bool signed_sum) {
    if (tag == BasisTag::Fundamental) return f;
    LinComb out;
    for (const auto& [p, c] : f.terms())
        for_each_erasure(p, tag, [&](const Clique& q, int h) { out.add(q, signed_sum ? c * sign(h) : c); });
    return out;
}

LinComb compose_pair(const Clique& p, int i, const Clique& q, BasisTag tag) {
    if (p.arity() == 1 || q.arity() == 1)
        return from_fundamental(lc_compose(to_fundamental(LinComb(p), tag), i, to_fundamental(LinComb(q), tag)), tag);
    LinComb out(compose(p, i, q));
    if (tag == BasisTag::H) {
        const bool pi = p.edge(i) != kUnit, q0 = q.base() != kUnit;
        if (pi) out.add(compose(erase_edge(p, i), i, q), 1);
        if (q0) out.add(compose(p, i, erase_base(q)), 1);
        if (pi && q0) out.add(compose(erase_edge(p, i), i, erase_base(q)), 1);
    } else if (p.magma()->op(p.edge(i), q.base()) != kUnit) {
        out.add(compose(erase_edge(p, i), i, erase_base(q)), 1);
    }
    return out;
}

}  // namespace

std::string to_string(BasisTag tag) {
    switch (tag) {
        case BasisTag::H: return "H";
        case BasisTag::K: return "K";
        default: return "F";
    }
}

Clique erase_base(const Clique& p) { return p.with({1, p.arity() + 1}, kUnit); }

Clique erase_edge(const Clique& p, int i) {
    if (i < 1 || i > p.arity()) throw Error("erase_edge: index out of range");
    return p.with({i, i + 1}, kUnit);
}

LinComb to_fundamental(const LinComb& f, BasisTag tag) { return expand(f, tag, tag == BasisTag::K); }

LinComb from_fundamental(const LinComb& f, BasisTag target) { return expand(f, target, target == BasisTag::H); }

LinComb compose_in_basis(const LinComb& f, int i, const LinComb& g, BasisTag tag) {
    if (tag == BasisTag::Fundamental) return lc_compose(f, i, g);
    LinComb out;
    for (const auto& [p, a] : f.terms()) {
        if (i < 1 || i > p.arity()) throw Error("compose_in_basis: index out of range");
        for (const auto& [q, b] : g.terms()) out += (a * b) * compose_pair(p, i, q, tag);
    }
    return out;
}

std::string to_string(const LinComb& f, BasisTag tag) {
    if (tag == BasisTag::Fundamental) return to_string(f);
    return to_string(tag) + ": " + to_string(f);
}

LinComb parse_tagged_lincomb(const MagmaPtr& magma, std::string_view text, BasisTag& tag) {
    TextReader in(text);
    tag = BasisTag::Fundamental;
    if (in.try_consume("H:"))
        tag = BasisTag::H;
    else if (in.try_consume("K:"))
        tag = BasisTag::K;
    return parse_lincomb(magma, text.substr(in.position()));
}

BasisCheckReport check_basis_roundtrips(const MagmaPtr& magma, int max_arity) {
    BasisCheckReport rep;
    for (int n = 1; n <= max_arity; ++n)
        for (const auto& p : all_cliques(magma, n))
            for (BasisTag tag : {BasisTag::H, BasisTag::K}) {
                ++rep.checked;
                const LinComb f(p);
                if (!(from_fundamental(to_fundamental(f, tag), tag) == f) ||
                    !(to_fundamental(from_fundamental(f, tag), tag) == f))
                    if (rep.counterexamples.size() < 20)
                        rep.counterexamples.push_back(to_string(tag) + " " + to_string(p));
            }
    return rep;
}

BasisCheckReport check_basis_square(const MagmaPtr& magma, int arity) {
    BasisCheckReport rep;
    const auto cliques = all_cliques(magma, arity);
    for (const auto& p : cliques)
        for (const auto& q : cliques)
            for (int i = 1; i <= arity; ++i)
                for (BasisTag tag : {BasisTag::H, BasisTag::K}) {
                    ++rep.checked;
                    const LinComb fp(p), fq(q);
                    const LinComb direct = compose_in_basis(fp, i, fq, tag);
                    const LinComb route =
                        from_fundamental(lc_compose(to_fundamental(fp, tag), i, to_fundamental(fq, tag)), tag);
                    if (!(direct == route) && rep.counterexamples.size() < 20)
                        rep.counterexamples.push_back(to_string(tag) + " " + to_string(p) + " o" + std::to_string(i) +
                                                      " " + to_string(q));
                }
    return rep;
}

}  // namespace clq

