#pragma once

// Explicit relation families of the noncrossing clique operads over N2 and
// D0, one instance per choice of a, b1, b2, b3.

#include <vector>

#include "clq/rewrite.hpp"

namespace relation_lists {

using clq::Clique;
using clq::Elem;
using clq::MagmaPtr;
using clq::TreeLinComb;

inline clq::SyntaxTree t2(const MagmaPtr& m, Elem p0, Elem p1, Elem p2, int i, Elem q0, Elem q1, Elem q2) {
    return clq::tree2(Clique::triangle(m, p0, p1, p2), i, Clique::triangle(m, q0, q1, q2));
}

inline TreeLinComb diff(const clq::SyntaxTree& s, const clq::SyntaxTree& t) {
    return TreeLinComb(s) - TreeLinComb(t);
}

/// Relations of the operad itself. s is the non-unit element of the magma
/// (1 in N2, 0 in D0), u its unit.
inline std::vector<TreeLinComb> relations(const MagmaPtr& m, bool d0_shape) {
    const Elem u = clq::kUnit, s = m->non_unit().front();
    std::vector<TreeLinComb> out;
    for (Elem a : m->elements())
        for (Elem b1 : m->elements())
            for (Elem b2 : m->elements())
                for (Elem b3 : m->elements()) {
                    if (!d0_shape) {
                        out.push_back(diff(t2(m, a, u, b3, 1, s, b1, b2), t2(m, a, s, b3, 1, u, b1, b2)));
                        const auto x = t2(m, a, s, b3, 1, s, b1, b2);
                        out.push_back(diff(x, t2(m, a, u, b3, 1, u, b1, b2)));
                        out.push_back(diff(x, t2(m, a, b1, u, 2, u, b2, b3)));
                        out.push_back(diff(x, t2(m, a, b1, s, 2, s, b2, b3)));
                        out.push_back(diff(t2(m, a, b1, u, 2, s, b2, b3), t2(m, a, b1, s, 2, u, b2, b3)));
                    } else {
                        const auto x = t2(m, a, u, b3, 1, s, b1, b2);
                        out.push_back(diff(x, t2(m, a, s, b3, 1, s, b1, b2)));
                        out.push_back(diff(x, t2(m, a, s, b3, 1, u, b1, b2)));
                        out.push_back(diff(t2(m, a, u, b3, 1, u, b1, b2), t2(m, a, b1, u, 2, u, b2, b3)));
                        const auto y = t2(m, a, b1, u, 2, s, b2, b3);
                        out.push_back(diff(y, t2(m, a, b1, s, 2, s, b2, b3)));
                        out.push_back(diff(y, t2(m, a, b1, s, 2, u, b2, b3)));
                    }
                }
    return out;
}

/// Relations of the Koszul dual, same conventions.
inline std::vector<TreeLinComb> dual_relations(const MagmaPtr& m, bool d0_shape) {
    const Elem u = clq::kUnit, s = m->non_unit().front();
    std::vector<TreeLinComb> out;
    for (Elem a : m->elements())
        for (Elem b1 : m->elements())
            for (Elem b2 : m->elements())
                for (Elem b3 : m->elements()) {
                    if (!d0_shape) {
                        out.push_back(TreeLinComb(t2(m, a, u, b3, 1, s, b1, b2)) + TreeLinComb(t2(m, a, s, b3, 1, u, b1, b2)));
                        out.push_back(TreeLinComb(t2(m, a, s, b3, 1, s, b1, b2)) + TreeLinComb(t2(m, a, u, b3, 1, u, b1, b2)) -
                                      TreeLinComb(t2(m, a, b1, u, 2, u, b2, b3)) - TreeLinComb(t2(m, a, b1, s, 2, s, b2, b3)));
                        out.push_back(TreeLinComb(t2(m, a, b1, u, 2, s, b2, b3)) + TreeLinComb(t2(m, a, b1, s, 2, u, b2, b3)));
                    } else {
                        out.push_back(TreeLinComb(t2(m, a, u, b3, 1, s, b1, b2)) + TreeLinComb(t2(m, a, s, b3, 1, s, b1, b2)) +
                                      TreeLinComb(t2(m, a, s, b3, 1, u, b1, b2)));
                        out.push_back(diff(t2(m, a, u, b3, 1, u, b1, b2), t2(m, a, b1, u, 2, u, b2, b3)));
                        out.push_back(TreeLinComb(t2(m, a, b1, u, 2, s, b2, b3)) + TreeLinComb(t2(m, a, b1, s, 2, s, b2, b3)) +
                                      TreeLinComb(t2(m, a, b1, s, 2, u, b2, b3)));
                    }
                }
    return out;
}

/// Linear extension of eval.
inline clq::LinComb evaluate(const TreeLinComb& f, const MagmaPtr& m) {
    clq::LinComb out;
    for (const auto& [t, c] : f.terms()) out.add(clq::eval(t, m), c);
    return out;
}

}  // namespace relation_lists
