#include "clq/ncm.hpp"

namespace clq {

int SchroderNode::arity() const {
    int n = 0;
    for (const auto& s : slots) n += s.sub.empty() ? 1 : s.sub.front().arity();
    return n;
}

namespace {

void check_node(const Magma& m, const SchroderNode& node) {
    if (node.slots.size() < 2) throw Error("schroder tree: internal node with fewer than two children");
    for (const auto& s : node.slots) {
        if (!m.contains(s.label)) throw Error("schroder tree: label outside the magma");
        if (s.sub.size() > 1) throw Error("schroder tree: slot with several subtrees");
        if (!s.sub.empty()) {
            if (s.label == kUnit) throw Error("schroder tree: internal edge labeled by the unit");
            check_node(m, s.sub.front());
        }
    }
}

int count_nodes(const SchroderNode& node) {
    int n = 1;
    for (const auto& s : node.slots)
        if (!s.sub.empty()) n += count_nodes(s.sub.front());
    return n;
}

// Boundary of the region under the arc (lo, hi), which is not followed itself.
std::vector<Arc> area_under(const Clique& p, int lo, int hi) {
    std::vector<Arc> out;
    int v = lo;
    while (v < hi) {
        int w = v + 1;
        for (int u = hi; u > v + 1; --u)
            if (!(v == lo && u == hi) && p.at(v, u) != kUnit) {
                w = u;
                break;
            }
        out.push_back({v, w});
        v = w;
    }
    return out;
}

SchroderNode build(const Clique& p, int lo, int hi) {
    SchroderNode node;
    for (const Arc a : area_under(p, lo, hi)) {
        SchroderNode::Slot slot;
        slot.label = p.at(a.x, a.y);
        if (a.y > a.x + 1) slot.sub.push_back(build(p, a.x, a.y));
        node.slots.push_back(std::move(slot));
    }
    return node;
}

Clique evaluate(const MagmaPtr& m, const SchroderNode& node, Elem root) {
    std::vector<Elem> border;
    for (const auto& s : node.slots) border.push_back(s.label);
    Clique r = Clique::bubble(m, root, border);
    for (int j = static_cast<int>(node.slots.size()); j >= 1; --j) {
        const auto& slot = node.slots[static_cast<std::size_t>(j - 1)];
        if (!slot.sub.empty()) r = compose(r, j, evaluate(m, slot.sub.front(), kUnit));
    }
    return r;
}

// Locates the i-th leaf below node; on success calls f(parent, slot index).
template <class F>
bool at_leaf(SchroderNode& node, int& i, F&& f) {
    for (std::size_t k = 0; k < node.slots.size(); ++k) {
        auto& slot = node.slots[k];
        if (slot.sub.empty()) {
            if (--i == 0) {
                f(node, k);
                return true;
            }
        } else if (at_leaf(slot.sub.front(), i, f)) {
            return true;
        }
    }
    return false;
}

void print(const Magma& m, const SchroderNode& node, Elem root, std::string& out) {
    out += "(" + m.name(root) + ":";
    for (std::size_t k = 0; k < node.slots.size(); ++k) {
        out += k ? ", " : " ";
        const auto& s = node.slots[k];
        if (s.sub.empty())
            out += "leaf";
        else
            print(m, s.sub.front(), kUnit, out);
        out += "[" + m.name(s.label) + "]";
    }
    out += ")";
}

SchroderNode read_node(const Magma& m, TextReader& in, Elem& root) {
    in.expect("(");
    root = m.parse_element(in.read_label());
    in.expect(":");
    SchroderNode node;
    do {
        SchroderNode::Slot slot;
        if (!in.try_consume("leaf")) {
            Elem inner = kUnit;
            slot.sub.push_back(read_node(m, in, inner));
            if (inner != kUnit) in.fail("nested node with a non-unit root label");
        }
        in.expect("[");
        slot.label = m.parse_element(in.read_label());
        in.expect("]");
        node.slots.push_back(std::move(slot));
    } while (in.try_consume(","));
    in.expect(")");
    return node;
}

}  // namespace

SchroderTree::SchroderTree(MagmaPtr magma, Elem root, SchroderNode body) : magma_(std::move(magma)), root_(root) {
    if (!magma_->contains(root)) throw Error("schroder tree: root label outside the magma");
    check_node(*magma_, body);
    body_ = std::move(body);
}

int SchroderTree::internal_nodes() const { return is_leaf() ? 0 : count_nodes(*body_); }

std::vector<Arc> base_area(const Clique& p) { return area_under(p, 1, p.arity() + 1); }

SchroderTree bubble_tree(const Clique& p) {
    if (!statistics(p).is_noncrossing) throw Error("bubble_tree: clique is crossing");
    if (p.arity() == 1) return SchroderTree(p.magma());
    return SchroderTree(p.magma(), p.base(), build(p, 1, p.arity() + 1));
}

Clique from_bubble_tree(const SchroderTree& t) {
    if (t.is_leaf()) return Clique::unit(t.magma());
    return evaluate(t.magma(), t.body(), t.root_label());
}

SchroderTree schroder_compose(const SchroderTree& s, int i, const SchroderTree& t) {
    if (i < 1 || i > s.arity()) throw Error("schroder_compose: index out of range");
    if (s.is_leaf()) return t;
    if (t.is_leaf()) return s;
    const Magma& m = *s.magma();
    SchroderNode body = s.body();
    at_leaf(body, i, [&](SchroderNode& parent, std::size_t k) {
        const Elem c = m.op(parent.slots[k].label, t.root_label());
        if (c != kUnit) {
            parent.slots[k].label = c;
            parent.slots[k].sub.push_back(t.body());
        } else {
            const auto& ins = t.body().slots;
            auto pos = parent.slots.erase(parent.slots.begin() + static_cast<std::ptrdiff_t>(k));
            parent.slots.insert(pos, ins.begin(), ins.end());
        }
    });
    return SchroderTree(s.magma(), s.root_label(), std::move(body));
}

SchroderNode plain_graft(const SchroderTree& s, int i, const SchroderTree& t) {
    if (s.is_leaf() || t.is_leaf()) throw Error("plain_graft: both trees must have a node");
    if (i < 1 || i > s.arity()) throw Error("plain_graft: index out of range");
    SchroderNode body = s.body();
    at_leaf(body, i, [&](SchroderNode& parent, std::size_t k) {
        parent.slots[k].label = s.magma()->op(parent.slots[k].label, t.root_label());
        parent.slots[k].sub.push_back(t.body());
    });
    return body;
}

std::string to_string(const SchroderTree& t) {
    if (t.is_leaf()) return "leaf";
    std::string out;
    print(*t.magma(), t.body(), t.root_label(), out);
    return out;
}

SchroderTree parse_schroder(const MagmaPtr& magma, std::string_view text) {
    TextReader in(text);
    if (in.try_consume("leaf")) {
        if (!in.at_end()) in.fail("trailing input");
        return SchroderTree(magma);
    }
    Elem root = kUnit;
    SchroderNode body = read_node(*magma, in, root);
    if (!in.at_end()) in.fail("trailing input");
    return SchroderTree(magma, root, std::move(body));
}

Clique free_algebra_product(const Clique& p, const Clique& q, const Clique& r) {
    if (p.arity() != 2) throw Error("free_algebra_product: p must be a triangle");
    return compose(compose(p, 2, r), 1, q);
}

NCPoly word(Word w) { return NCPoly(std::move(w)); }

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [u, x] : a.terms())
        for (const auto& [v, y] : b.terms()) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            r.add(w, x * y);
        }
    return r;
}

std::string to_string(const NCPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& [w, c] : f.terms()) {
        if (!s.empty()) s += " + ";
        s += to_string(c) + "*[";
        for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
        s += "]";
    }
    return s;
}

OmegaFamily<NCPoly> monoid_word_omega(const MagmaPtr& magma) {
    return [magma](Elem x, const NCPoly& f) {
        if (x == kUnit) return f;
        NCPoly r;
        for (const auto& [w, c] : f.terms()) {
            Word v;
            for (Elem a : w) v.push_back(magma->op(x, a));
            r.add(v, c);
        }
        return r;
    };
}

OmegaFamily<NCPoly> constant_term_omega(const MagmaPtr& d0) {
    if (!d0->is_finite() || d0->size() != 2) throw Error("constant_term_omega: expects D0");
    return [](Elem x, const NCPoly& f) {
        if (x == kUnit) return f;
        NCPoly r;
        r.add(Word{}, f.coeff(Word{}));
        return r;
    };
}

OmegaFamily<NCPoly> subset_filter_omega(const MagmaPtr& s) {
    return [s](Elem x, const NCPoly& f) {
        NCPoly r;
        for (const auto& [w, c] : f.terms()) {
            Elem seen = 0;
            for (Elem a : w)
                if (a >= 1 && a < 63) seen |= Elem(1) << (a - 1);
            if ((seen & x) == x) r.add(w, c);
        }
        return r;
    };
}

bool is_compatible(const Magma& m, const OmegaFamily<NCPoly>& omega, const std::vector<NCPoly>& samples) {
    const auto el = m.elements();
    for (const auto& f : samples) {
        if (!(omega(kUnit, f) == f)) return false;
        for (Elem x : el)
            for (Elem y : el)
                if (!(omega(x, omega(y, f)) == omega(m.op(x, y), f))) return false;
    }
    return true;
}

NCPoly algebra_eval(const Clique& p, const std::vector<NCPoly>& args, const OmegaFamily<NCPoly>& omega) {
    return algebra_eval(p, args, omega, [](const NCPoly& a, const NCPoly& b) { return a * b; });
}

CliqueFilter dual_clique_filter(const Magma& m, bool noncrossing) {
    CliqueFilter f;
    const auto el = m.elements();
    for (Elem a : el) {
        f.base.push_back(pair_elem(m, a, a));
        for (Elem b : el)
            if (a != b) f.diagonal.push_back(pair_elem(m, a, b));
    }
    f.edge = f.base;
    f.diagonal.push_back(kUnit);
    if (noncrossing) f.max_crossing = 0;
    return f;
}

namespace {

std::vector<Clique> noncrossing_cliques(const MagmaPtr& magma, int n) {
    std::vector<Clique> out;
    for (auto& p : all_cliques(magma, n))
        if (statistics(p).is_noncrossing) out.push_back(std::move(p));
    return out;
}

}  // namespace

TreeCheckReport check_bubble_roundtrips(const MagmaPtr& magma, int max_arity) {
    TreeCheckReport rep;
    for (int n = 1; n <= max_arity; ++n)
        for (const auto& p : noncrossing_cliques(magma, n)) {
            ++rep.checked;
            const SchroderTree t = bubble_tree(p);
            if (!(from_bubble_tree(t) == p) || !(parse_schroder(magma, to_string(t)) == t))
                if (rep.counterexamples.size() < 20) rep.counterexamples.push_back(to_string(p));
        }
    return rep;
}

TreeCheckReport check_schroder_square(const MagmaPtr& magma, int max_arity) {
    TreeCheckReport rep;
    std::vector<std::pair<Clique, SchroderTree>> items;
    for (int n = 1; n <= max_arity; ++n)
        for (const auto& p : noncrossing_cliques(magma, n)) items.emplace_back(p, bubble_tree(p));
    for (const auto& [p, tp] : items)
        for (const auto& [q, tq] : items)
            for (int i = 1; i <= p.arity(); ++i) {
                ++rep.checked;
                if (!(schroder_compose(tp, i, tq) == bubble_tree(compose(p, i, q))) && rep.counterexamples.size() < 20)
                    rep.counterexamples.push_back(to_string(p) + " o" + std::to_string(i) + " " + to_string(q));
            }
    return rep;
}

std::optional<NonMorphismWitness> find_bubble_tree_non_morphism(const MagmaPtr& magma) {
    const auto triangles = all_cliques(magma, 2);
    for (const auto& p : triangles)
        for (const auto& q : triangles)
            for (int i = 1; i <= 2; ++i) {
                const SchroderTree composed = bubble_tree(compose(p, i, q));
                SchroderNode grafted = plain_graft(bubble_tree(p), i, bubble_tree(q));
                if (!(grafted == composed.body())) return NonMorphismWitness{p, i, q, std::move(grafted), composed};
            }
    return std::nullopt;
}

}  // namespace clq

