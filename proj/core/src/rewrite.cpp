#include "clq/rewrite.hpp"

#include <map>

namespace clq {

SyntaxTree SyntaxTree::node(Clique generator, std::vector<SyntaxTree> children) {
    if (static_cast<int>(children.size()) != generator.arity())
        throw Error("syntax tree: child count differs from generator arity");
    SyntaxTree t;
    t.gen_ = std::move(generator);
    t.children_ = std::move(children);
    return t;
}

SyntaxTree SyntaxTree::corolla(const Clique& generator) {
    return node(generator, std::vector<SyntaxTree>(static_cast<std::size_t>(generator.arity())));
}

int SyntaxTree::arity() const {
    if (is_leaf()) return 1;
    int n = 0;
    for (const auto& c : children_) n += c.arity();
    return n;
}

int SyntaxTree::internal_nodes() const {
    if (is_leaf()) return 0;
    int n = 1;
    for (const auto& c : children_) n += c.internal_nodes();
    return n;
}

bool SyntaxTree::operator==(const SyntaxTree& o) const { return (*this <=> o) == 0; }

std::strong_ordering SyntaxTree::operator<=>(const SyntaxTree& o) const {
    if (is_leaf() || o.is_leaf()) return o.is_leaf() <=> is_leaf();  // leaves first
    if (auto c = *gen_ <=> *o.gen_; c != 0) return c;
    for (std::size_t k = 0; k < children_.size() && k < o.children_.size(); ++k)
        if (auto c = children_[k] <=> o.children_[k]; c != 0) return c;
    return children_.size() <=> o.children_.size();
}

SyntaxTree graft(const SyntaxTree& s, int i, const SyntaxTree& t) {
    if (i < 1 || i > s.arity()) throw Error("graft: index out of range");
    if (s.is_leaf()) return t;
    std::vector<SyntaxTree> kids = s.children();
    for (auto& c : kids) {
        const int a = c.arity();
        if (i <= a) {
            c = graft(c, i, t);
            break;
        }
        i -= a;
    }
    return SyntaxTree::node(s.generator(), std::move(kids));
}

Clique eval(const SyntaxTree& t, const MagmaPtr& magma) {
    if (t.is_leaf()) return Clique::unit(magma);
    Clique r = t.generator();
    // Right to left, so the positions of the earlier inputs stay put.
    for (int k = static_cast<int>(t.children().size()); k >= 1; --k) {
        const SyntaxTree& c = t.child(k - 1);
        if (!c.is_leaf()) r = compose(r, k, eval(c, magma));
    }
    return r;
}

std::string to_string(const SyntaxTree& t) {
    if (t.is_leaf()) return "|";
    const Clique& g = t.generator();
    std::string s;
    if (g.arity() == 2) {
        const Magma& m = *g.magma();
        s = "<" + m.name(g.base()) + "," + m.name(g.edge(1)) + "," + m.name(g.edge(2)) + ">";
    } else {
        s = "<" + to_string(g) + ">";
    }
    s += "(";
    for (std::size_t k = 0; k < t.children().size(); ++k) {
        if (k) s += ", ";
        s += to_string(t.children()[k]);
    }
    return s + ")";
}

std::string to_string(const TreeLinComb& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& [t, c] : f.terms()) {
        if (!s.empty()) s += " + ";
        s += to_string(c) + " * " + to_string(t);
    }
    return s;
}

namespace {

SyntaxTree read_tree(const MagmaPtr& magma, TextReader& in) {
    if (in.try_consume("|")) return SyntaxTree::leaf();
    in.expect("<");
    const Elem b = magma->parse_element(in.read_label());
    in.expect(",");
    const Elem e1 = magma->parse_element(in.read_label());
    in.expect(",");
    const Elem e2 = magma->parse_element(in.read_label());
    in.expect(">");
    in.expect("(");
    SyntaxTree l = read_tree(magma, in);
    in.expect(",");
    SyntaxTree r = read_tree(magma, in);
    in.expect(")");
    return SyntaxTree::node(Clique::triangle(magma, b, e1, e2), {std::move(l), std::move(r)});
}

struct Tri {
    Elem b, e1, e2;
};

Tri tri(const SyntaxTree& t) {
    const Clique& g = t.generator();
    if (g.arity() != 2) throw Error("rewrite: generators must be triangles");
    return {g.base(), g.edge(1), g.edge(2)};
}

SyntaxTree mk(const MagmaPtr& m, Tri x, SyntaxTree l, SyntaxTree r) {
    return SyntaxTree::node(Clique::triangle(m, x.b, x.e1, x.e2), {std::move(l), std::move(r)});
}

enum class Rule { Absorb1, Reassociate, Absorb2 };

// Applies one rule at the root of t, if its guard holds.
std::optional<SyntaxTree> apply_at_root(const SyntaxTree& t, Rule rule) {
    if (t.is_leaf()) return std::nullopt;
    const MagmaPtr& m = t.generator().magma();
    const Tri p = tri(t);
    const SyntaxTree& a = t.child(0);
    const SyntaxTree& b = t.child(1);
    switch (rule) {
        case Rule::Absorb1: {
            if (a.is_leaf()) return std::nullopt;
            const Tri q = tri(a);
            if (q.b == kUnit) return std::nullopt;
            return mk(m, {p.b, m->op(p.e1, q.b), p.e2}, mk(m, {kUnit, q.e1, q.e2}, a.child(0), a.child(1)), b);
        }
        case Rule::Reassociate: {
            if (a.is_leaf()) return std::nullopt;
            const Tri q = tri(a);
            if (m->op(p.e1, q.b) != kUnit) return std::nullopt;
            return mk(m, {p.b, q.e1, kUnit}, a.child(0), mk(m, {kUnit, q.e2, p.e2}, a.child(1), b));
        }
        case Rule::Absorb2: {
            if (b.is_leaf()) return std::nullopt;
            const Tri q = tri(b);
            if (q.b == kUnit) return std::nullopt;
            return mk(m, {p.b, p.e1, m->op(p.e2, q.b)}, a, mk(m, {kUnit, q.e1, q.e2}, b.child(0), b.child(1)));
        }
    }
    return std::nullopt;
}

constexpr Rule kRuleOrder[] = {Rule::Reassociate, Rule::Absorb1, Rule::Absorb2};

void collect_successors(const SyntaxTree& t, std::vector<SyntaxTree>& out) {
    if (t.is_leaf()) return;
    for (Rule r : kRuleOrder)
        if (auto s = apply_at_root(t, r)) out.push_back(std::move(*s));
    for (int k = 0; k < 2; ++k) {
        std::vector<SyntaxTree> sub;
        collect_successors(t.child(k), sub);
        for (auto& s : sub) {
            std::vector<SyntaxTree> kids = t.children();
            kids[static_cast<std::size_t>(k)] = std::move(s);
            out.push_back(SyntaxTree::node(t.generator(), std::move(kids)));
        }
    }
}

std::vector<Elem> elements_of(const Magma& m) { return m.elements(); }

}  // namespace

SyntaxTree parse_tree(const MagmaPtr& magma, std::string_view text) {
    TextReader in(text);
    SyntaxTree t = read_tree(magma, in);
    if (!in.at_end()) in.fail("trailing input");
    return t;
}

SyntaxTree tree2(const Clique& p, int i, const Clique& q) { return graft(SyntaxTree::corolla(p), i, SyntaxTree::corolla(q)); }

std::vector<SyntaxTree> successors(const SyntaxTree& t) {
    std::vector<SyntaxTree> out;
    collect_successors(t, out);
    return out;
}

std::optional<SyntaxTree> rewrite_step(const SyntaxTree& t) {
    if (t.is_leaf()) return std::nullopt;
    for (Rule r : kRuleOrder)
        if (auto s = apply_at_root(t, r)) return s;
    for (int k = 0; k < 2; ++k)
        if (auto s = rewrite_step(t.child(k))) {
            std::vector<SyntaxTree> kids = t.children();
            kids[static_cast<std::size_t>(k)] = std::move(*s);
            return SyntaxTree::node(t.generator(), std::move(kids));
        }
    return std::nullopt;
}

SyntaxTree normalize(const SyntaxTree& t, bool check_measure) {
    SyntaxTree cur = t;
    auto phi = termination_measure(cur);
    while (auto next = rewrite_step(cur)) {
        if (check_measure) {
            const auto psi = termination_measure(*next);
            if (!(psi < phi)) throw std::logic_error("rewrite step did not decrease the measure: " + to_string(cur));
            phi = psi;
        }
        cur = std::move(*next);
    }
    return cur;
}

std::pair<int, int> termination_measure(const SyntaxTree& t) {
    if (t.is_leaf()) return {0, 0};
    const auto l = termination_measure(t.child(0));
    const auto r = termination_measure(t.child(1));
    return {l.first + r.first + t.child(0).internal_nodes(),
            l.second + r.second + (t.generator().base() != kUnit ? 1 : 0)};
}

namespace {

bool normal_below(const SyntaxTree& t, bool is_root) {
    if (t.is_leaf()) return true;
    if (!is_root && t.generator().base() != kUnit) return false;
    if (!t.child(0).is_leaf() && t.generator().edge(1) == kUnit) return false;
    return normal_below(t.child(0), false) && normal_below(t.child(1), false);
}

void binary_shapes(const MagmaPtr& m, int n, bool unit_base, bool normal, std::vector<SyntaxTree>& out) {
    if (n == 1) {
        out.push_back(SyntaxTree::leaf());
        return;
    }
    const auto elems = elements_of(*m);
    for (int k = 1; k < n; ++k) {
        std::vector<SyntaxTree> left, right;
        binary_shapes(m, k, normal, normal, left);
        binary_shapes(m, n - k, normal, normal, right);
        for (Elem b : elems) {
            if (unit_base && b != kUnit) continue;
            for (Elem e1 : elems) {
                if (normal && k > 1 && e1 == kUnit) continue;
                for (Elem e2 : elems)
                    for (const auto& l : left)
                        for (const auto& r : right) out.push_back(mk(m, {b, e1, e2}, l, r));
            }
        }
    }
}

}  // namespace

bool is_normal_form(const SyntaxTree& t) { return normal_below(t, true); }

std::vector<SyntaxTree> all_binary_trees(const MagmaPtr& magma, int n) {
    if (!magma->is_finite()) throw Error("tree enumeration needs a finite magma");
    std::vector<SyntaxTree> out;
    binary_shapes(magma, n, false, false, out);
    return out;
}

std::vector<SyntaxTree> arity3_trees(const MagmaPtr& magma) {
    std::vector<SyntaxTree> out;
    const auto elems = magma->elements();
    std::vector<Clique> tris;
    for (Elem b : elems)
        for (Elem e1 : elems)
            for (Elem e2 : elems) tris.push_back(Clique::triangle(magma, b, e1, e2));
    for (int i = 1; i <= 2; ++i)
        for (const auto& p : tris)
            for (const auto& q : tris) out.push_back(tree2(p, i, q));
    return out;
}

std::vector<SyntaxTree> normal_forms(const MagmaPtr& magma, int n) {
    if (!magma->is_finite()) throw Error("tree enumeration needs a finite magma");
    std::vector<SyntaxTree> out;
    binary_shapes(magma, n, false, true, out);
    return out;
}

BigInt count_normal_forms(const Magma& magma, int n) {
    if (n < 1) throw Error("count_normal_forms: arity must be positive");
    const BigInt m = static_cast<long long>(magma.size());
    // a[k]: normal forms with k leaves whose root base is the unit.
    std::vector<BigInt> a(static_cast<std::size_t>(n) + 1, 0);
    a[1] = 1;
    for (int k = 2; k <= n; ++k)
        for (int l = 1; l < k; ++l) a[k] += (l == 1 ? m : m - 1) * m * a[l] * a[k - l];
    return n == 1 ? BigInt(1) : m * a[n];
}

namespace {

const std::set<SyntaxTree>& reach(const SyntaxTree& t, std::map<SyntaxTree, std::set<SyntaxTree>>& memo) {
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    std::set<SyntaxTree> out;
    const auto next = successors(t);
    if (next.empty()) out.insert(t);
    for (const auto& s : next) {
        const auto& r = reach(s, memo);
        out.insert(r.begin(), r.end());
    }
    return memo.emplace(t, std::move(out)).first->second;
}

}  // namespace

std::set<SyntaxTree> reachable_normal_forms(const SyntaxTree& t) {
    std::map<SyntaxTree, std::set<SyntaxTree>> memo;
    return reach(t, memo);
}

std::vector<TreeLinComb> relation_space(const MagmaPtr& magma) {
    const auto el = magma->elements();
    const Magma& m = *magma;
    auto T = [&](Elem b, Elem e1, Elem e2) { return Clique::triangle(magma, b, e1, e2); };
    std::vector<TreeLinComb> out;
    auto rel = [&](const SyntaxTree& s, const SyntaxTree& t) {
        TreeLinComb f(s);
        f.add(t, -1);
        if (!f.is_zero()) out.push_back(std::move(f));
    };
    for (Elem p0 : el)
        for (Elem p1 : el)
            for (Elem p2 : el)
                for (Elem q0 : el)
                    for (Elem q1 : el)
                        for (Elem q2 : el) {
                            const Elem d1 = m.op(p1, q0);
                            const Elem d2 = m.op(p2, q0);
                            const SyntaxTree left1 = tree2(T(p0, p1, p2), 1, T(q0, q1, q2));
                            const SyntaxTree left2 = tree2(T(p0, p1, p2), 2, T(q0, q1, q2));
                            for (Elem r0 : el)
                                for (Elem r : el) {
                                    if (d1 != kUnit && m.op(r, r0) == d1)
                                        rel(left1, tree2(T(p0, r, p2), 1, T(r0, q1, q2)));
                                    if (d1 == kUnit && m.op(r, r0) == kUnit)
                                        rel(left1, tree2(T(p0, q1, r), 2, T(r0, q2, p2)));
                                    if (d2 != kUnit && m.op(r, r0) == d2)
                                        rel(left2, tree2(T(p0, p1, r), 2, T(r0, q1, q2)));
                                }
                        }
    return out;
}

std::vector<TreeLinComb> dual_relation_space(const MagmaPtr& magma) {
    const auto el = magma->elements();
    const Magma& m = *magma;
    auto T = [&](Elem b, Elem e1, Elem e2) { return Clique::triangle(magma, b, e1, e2); };
    std::vector<TreeLinComb> out;
    auto push = [&](TreeLinComb f) {
        if (!f.is_zero()) out.push_back(std::move(f));
    };
    for (Elem a0 : el)
        for (Elem a : el)
            for (Elem b1 : el)
                for (Elem b2 : el) {
                    // (p0, p2, q1, q2) = (a0, a, b1, b2) and (p0, p1, q1, q2) = (a0, a, b1, b2).
                    for (Elem delta : el) {
                        if (delta == kUnit) continue;
                        TreeLinComb f1, f3;
                        for (Elem x : el)
                            for (Elem q0 : el)
                                if (m.op(x, q0) == delta) {
                                    f1.add(tree2(T(a0, x, a), 1, T(q0, b1, b2)), 1);
                                    f3.add(tree2(T(a0, a, x), 2, T(q0, b1, b2)), 1);
                                }
                        push(std::move(f1));
                        push(std::move(f3));
                    }
                    TreeLinComb f2;
                    for (Elem p1 : el)
                        for (Elem q0 : el)
                            if (m.op(p1, q0) == kUnit) {
                                f2.add(tree2(T(a0, p1, a), 1, T(q0, b1, b2)), 1);
                                f2.add(tree2(T(a0, b1, p1), 2, T(q0, b2, a)), -1);
                            }
                    push(std::move(f2));
                }
    return out;
}

std::vector<TreeLinComb> rewrite_span(const MagmaPtr& magma) {
    std::vector<TreeLinComb> out;
    for (const auto& t : arity3_trees(magma))
        for (const auto& s : successors(t)) {
            TreeLinComb f(t);
            f.add(s, -1);
            if (!f.is_zero()) out.push_back(std::move(f));
        }
    return out;
}

std::size_t eval_kernel_dim(const std::vector<SyntaxTree>& trees, const MagmaPtr& magma) {
    std::set<SyntaxTree> distinct(trees.begin(), trees.end());
    std::set<Clique> images;
    for (const auto& t : distinct) images.insert(eval(t, magma));
    return distinct.size() - images.size();
}

namespace {

// (generator of the root, position, generator of the child) for a two-node tree.
struct TwoNode {
    Clique x;
    int i;
    Clique y;
};

TwoNode split_two_node(const SyntaxTree& t) {
    if (t.is_leaf() || t.internal_nodes() != 2) throw Error("pairing needs two-node trees");
    int i = 1;
    for (const auto& c : t.children()) {
        if (!c.is_leaf()) return {t.generator(), i, c.generator()};
        ++i;
    }
    throw Error("pairing needs two-node trees");
}

}  // namespace

Rational pairing(const SyntaxTree& s, const SyntaxTree& t) {
    const TwoNode a = split_two_node(s);
    const TwoNode b = split_two_node(t);
    if (a.i != b.i || a.x != b.x || a.y != b.y) return 0;
    return a.i == 1 ? 1 : -1;
}

Rational pairing(const TreeLinComb& f, const TreeLinComb& g) {
    Rational total = 0;
    for (const auto& [s, a] : f.terms())
        for (const auto& [t, b] : g.terms()) {
            const Rational p = pairing(s, t);
            if (p != 0) total += a * b * p;
        }
    return total;
}

}  // namespace clq
