#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "clq/families.hpp"

namespace clq {

/// Planar tree with at least two children per internal node. Every child
/// slot carries the label of the edge going down to that child; the root
/// edge label is stored separately.
struct SchroderNode {
    struct Slot {
        Elem label = kUnit;
        std::vector<SchroderNode> sub;  // empty: leaf, otherwise exactly one node
        bool operator==(const Slot&) const = default;
    };
    std::vector<Slot> slots;

    int arity() const;
    bool operator==(const SchroderNode&) const = default;
};

class SchroderTree {
public:
    /// The lone leaf (arity 1).
    explicit SchroderTree(MagmaPtr magma) : magma_(std::move(magma)) {}
    /// Throws when the node is malformed or an internal edge is labeled by
    /// the unit.
    SchroderTree(MagmaPtr magma, Elem root, SchroderNode body);

    bool is_leaf() const { return !body_.has_value(); }
    Elem root_label() const { return root_; }
    const SchroderNode& body() const { return *body_; }
    const MagmaPtr& magma() const { return magma_; }
    int arity() const { return is_leaf() ? 1 : body_->arity(); }
    int internal_nodes() const;

    bool operator==(const SchroderTree& o) const { return root_ == o.root_ && body_ == o.body_; }

private:
    MagmaPtr magma_;
    Elem root_ = kUnit;
    std::optional<SchroderNode> body_;
};

/// Region of a noncrossing clique adjacent to its base, as the list of its
/// boundary arcs from vertex 1 to vertex n + 1.
std::vector<Arc> base_area(const Clique& p);

/// Decomposition into maximal bubbles. Throws on a crossing clique.
SchroderTree bubble_tree(const Clique& p);
/// Evaluates a tree of bubbles back into a clique.
Clique from_bubble_tree(const SchroderTree& t);

/// Grafts the root of t on the i-th leaf of s. The new edge is labeled by
/// the product of the two labels it joins, and contracted when that product
/// is the unit.
SchroderTree schroder_compose(const SchroderTree& s, int i, const SchroderTree& t);
/// Grafting without contraction; the result may carry a unit internal edge
/// and is then returned as a bare node.
SchroderNode plain_graft(const SchroderTree& s, int i, const SchroderTree& t);

/// `leaf`, or `(<root>: <child>[<label>], ...)` where a child is `leaf` or a
/// nested node written the same way with the unit as its root.
std::string to_string(const SchroderTree& t);
SchroderTree parse_schroder(const MagmaPtr& magma, std::string_view text);

struct TreeCheckReport {
    std::size_t checked = 0;
    std::vector<std::string> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};

/// from_bubble_tree(bubble_tree(p)) = p and the text format round-trips, on
/// every noncrossing clique of arity <= max_arity.
TreeCheckReport check_bubble_roundtrips(const MagmaPtr& magma, int max_arity);
/// schroder_compose(bt(p), i, bt(q)) = bt(p o_i q) on all noncrossing p, q
/// of arity <= max_arity.
TreeCheckReport check_schroder_square(const MagmaPtr& magma, int max_arity);

/// Triangles p, q and i such that plain grafting of the bubble trees differs
/// from the bubble tree of p o_i q.
struct NonMorphismWitness {
    Clique p;
    int i = 1;
    Clique q;
    SchroderNode grafted;
    SchroderTree composed;
};
std::optional<NonMorphismWitness> find_bubble_tree_non_morphism(const MagmaPtr& magma);

/// (p o_2 r) o_1 q: the product of q and r in the free algebra on one generator.
Clique free_algebra_product(const Clique& p, const Clique& q, const Clique& r);

/// Noncommutative polynomials: words of letters with rational coefficients.
using Word = std::vector<Elem>;
using NCPoly = Combination<Word>;

NCPoly word(Word w);
NCPoly operator*(const NCPoly& a, const NCPoly& b);
std::string to_string(const NCPoly& f);

/// A family of linear maps omega_x indexed by the magma, acting on an
/// associative algebra.
template <class A>
using OmegaFamily = std::function<A(Elem, const A&)>;

namespace detail {

template <class A, class Prod>
A act(const SchroderNode& node, Elem root, const std::vector<A>& args, std::size_t& next,
      const OmegaFamily<A>& omega, const Prod& prod) {
    A acc{};
    bool first = true;
    for (const auto& slot : node.slots) {
        A value = slot.sub.empty() ? args.at(next++) : act(slot.sub.front(), kUnit, args, next, omega, prod);
        value = omega(slot.label, value);
        acc = first ? std::move(value) : prod(acc, value);
        first = false;
    }
    return omega(root, acc);
}

}  // namespace detail

/// Action of a noncrossing clique on args: a bubble acts by
/// omega_{b0}(prod_i omega_{bi}(a_i)), recursively along the bubble tree.
template <class A, class Prod>
A algebra_eval(const Clique& p, const std::vector<A>& args, const OmegaFamily<A>& omega, const Prod& prod) {
    if (static_cast<int>(args.size()) != p.arity()) throw Error("algebra_eval: wrong number of arguments");
    const SchroderTree t = bubble_tree(p);
    if (t.is_leaf()) return args.front();
    std::size_t next = 0;
    return detail::act(t.body(), t.root_label(), args, next, omega, prod);
}

/// omega_x(w) = (x * w_1) ... (x * w_k), letters being magma elements.
OmegaFamily<NCPoly> monoid_word_omega(const MagmaPtr& magma);
/// Over D0: omega_unit = id and omega_0 keeps the constant term.
OmegaFamily<NCPoly> constant_term_omega(const MagmaPtr& d0);
/// Over S_l: omega_S keeps the words containing every letter of S (letters
/// are 1..l).
OmegaFamily<NCPoly> subset_filter_omega(const MagmaPtr& s);

/// omega_unit = id and omega_x o omega_y = omega_{x * y} on the samples.
bool is_compatible(const Magma& m, const OmegaFamily<NCPoly>& omega, const std::vector<NCPoly>& samples);

NCPoly algebra_eval(const Clique& p, const std::vector<NCPoly>& args, const OmegaFamily<NCPoly>& omega);

/// Labels of dual cliques over M x M: base and edges (a, a), solid
/// diagonals (a, b) with a != b.
CliqueFilter dual_clique_filter(const Magma& m, bool noncrossing);

}  // namespace clq
