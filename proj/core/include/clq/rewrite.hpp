#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clq/linops.hpp"

namespace clq {

/// Planar rooted tree whose internal nodes carry generator cliques; a node
/// has as many children as its generator has inputs.
class SyntaxTree {
public:
    static SyntaxTree leaf() { return SyntaxTree(); }
    static SyntaxTree node(Clique generator, std::vector<SyntaxTree> children);
    static SyntaxTree corolla(const Clique& generator);

    bool is_leaf() const { return !gen_.has_value(); }
    const Clique& generator() const { return *gen_; }
    const std::vector<SyntaxTree>& children() const { return children_; }
    const SyntaxTree& child(int k) const { return children_.at(static_cast<std::size_t>(k)); }

    int arity() const;
    int internal_nodes() const;

    bool operator==(const SyntaxTree& o) const;
    std::strong_ordering operator<=>(const SyntaxTree& o) const;

private:
    std::optional<Clique> gen_;
    std::vector<SyntaxTree> children_;
};

using TreeLinComb = Combination<SyntaxTree>;

/// Grafts t on the i-th leaf of s.
SyntaxTree graft(const SyntaxTree& s, int i, const SyntaxTree& t);

/// Complete composition of the node generators; a leaf is the unit clique.
Clique eval(const SyntaxTree& t, const MagmaPtr& magma);

/// `|` for a leaf; a triangle node is `<base,e1,e2>(left, right)`, any other
/// generator is written `<clique ...>(...)`.
std::string to_string(const SyntaxTree& t);
std::string to_string(const TreeLinComb& f);
/// Reads the format above; only triangle generators are accepted.
SyntaxTree parse_tree(const MagmaPtr& magma, std::string_view text);

/// Shorthand for the two-node trees p o_i q of binary generators.
SyntaxTree tree2(const Clique& p, int i, const Clique& q);

// The rewrite system below lives on trees of triangles.

/// Every tree reachable in one step, at any position and by any rule.
std::vector<SyntaxTree> successors(const SyntaxTree& t);
/// One leftmost-outermost step; at a o_1 redex the re-association rule is
/// tried before the absorption rule.
std::optional<SyntaxTree> rewrite_step(const SyntaxTree& t);
/// Rewrites to the normal form. With check_measure, throws std::logic_error
/// if a step fails to decrease the termination measure.
SyntaxTree normalize(const SyntaxTree& t, bool check_measure = false);

/// (sum over nodes of the internal-node count of the left subtree, number
/// of nodes with a non-unit base), compared lexicographically.
std::pair<int, int> termination_measure(const SyntaxTree& t);

/// Non-root bases are the unit and a node with an internal left child has a
/// solid first edge.
bool is_normal_form(const SyntaxTree& t);

/// All triangle trees with n leaves over a finite magma.
std::vector<SyntaxTree> all_binary_trees(const MagmaPtr& magma, int n);
/// The trees p o_1 q and p o_2 q for all triangles p, q.
std::vector<SyntaxTree> arity3_trees(const MagmaPtr& magma);

/// Normal forms with n leaves, built from the characterization.
std::vector<SyntaxTree> normal_forms(const MagmaPtr& magma, int n);
BigInt count_normal_forms(const Magma& magma, int n);

/// The normal forms of every maximal rewrite sequence from t.
std::set<SyntaxTree> reachable_normal_forms(const SyntaxTree& t);

/// Generating family of the relation space of the noncrossing operad.
std::vector<TreeLinComb> relation_space(const MagmaPtr& magma);
/// Generating family of the relation space of its Koszul dual.
std::vector<TreeLinComb> dual_relation_space(const MagmaPtr& magma);
/// Differences t - t' over the one-step rewrites of arity-3 trees.
std::vector<TreeLinComb> rewrite_span(const MagmaPtr& magma);
/// Dimension of the kernel of eval on the span of the given basis trees.
std::size_t eval_kernel_dim(const std::vector<SyntaxTree>& trees, const MagmaPtr& magma);

/// Signed pairing on two-node trees: 1 for equal o_1 trees, -1 for equal
/// o_2 trees, 0 otherwise.
Rational pairing(const SyntaxTree& s, const SyntaxTree& t);
Rational pairing(const TreeLinComb& f, const TreeLinComb& g);

}  // namespace clq
