#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "clq/magma.hpp"

namespace clq {

/// Arc (x, y) with 1 <= x < y <= n + 1.
struct Arc {
    int x = 0;
    int y = 0;
    auto operator<=>(const Arc&) const = default;
};

struct LabeledArc {
    Arc arc;
    Elem label = kUnit;
    auto operator<=>(const LabeledArc&) const = default;
};

/// An M-decorated clique. Only solid (non-unit) arcs are stored, sorted.
class Clique {
public:
    Clique() = default;
    Clique(MagmaPtr magma, int arity);
    Clique(MagmaPtr magma, int arity, std::vector<LabeledArc> arcs);

    static Clique unit(MagmaPtr magma) { return Clique(std::move(magma), 1); }
    /// Arity-2 clique with the given base and edge labels.
    static Clique triangle(MagmaPtr magma, Elem base, Elem e1, Elem e2);
    /// Bubble with the given base and border (edge labels 1..n).
    static Clique bubble(MagmaPtr magma, Elem base, const std::vector<Elem>& border);

    int arity() const { return arity_; }
    const MagmaPtr& magma() const { return magma_; }
    const std::vector<LabeledArc>& arcs() const { return arcs_; }

    Elem at(int x, int y) const;
    Elem base() const { return at(1, arity_ + 1); }
    Elem edge(int i) const { return at(i, i + 1); }
    bool is_edge(Arc a) const { return a.y == a.x + 1; }
    bool is_base(Arc a) const { return a.x == 1 && a.y == arity_ + 1; }
    bool is_diagonal(Arc a) const { return !is_edge(a) && !is_base(a); }

    Clique with(Arc a, Elem label) const;

    bool operator==(const Clique& o) const { return arity_ == o.arity_ && arcs_ == o.arcs_; }
    std::strong_ordering operator<=>(const Clique& o) const {
        if (auto c = arity_ <=> o.arity_; c != 0) return c;
        return arcs_ <=> o.arcs_;
    }
    std::size_t hash() const;

private:
    MagmaPtr magma_;
    int arity_ = 1;
    std::vector<LabeledArc> arcs_;
};

struct CliqueHash {
    std::size_t operator()(const Clique& c) const { return c.hash(); }
};

/// Number of arcs of a clique of arity n.
inline int arc_count(int n) { return n * (n + 1) / 2; }

/// Partial composition p o_i q: glues the base of q onto the i-th edge of p.
Clique compose(const Clique& p, int i, const Clique& q);

struct CliqueStats {
    int degree = 0;
    int crossing = 0;
    bool is_noncrossing = true;
    bool is_bubble = true;
    bool is_triangle = false;
    bool is_inclusion_free = true;
    bool is_acyclic = true;
    bool is_white = true;
    bool is_prime = true;
    std::vector<Elem> border;
    std::vector<std::vector<int>> skeleton;  // index 0 unused, vertices 1..n+1
};

CliqueStats statistics(const Clique& p);

inline bool crosses(Arc a, Arc b) {
    return (a.x < b.x && b.x < a.y && a.y < b.y) || (b.x < a.x && a.x < b.y && b.y < a.y);
}
/// (x, y) includes (x', y') when x <= x' < y' <= y and the arcs differ.
inline bool includes(Arc a, Arc b) { return a != b && a.x <= b.x && b.y <= a.y; }

/// One-step rotation: rho(p)(x, y) = p(x+1, y+1) if y <= n, else p(1, x+1).
Clique rotate(const Clique& p);
/// Reflection: ret(p)(x, y) = p(n - y + 2, n - x + 2).
Clique returned(const Clique& p);
/// Applies a verified magma morphism to every label.
Clique relabel(const Clique& p, const MagmaMorphism& theta);
/// Same, skipping the verification.
Clique relabel_unchecked(const Clique& p, const MagmaPtr& target, const std::function<Elem(Elem)>& f);

/// `clique <n> { x-y:label ; ... }`, arcs sorted.
std::string to_string(const Clique& p);
Clique parse_clique(const MagmaPtr& magma, std::string_view text);

/// Cursor-based reader shared by the text formats.
class TextReader {
public:
    explicit TextReader(std::string_view text) : text_(text) {}
    void skip_space();
    bool at_end();
    bool try_consume(std::string_view token);
    void expect(std::string_view token);
    int read_int();
    /// Reads a label: a balanced `{...}` or `(...)` group, or a run of
    /// characters up to whitespace or one of `;,]})>:[`.
    std::string read_label();
    char peek();
    std::size_t position() const { return pos_; }
    [[noreturn]] void fail(const std::string& what) const;

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Clique read_clique(const MagmaPtr& magma, TextReader& in);

/// All cliques of the given arity over a finite magma, in a fixed order.
std::vector<Clique> all_cliques(const MagmaPtr& magma, int arity);

}  // namespace clq
