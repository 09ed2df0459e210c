// Runs the acceptance criteria and prints one pass/fail line for each.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "clq/bases.hpp"
#include "clq/families.hpp"
#include "clq/knownops.hpp"
#include "clq/ncm.hpp"
#include "clq/ratfct.hpp"
#include "clq/rewrite.hpp"
#include "clq/series.hpp"
#include "relation_lists.hpp"

using namespace clq;

namespace {

struct Criterion {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

std::string join(const std::vector<BigInt>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x.str();
    return s;
}

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Compares the enumerated dimensions from arity `from` on with `want`.
void expect_dims(Criterion& c, const std::string& family, const std::string& magma, int from,
                 const std::vector<BigInt>& want) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto d = enumerate_dims(make_family(family, parse_magma_spec(magma)), from + static_cast<int>(want.size()) - 1);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::vector<BigInt> got(d.begin() + from - 1, d.end());
    c.expect(got == want, family + " over " + magma + ": " + join(got) + ", expected " + join(want));
    c.expect(secs < 60, family + " over " + magma + " took " + std::to_string(secs) + " s");
}

Criterion dimension_tables() {
    Criterion c;
    expect_dims(c, "Cli", "N2", 2, ints({8, 64, 1024, 32768}));
    expect_dims(c, "NC", "N2", 2, ints({8, 48, 352, 2880}));
    expect_dims(c, "NC", "N3", 2, ints({27, 405, 7533}));
    expect_dims(c, "Inf", "D0", 2, ints({5, 14, 42, 132}));
    expect_dims(c, "Inf", "D1", 2, ints({11, 45, 197, 903}));
    expect_dims(c, "Deg1", "D0", 2, ints({4, 10, 26, 76, 232}));
    expect_dims(c, "Deg1", "D1", 2, ints({7, 25, 81, 331}));
    expect_dims(c, "Deg2", "D0", 2, ints({8, 41, 253}));
    expect_dims(c, "Acy", "D0", 2, ints({7, 38, 291}));
    expect_dims(c, "Mot", "D0", 2, ints({4, 9, 21, 51}));
    expect_dims(c, "Dis", "D0", 2, ints({1, 3, 6, 13, 29}));
    expect_dims(c, "Luc", "D0", 2, ints({4, 7, 11, 18, 29}));
    expect_dims(c, "WNC", "N2", 2, ints({1, 3, 11, 45, 197}));
    expect_dims(c, "Pat", "D0", 2, ints({7, 34, 206}));

    const auto forests = enumerate_dims(make_family("For", parse_magma_spec("D0")), 6);
    c.notes.push_back("For over D0: " + join(forests));
    if (forests.size() > 3 && forests[3] != 81)
        c.notes.push_back("For at arity 4 is " + forests[3].str() + ", where 81 was expected");
    return c;
}

Criterion closed_forms() {
    Criterion c;
    for (int m = 1; m <= 2; ++m) {
        FormulaParams p;
        p.m = m;
        const auto d = enumerate_dims(make_family("NC", make_standard("N", m)), 6);
        c.expect(dim_formula_table(DimFormula::NC, 6, p) == d, "NC formula at m = " + std::to_string(m));
    }
    FormulaParams p;
    p.m = 2;
    const auto d = enumerate_dims(make_family("Inf", parse_magma_spec("D0")), 6);
    c.expect(dim_formula_table(DimFormula::Inf, 6, p) == d, "Inf formula at m = 2");
    return c;
}

Criterion operad_axioms() {
    Criterion c;
    for (const char* name : {"N2", "D0"}) {
        const AxiomReport a = check_operad_axioms(parse_magma_spec(name), 3);
        c.expect(a.ok(), std::string(name) + ": " + (a.ok() ? "" : a.violations.front()));
        c.expect(a.sequential_checked >= 512 && a.parallel_checked >= 512,
                 std::string(name) + ": too few triples checked");
        c.notes.push_back(std::string(name) + ": " + std::to_string(a.sequential_checked) + " sequential, " +
                          std::to_string(a.parallel_checked) + " parallel triples");
    }
    for (auto [family, magma] : {std::pair{"Deg1", "D0"}, std::pair{"Bub", "N2"}, std::pair{"NC", "N2"}}) {
        const AxiomReport a = check_family_axioms(make_family(family, parse_magma_spec(magma)), 3);
        c.expect(a.ok(), std::string(family) + " over " + magma + (a.ok() ? "" : ": " + a.violations.front()));
    }
    return c;
}

// Every node below the root has the unit as base, and a node whose first
// child is internal has a solid first edge.
bool structurally_normal(const SyntaxTree& t, bool root) {
    if (t.is_leaf()) return true;
    const Clique& g = t.generator();
    if (!root && g.base() != kUnit) return false;
    if (!t.child(0).is_leaf() && g.edge(1) == kUnit) return false;
    for (const auto& ch : t.children())
        if (!structurally_normal(ch, false)) return false;
    return true;
}

Criterion rewrite_system() {
    Criterion c;
    const auto n2 = parse_magma_spec("N2");
    for (int n = 3; n <= 4; ++n) {
        std::map<Clique, std::set<SyntaxTree>> classes;
        for (const auto& t : all_binary_trees(n2, n)) {
            for (const auto& s : successors(t))
                if (!(termination_measure(s) < termination_measure(t))) {
                    c.expect(false, "measure does not decrease: " + to_string(t) + " -> " + to_string(s));
                    break;
                }
            classes[eval(t, n2)].insert(normalize(t));
        }
        for (const auto& [p, forms] : classes)
            c.expect(forms.size() == 1, to_string(p) + " has " + std::to_string(forms.size()) + " normal forms");
    }
    const auto want = ints({8, 48, 352, 2880});
    for (int n = 2; n <= 5; ++n) {
        const BigInt got = count_normal_forms(*n2, n);
        c.expect(got == want[n - 2], "count at arity " + std::to_string(n) + " is " + got.str());
    }
    for (int n = 2; n <= 4; ++n)
        for (const auto& t : normal_forms(n2, n))
            c.expect(structurally_normal(t, true), "not structurally normal: " + to_string(t));
    return c;
}

Criterion relation_spaces() {
    Criterion c;
    const auto n2 = parse_magma_spec("N2");
    const auto rels = relation_space(n2), duals = dual_relation_space(n2);
    const std::size_t rank = rank_of(rels), dual_rank = rank_of(duals), trees = arity3_trees(n2).size();
    c.expect(rank == 80, "relation rank " + std::to_string(rank));
    c.expect(dual_rank == 48, "dual relation rank " + std::to_string(dual_rank));
    c.expect(trees == 128 && rank + dual_rank == trees, "ranks do not add up to " + std::to_string(trees));
    for (const auto& f : rels)
        for (const auto& g : duals)
            if (pairing(f, g) != 0) {
                c.expect(false, "nonzero pairing: " + to_string(f) + " | " + to_string(g));
                break;
            }
    for (auto [name, d0] : {std::pair{"N2", false}, std::pair{"D0", true}}) {
        const auto m = parse_magma_spec(name);
        EchelonBasis<SyntaxTree> space;
        for (const auto& f : relation_space(m)) space.insert(f);
        for (const auto& f : relation_lists::relations(m, d0)) {
            c.expect(relation_lists::evaluate(f, m).is_zero(), std::string(name) + ": does not vanish: " + to_string(f));
            c.expect(space.contains(f), std::string(name) + ": outside the relation space: " + to_string(f));
        }
    }
    return c;
}

Criterion hilbert_equations() {
    Criterion c;
    const std::vector<std::pair<HilbertEquation, std::optional<int>>> cases = {
        {HilbertEquation::NC, 2},     {HilbertEquation::NC, 3},          {HilbertEquation::NCdual, 2},
        {HilbertEquation::E2sub, {}}, {HilbertEquation::MotzSub, {}},    {HilbertEquation::NCP, {}},
        {HilbertEquation::FF4, {}},
    };
    for (const auto& [eq, m] : cases) {
        const TruncatedSeries h = enumerated_hilbert_series(eq, m, 5);
        const TruncatedSeries r = check_hilbert_equation(eq, m, h);
        for (int k = 0; k <= r.order(); ++k)
            c.expect(r[k] == 0, "residual of equation " + std::to_string(static_cast<int>(eq)) + " at t^" +
                                    std::to_string(k) + " is " + to_string(r[k]));
    }
    const TruncatedSeries k = koszul_inverse_check(2, 6) - TruncatedSeries::variable(6);
    for (int i = 0; i <= k.order(); ++i) c.expect(k[i] == 0, "Koszul identity fails at t^" + std::to_string(i));
    return c;
}

Criterion bubble_trees() {
    Criterion c;
    for (const char* name : {"D0", "N2"}) {
        const auto m = parse_magma_spec(name);
        const auto trip = check_bubble_roundtrips(m, 5);
        const auto square = check_schroder_square(m, 3);
        c.expect(trip.ok(), std::string(name) + (trip.ok() ? "" : ": " + trip.counterexamples.front()));
        c.expect(square.ok(), std::string(name) + (square.ok() ? "" : ": " + square.counterexamples.front()));
        c.notes.push_back(std::string(name) + ": " + std::to_string(trip.checked) + " round trips, " +
                          std::to_string(square.checked) + " squares");
    }
    const auto w = find_bubble_tree_non_morphism(parse_magma_spec("D0"));
    c.expect(w.has_value(), "no plain-grafting counterexample");
    if (w) {
        const SchroderTree a = bubble_tree(w->p), b = bubble_tree(w->q);
        c.expect(w->p.arity() == 2 && w->q.arity() == 2, "witness is not made of triangles");
        c.expect(w->composed == bubble_tree(compose(w->p, w->i, w->q)), "witness composite is wrong");
        c.expect(w->composed.internal_nodes() == 1 && plain_graft(a, w->i, b) == w->grafted &&
                     !(w->grafted == w->composed.body()),
                 "witness does not separate the two sides");
        c.notes.push_back("bt(" + to_string(w->p) + " o" + std::to_string(w->i) + " " + to_string(w->q) +
                          ") = " + to_string(w->composed));
    }
    return c;
}

Criterion hk_bases() {
    Criterion c;
    const auto trip = check_basis_roundtrips(parse_magma_spec("D0"), 3);
    c.expect(trip.ok(), "round trips" + (trip.ok() ? "" : ": " + trip.counterexamples.front()));
    const auto square = check_basis_square(parse_magma_spec("N2"), 2);
    c.expect(square.ok(), "squares" + (square.ok() ? "" : ": " + square.counterexamples.front()));
    const auto d1 = parse_magma_spec("D1");
    const LinComb p(parse_clique(d1, "clique 3 { 2-3:0; 2-4:d1; 3-4:0 }"));
    const LinComb q(parse_clique(d1, "clique 3 { 1-3:0; 1-4:0; 2-3:0 }"));
    const LinComb h = parse_lincomb(
        d1, "3 * clique 5 { 2-4:0; 2-5:0; 2-6:d1; 3-4:0; 5-6:0 } + 1 * clique 5 { 2-4:0; 2-6:d1; 3-4:0; 5-6:0 }");
    const LinComb k = parse_lincomb(
        d1, "1 * clique 5 { 2-4:0; 2-5:0; 2-6:d1; 3-4:0; 5-6:0 } + 1 * clique 5 { 2-4:0; 2-6:d1; 3-4:0; 5-6:0 }");
    c.expect(compose_in_basis(p, 2, q, BasisTag::H) == h, "H example over D1");
    c.expect(compose_in_basis(p, 2, q, BasisTag::K) == k, "K example over D1");
    return c;
}

Criterion rational_functions() {
    Criterion c;
    const auto z = parse_magma_spec("Z");
    const FracMap F = FracMap::identity();
    const Clique p = parse_clique(z, "clique 6 { 1-2:-1; 1-5:2; 1-7:1; 3-7:-2; 4-5:3; 5-7:-1 }");
    const std::string got = to_string(F(p));
    c.expect(got == "(u1+u2+u3+u4)^2*(u1+u2+u3+u4+u5+u6)*u4^3 / (u1*(u3+u4+u5+u6)^2*(u5+u6))",
             "arity-6 image is " + got);
    c.expect(F(parse_lincomb(z, "1 * clique 2 { 1-3:1 } - 1 * clique 2 { 1-2:1 } - 1 * clique 2 { 2-3:1 }")).is_zero(),
             "first kernel element");
    c.expect(F(parse_lincomb(z, "1 * clique 3 { 2-3:-1; 3-4:-1 } - 1 * clique 3 { 2-4:-1; 3-4:-1 } - "
                                "1 * clique 3 { 2-3:-1; 2-4:-1 }"))
                 .is_zero(),
             "second kernel element");
    const auto morph = check_frac_morphism(1, 1000, 4, true);
    c.expect(morph.ok() && morph.checked == 1000,
             "morphism" + (morph.ok() ? "" : ": " + morph.counterexamples.front()));
    const auto star_inv = check_star_and_inverse(1, 200, 4);
    c.expect(star_inv.ok() && star_inv.checked == 200,
             "star and inverse" + (star_inv.ok() ? "" : ": " + star_inv.counterexamples.front()));
    return c;
}

Criterion known_operads() {
    Criterion c;
    for (auto which : {KnownOperad::NCP, KnownOperad::FF4, KnownOperad::E2cubic, KnownOperad::MotzQuad,
                       KnownOperad::BNC, KnownOperad::MT}) {
        const KnownReport r = verify_known_presentation(which, 1);
        for (const auto& ch : r.checks) {
            c.expect(ch.ok, to_string(which) + ": " + ch.name + (ch.detail.empty() ? "" : " (" + ch.detail + ")"));
            if (ch.ok && !ch.detail.empty()) c.notes.push_back(to_string(which) + ": " + ch.name + ": " + ch.detail);
        }
        c.expect(r.dims == r.expected_dims, to_string(which) + ": dims " + join(r.dims));
    }
    const KnownGenerators e2 = known_generators(KnownOperad::E2cubic);
    std::vector<SyntaxTree> quadratic;
    for (const auto& a : e2.generators)
        for (const auto& b : e2.generators)
            for (int i = 1; i <= 2; ++i) quadratic.push_back(tree2(a, i, b));
    c.expect(eval_kernel_dim(quadratic, e2.magma) == 0, "quadratic relations among the E2 generators");
    return c;
}

Criterion symmetries() {
    Criterion c;
    const auto n2 = parse_magma_spec("N2");
    const SymmetryReport s = check_symmetries(n2, 3);
    c.expect(s.ok(), s.ok() ? "" : s.violations.front());
    c.expect(!find_basic_collision(n2).has_value(), "collision over N2");
    const auto d0 = parse_magma_spec("D0");
    const auto col = find_basic_collision(d0);
    c.expect(col.has_value(), "no collision over D0");
    if (col) {
        c.expect(!(col->x == col->y) && compose(col->x, col->i, col->q) == compose(col->y, col->i, col->q),
                 "collision over D0 does not collide");
        c.notes.push_back(to_string(col->x) + " o" + std::to_string(col->i) + " " + to_string(col->q) + " = " +
                          to_string(col->y) + " o" + std::to_string(col->i) + " " + to_string(col->q));
    }
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria = {
        {"dimension tables", dimension_tables},
        {"closed forms against enumeration", closed_forms},
        {"operad axioms", operad_axioms},
        {"rewrite system", rewrite_system},
        {"relation spaces", relation_spaces},
        {"Hilbert equations", hilbert_equations},
        {"bubble trees", bubble_trees},
        {"H and K bases", hk_bases},
        {"rational functions", rational_functions},
        {"known operads", known_operads},
        {"symmetries", symmetries},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto& [name, run] = criteria[k];
        const auto t0 = std::chrono::steady_clock::now();
        Criterion c;
        try {
            c = run();
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << "criterion " << k + 1 << ": " << (c.failures.empty() ? "pass" : "fail") << "  " << name
             << " (" << secs << " s)";
        std::cout << line.str() << "\n";
        for (const auto& n : c.notes) std::cout << "    " << n << "\n";
        for (const auto& f : c.failures) std::cout << "    FAIL " << f << "\n";
        std::cout.flush();
        if (!c.failures.empty()) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
