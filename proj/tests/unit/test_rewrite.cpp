#include <doctest.h>

#include <map>
#include <set>

#include "clq/rewrite.hpp"
#include "clq/series.hpp"
#include "relation_lists.hpp"

using namespace clq;

TEST_SUITE("rewrite") {
    TEST_CASE("syntax trees") {
        const auto n2 = parse_magma_spec("N2");
        const Clique t = Clique::triangle(n2, 1, 0, 1);
        const SyntaxTree c = SyntaxTree::corolla(t);
        CHECK(c.arity() == 2);
        CHECK(c.internal_nodes() == 1);
        const SyntaxTree g = graft(c, 2, c);
        CHECK(g == tree2(t, 2, t));
        CHECK(g.arity() == 3);
        CHECK(eval(g, n2) == compose(t, 2, t));
        CHECK(eval(SyntaxTree::leaf(), n2) == Clique::unit(n2));
        CHECK_THROWS_AS(SyntaxTree::node(t, {SyntaxTree::leaf()}), Error);
    }

    TEST_CASE("tree text format") {
        const auto n2 = parse_magma_spec("N2");
        for (const auto& t : all_binary_trees(n2, 3)) CHECK(parse_tree(n2, to_string(t)) == t);
        const SyntaxTree t = tree2(Clique::triangle(n2, 1, 0, 1), 1, Clique::triangle(n2, 0, 1, 0));
        CHECK(to_string(t) == "<1,0,1>(<0,1,0>(|, |), |)");
        CHECK_THROWS_AS(parse_tree(n2, "<1,0>(|, |)"), Error);
    }

    TEST_CASE("tree counts") {
        const auto n2 = parse_magma_spec("N2");
        CHECK(all_binary_trees(n2, 2).size() == 8);
        CHECK(all_binary_trees(n2, 3).size() == 128);
        CHECK(arity3_trees(n2).size() == 128);
        CHECK(all_binary_trees(n2, 4).size() == 5 * 8 * 8 * 8);
    }

    TEST_CASE("every step decreases the termination measure") {
        const auto n2 = parse_magma_spec("N2");
        for (int n = 3; n <= 4; ++n)
            for (const auto& t : all_binary_trees(n2, n))
                for (const auto& s : successors(t)) {
                    CHECK(termination_measure(s) < termination_measure(t));
                    CHECK(eval(s, n2) == eval(t, n2));
                }
    }

    TEST_CASE("one normal form per evaluation class") {
        for (const char* name : {"N2", "D0"}) {
            const auto m = parse_magma_spec(name);
            for (int n = 3; n <= 4; ++n) {
                std::map<Clique, std::set<SyntaxTree>> classes;
                for (const auto& t : all_binary_trees(m, n)) {
                    const SyntaxTree nf = normalize(t, true);
                    CHECK(is_normal_form(nf));
                    classes[eval(t, m)].insert(nf);
                }
                for (const auto& [c, forms] : classes) CHECK(forms.size() == 1);
                CHECK(classes.size() == normal_forms(m, n).size());
            }
        }
    }

    TEST_CASE("all rewrite paths agree at arity 3") {
        const auto n2 = parse_magma_spec("N2");
        for (const auto& t : arity3_trees(n2)) CHECK(reachable_normal_forms(t).size() == 1);
    }

    TEST_CASE("normal form counts are the noncrossing dimensions") {
        for (int m = 1; m <= 3; ++m) {
            const auto mg = parse_magma_spec("N" + std::to_string(m));
            FormulaParams p;
            p.m = m;
            for (int n = 2; n <= 5; ++n) CHECK(count_normal_forms(*mg, n) == dim_formula(DimFormula::NC, n, p));
        }
        const auto n2 = parse_magma_spec("N2");
        for (int n = 2; n <= 4; ++n) {
            const auto forms = normal_forms(n2, n);
            CHECK(BigInt(forms.size()) == count_normal_forms(*n2, n));
            std::set<Clique> images;
            for (const auto& t : forms) {
                CHECK(is_normal_form(t));
                CHECK(normalize(t) == t);
                images.insert(eval(t, n2));
            }
            CHECK(images.size() == forms.size());
        }
    }

    TEST_CASE("relation spaces") {
        for (const char* name : {"N2", "D0"}) {
            const auto m = parse_magma_spec(name);
            const auto rel = relation_space(m), dual = dual_relation_space(m);
            CHECK(rank_of(rel) == 80);
            CHECK(rank_of(dual) == 48);
            CHECK(eval_kernel_dim(arity3_trees(m), m) == 80);
            CHECK(rank_of(rewrite_span(m)) == 80);
            for (const auto& f : rel) CHECK(relation_lists::evaluate(f, m).is_zero());
            for (const auto& f : rel)
                for (const auto& g : dual) REQUIRE(pairing(f, g) == 0);
        }
        const auto n3 = parse_magma_spec("N3");
        // 2m^5 - m^4 for the dual, the rest for the relations
        CHECK(rank_of(dual_relation_space(n3)) == 2 * 243 - 81);
        CHECK(rank_of(relation_space(n3)) == 2 * 729 - (2 * 243 - 81));
    }

    TEST_CASE("explicit relation families span the relation spaces") {
        for (auto [name, d0] : {std::pair{"N2", false}, std::pair{"D0", true}}) {
            const auto m = parse_magma_spec(name);
            EchelonBasis<SyntaxTree> rel, dual;
            for (const auto& f : relation_space(m)) rel.insert(f);
            for (const auto& f : dual_relation_space(m)) dual.insert(f);
            const auto listed = relation_lists::relations(m, d0), listed_dual = relation_lists::dual_relations(m, d0);
            for (const auto& f : listed) {
                CHECK(relation_lists::evaluate(f, m).is_zero());
                CHECK(rel.contains(f));
            }
            for (const auto& f : listed_dual) CHECK(dual.contains(f));
            CHECK(rank_of(listed) == 80);
            CHECK(rank_of(listed_dual) == 48);
        }
    }

    TEST_CASE("pairing signs") {
        const auto n2 = parse_magma_spec("N2");
        const Clique a = Clique::triangle(n2, 1, 0, 0), b = Clique::triangle(n2, 0, 1, 1);
        CHECK(pairing(tree2(a, 1, b), tree2(a, 1, b)) == 1);
        CHECK(pairing(tree2(a, 2, b), tree2(a, 2, b)) == -1);
        CHECK(pairing(tree2(a, 1, b), tree2(b, 1, a)) == 0);
    }
}
