#include <doctest.h>

#include <random>

#include "clq/ncm.hpp"
#include "clq/series.hpp"

using namespace clq;

namespace {

std::vector<Clique> noncrossing(const MagmaPtr& m, int n) {
    std::vector<Clique> out;
    for (const auto& p : all_cliques(m, n))
        if (statistics(p).is_noncrossing) out.push_back(p);
    return out;
}

}  // namespace

TEST_SUITE("ncm") {
    TEST_CASE("bubble tree of a nine-leaf integer clique") {
        const auto z = parse_magma_spec("Z");
        const Clique p = parse_clique(
            z, "clique 9 { 1-2:1; 1-5:2; 1-10:1; 2-3:4; 2-4:1; 3-4:2; 5-6:3; 5-9:3; 5-10:1; 6-9:2; 7-8:1 }");
        const SchroderTree t = bubble_tree(p);
        CHECK(t.internal_nodes() == 6);
        CHECK(t.arity() == 9);
        CHECK(t.root_label() == 1);
        CHECK(to_string(t) ==
              "(1: (0: leaf[1], (0: leaf[4], leaf[2])[1], leaf[0])[2], "
              "(0: (0: leaf[3], (0: leaf[0], leaf[1], leaf[0])[2])[3], leaf[0])[1])");
        CHECK(from_bubble_tree(t) == p);
        CHECK(base_area(p) == std::vector<Arc>{{1, 5}, {5, 10}});
    }

    TEST_CASE("leaf and bubbles") {
        const auto d0 = parse_magma_spec("D0");
        CHECK(bubble_tree(Clique::unit(d0)).is_leaf());
        CHECK(from_bubble_tree(SchroderTree(d0)) == Clique::unit(d0));
        const Clique b = Clique::bubble(d0, 1, {1, kUnit, 1});
        CHECK(bubble_tree(b).internal_nodes() == 1);
        CHECK_THROWS_AS(bubble_tree(parse_clique(d0, "clique 3 { 1-3:0 ; 2-4:0 }")), Error);
    }

    TEST_CASE("round trips") {
        for (const char* name : {"D0", "N2"}) {
            const auto r = check_bubble_roundtrips(parse_magma_spec(name), 4);
            CHECK(r.ok());
            CHECK(r.checked == 1 + 8 + 48 + 352);
        }
    }

    TEST_CASE("Schroder composition matches clique composition") {
        for (const char* name : {"D0", "N2"}) {
            const auto r = check_schroder_square(parse_magma_spec(name), 3);
            CHECK(r.ok());
            CHECK(r.checked == 9177);
        }
    }

    TEST_CASE("plain grafting does not commute with bubble trees") {
        for (const char* name : {"D0", "N2", "N3"}) {
            const auto m = parse_magma_spec(name);
            const auto w = find_bubble_tree_non_morphism(m);
            REQUIRE(w.has_value());
            const Clique empty = Clique::triangle(m, kUnit, kUnit, kUnit);
            CHECK(w->p == empty);
            CHECK(w->q == empty);
            CHECK(w->i == 1);
            CHECK(w->composed.internal_nodes() == 1);
            CHECK(w->grafted.slots.size() == 2);
            CHECK_FALSE(w->grafted.slots[0].sub.empty());
        }
    }

    TEST_CASE("Schroder text format") {
        const auto n2 = parse_magma_spec("N2");
        for (const auto& p : noncrossing(n2, 3)) CHECK(parse_schroder(n2, to_string(bubble_tree(p))) == bubble_tree(p));
        CHECK(to_string(SchroderTree(n2)) == "leaf");
        // unit-labeled internal edge is rejected
        CHECK_THROWS_AS(parse_schroder(n2, "(0: (0: leaf[0], leaf[0])[0], leaf[0])"), Error);
    }

    TEST_CASE("free algebra product") {
        const auto n2 = parse_magma_spec("N2");
        std::mt19937_64 rng(2);
        const auto tri = all_cliques(n2, 2);
        const auto small = noncrossing(n2, 2);
        for (std::size_t k = 0; k < tri.size(); ++k) {
            const Clique& q = small[rng() % small.size()];
            const Clique& r = small[rng() % small.size()];
            CHECK(free_algebra_product(tri[k], q, r) == compose(compose(tri[k], 2, r), 1, q));
        }
        const Clique u = Clique::unit(n2);
        CHECK(free_algebra_product(Clique::triangle(n2, kUnit, kUnit, kUnit), u, u) == Clique::triangle(n2, kUnit, kUnit, kUnit));
    }

    TEST_CASE("monoid words") {
        const auto n4 = parse_magma_spec("N4");
        const auto omega = monoid_word_omega(n4);
        // omega_1(omega_2(0211) omega_0(312)) = omega_1(2033312) = 3100023
        const NCPoly r = algebra_eval(Clique::triangle(n4, 1, 2, 0), {word({0, 2, 1, 1}), word({3, 1, 2})}, omega);
        CHECK(r == word({3, 1, 0, 0, 0, 2, 3}));
        CHECK(is_compatible(*n4, omega, {word({1, 2}), word({3}) + word({0, 0})}));
    }

    TEST_CASE("constant-term action over D0") {
        const auto d0 = parse_magma_spec("D0");
        const Elem z = d0->parse_element("0");
        const auto c = constant_term_omega(d0);
        const NCPoly f1 = NCPoly(Word{}, 3) + word({1}), f2 = word({}) + word({2, 2});
        CHECK(algebra_eval(Clique::triangle(d0, kUnit, z, kUnit), {f1, f2}, c) == NCPoly(Word{}, 3) + NCPoly(Word{2, 2}, 3));
        CHECK(algebra_eval(Clique::triangle(d0, kUnit, kUnit, z), {f1, f2}, c) == f1);
        CHECK(algebra_eval(Clique::triangle(d0, z, kUnit, kUnit), {f1, f2}, c) == NCPoly(Word{}, 3));
        CHECK(algebra_eval(Clique::triangle(d0, kUnit, kUnit, kUnit), {f1, f2}, c) == f1 * f2);
        CHECK(is_compatible(*d0, c, {f1, f2, f1 * f2}));
    }

    TEST_CASE("subset filters over S3") {
        const auto s3 = parse_magma_spec("S3");
        const Clique p = parse_clique(
            s3, "clique 8 { 1-7:{1}; 2-3:{1}; 2-4:{1}; 3-4:{2}; 4-6:{1,2}; 4-5:{2}; 6-7:{3}; 7-9:{1,2} }");
        const NCPoly f = word({1}) + word({2}) + word({3});
        const NCPoly r = algebra_eval(p, std::vector<NCPoly>(8, f), subset_filter_omega(s3));
        const NCPoly expected = (word({1}) + word({2}) + word({3})) * word({1, 2, 2, 1, 3}) * (word({1, 2}) + word({2, 1}));
        CHECK(r == expected);
        CHECK(is_compatible(*s3, subset_filter_omega(s3), {f, f * f}));
    }

    TEST_CASE("algebra action is a morphism on compositions") {
        const auto n3 = parse_magma_spec("N3");
        const auto omega = monoid_word_omega(n3);
        const std::vector<NCPoly> args{word({1}), word({2, 0}), word({0}) + word({1, 1})};
        for (const auto& p : noncrossing(n3, 2))
            for (const auto& q : noncrossing(n3, 2)) {
                const NCPoly inner = algebra_eval(q, {args[1], args[2]}, omega);
                CHECK(algebra_eval(compose(p, 2, q), args, omega) == algebra_eval(p, {args[0], inner}, omega));
            }
    }

    TEST_CASE("dual cliques") {
        const auto n2 = parse_magma_spec("N2");
        FormulaParams fp;
        fp.m = 2;
        CHECK(count_filtered(product(n2, n2), dual_clique_filter(*n2, true), 5) == dim_formula_table(DimFormula::NCdual, 5, fp));
        const auto d0 = parse_magma_spec("D0");
        CHECK(count_filtered(product(d0, d0), dual_clique_filter(*d0, true), 4) == dim_formula_table(DimFormula::NCdual, 4, fp));
    }

    TEST_CASE("word polynomials") {
        const NCPoly a = word({1}) + word({2}), b = word({3});
        CHECK(a * b == word({1, 3}) + word({2, 3}));
        CHECK(to_string(word({})) == "1*[]");
        CHECK(to_string(NCPoly(Word{1, 2}, Rational(-1, 2))) == "-1/2*[1,2]");
    }
}
