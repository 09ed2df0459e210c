#include <doctest.h>

#include "clq/bases.hpp"

using namespace clq;

namespace {

// Reference expansions straight from the partial orders: H_p sums the
// cliques below p when solid edges and base may be erased, K_p is the signed
// sum over erased solid diagonals.
LinComb h_expand(const Clique& p) {
    LinComb out;
    std::vector<Arc> erasable;
    for (const auto& a : p.arcs())
        if (!p.is_diagonal(a.arc)) erasable.push_back(a.arc);
    for (unsigned mask = 0; mask < (1u << erasable.size()); ++mask) {
        Clique q = p;
        for (std::size_t k = 0; k < erasable.size(); ++k)
            if (mask >> k & 1) q = q.with(erasable[k], kUnit);
        out.add(q, 1);
    }
    return out;
}

LinComb k_expand(const Clique& p) {
    LinComb out;
    std::vector<Arc> erasable;
    for (const auto& a : p.arcs())
        if (p.is_diagonal(a.arc)) erasable.push_back(a.arc);
    for (unsigned mask = 0; mask < (1u << erasable.size()); ++mask) {
        Clique q = p;
        int sign = 1;
        for (std::size_t k = 0; k < erasable.size(); ++k)
            if (mask >> k & 1) q = q.with(erasable[k], kUnit), sign = -sign;
        out.add(q, sign);
    }
    return out;
}

struct Example {
    const char* magma;
    BasisTag tag;
    const char* p;
    int i;
    const char* q;
    const char* result;
};

}  // namespace

TEST_SUITE("bases") {
    TEST_CASE("erasures") {
        const auto z = parse_magma_spec("Z");
        const Clique p = parse_clique(z, "clique 2 { 1-2:1 ; 1-3:2 ; 2-3:3 }");
        CHECK(erase_base(p) == parse_clique(z, "clique 2 { 1-2:1 ; 2-3:3 }"));
        CHECK(erase_edge(p, 2) == parse_clique(z, "clique 2 { 1-2:1 ; 1-3:2 }"));
        CHECK_THROWS_AS(erase_edge(p, 0), Error);
    }

    TEST_CASE("expansions match the partial orders") {
        const auto d0 = parse_magma_spec("D0");
        for (int n = 1; n <= 3; ++n)
            for (const auto& p : all_cliques(d0, n)) {
                CHECK(to_fundamental(LinComb(p), BasisTag::H) == h_expand(p));
                CHECK(to_fundamental(LinComb(p), BasisTag::K) == k_expand(p));
            }
    }

    TEST_CASE("inverse expansions have unit coefficients") {
        const auto n2 = parse_magma_spec("N2");
        for (const auto& p : all_cliques(n2, 3)) {
            const LinComb h = from_fundamental(LinComb(p), BasisTag::H), k = from_fundamental(LinComb(p), BasisTag::K);
            for (const auto& [q, c] : h.terms()) CHECK((c == 1 || c == -1));
            for (const auto& [q, c] : k.terms()) CHECK(c == 1);
        }
    }

    TEST_CASE("round trips") {
        const auto r = check_basis_roundtrips(parse_magma_spec("D0"), 3);
        CHECK(r.ok());
        CHECK(r.checked == 2 * (1 + 8 + 64));
        CHECK(check_basis_roundtrips(parse_magma_spec("N3"), 2).ok());
    }

    TEST_CASE("composition squares") {
        const auto r = check_basis_square(parse_magma_spec("N2"), 2);
        CHECK(r.ok());
        CHECK(r.checked == 256);
        CHECK(check_basis_square(parse_magma_spec("D1"), 2).ok());
        const auto n2 = parse_magma_spec("N2");
        for (BasisTag tag : {BasisTag::H, BasisTag::K})
            for (const auto& p : all_cliques(n2, 3))
                for (int i = 1; i <= 3; ++i) {
                    const Clique q = Clique::triangle(n2, 1, 1, 0);
                    const LinComb via = from_fundamental(
                        lc_compose(to_fundamental(LinComb(p), tag), i, to_fundamental(LinComb(q), tag)), tag);
                    CHECK(compose_in_basis(LinComb(p), i, LinComb(q), tag) == via);
                }
    }

    TEST_CASE("worked compositions") {
        const Example examples[] = {
            {"Z", BasisTag::H, "clique 2 { 2-3:1 }", 2, "clique 2 { 1-3:1 }",
             "1 * clique 3 { } + 2 * clique 3 { 2-4:1 } + 1 * clique 3 { 2-4:2 }"},
            {"Z", BasisTag::K, "clique 2 { 2-3:1 }", 2, "clique 2 { 1-3:1 }", "1 * clique 3 { } + 1 * clique 3 { 2-4:2 }"},
            {"Z", BasisTag::H, "clique 3 { 1-3:2; 3-4:1 }", 3, "clique 2 { 1-2:1; 1-3:2; 2-3:2 }",
             "1 * clique 4 { 1-3:2; 3-4:1; 4-5:2 } + 1 * clique 4 { 1-3:2; 3-4:1; 3-5:1; 4-5:2 } + "
             "1 * clique 4 { 1-3:2; 3-4:1; 3-5:2; 4-5:2 } + 1 * clique 4 { 1-3:2; 3-4:1; 3-5:3; 4-5:2 }"},
            {"Z", BasisTag::K, "clique 3 { 1-3:2; 3-4:1 }", 3, "clique 2 { 1-2:1; 1-3:2; 2-3:2 }",
             "1 * clique 4 { 1-3:2; 3-4:1; 4-5:2 } + 1 * clique 4 { 1-3:2; 3-4:1; 3-5:3; 4-5:2 }"},
            {"Z", BasisTag::H, "clique 3 { 2-3:-1; 2-4:2; 3-4:1 }", 2, "clique 3 { 1-3:-1; 1-4:1; 2-3:1 }",
             "1 * clique 5 { 2-4:-1; 2-5:-1; 2-6:2; 3-4:1; 5-6:1 } + 2 * clique 5 { 2-4:-1; 2-6:2; 3-4:1; 5-6:1 } + "
             "1 * clique 5 { 2-4:-1; 2-5:1; 2-6:2; 3-4:1; 5-6:1 }"},
            {"Z", BasisTag::K, "clique 3 { 2-3:-1; 2-4:2; 3-4:1 }", 2, "clique 3 { 1-3:-1; 1-4:1; 2-3:1 }",
             "1 * clique 5 { 2-4:-1; 2-6:2; 3-4:1; 5-6:1 }"},
            {"D1", BasisTag::H, "clique 3 { 2-3:0; 2-4:d1; 3-4:0 }", 2, "clique 3 { 1-3:0; 1-4:0; 2-3:0 }",
             "3 * clique 5 { 2-4:0; 2-5:0; 2-6:d1; 3-4:0; 5-6:0 } + 1 * clique 5 { 2-4:0; 2-6:d1; 3-4:0; 5-6:0 }"},
            {"D1", BasisTag::K, "clique 3 { 2-3:0; 2-4:d1; 3-4:0 }", 2, "clique 3 { 1-3:0; 1-4:0; 2-3:0 }",
             "1 * clique 5 { 2-4:0; 2-5:0; 2-6:d1; 3-4:0; 5-6:0 } + 1 * clique 5 { 2-4:0; 2-6:d1; 3-4:0; 5-6:0 }"},
        };
        for (const auto& e : examples) {
            CAPTURE(e.p);
            const auto m = parse_magma_spec(e.magma);
            const LinComb p(parse_clique(m, e.p)), q(parse_clique(m, e.q));
            const LinComb want = parse_lincomb(m, e.result);
            CHECK(compose_in_basis(p, e.i, q, e.tag) == want);
            CHECK(from_fundamental(lc_compose(to_fundamental(p, e.tag), e.i, to_fundamental(q, e.tag)), e.tag) == want);
        }
    }

    TEST_CASE("tagged text format") {
        const auto z = parse_magma_spec("Z");
        const LinComb f = parse_lincomb(z, "2 * clique 2 { 1-3:1 }");
        CHECK(to_string(f, BasisTag::H) == "H: 2 * clique 2 { 1-3:1 }");
        BasisTag tag = BasisTag::Fundamental;
        CHECK(parse_tagged_lincomb(z, "K: 2 * clique 2 { 1-3:1 }", tag) == f);
        CHECK(tag == BasisTag::K);
        CHECK(parse_tagged_lincomb(z, "2 * clique 2 { 1-3:1 }", tag) == f);
        CHECK(tag == BasisTag::Fundamental);
        CHECK(to_string(BasisTag::H) == "H");
    }
}
