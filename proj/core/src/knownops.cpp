#include "clq/knownops.hpp"

#include "clq/families.hpp"
#include "clq/ncm.hpp"
#include "clq/ratfct.hpp"
#include "clq/rewrite.hpp"
#include "clq/series.hpp"

namespace clq {

namespace {

using PairSet = std::set<std::pair<int, int>>;

void validate_pairs(int n, const PairSet& s) {
    if (n < 1) throw Error("multi-tilde: arity must be positive");
    for (const auto& [x, y] : s)
        if (x < 1 || x > y || y > n) throw Error("multi-tilde: pair out of range");
}

PairSet compose_pairs(const PairSet& s, int i, const PairSet& t, int m) {
    PairSet r;
    for (const auto& [x, y] : s) {
        if (y <= i - 1)
            r.insert({x, y});
        else if (x <= i)
            r.insert({x, y + m - 1});
        else
            r.insert({x + m - 1, y + m - 1});
    }
    for (const auto& [x, y] : t) r.insert({x + i - 1, y + i - 1});
    return r;
}

const MagmaPtr& d0() {
    static const MagmaPtr m = make_standard("D", 0);
    return m;
}

const MagmaPtr& d0_square() {
    static const MagmaPtr m = product(d0(), d0());
    return m;
}

constexpr Elem kZero = 1;  // the absorbing element of D0

PairSet read_pairs(TextReader& in) {
    PairSet s;
    in.expect("{");
    while (in.try_consume("(")) {
        const int x = in.read_int();
        in.expect(",");
        const int y = in.read_int();
        in.expect(")");
        s.insert({x, y});
    }
    in.expect("}");
    return s;
}

std::string pairs_string(const PairSet& s) {
    std::string out = "{";
    for (const auto& [x, y] : s) out += " (" + std::to_string(x) + "," + std::to_string(y) + ")";
    return out + " }";
}

std::string tree_name(const SyntaxTree& t, const std::vector<std::pair<Clique, std::string>>& names) {
    if (t.is_leaf()) return "|";
    std::string g = to_string(t.generator());
    for (const auto& [c, n] : names)
        if (c == t.generator()) g = n;
    std::string s = g + "(";
    for (std::size_t k = 0; k < t.children().size(); ++k)
        s += (k ? ", " : "") + tree_name(t.children()[k], names);
    return s + ")";
}

struct Presentation {
    MagmaPtr magma;
    std::vector<std::pair<Clique, std::string>> generators;

    const Clique& gen(const std::string& n) const {
        for (const auto& [c, name] : generators)
            if (name == n) return c;
        throw Error("unknown generator " + n);
    }
    // p o_i q.
    SyntaxTree two(const std::string& p, int i, const std::string& q) const {
        return tree2(gen(p), i, gen(q));
    }

    KnownCheck relation(const SyntaxTree& lhs, const SyntaxTree& rhs, bool expect_equal = true) const {
        const Clique a = eval(lhs, magma), b = eval(rhs, magma);
        KnownCheck c;
        c.name = tree_name(lhs, generators) + (expect_equal ? " = " : " != ") + tree_name(rhs, generators);
        c.ok = (a == b) == expect_equal;
        c.detail = a == b ? to_string(a) : to_string(a) + " vs " + to_string(b);
        return c;
    }
};

Presentation make_presentation(KnownOperad which) {
    switch (which) {
        case KnownOperad::NCP: {
            const auto z = Magma::integers();
            return {z, {{Clique::triangle(z, 0, -1, 0), "L"}, {Clique::triangle(z, 0, 0, -1), "R"}}};
        }
        case KnownOperad::FF4: {
            const auto z = Magma::integers();
            return {z,
                    {{Clique::triangle(z, -1, -1, 1), "A"},
                     {Clique::triangle(z, -1, 1, -1), "B"},
                     {Clique::triangle(z, -1, 1, 1), "C"},
                     {Clique::triangle(z, 1, -1, -1), "D"}}};
        }
        case KnownOperad::E2cubic: {
            const auto m = make_standard("E", 2);
            const Elem e1 = m->parse_element("e1"), e2 = m->parse_element("e2");
            return {m, {{Clique::triangle(m, e1, kUnit, e1), "g1"}, {Clique::triangle(m, e2, kUnit, e2), "g2"}}};
        }
        case KnownOperad::MotzQuad: {
            const auto m = d0();
            return {m, {{Clique::triangle(m, kUnit, kUnit, kUnit), "T"}, {Clique(m, 3, {{{2, 3}, kZero}}), "S"}}};
        }
        default: throw Error("no generator set for " + to_string(which));
    }
}

std::vector<BigInt> closure_dims(const Presentation& pr, int n_max) {
    std::vector<Clique> gens;
    for (const auto& g : pr.generators) gens.push_back(g.first);
    const auto levels = closure(pr.magma, gens, n_max);
    std::vector<BigInt> out;
    for (int n = 1; n <= n_max; ++n) out.push_back(levels[static_cast<std::size_t>(n)].size());
    return out;
}

std::vector<BigInt> big(std::initializer_list<int> v) { return std::vector<BigInt>(v.begin(), v.end()); }

KnownReport verify_ncp() {
    KnownReport r;
    r.which = KnownOperad::NCP;
    const Presentation pr = make_presentation(KnownOperad::NCP);
    r.checks.push_back(pr.relation(pr.two("R", 1, "L"), pr.two("L", 2, "R")));
    const FracMap f = FracMap::identity();
    const RatFct u1 = RatFct(Poly::constant(2, 1), Poly::variable(2, 1));
    const RatFct u2 = RatFct(Poly::constant(2, 1), Poly::variable(2, 2));
    r.checks.push_back({"F_Id(L) = 1/u1", f(pr.gen("L")).expand() == u1, to_string(f(pr.gen("L")))});
    r.checks.push_back({"F_Id(R) = 1/u2", f(pr.gen("R")).expand() == u2, to_string(f(pr.gen("R")))});
    r.dims = closure_dims(pr, 5);
    r.expected_dims = big({1, 2, 7, 30, 143});
    return r;
}

KnownReport verify_ff4() {
    KnownReport r;
    r.which = KnownOperad::FF4;
    const Presentation pr = make_presentation(KnownOperad::FF4);
    const std::vector<std::pair<std::pair<std::string, std::string>, std::pair<std::string, std::string>>> rels = {
        {{"B", "A"}, {"A", "B"}}, {{"C", "C"}, {"C", "C"}}, {{"C", "A"}, {"A", "C"}}, {{"C", "B"}, {"C", "A"}},
        {{"B", "C"}, {"C", "B"}}, {{"D", "D"}, {"D", "D"}}, {{"B", "B"}, {"B", "D"}}, {{"A", "D"}, {"A", "A"}},
    };
    for (const auto& [l, rr] : rels) r.checks.push_back(pr.relation(pr.two(l.first, 1, l.second), pr.two(rr.first, 2, rr.second)));
    r.dims = closure_dims(pr, 5);
    r.expected_dims = big({1, 4, 24, 176, 1440});
    return r;
}

CliqueFilter bnc_filter() {
    CliqueFilter f;
    f.base = {1, 2};
    f.edge = {1, 2};
    f.max_crossing = 0;
    return f;
}

KnownReport verify_bnc(std::uint64_t seed) {
    KnownReport r;
    r.which = KnownOperad::BNC;
    const auto m = make_standard("BNC");
    const CliqueFilter f = bnc_filter();
    r.dims = count_filtered(m, f, 4);
    r.expected_dims = big({1, 8, 80, 992});

    std::vector<std::vector<Clique>> lists(4);
    for (int n = 2; n <= 3; ++n) lists[static_cast<std::size_t>(n)] = list_filtered(m, f, n);
    std::size_t tried = 0, failed = 0;
    std::string first_bad;
    for (int a = 2; a <= 3; ++a)
        for (int b = 2; a + b - 1 <= 4; ++b)
            for (const auto& p : lists[static_cast<std::size_t>(a)])
                for (const auto& q : lists[static_cast<std::size_t>(b)])
                    for (int i = 1; i <= a; ++i) {
                        ++tried;
                        const Clique c = compose(p, i, q);
                        if (!accepts(f, c)) {
                            if (!failed++) first_bad = to_string(p) + " o" + std::to_string(i) + " " + to_string(q);
                        }
                    }
    r.checks.push_back({"closed under composition up to arity 4", failed == 0,
                        std::to_string(tried) + " compositions" + (failed ? ", first failure " + first_bad : "")});

    const MagmaMorphism swap{m, m, [](Elem x) { return x == 0 ? Elem{0} : 3 - x; }};
    r.checks.push_back({"complementary map is a magma automorphism", swap.verify(), ""});
    std::mt19937_64 rng(seed);
    std::size_t bad = 0;
    for (int s = 0; s < 100; ++s) {
        const int a = std::uniform_int_distribution<int>(2, 3)(rng);
        const int b = a == 3 ? 2 : std::uniform_int_distribution<int>(2, 3)(rng);
        const auto& lp = lists[static_cast<std::size_t>(a)];
        const auto& lq = lists[static_cast<std::size_t>(b)];
        const Clique& p = lp[std::uniform_int_distribution<std::size_t>(0, lp.size() - 1)(rng)];
        const Clique& q = lq[std::uniform_int_distribution<std::size_t>(0, lq.size() - 1)(rng)];
        const int i = std::uniform_int_distribution<int>(1, a)(rng);
        const Clique lhs = relabel(compose(p, i, q), swap);
        const Clique rhs = compose(relabel(p, swap), i, relabel(q, swap));
        if (!(lhs == rhs) || !accepts(f, relabel(p, swap))) ++bad;
    }
    r.checks.push_back({"complementary map commutes with composition", bad == 0,
                        "100 samples, " + std::to_string(bad) + " failures"});
    return r;
}

KnownReport verify_e2() {
    KnownReport r;
    r.which = KnownOperad::E2cubic;
    const Presentation pr = make_presentation(KnownOperad::E2cubic);
    const MagmaPtr& m = pr.magma;

    std::vector<SyntaxTree> quadratic;
    for (const auto& [p, pn] : pr.generators)
        for (const auto& [q, qn] : pr.generators)
            for (int i = 1; i <= 2; ++i) quadratic.push_back(tree2(p, i, q));
    const std::size_t ker = eval_kernel_dim(quadratic, m);
    r.checks.push_back({"no quadratic relation", ker == 0, "kernel dimension " + std::to_string(ker)});

    // gA o2 (gB o2 gC) = gA o2 (g2 o2 gC) for gB = g1.
    for (const std::string a : {"g1", "g2"})
        for (const std::string c : {"g1", "g2"}) {
            const SyntaxTree lhs = graft(SyntaxTree::corolla(pr.gen(a)), 2, pr.two("g1", 2, c));
            const SyntaxTree rhs = graft(SyntaxTree::corolla(pr.gen(a)), 2, pr.two("g2", 2, c));
            r.checks.push_back(pr.relation(lhs, rhs));
        }
    r.dims = closure_dims(pr, 5);
    const TruncatedSeries h = solve_hilbert_equation(HilbertEquation::E2sub, std::nullopt, 5);
    for (int n = 1; n <= 5; ++n) r.expected_dims.push_back(numerator(h.coefficients()[static_cast<std::size_t>(n)]));
    return r;
}

KnownReport verify_motzkin() {
    KnownReport r;
    r.which = KnownOperad::MotzQuad;
    const Presentation pr = make_presentation(KnownOperad::MotzQuad);
    const MagmaPtr& m = pr.magma;
    r.checks.push_back(pr.relation(pr.two("T", 1, "T"), pr.two("T", 2, "T")));
    r.checks.push_back(pr.relation(pr.two("S", 1, "T"), pr.two("T", 2, "S")));
    r.checks.push_back(pr.relation(pr.two("T", 1, "S"), pr.two("S", 3, "T")));
    r.checks.push_back(pr.relation(pr.two("S", 1, "S"), pr.two("S", 3, "S")));
    // The variant with S o2 T on the right does not hold.
    r.checks.push_back(pr.relation(pr.two("T", 1, "S"), pr.two("S", 2, "T"), false));

    std::vector<std::vector<SyntaxTree>> by_arity(6);
    for (const auto& [p, pn] : pr.generators)
        for (const auto& [q, qn] : pr.generators)
            for (int i = 1; i <= p.arity(); ++i)
                by_arity[static_cast<std::size_t>(p.arity() + q.arity() - 1)].push_back(tree2(p, i, q));
    std::string kd;
    std::size_t total = 0;
    for (int n = 3; n <= 5; ++n) {
        const std::size_t k = eval_kernel_dim(by_arity[static_cast<std::size_t>(n)], m);
        total += k;
        kd += (n > 3 ? ", " : "") + std::to_string(k);
    }
    r.checks.push_back({"quadratic relations span a space of dimension 4", total == 4, "by arity 3..5: " + kd});
    r.dims = closure_dims(pr, 6);
    r.expected_dims = big({1, 1, 2, 4, 9, 21});
    return r;
}

KnownReport verify_mt(std::uint64_t seed) {
    KnownReport r;
    r.which = KnownOperad::MT;
    const MultiTilde a{5, {{1, 5}, {2, 4}, {4, 5}}}, b{6, {{2, 2}, {4, 6}}};
    const std::vector<std::pair<int, MultiTilde>> examples = {
        {4, {10, {{1, 10}, {2, 9}, {4, 10}, {5, 5}, {7, 9}}}},
        {5, {10, {{1, 10}, {2, 4}, {4, 10}, {6, 6}, {8, 10}}}},
    };
    for (const auto& [i, expected] : examples) {
        const MultiTilde c = mt_compose(a, i, b);
        const bool through = compose(mt_encode(a), i, mt_encode(b)) == mt_encode(expected);
        r.checks.push_back({to_string(a) + " o" + std::to_string(i) + " " + to_string(b), c == expected && through,
                            to_string(c)});
    }
    const DoubleMultiTilde da{3, {{2, 2}}, {{1, 2}, {1, 3}}}, db{2, {{1, 1}}, {{1, 2}}};
    const DoubleMultiTilde dexp{4, {{2, 2}, {2, 3}}, {{1, 3}, {1, 4}, {2, 3}}};
    const DoubleMultiTilde dc = dmt_compose(da, 2, db);
    r.checks.push_back({to_string(da) + " o2 " + to_string(db),
                        dc == dexp && compose(dmt_encode(da), 2, dmt_encode(db)) == dmt_encode(dexp), to_string(dc)});

    std::size_t bij_bad = 0, count = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const auto& t : all_multi_tildes(n)) {
            ++count;
            if (!(mt_decode(mt_encode(t)) == t)) ++bij_bad;
        }
        for (const auto& p : all_cliques(d0(), n))
            if (!(mt_encode(mt_decode(p)) == p)) ++bij_bad;
    }
    r.checks.push_back({"encoding is bijective up to arity 4", bij_bad == 0,
                        std::to_string(count) + " multi-tildes, " + std::to_string(bij_bad) + " failures"});

    std::mt19937_64 rng(seed);
    std::size_t bad = 0;
    for (int s = 0; s < 500; ++s) {
        const int n = std::uniform_int_distribution<int>(1, 6)(rng);
        const int k = std::uniform_int_distribution<int>(1, 6)(rng);
        const MultiTilde x = random_multi_tilde(rng, n), y = random_multi_tilde(rng, k);
        const int i = std::uniform_int_distribution<int>(1, n)(rng);
        if (!(mt_encode(mt_compose(x, i, y)) == compose(mt_encode(x), i, mt_encode(y)))) ++bad;
    }
    r.checks.push_back({"encoding commutes with composition", bad == 0, "500 samples, " + std::to_string(bad) + " failures"});

    const AxiomReport had = check_hadamard_iso(d0(), d0(), 2);
    r.checks.push_back({"pairing D0 x D0 commutes with composition", had.ok(),
                        had.ok() ? "" : had.violations.front()});
    return r;
}

}  // namespace

void MultiTilde::validate() const { validate_pairs(arity, pairs); }

void DoubleMultiTilde::validate() const {
    validate_pairs(arity, first);
    validate_pairs(arity, second);
}

MultiTilde mt_compose(const MultiTilde& a, int i, const MultiTilde& b) {
    if (i < 1 || i > a.arity) throw Error("mt_compose: index out of range");
    return {a.arity + b.arity - 1, compose_pairs(a.pairs, i, b.pairs, b.arity)};
}

DoubleMultiTilde dmt_compose(const DoubleMultiTilde& a, int i, const DoubleMultiTilde& b) {
    if (i < 1 || i > a.arity) throw Error("dmt_compose: index out of range");
    return {a.arity + b.arity - 1, compose_pairs(a.first, i, b.first, b.arity),
            compose_pairs(a.second, i, b.second, b.arity)};
}

Clique mt_encode(const MultiTilde& a) {
    a.validate();
    if (a.arity == 1 && !a.pairs.empty()) throw Error("mt_encode: (1, {(1,1)}) has no image");
    std::vector<LabeledArc> arcs;
    for (const auto& [x, y] : a.pairs) arcs.push_back({{x, y + 1}, kZero});
    return Clique(d0(), a.arity, std::move(arcs));
}

MultiTilde mt_decode(const Clique& p) {
    if (!p.magma()->same_as(*d0())) throw Error("mt_decode: clique is not over D0");
    MultiTilde a{p.arity(), {}};
    for (const auto& la : p.arcs()) a.pairs.insert({la.arc.x, la.arc.y - 1});
    return a;
}

Clique dmt_encode(const DoubleMultiTilde& a) {
    a.validate();
    if (a.arity == 1 && !(a.first.empty() && a.second.empty()))
        throw Error("dmt_encode: only the unit has an image in arity 1");
    const Magma& m = *d0();
    PairSet all = a.first;
    all.insert(a.second.begin(), a.second.end());
    std::vector<LabeledArc> arcs;
    for (const auto& xy : all) {
        const Elem l = pair_elem(m, a.first.count(xy) ? kZero : kUnit, a.second.count(xy) ? kZero : kUnit);
        arcs.push_back({{xy.first, xy.second + 1}, l});
    }
    return Clique(d0_square(), a.arity, std::move(arcs));
}

DoubleMultiTilde dmt_decode(const Clique& p) {
    if (!p.magma()->same_as(*d0_square())) throw Error("dmt_decode: clique is not over D0 x D0");
    DoubleMultiTilde a{p.arity(), {}, {}};
    for (const auto& la : p.arcs()) {
        const auto [l, r] = split_elem(*d0(), la.label);
        if (l != kUnit) a.first.insert({la.arc.x, la.arc.y - 1});
        if (r != kUnit) a.second.insert({la.arc.x, la.arc.y - 1});
    }
    return a;
}

std::vector<MultiTilde> all_multi_tildes(int arity) {
    if (arity == 1) return {MultiTilde{}};
    std::vector<std::pair<int, int>> slots;
    for (int x = 1; x <= arity; ++x)
        for (int y = x; y <= arity; ++y) slots.push_back({x, y});
    if (slots.size() > 20) throw Error("all_multi_tildes: arity too large");
    std::vector<MultiTilde> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
        MultiTilde a{arity, {}};
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (mask & (std::size_t{1} << k)) a.pairs.insert(slots[k]);
        out.push_back(std::move(a));
    }
    return out;
}

MultiTilde random_multi_tilde(std::mt19937_64& rng, int arity) {
    MultiTilde a{arity, {}};
    if (arity == 1) return a;
    std::bernoulli_distribution coin(0.5);
    for (int x = 1; x <= arity; ++x)
        for (int y = x; y <= arity; ++y)
            if (coin(rng)) a.pairs.insert({x, y});
    return a;
}

std::string to_string(const MultiTilde& a) { return "mt " + std::to_string(a.arity) + " " + pairs_string(a.pairs); }

std::string to_string(const DoubleMultiTilde& a) {
    return "dmt " + std::to_string(a.arity) + " " + pairs_string(a.first) + " " + pairs_string(a.second);
}

MultiTilde parse_multi_tilde(std::string_view text) {
    TextReader in(text);
    in.expect("mt");
    MultiTilde a;
    a.arity = in.read_int();
    a.pairs = read_pairs(in);
    if (!in.at_end()) in.fail("trailing input");
    a.validate();
    return a;
}

DoubleMultiTilde parse_double_multi_tilde(std::string_view text) {
    TextReader in(text);
    in.expect("dmt");
    DoubleMultiTilde a;
    a.arity = in.read_int();
    a.first = read_pairs(in);
    a.second = read_pairs(in);
    if (!in.at_end()) in.fail("trailing input");
    a.validate();
    return a;
}

std::string to_string(KnownOperad which) {
    switch (which) {
        case KnownOperad::NCP: return "NCP";
        case KnownOperad::FF4: return "FF4";
        case KnownOperad::BNC: return "BNC";
        case KnownOperad::E2cubic: return "E2cubic";
        case KnownOperad::MotzQuad: return "MotzQuad";
        case KnownOperad::MT: return "MT";
    }
    return "?";
}

KnownOperad parse_known_operad(std::string_view name) {
    for (auto k : {KnownOperad::NCP, KnownOperad::FF4, KnownOperad::BNC, KnownOperad::E2cubic, KnownOperad::MotzQuad,
                   KnownOperad::MT})
        if (to_string(k) == name) return k;
    throw Error("unknown operad '" + std::string(name) + "'");
}

bool KnownReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return dims == expected_dims;
}

KnownGenerators known_generators(KnownOperad which) {
    const Presentation pr = make_presentation(which);
    KnownGenerators out{pr.magma, {}, {}};
    for (const auto& [c, n] : pr.generators) {
        out.generators.push_back(c);
        out.names.push_back(n);
    }
    return out;
}

TruncatedSeries enumerated_hilbert_series(HilbertEquation which, std::optional<int> m, int order, int jobs) {
    std::vector<BigInt> dims;
    switch (which) {
        case HilbertEquation::NC:
        case HilbertEquation::NCdual: {
            if (!m || *m < 1) throw Error("enumerated_hilbert_series: m required");
            const MagmaPtr nm = make_standard("N", *m);
            if (which == HilbertEquation::NC) {
                dims = enumerate_dims(make_family("NC", nm), order, jobs);
            } else {
                dims = count_filtered(product(nm, nm), dual_clique_filter(*nm, true), order, jobs);
            }
            break;
        }
        case HilbertEquation::E2sub: dims = closure_dims(make_presentation(KnownOperad::E2cubic), order); break;
        case HilbertEquation::MotzSub: dims = closure_dims(make_presentation(KnownOperad::MotzQuad), order); break;
        case HilbertEquation::NCP: dims = closure_dims(make_presentation(KnownOperad::NCP), order); break;
        case HilbertEquation::FF4: dims = closure_dims(make_presentation(KnownOperad::FF4), order); break;
    }
    return TruncatedSeries::from_dims(order, dims);
}

KnownReport verify_known_presentation(KnownOperad which, std::uint64_t seed) {
    switch (which) {
        case KnownOperad::NCP: return verify_ncp();
        case KnownOperad::FF4: return verify_ff4();
        case KnownOperad::BNC: return verify_bnc(seed);
        case KnownOperad::E2cubic: return verify_e2();
        case KnownOperad::MotzQuad: return verify_motzkin();
        case KnownOperad::MT: return verify_mt(seed);
    }
    throw Error("verify_known_presentation: unknown operad");
}

}  // namespace clq
