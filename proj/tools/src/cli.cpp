#include "clq_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "clq/bases.hpp"
#include "clq/families.hpp"
#include "clq/knownops.hpp"
#include "clq/ncm.hpp"
#include "clq/ratfct.hpp"
#include "clq/rewrite.hpp"
#include "clq/series.hpp"

namespace clq::cli {
namespace {

using nlohmann::json;

json to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

json to_json(const std::vector<BigInt>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

std::string join(const std::vector<BigInt>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x.str();
    return s;
}

std::vector<BigInt> parse_int_list(const std::string& text) {
    std::vector<BigInt> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.empty()) continue;
        if (item.find_first_not_of("-0123456789") != std::string::npos) throw Error("not an integer: " + item);
        out.emplace_back(item);
    }
    return out;
}

struct Report {
    explicit Report(std::string name) : command(std::move(name)) {}

    std::string command;
    bool pass = true;
    std::optional<std::uint64_t> seed;
    json data = json::object();
    std::vector<std::string> lines;
    std::vector<std::string> counterexamples;
    // arity,count rows; dims[k] is arity k + 1.
    std::optional<std::vector<BigInt>> table;

    void fail_with(const std::string& what) {
        pass = false;
        counterexamples.push_back(what);
    }
    void check(bool ok, const std::string& what) {
        if (!ok) fail_with(what);
    }
    void absorb(const std::vector<std::string>& found) {
        for (const auto& c : found) fail_with(c);
    }
};

enum class Format { Text, Json, Csv };

struct Globals {
    std::string format = "text";
    std::uint64_t seed = 1;
    int jobs = 1;
};

void emit(const Report& r, Format fmt, std::ostream& out) {
    switch (fmt) {
        case Format::Json: {
            json j;
            j["command"] = r.command;
            j["status"] = r.pass ? "pass" : "fail";
            if (r.seed) j["seed"] = *r.seed;
            j["data"] = r.data;
            j["data"]["counterexamples"] = r.counterexamples;
            out << j.dump(2) << "\n";
            return;
        }
        case Format::Csv:
            out << "arity,count\n";
            for (std::size_t k = 0; k < r.table->size(); ++k) out << k + 1 << "," << (*r.table)[k] << "\n";
            return;
        case Format::Text:
            out << r.command << ": " << (r.pass ? "pass" : "fail") << "\n";
            if (r.seed) out << "seed " << *r.seed << "\n";
            for (const auto& l : r.lines) out << l << "\n";
            for (const auto& c : r.counterexamples) out << "counterexample: " << c << "\n";
            return;
    }
}

std::optional<DimFormula> formula_for(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Cli: return DimFormula::Cli;
        case FamilyKind::NC: return DimFormula::NC;
        case FamilyKind::Inf: return DimFormula::Inf;
        case FamilyKind::WNC: return DimFormula::WNC;
        default: return std::nullopt;
    }
}

std::vector<BigInt> levels_to_dims(const std::vector<std::vector<Clique>>& levels) {
    std::vector<BigInt> dims;
    for (std::size_t n = 1; n < levels.size(); ++n) dims.emplace_back(levels[n].size());
    return dims;
}

HilbertEquation parse_equation(const std::string& s) {
    if (s == "NC") return HilbertEquation::NC;
    if (s == "NCdual") return HilbertEquation::NCdual;
    if (s == "E2sub") return HilbertEquation::E2sub;
    if (s == "MotzSub") return HilbertEquation::MotzSub;
    if (s == "NCP") return HilbertEquation::NCP;
    if (s == "FF4") return HilbertEquation::FF4;
    throw Error("unknown equation: " + s);
}

void add_known(Report& r, const KnownReport& k) {
    json checks = json::array();
    for (const auto& c : k.checks) {
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        r.lines.push_back(std::string(c.ok ? "ok   " : "FAIL ") + c.name + (c.detail.empty() ? "" : "  " + c.detail));
        r.check(c.ok, to_string(k.which) + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    }
    r.lines.push_back(to_string(k.which) + " dims " + join(k.dims) + " expected " + join(k.expected_dims));
    r.check(k.dims == k.expected_dims,
            to_string(k.which) + ": dims " + join(k.dims) + " differ from " + join(k.expected_dims));
    r.data[to_string(k.which)] = {{"checks", checks}, {"dims", to_json(k.dims)}, {"expected_dims", to_json(k.expected_dims)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations on operads of decorated cliques", "clq"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--seed", g.seed, "Seed for randomized suites");
    app.add_option("--jobs", g.jobs, "Worker threads for exhaustive sweeps")->check(CLI::PositiveNumber);

    std::function<Report()> action;
    bool has_table = false;

    // dims
    std::string family = "NC", magma_spec = "N2", expect;
    int max_arity = 5;
    auto* dims = app.add_subcommand("dims", "Dimensions of a family of clique operads");
    dims->add_option("--family", family, "Cli, NC, Bub, Inf, Acy, Whi, WNC, Pat, For, Mot, Dis, Luc, Cro<k>, Deg<k>");
    dims->add_option("--magma", magma_spec, "Z, N<l>, D<l>, E<l>, S<l>, BNC or a product AxB");
    dims->add_option("--max-arity", max_arity)->check(CLI::Range(1, 12));
    dims->add_option("--expect", expect, "Comma-separated expected dimensions from arity 1");
    dims->callback([&] {
        has_table = true;
        action = [&] {
            Report r{"dims"};
            const FamilySpec spec = make_family(family, parse_magma_spec(magma_spec));
            const auto d = enumerate_dims(spec, max_arity, g.jobs);
            r.table = d;
            r.data = {{"family", spec.name()}, {"magma", magma_spec}, {"dims", to_json(d)}};
            r.lines.push_back(spec.name() + " over " + magma_spec + ": " + join(d));
            if (!expect.empty()) {
                const auto want = parse_int_list(expect);
                const std::vector<BigInt> got(d.begin(), d.begin() + std::min(d.size(), want.size()));
                r.data["expected"] = to_json(want);
                r.check(got == want, "expected " + join(want) + ", enumerated " + join(got));
            }
            const auto f = formula_for(spec.kind);
            if (f && spec.magma->is_finite()) {
                FormulaParams p;
                p.m = static_cast<int>(spec.magma->size());
                const auto closed = dim_formula_table(*f, max_arity, p);
                r.data["formula"] = to_json(closed);
                r.lines.push_back("closed form: " + join(closed));
                r.check(closed == d, "closed form " + join(closed) + " differs from enumeration " + join(d));
            }
            return r;
        };
    });

    // closure
    std::vector<std::string> gens;
    bool list = false;
    int closure_arity = 4;
    std::string closure_magma = "D0";
    auto* clo = app.add_subcommand("closure", "Suboperad generated by cliques");
    clo->add_option("--magma", closure_magma);
    clo->add_option("--gen", gens, "Generator in the clique text format (repeatable)")->required();
    clo->add_option("--max-arity", closure_arity)->check(CLI::Range(1, 10));
    clo->add_option("--expect", expect, "Comma-separated expected dimensions from arity 1");
    clo->add_flag("--list", list, "List the elements");
    clo->callback([&] {
        has_table = true;
        action = [&] {
            Report r{"closure"};
            const MagmaPtr m = parse_magma_spec(closure_magma);
            std::vector<Clique> generators;
            for (const auto& s : gens) generators.push_back(parse_clique(m, s));
            const auto levels = closure(m, generators, closure_arity);
            const auto d = levels_to_dims(levels);
            r.table = d;
            r.data = {{"magma", closure_magma}, {"generators", gens}, {"dims", to_json(d)}};
            r.lines.push_back("dims " + join(d));
            if (list) {
                json elems = json::array();
                for (std::size_t n = 1; n < levels.size(); ++n)
                    for (const auto& p : levels[n]) {
                        elems.push_back(to_string(p));
                        r.lines.push_back(to_string(p));
                    }
                r.data["elements"] = elems;
            }
            if (!expect.empty()) {
                const auto want = parse_int_list(expect);
                const std::vector<BigInt> got(d.begin(), d.begin() + std::min(d.size(), want.size()));
                r.check(got == want, "expected " + join(want) + ", got " + join(got));
            }
            return r;
        };
    });

    // verify-axioms
    std::string axiom_magma = "D0", axiom_family;
    int axiom_arity = 3;
    bool symmetries = false;
    auto* ax = app.add_subcommand("verify-axioms", "Exhaustive operad axiom sweep");
    ax->add_option("--magma", axiom_magma);
    ax->add_option("--max-arity", axiom_arity)->check(CLI::Range(1, 5));
    ax->add_option("--family", axiom_family, "Check composition inside this family instead");
    ax->add_flag("--symmetries", symmetries, "Also check the reflection and rotation maps");
    ax->callback([&] {
        action = [&] {
            Report r{"verify-axioms"};
            const MagmaPtr m = parse_magma_spec(axiom_magma);
            const AxiomReport a = axiom_family.empty()
                                      ? check_operad_axioms(m, axiom_arity, g.jobs)
                                      : check_family_axioms(make_family(axiom_family, m), axiom_arity, g.jobs);
            r.data = {{"magma", axiom_magma},
                      {"sequential_checked", a.sequential_checked},
                      {"parallel_checked", a.parallel_checked},
                      {"unit_checked", a.unit_checked}};
            if (!axiom_family.empty()) r.data["family"] = axiom_family;
            r.lines.push_back("sequential " + std::to_string(a.sequential_checked) + ", parallel " +
                              std::to_string(a.parallel_checked) + ", unit " + std::to_string(a.unit_checked));
            r.absorb(a.violations);
            if (symmetries) {
                const SymmetryReport s = check_symmetries(m, axiom_arity);
                r.data["reflection_checked"] = s.reflection_checked;
                r.data["rotation_checked"] = s.rotation_checked;
                r.lines.push_back("reflection " + std::to_string(s.reflection_checked) + ", rotation " +
                                  std::to_string(s.rotation_checked));
                r.absorb(s.violations);
                const auto collision = find_basic_collision(m);
                const bool cancellable = is_right_cancellable(*m);
                r.data["right_cancellable"] = cancellable;
                if (collision) {
                    const std::string text = to_string(collision->x) + " o" + std::to_string(collision->i) + " " +
                                             to_string(collision->q) + " = " + to_string(collision->y) + " o" +
                                             std::to_string(collision->i) + " " + to_string(collision->q);
                    r.data["collision"] = text;
                    r.lines.push_back("collision: " + text);
                }
                r.check(collision.has_value() != cancellable,
                        cancellable ? "collision over a right cancellable magma" : "no collision found");
            }
            return r;
        };
    });

    // normal-forms
    std::string nf_magma = "N2";
    int nf_arity = 3;
    bool count_only = false;
    auto* nf = app.add_subcommand("normal-forms", "Normal forms of the rewrite system");
    nf->add_option("--magma", nf_magma);
    nf->add_option("--arity", nf_arity)->check(CLI::Range(1, 8));
    nf->add_flag("--count-only", count_only);
    nf->callback([&] {
        action = [&] {
            Report r{"normal-forms"};
            const MagmaPtr m = parse_magma_spec(nf_magma);
            if (!m->is_finite()) throw Error("normal-forms needs a finite magma");
            const BigInt count = count_normal_forms(*m, nf_arity);
            FormulaParams p;
            p.m = static_cast<int>(m->size());
            const BigInt want = dim_formula(DimFormula::NC, nf_arity, p);
            r.data = {{"magma", nf_magma}, {"arity", nf_arity}, {"count", to_json(count)}, {"expected", to_json(want)}};
            r.lines.push_back("count " + count.str() + ", noncrossing dimension " + want.str());
            r.check(count == want, "count " + count.str() + " differs from " + want.str());
            if (!count_only) {
                json forms = json::array();
                for (const auto& t : normal_forms(m, nf_arity)) {
                    forms.push_back(to_string(t));
                    r.lines.push_back(to_string(t));
                    r.check(is_normal_form(t), "not a normal form: " + to_string(t));
                }
                r.data["normal_forms"] = forms;
            }
            return r;
        };
    });

    // relations
    std::string rel_magma = "N2";
    bool dual = false;
    auto* rel = app.add_subcommand("relations", "Quadratic relation spaces");
    rel->add_option("--magma", rel_magma);
    rel->add_flag("--dual", dual, "List the relations of the Koszul dual");
    rel->callback([&] {
        action = [&] {
            Report r{"relations"};
            const MagmaPtr m = parse_magma_spec(rel_magma);
            const auto rels = relation_space(m);
            const auto duals = dual_relation_space(m);
            const std::size_t rank = rank_of(rels), dual_rank = rank_of(duals);
            const std::size_t trees = arity3_trees(m).size();
            json listed = json::array();
            for (const auto& f : dual ? duals : rels) {
                listed.push_back(to_string(f));
                r.lines.push_back(to_string(f));
            }
            r.data = {{"magma", rel_magma},
                      {"dual", dual},
                      {"rank", rank},
                      {"dual_rank", dual_rank},
                      {"trees", trees},
                      {"relations", listed}};
            r.lines.push_back("rank " + std::to_string(rank) + ", dual rank " + std::to_string(dual_rank) +
                              ", trees " + std::to_string(trees));
            r.check(rank + dual_rank == trees, "ranks do not sum to the number of trees");
            std::size_t bad = 0;
            for (const auto& f : rels)
                for (const auto& h : duals)
                    if (pairing(f, h) != 0 && bad++ < 5) r.fail_with("nonzero pairing: " + to_string(f) + " | " + to_string(h));
            for (const auto& f : rels) {
                LinComb value;
                for (const auto& [t, c] : f.terms()) value.add(eval(t, m), c);
                r.check(value.is_zero(), "relation does not vanish: " + to_string(f));
            }
            return r;
        };
    });

    // hilbert-check
    std::string which_eq = "NC";
    std::optional<int> eq_m;
    int order = 6;
    auto* hil = app.add_subcommand("hilbert-check", "Hilbert series against their algebraic equations");
    hil->add_option("--which", which_eq, "NC, NCdual, E2sub, MotzSub, NCP, FF4 or Koszul");
    hil->add_option("--m", eq_m, "Magma size")->check(CLI::Range(1, 6));
    hil->add_option("--order", order)->check(CLI::Range(1, 10));
    hil->callback([&] {
        action = [&] {
            Report r{"hilbert-check"};
            r.data = {{"which", which_eq}, {"order", order}};
            if (eq_m) r.data["m"] = *eq_m;
            TruncatedSeries residual(order);
            if (which_eq == "Koszul") {
                if (!eq_m) throw Error("Koszul needs --m");
                residual = koszul_inverse_check(*eq_m, order) - TruncatedSeries::variable(order);
            } else {
                const HilbertEquation eq = parse_equation(which_eq);
                const TruncatedSeries h = enumerated_hilbert_series(eq, eq_m, order, g.jobs);
                std::vector<BigInt> coeffs;
                for (const auto& c : h.coefficients()) coeffs.push_back(numerator(c));
                r.data["series"] = to_json(coeffs);
                r.lines.push_back("series " + join(coeffs));
                residual = check_hilbert_equation(eq, eq_m, h);
            }
            json res = json::array();
            for (const auto& c : residual.coefficients()) res.push_back(to_string(c));
            r.data["residual"] = res;
            for (int k = 0; k <= residual.order(); ++k)
                r.check(residual[k] == 0, "residual coefficient of t^" + std::to_string(k) + " is " + to_string(residual[k]));
            return r;
        };
    });

    // morphism-check
    std::string kind = "frac", m1 = "N2", m2 = "D0";
    int samples = 200, morph_arity = 4;
    bool expanded = false;
    auto* mor = app.add_subcommand("morphism-check", "Morphism properties on exhaustive or seeded samples");
    mor->add_option("--kind", kind)->check(CLI::IsMember({"frac", "hadamard", "schroder", "mt"}));
    mor->add_option("--samples", samples)->check(CLI::PositiveNumber);
    mor->add_option("--max-arity", morph_arity)->check(CLI::Range(1, 6));
    mor->add_option("--magma", m1, "Magma (first factor for hadamard)");
    mor->add_option("--magma2", m2, "Second factor for hadamard");
    mor->add_flag("--expanded", expanded, "Compare expanded rational functions in the frac check");
    mor->callback([&] {
        action = [&] {
            Report r{"morphism-check"};
            r.data = {{"kind", kind}};
            if (kind == "frac") {
                r.seed = g.seed;
                const auto f = check_frac_morphism(g.seed, samples, morph_arity, expanded);
                const auto s = check_star_and_inverse(g.seed, samples, morph_arity);
                r.data["morphism_checked"] = f.checked;
                r.data["star_inverse_checked"] = s.checked;
                r.lines.push_back("morphism " + std::to_string(f.checked) + ", star and inverse " +
                                  std::to_string(s.checked));
                r.absorb(f.counterexamples);
                r.absorb(s.counterexamples);
            } else if (kind == "hadamard") {
                const auto a = check_hadamard_iso(parse_magma_spec(m1), parse_magma_spec(m2), morph_arity);
                r.data["checked"] = a.sequential_checked;
                r.lines.push_back("checked " + std::to_string(a.sequential_checked));
                r.absorb(a.violations);
            } else if (kind == "schroder") {
                const MagmaPtr m = parse_magma_spec(m1);
                const auto trip = check_bubble_roundtrips(m, morph_arity);
                const auto square = check_schroder_square(m, std::min(morph_arity, 3));
                r.data["roundtrip_checked"] = trip.checked;
                r.data["square_checked"] = square.checked;
                r.lines.push_back("round trips " + std::to_string(trip.checked) + ", squares " +
                                  std::to_string(square.checked));
                r.absorb(trip.counterexamples);
                r.absorb(square.counterexamples);
                const auto w = find_bubble_tree_non_morphism(m);
                if (w) {
                    const std::string text = to_string(w->p) + " o" + std::to_string(w->i) + " " + to_string(w->q) +
                                             " has bubble tree " + to_string(w->composed) + " with " +
                                             std::to_string(w->composed.internal_nodes()) +
                                             " node, plain grafting keeps 2";
                    r.data["non_morphism"] = text;
                    r.lines.push_back("not a morphism for plain grafting: " + text);
                }
                r.check(w.has_value(), "no witness against plain grafting");
            } else {
                r.seed = g.seed;
                add_known(r, verify_known_presentation(KnownOperad::MT, g.seed));
            }
            return r;
        };
    });

    // known-ops
    std::string which_op = "all";
    auto* known = app.add_subcommand("known-ops", "Presentations of known operads inside clique operads");
    known->add_option("--which", which_op, "NCP, FF4, BNC, E2cubic, MotzQuad, MT or all");
    known->callback([&] {
        action = [&] {
            Report r{"known-ops"};
            r.seed = g.seed;
            std::vector<KnownOperad> ops;
            if (which_op == "all")
                ops = {KnownOperad::NCP, KnownOperad::FF4, KnownOperad::BNC, KnownOperad::E2cubic,
                       KnownOperad::MotzQuad, KnownOperad::MT};
            else
                ops = {parse_known_operad(which_op)};
            for (auto op : ops) add_known(r, verify_known_presentation(op, g.seed));
            return r;
        };
    });

    // bases-check
    std::string basis_magma = "D0", square_magma = "N2";
    int basis_arity = 3;
    auto* bas = app.add_subcommand("bases-check", "H and K bases against the fundamental basis");
    bas->add_option("--magma", basis_magma, "Magma for the round trips");
    bas->add_option("--max-arity", basis_arity)->check(CLI::Range(1, 4));
    bas->add_option("--square-magma", square_magma, "Magma for the composition square on arity-2 pairs");
    bas->callback([&] {
        action = [&] {
            Report r{"bases-check"};
            const auto trip = check_basis_roundtrips(parse_magma_spec(basis_magma), basis_arity);
            const auto square = check_basis_square(parse_magma_spec(square_magma), 2);
            r.data = {{"magma", basis_magma},
                      {"square_magma", square_magma},
                      {"roundtrip_checked", trip.checked},
                      {"square_checked", square.checked}};
            r.lines.push_back("round trips " + std::to_string(trip.checked) + ", squares " +
                              std::to_string(square.checked));
            r.absorb(trip.counterexamples);
            r.absorb(square.counterexamples);
            return r;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    const Format fmt = g.format == "json" ? Format::Json : g.format == "csv" ? Format::Csv : Format::Text;
    if (fmt == Format::Csv && !has_table) {
        err << "usage error: csv output is only available for dims and closure\n";
        return 2;
    }
    try {
        Report r = action();
        emit(r, fmt, out);
        return r.pass ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace clq::cli
