#include "clq/families.hpp"

#include <algorithm>
#include <unordered_set>

#include "clq/parallel.hpp"

namespace clq {

namespace {

bool allowed(const std::vector<Elem>& set, Elem x) {
    return set.empty() || std::find(set.begin(), set.end(), x) != set.end();
}

std::vector<Elem> resolve(const Magma& m, const std::vector<Elem>& set) {
    return set.empty() ? m.elements() : set;
}

// Backtracking over the arcs of one arity in lexicographic order. An arc is
// made solid only while the partial skeleton still satisfies the filter,
// which is enough because every constraint is monotone.
class Search {
public:
    Search(const Magma& m, const CliqueFilter& f, int n) : f_(f), n_(n) {
        for (int x = 1; x <= n + 1; ++x)
            for (int y = x + 1; y <= n + 1; ++y) arcs_.push_back({x, y});
        const std::size_t a = arcs_.size();
        labels_.resize(a);
        unit_ok_.resize(a);
        diagonal_.resize(a);
        for (std::size_t k = 0; k < a; ++k) {
            const Arc arc = arcs_[k];
            const bool is_base = arc.x == 1 && arc.y == n + 1;
            const bool is_edge = arc.y == arc.x + 1;
            diagonal_[k] = !is_base && !is_edge;
            const auto& set = is_base ? f.base : is_edge ? f.edge : f.diagonal;
            for (Elem x : resolve(m, set))
                if (x != kUnit) labels_[k].push_back(x);
            unit_ok_[k] = allowed(set, kUnit);
        }
        crossing_.resize(a);
        for (std::size_t k = 0; k < a; ++k)
            for (std::size_t j = 0; j < a; ++j)
                if (diagonal_[k] && diagonal_[j] && crosses(arcs_[k], arcs_[j])) crossing_[k].push_back(j);
        solid_.assign(a, 0);
        crossc_.assign(a, 0);
        deg_.assign(static_cast<std::size_t>(n + 2), 0);
    }

    std::size_t arc_total() const { return arcs_.size(); }

    bool can_add(std::size_t k) const {
        const Arc arc = arcs_[k];
        if (f_.max_degree >= 0 && (deg_[arc.x] + 1 > f_.max_degree || deg_[arc.y] + 1 > f_.max_degree))
            return false;
        if (f_.max_crossing >= 0 && diagonal_[k]) {
            int c = 0;
            for (std::size_t j : crossing_[k])
                if (solid_[j]) {
                    ++c;
                    if (crossc_[j] + 1 > f_.max_crossing) return false;
                }
            if (c > f_.max_crossing) return false;
        }
        if (f_.inclusion_free)
            for (std::size_t j = 0; j < arcs_.size(); ++j)
                if (solid_[j] && (includes(arc, arcs_[j]) || includes(arcs_[j], arc))) return false;
        if (f_.acyclic && connected(arc.x, arc.y)) return false;
        return true;
    }

    void add(std::size_t k) {
        solid_[k] = 1;
        ++deg_[arcs_[k].x];
        ++deg_[arcs_[k].y];
        for (std::size_t j : crossing_[k])
            if (solid_[j]) {
                ++crossc_[j];
                ++crossc_[k];
            }
    }

    void remove(std::size_t k) {
        solid_[k] = 0;
        --deg_[arcs_[k].x];
        --deg_[arcs_[k].y];
        for (std::size_t j : crossing_[k])
            if (solid_[j]) {
                --crossc_[j];
                --crossc_[k];
            }
    }

    BigInt count(std::size_t pos) {
        if (pos == arcs_.size()) return 1;
        BigInt total = 0;
        if (unit_ok_[pos]) total += count(pos + 1);
        if (!labels_[pos].empty() && can_add(pos)) {
            add(pos);
            total += labels_[pos].size() * count(pos + 1);
            remove(pos);
        }
        return total;
    }

    // Decisions for the first `depth` arcs: pairs (solid mask, multiplier).
    void prefixes(std::size_t pos, std::size_t depth, std::vector<char>& mask, BigInt mult,
                  std::vector<std::pair<std::vector<char>, BigInt>>& out) {
        if (pos == depth) {
            out.emplace_back(mask, mult);
            return;
        }
        if (unit_ok_[pos]) prefixes(pos + 1, depth, mask, mult, out);
        if (!labels_[pos].empty() && can_add(pos)) {
            add(pos);
            mask[pos] = 1;
            prefixes(pos + 1, depth, mask, mult * labels_[pos].size(), out);
            mask[pos] = 0;
            remove(pos);
        }
    }

    void list(std::size_t pos, std::vector<LabeledArc>& cur, const MagmaPtr& magma, std::vector<Clique>& out) {
        if (pos == arcs_.size()) {
            out.emplace_back(magma, n_, cur);
            return;
        }
        if (unit_ok_[pos]) list(pos + 1, cur, magma, out);
        if (!labels_[pos].empty() && can_add(pos)) {
            add(pos);
            for (Elem x : labels_[pos]) {
                cur.push_back({arcs_[pos], x});
                list(pos + 1, cur, magma, out);
                cur.pop_back();
            }
            remove(pos);
        }
    }

private:
    bool connected(int s, int t) const {
        std::vector<char> seen(static_cast<std::size_t>(n_ + 2), 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            if (v == t) return true;
            for (std::size_t j = 0; j < arcs_.size(); ++j) {
                if (!solid_[j]) continue;
                int w = -1;
                if (arcs_[j].x == v) w = arcs_[j].y;
                if (arcs_[j].y == v) w = arcs_[j].x;
                if (w >= 0 && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return false;
    }

    const CliqueFilter& f_;
    int n_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Elem>> labels_;
    std::vector<char> unit_ok_, diagonal_;
    std::vector<std::vector<std::size_t>> crossing_;
    std::vector<char> solid_;
    std::vector<int> crossc_, deg_;
};

}  // namespace

bool accepts(const CliqueFilter& f, const Clique& p) {
    if (p.arity() == 1) return true;
    for (int x = 1; x <= p.arity() + 1; ++x)
        for (int y = x + 1; y <= p.arity() + 1; ++y) {
            const Arc a{x, y};
            const auto& set = p.is_base(a) ? f.base : p.is_edge(a) ? f.edge : f.diagonal;
            if (!allowed(set, p.at(x, y))) return false;
        }
    const CliqueStats s = statistics(p);
    if (f.max_crossing >= 0 && s.crossing > f.max_crossing) return false;
    if (f.max_degree >= 0 && s.degree > f.max_degree) return false;
    if (f.inclusion_free && !s.is_inclusion_free) return false;
    if (f.acyclic && !s.is_acyclic) return false;
    return true;
}

std::vector<BigInt> count_filtered(const MagmaPtr& magma, const CliqueFilter& f, int n_max, int jobs) {
    if (!magma->is_finite()) throw Error("enumeration needs a finite magma");
    std::vector<BigInt> dims;
    for (int n = 1; n <= n_max; ++n) {
        if (n == 1) {
            dims.emplace_back(1);
            continue;
        }
        Search root(*magma, f, n);
        const std::size_t depth = std::min<std::size_t>(root.arc_total(), 6);
        std::vector<char> mask(root.arc_total(), 0);
        std::vector<std::pair<std::vector<char>, BigInt>> tasks;
        root.prefixes(0, depth, mask, 1, tasks);
        std::vector<BigInt> partial(tasks.size());
        parallel_for(tasks.size(), jobs, [&](std::size_t t) {
            Search s(*magma, f, n);
            for (std::size_t k = 0; k < depth; ++k)
                if (tasks[t].first[k]) s.add(k);
            partial[t] = tasks[t].second * s.count(depth);
        });
        BigInt total = 0;
        for (const auto& c : partial) total += c;
        dims.push_back(total);
    }
    return dims;
}

std::vector<Clique> list_filtered(const MagmaPtr& magma, const CliqueFilter& f, int arity) {
    if (!magma->is_finite()) throw Error("enumeration needs a finite magma");
    if (arity == 1) return {Clique::unit(magma)};
    Search s(*magma, f, arity);
    std::vector<LabeledArc> cur;
    std::vector<Clique> out;
    s.list(0, cur, magma, out);
    std::sort(out.begin(), out.end());
    return out;
}

void FamilySpec::validate() const {
    if (!magma) throw Error("family without magma");
    switch (kind) {
        case FamilyKind::Deg:
        case FamilyKind::Inf:
        case FamilyKind::Acy:
        case FamilyKind::Pat:
        case FamilyKind::For:
        case FamilyKind::Mot:
        case FamilyKind::Dis:
        case FamilyKind::Luc:
            if (magma->is_finite() && !has_no_nontrivial_unit_divisors(*magma))
                throw Error(name() + " needs a magma without nontrivial unit divisors");
            break;
        case FamilyKind::Lab: {
            auto in = [](const std::vector<Elem>& s, Elem x) { return std::find(s.begin(), s.end(), x) != s.end(); };
            if (!in(lab_base, kUnit) || !in(lab_diagonal, kUnit)) throw Error("Lab needs the unit in B and D");
            for (Elem e : lab_edge)
                for (Elem b : lab_base)
                    if (!in(lab_diagonal, magma->op(e, b))) throw Error("Lab needs E * B inside D");
            break;
        }
        default:
            break;
    }
    if ((kind == FamilyKind::Cro || kind == FamilyKind::Deg) && k < 0) throw Error("negative family parameter");
}

CliqueFilter FamilySpec::filter() const {
    CliqueFilter f;
    const std::vector<Elem> unit_only{kUnit};
    switch (kind) {
        case FamilyKind::Cli: break;
        case FamilyKind::Cro: f.max_crossing = k; break;
        case FamilyKind::NC: f.max_crossing = 0; break;
        case FamilyKind::Bub: f.diagonal = unit_only; break;
        case FamilyKind::Deg: f.max_degree = k; break;
        case FamilyKind::Inf: f.inclusion_free = true; break;
        case FamilyKind::Acy: f.acyclic = true; break;
        case FamilyKind::Lab:
            f.base = lab_base;
            f.edge = lab_edge;
            f.diagonal = lab_diagonal;
            break;
        case FamilyKind::Whi: f.base = f.edge = unit_only; break;
        case FamilyKind::WNC:
            f.base = f.edge = unit_only;
            f.max_crossing = 0;
            break;
        case FamilyKind::Pat:
            f.max_degree = 2;
            f.acyclic = true;
            break;
        case FamilyKind::For:
            f.max_crossing = 0;
            f.acyclic = true;
            break;
        case FamilyKind::Mot:
            f.max_crossing = 0;
            f.max_degree = 1;
            break;
        case FamilyKind::Dis:
            f.base = f.edge = unit_only;
            f.max_crossing = 0;
            f.max_degree = 1;
            break;
        case FamilyKind::Luc:
            f.diagonal = unit_only;
            f.max_degree = 1;
            break;
    }
    return f;
}

namespace {

struct KindName {
    std::string_view name;
    FamilyKind kind;
    FamilyMode mode;
};

constexpr KindName kKinds[] = {
    {"Cli", FamilyKind::Cli, FamilyMode::Suboperad}, {"NC", FamilyKind::NC, FamilyMode::Suboperad},
    {"Bub", FamilyKind::Bub, FamilyMode::Quotient},  {"Inf", FamilyKind::Inf, FamilyMode::Quotient},
    {"Acy", FamilyKind::Acy, FamilyMode::Quotient},  {"Whi", FamilyKind::Whi, FamilyMode::Suboperad},
    {"WNC", FamilyKind::WNC, FamilyMode::Suboperad}, {"Pat", FamilyKind::Pat, FamilyMode::Quotient},
    {"For", FamilyKind::For, FamilyMode::Quotient},  {"Mot", FamilyKind::Mot, FamilyMode::Quotient},
    {"Dis", FamilyKind::Dis, FamilyMode::Quotient},  {"Luc", FamilyKind::Luc, FamilyMode::Quotient},
    {"Lab", FamilyKind::Lab, FamilyMode::Suboperad},
};

}  // namespace

std::string FamilySpec::name() const {
    if (kind == FamilyKind::Cro) return "Cro" + std::to_string(k);
    if (kind == FamilyKind::Deg) return "Deg" + std::to_string(k);
    for (const auto& kn : kKinds)
        if (kn.kind == kind) return std::string(kn.name);
    return "?";
}

FamilySpec make_family(std::string_view name, MagmaPtr magma) {
    FamilySpec spec;
    spec.magma = std::move(magma);
    auto parameter = [&](std::string_view prefix) -> std::optional<int> {
        if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size()) return std::nullopt;
        int v = 0;
        for (char c : name.substr(prefix.size())) {
            if (c < '0' || c > '9') return std::nullopt;
            v = v * 10 + (c - '0');
        }
        return v;
    };
    if (auto k = parameter("Cro")) {
        spec.kind = FamilyKind::Cro;
        spec.k = *k;
        spec.mode = FamilyMode::Quotient;
    } else if (auto d = parameter("Deg")) {
        spec.kind = FamilyKind::Deg;
        spec.k = *d;
        spec.mode = FamilyMode::Quotient;
    } else {
        const auto* it = std::find_if(std::begin(kKinds), std::end(kKinds),
                                      [&](const KindName& kn) { return kn.name == name; });
        if (it == std::end(kKinds) || it->kind == FamilyKind::Lab)
            throw Error("unknown family '" + std::string(name) + "'");
        spec.kind = it->kind;
        spec.mode = it->mode;
    }
    spec.validate();
    return spec;
}

FamilySpec make_lab_family(MagmaPtr magma, std::vector<Elem> b, std::vector<Elem> e, std::vector<Elem> d) {
    FamilySpec spec;
    spec.kind = FamilyKind::Lab;
    spec.magma = std::move(magma);
    spec.lab_base = std::move(b);
    spec.lab_edge = std::move(e);
    spec.lab_diagonal = std::move(d);
    spec.validate();
    return spec;
}

bool member(const FamilySpec& spec, const Clique& p) { return accepts(spec.filter(), p); }

std::optional<Clique> quotient_compose_basis(const FamilySpec& spec, const Clique& p, int i, const Clique& q) {
    const CliqueFilter f = spec.filter();
    if (!accepts(f, p) || !accepts(f, q)) throw Error("quotient_compose: operand outside " + spec.name());
    Clique r = compose(p, i, q);
    if (!accepts(f, r)) return std::nullopt;
    return r;
}

LinComb quotient_compose(const FamilySpec& spec, const Clique& p, int i, const Clique& q) {
    auto r = quotient_compose_basis(spec, p, i, q);
    return r ? LinComb(*r) : LinComb();
}

AxiomReport check_family_axioms(const FamilySpec& spec, int max_arity, int jobs) {
    std::vector<Clique> domain;
    for (int n = 1; n <= max_arity; ++n)
        for (auto& c : family_members(spec, n)) domain.push_back(std::move(c));
    const CliqueFilter f = spec.filter();
    if (spec.mode == FamilyMode::Quotient)
        return check_axioms_on(
            domain,
            [&](const Clique& p, int i, const Clique& q) -> std::optional<Clique> {
                Clique r = compose(p, i, q);
                if (!accepts(f, r)) return std::nullopt;
                return r;
            },
            jobs);
    AxiomReport rep = check_axioms_on(
        domain, [](const Clique& p, int i, const Clique& q) -> std::optional<Clique> { return compose(p, i, q); },
        jobs);
    for (const auto& p : domain)
        for (const auto& q : domain)
            for (int i = 1; i <= p.arity(); ++i)
                if (!accepts(f, compose(p, i, q)) && rep.violations.size() < 20)
                    rep.violations.push_back("not closed: " + to_string(p) + " o" + std::to_string(i) + " " +
                                             to_string(q));
    return rep;
}

std::vector<BigInt> enumerate_dims(const FamilySpec& spec, int n_max, int jobs) {
    spec.validate();
    return count_filtered(spec.magma, spec.filter(), n_max, jobs);
}

std::vector<Clique> family_members(const FamilySpec& spec, int arity) {
    return list_filtered(spec.magma, spec.filter(), arity);
}

std::vector<std::vector<Clique>> closure(const MagmaPtr& magma, const std::vector<Clique>& generators, int n_max) {
    std::vector<std::vector<Clique>> levels(static_cast<std::size_t>(n_max) + 1);
    if (n_max < 1) return levels;
    levels[1].push_back(Clique::unit(magma));
    for (int n = 2; n <= n_max; ++n) {
        std::unordered_set<Clique, CliqueHash> found;
        for (const auto& g : generators)
            if (g.arity() == n) found.insert(g);
        // Every element of arity n splits at its root into two strictly
        // smaller elements, so one pass over the lower levels suffices.
        for (int a = 2; a < n; ++a) {
            const int b = n - a + 1;
            for (const auto& p : levels[a])
                for (const auto& q : levels[b])
                    for (int i = 1; i <= a; ++i) found.insert(compose(p, i, q));
        }
        levels[n].assign(found.begin(), found.end());
        std::sort(levels[n].begin(), levels[n].end());
    }
    return levels;
}

std::vector<Clique> inclusion_lemma_violations(const MagmaPtr& magma, int max_arity) {
    std::vector<Clique> bad;
    for (int n = 2; n <= max_arity; ++n)
        for (const auto& p : all_cliques(magma, n)) {
            const CliqueStats s = statistics(p);
            bool ok = true;
            if (!s.is_acyclic && s.degree < 2) ok = false;
            if ((!s.is_inclusion_free || !s.is_bubble) && s.degree < 1) ok = false;
            if ((!s.is_noncrossing || s.degree > 2) && s.is_bubble) ok = false;
            if ((s.degree > 2 || !s.is_acyclic) && s.is_inclusion_free) ok = false;
            if (!ok) bad.push_back(p);
        }
    return bad;
}

}  // namespace clq
