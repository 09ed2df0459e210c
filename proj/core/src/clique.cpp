#include "clq/clique.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace clq {

namespace {

void check_arc(int arity, Arc a) {
    if (a.x < 1 || a.x >= a.y || a.y > arity + 1)
        throw Error("clique: arc " + std::to_string(a.x) + "-" + std::to_string(a.y) +
                    " out of range for arity " + std::to_string(arity));
}

}  // namespace

Clique::Clique(MagmaPtr magma, int arity) : magma_(std::move(magma)), arity_(arity) {
    if (arity < 1) throw Error("clique: arity must be positive");
}

Clique::Clique(MagmaPtr magma, int arity, std::vector<LabeledArc> arcs)
    : magma_(std::move(magma)), arity_(arity) {
    if (arity < 1) throw Error("clique: arity must be positive");
    std::erase_if(arcs, [](const LabeledArc& a) { return a.label == kUnit; });
    std::sort(arcs.begin(), arcs.end());
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        check_arc(arity, arcs[k].arc);
        if (!magma_->contains(arcs[k].label)) throw Error("clique: label outside the magma");
        if (k > 0 && arcs[k].arc == arcs[k - 1].arc) throw Error("clique: repeated arc");
    }
    if (arity == 1 && !arcs.empty()) throw Error("clique: the arity-1 clique has no solid arc");
    arcs_ = std::move(arcs);
}

Clique Clique::triangle(MagmaPtr magma, Elem base, Elem e1, Elem e2) {
    return Clique(std::move(magma), 2, {{{1, 3}, base}, {{1, 2}, e1}, {{2, 3}, e2}});
}

Clique Clique::bubble(MagmaPtr magma, Elem base, const std::vector<Elem>& border) {
    const int n = static_cast<int>(border.size());
    std::vector<LabeledArc> arcs{{{1, n + 1}, base}};
    for (int i = 1; i <= n; ++i) arcs.push_back({{i, i + 1}, border[i - 1]});
    return Clique(std::move(magma), n, std::move(arcs));
}

Elem Clique::at(int x, int y) const {
    const Arc a{x, y};
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a,
                               [](const LabeledArc& l, const Arc& r) { return l.arc < r; });
    return (it != arcs_.end() && it->arc == a) ? it->label : kUnit;
}

Clique Clique::with(Arc a, Elem label) const {
    check_arc(arity_, a);
    std::vector<LabeledArc> arcs;
    arcs.reserve(arcs_.size() + 1);
    for (const auto& l : arcs_)
        if (l.arc != a) arcs.push_back(l);
    arcs.push_back({a, label});
    return Clique(magma_, arity_, std::move(arcs));
}

std::size_t Clique::hash() const {
    std::size_t h = static_cast<std::size_t>(arity_) * 0x9E3779B97F4A7C15ull;
    for (const auto& l : arcs_) {
        const std::size_t v = (static_cast<std::size_t>(l.arc.x) << 40) ^
                              (static_cast<std::size_t>(l.arc.y) << 24) ^ static_cast<std::size_t>(l.label);
        h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return h;
}

Clique compose(const Clique& p, int i, const Clique& q) {
    const int n = p.arity();
    const int m = q.arity();
    if (i < 1 || i > n) throw Error("compose: index " + std::to_string(i) + " out of range");
    if (!p.magma()->same_as(*q.magma())) throw Error("compose: magma mismatch");
    const Magma& mg = *p.magma();
    auto shift = [&](int v) { return v <= i ? v : v + m - 1; };
    std::vector<LabeledArc> arcs;
    arcs.reserve(p.arcs().size() + q.arcs().size());
    for (const auto& l : p.arcs()) {
        if (l.arc.x == i && l.arc.y == i + 1) continue;
        arcs.push_back({{shift(l.arc.x), shift(l.arc.y)}, l.label});
    }
    for (const auto& l : q.arcs()) {
        if (l.arc.x == 1 && l.arc.y == m + 1) continue;
        arcs.push_back({{l.arc.x + i - 1, l.arc.y + i - 1}, l.label});
    }
    const Elem glued = mg.op(p.edge(i), q.base());
    if (glued != kUnit) arcs.push_back({{i, i + m}, glued});
    return Clique(p.magma(), n + m - 1, std::move(arcs));
}

CliqueStats statistics(const Clique& p) {
    const int n = p.arity();
    CliqueStats s;
    s.is_triangle = n == 2;
    s.skeleton.assign(n + 2, {});
    s.border.resize(n);
    for (int i = 1; i <= n; ++i) s.border[i - 1] = p.edge(i);

    std::vector<int> parent(n + 2);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };

    std::vector<Arc> diagonals;
    for (const auto& l : p.arcs()) {
        const Arc a = l.arc;
        s.skeleton[a.x].push_back(a.y);
        s.skeleton[a.y].push_back(a.x);
        if (p.is_diagonal(a)) {
            diagonals.push_back(a);
            s.is_bubble = false;
        } else {
            s.is_white = false;
        }
        const int rx = find(a.x), ry = find(a.y);
        if (rx == ry) s.is_acyclic = false;
        parent[rx] = ry;
    }
    for (int v = 1; v <= n + 1; ++v)
        s.degree = std::max(s.degree, static_cast<int>(s.skeleton[v].size()));
    for (const Arc& a : diagonals) {
        int c = 0;
        for (const Arc& b : diagonals) c += crosses(a, b) ? 1 : 0;
        s.crossing = std::max(s.crossing, c);
    }
    s.is_noncrossing = s.crossing == 0;
    for (std::size_t a = 0; a < p.arcs().size() && s.is_inclusion_free; ++a)
        for (std::size_t b = 0; b < p.arcs().size(); ++b)
            if (includes(p.arcs()[a].arc, p.arcs()[b].arc)) {
                s.is_inclusion_free = false;
                break;
            }
    for (int x = 1; x <= n + 1 && s.is_prime; ++x)
        for (int y = x + 2; y <= n + 1; ++y) {
            if (x == 1 && y == n + 1) continue;
            const Arc d{x, y};
            bool crossed = false;
            for (const Arc& b : diagonals)
                if (crosses(d, b)) {
                    crossed = true;
                    break;
                }
            if (!crossed) {
                s.is_prime = false;
                break;
            }
        }
    return s;
}

Clique rotate(const Clique& p) {
    const int n = p.arity();
    std::vector<LabeledArc> arcs;
    arcs.reserve(p.arcs().size());
    for (const auto& l : p.arcs()) {
        const Arc a = l.arc;
        const Arc t = a.x >= 2 ? Arc{a.x - 1, a.y - 1} : Arc{a.y - 1, n + 1};
        arcs.push_back({t, l.label});
    }
    return Clique(p.magma(), n, std::move(arcs));
}

Clique returned(const Clique& p) {
    const int n = p.arity();
    std::vector<LabeledArc> arcs;
    arcs.reserve(p.arcs().size());
    for (const auto& l : p.arcs()) arcs.push_back({{n - l.arc.y + 2, n - l.arc.x + 2}, l.label});
    return Clique(p.magma(), n, std::move(arcs));
}

Clique relabel_unchecked(const Clique& p, const MagmaPtr& target, const std::function<Elem(Elem)>& f) {
    std::vector<LabeledArc> arcs;
    arcs.reserve(p.arcs().size());
    for (const auto& l : p.arcs()) arcs.push_back({l.arc, f(l.label)});
    return Clique(target, p.arity(), std::move(arcs));
}

Clique relabel(const Clique& p, const MagmaMorphism& theta) {
    if (!theta.verify()) throw Error("relabel: map is not a unitary magma morphism");
    if (!p.magma()->same_as(*theta.source)) throw Error("relabel: clique is not over the source magma");
    return relabel_unchecked(p, theta.target, theta.map);
}

std::string to_string(const Clique& p) {
    std::string s = "clique " + std::to_string(p.arity()) + " {";
    bool first = true;
    for (const auto& l : p.arcs()) {
        s += first ? " " : " ; ";
        s += std::to_string(l.arc.x) + "-" + std::to_string(l.arc.y) + ":" + p.magma()->name(l.label);
        first = false;
    }
    return s + " }";
}

void TextReader::skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool TextReader::at_end() {
    skip_space();
    return pos_ >= text_.size();
}

char TextReader::peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool TextReader::try_consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
        pos_ += token.size();
        return true;
    }
    return false;
}

void TextReader::expect(std::string_view token) {
    if (!try_consume(token)) fail("expected '" + std::string(token) + "'");
}

int TextReader::read_int() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || !std::isdigit(static_cast<unsigned char>(text_[pos_ - 1]))) fail("expected integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
}

std::string TextReader::read_label() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '{' || text_[pos_] == '(')) {
        int depth = 0;
        do {
            const char c = text_[pos_];
            if (c == '{' || c == '(') ++depth;
            if (c == '}' || c == ')') --depth;
            ++pos_;
        } while (depth > 0 && pos_ < text_.size());
        if (depth != 0) fail("unbalanced label");
    } else {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c)) || c == ';' || c == ',' || c == ']' || c == '}' ||
                c == ')' || c == '>' || c == ':' || c == '[')
                break;
            ++pos_;
        }
    }
    if (pos_ == start) fail("expected label");
    return std::string(text_.substr(start, pos_ - start));
}

void TextReader::fail(const std::string& what) const {
    throw Error("parse error at offset " + std::to_string(pos_) + ": " + what);
}

Clique read_clique(const MagmaPtr& magma, TextReader& in) {
    in.expect("clique");
    const int n = in.read_int();
    in.expect("{");
    std::vector<LabeledArc> arcs;
    if (!in.try_consume("}")) {
        do {
            const int x = in.read_int();
            in.expect("-");
            const int y = in.read_int();
            in.expect(":");
            const Elem label = magma->parse_element(in.read_label());
            arcs.push_back({{x, y}, label});
        } while (in.try_consume(";"));
        in.expect("}");
    }
    return Clique(magma, n, std::move(arcs));
}

Clique parse_clique(const MagmaPtr& magma, std::string_view text) {
    TextReader in(text);
    Clique c = read_clique(magma, in);
    if (!in.at_end()) in.fail("trailing input");
    return c;
}

std::vector<Clique> all_cliques(const MagmaPtr& magma, int arity) {
    const auto m = static_cast<Elem>(magma->size());
    std::vector<Arc> arcs;
    for (int x = 1; x <= arity + 1; ++x)
        for (int y = x + 1; y <= arity + 1; ++y) arcs.push_back({x, y});
    if (arity == 1) return {Clique::unit(magma)};
    std::vector<Elem> digits(arcs.size(), 0);
    std::vector<Clique> out;
    while (true) {
        std::vector<LabeledArc> labeled;
        for (std::size_t k = 0; k < arcs.size(); ++k)
            if (digits[k] != kUnit) labeled.push_back({arcs[k], digits[k]});
        out.emplace_back(magma, arity, std::move(labeled));
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == m) digits[k++] = 0;
        if (k == digits.size()) break;
    }
    return out;
}

}  // namespace clq
