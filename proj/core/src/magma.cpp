#include "clq/magma.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <sstream>

namespace clq {

MagmaPtr Magma::finite(std::string label, std::vector<std::string> names,
                       std::vector<std::vector<Elem>> table) {
    const std::size_t n = names.size();
    if (n == 0) throw Error("magma: empty carrier");
    if (table.size() != n) throw Error("magma: table has wrong number of rows");
    auto m = std::shared_ptr<Magma>(new Magma());
    m->kind_ = Kind::Finite;
    m->label_ = std::move(label);
    m->names_ = std::move(names);
    m->table_.reserve(n * n);
    for (const auto& row : table) {
        if (row.size() != n) throw Error("magma: table row has wrong length");
        for (Elem v : row) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) throw Error("magma: table entry out of range");
            m->table_.push_back(v);
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        const auto e = static_cast<Elem>(a);
        if (m->op(kUnit, e) != e || m->op(e, kUnit) != e)
            throw Error("magma: element 0 is not a two-sided unit");
    }
    return m;
}

MagmaPtr Magma::integers() {
    static const MagmaPtr z = [] {
        auto m = std::shared_ptr<Magma>(new Magma());
        m->kind_ = Kind::Integers;
        m->label_ = "Z";
        return m;
    }();
    return z;
}

std::size_t Magma::size() const {
    if (!is_finite()) throw Error("magma: the integers have no finite carrier");
    return names_.size();
}

bool Magma::contains(Elem a) const {
    if (!is_finite()) return true;
    return a >= 0 && static_cast<std::size_t>(a) < names_.size();
}

std::string Magma::name(Elem a) const {
    if (!is_finite()) return std::to_string(a);
    if (!contains(a)) throw Error("magma: element index out of range");
    return names_[static_cast<std::size_t>(a)];
}

Elem Magma::parse_element(std::string_view text) const {
    if (!is_finite()) {
        if (!text.empty() && text.front() == '+') text.remove_prefix(1);
        Elem v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || ptr != text.data() + text.size())
            throw Error("magma Z: bad integer '" + std::string(text) + "'");
        return v;
    }
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == text) return static_cast<Elem>(i);
    throw Error("magma " + label_ + ": unknown element '" + std::string(text) + "'");
}

std::vector<Elem> Magma::elements() const {
    std::vector<Elem> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Elem>(i);
    return out;
}

std::vector<Elem> Magma::non_unit() const {
    auto all = elements();
    all.erase(all.begin());
    return all;
}

bool Magma::same_as(const Magma& other) const {
    if (this == &other) return true;
    return kind_ == other.kind_ && names_ == other.names_ && table_ == other.table_;
}

namespace {

MagmaPtr from_op(std::string label, std::vector<std::string> names,
                 const std::function<Elem(Elem, Elem)>& op) {
    const auto n = static_cast<Elem>(names.size());
    std::vector<std::vector<Elem>> table(names.size(), std::vector<Elem>(names.size()));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) table[a][b] = op(a, b);
    return Magma::finite(std::move(label), std::move(names), std::move(table));
}

std::string subset_name(Elem mask) {
    std::string s = "{";
    bool first = true;
    for (int j = 0; (Elem{1} << j) <= mask; ++j) {
        if (mask & (Elem{1} << j)) {
            if (!first) s += ',';
            s += std::to_string(j + 1);
            first = false;
        }
    }
    return s + "}";
}

}  // namespace

MagmaPtr make_standard(std::string_view name, int l) {
    const std::string tag = std::string(name) + std::to_string(l);
    if (name == "Z") return Magma::integers();
    if (name == "N") {
        if (l < 1) throw Error("magma N: l must be >= 1");
        std::vector<std::string> names;
        for (int i = 0; i < l; ++i) names.push_back(std::to_string(i));
        return from_op(tag, names, [l](Elem a, Elem b) { return (a + b) % l; });
    }
    if (name == "D") {
        if (l < 0) throw Error("magma D: l must be >= 0");
        std::vector<std::string> names{"1", "0"};
        for (int i = 1; i <= l; ++i) names.push_back("d" + std::to_string(i));
        // index 1 is the absorbing zero, indices >= 2 are the d_i
        return from_op(tag, names, [](Elem a, Elem b) -> Elem {
            if (a == kUnit) return b;
            if (b == kUnit) return a;
            return 1;
        });
    }
    if (name == "E") {
        if (l < 0) throw Error("magma E: l must be >= 0");
        std::vector<std::string> names{"1"};
        for (int i = 1; i <= l; ++i) names.push_back("e" + std::to_string(i));
        return from_op(tag, names, [](Elem a, Elem b) -> Elem {
            if (a == kUnit) return b;
            if (b == kUnit) return a;
            return kUnit;
        });
    }
    if (name == "S") {
        if (l < 1 || l > 16) throw Error("magma S: l must be in [1, 16]");
        std::vector<std::string> names;
        for (Elem mask = 0; mask < (Elem{1} << l); ++mask) names.push_back(subset_name(mask));
        return from_op(tag, names, [](Elem a, Elem b) { return a | b; });
    }
    if (name == "BNC") {
        return from_op("BNC", {"1", "a", "b"}, [](Elem a, Elem b) -> Elem {
            if (a == kUnit) return b;
            if (b == kUnit) return a;
            return a == b ? a : kUnit;
        });
    }
    throw Error("unknown magma '" + std::string(name) + "'");
}

MagmaPtr parse_magma_spec(std::string_view spec) {
    if (auto pos = spec.find('x'); pos != std::string_view::npos)
        return product(parse_magma_spec(spec.substr(0, pos)), parse_magma_spec(spec.substr(pos + 1)));
    if (spec == "Z") return Magma::integers();
    if (spec == "BNC") return make_standard("BNC");
    if (spec.size() >= 2 && (spec[0] == 'N' || spec[0] == 'D' || spec[0] == 'E' || spec[0] == 'S')) {
        int l = 0;
        auto rest = spec.substr(1);
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), l);
        if (ec == std::errc() && ptr == rest.data() + rest.size())
            return make_standard(spec.substr(0, 1), l);
    }
    throw Error("bad magma spec '" + std::string(spec) + "'");
}

MagmaPtr read_cayley(std::istream& in, std::string label) {
    std::string line, word, unit;
    if (!std::getline(in, line)) throw Error("cayley: missing header");
    {
        std::istringstream hs(line);
        hs >> word >> unit;
        if (word != "unit" || unit.empty()) throw Error("cayley: header must be 'unit <name>'");
    }
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> row;
        while (ls >> word) row.push_back(word);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error("cayley: empty table");
    // The first row is the unit row, so it lists the carrier in table order.
    const std::vector<std::string> names = rows.front();
    if (names.front() != unit) throw Error("cayley: the first row must be the unit row");
    std::map<std::string, Elem> index;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!index.emplace(names[i], static_cast<Elem>(i)).second)
            throw Error("cayley: repeated element in the unit row");
    if (rows.size() != names.size()) throw Error("cayley: table is not square");
    std::vector<std::vector<Elem>> table(names.size(), std::vector<Elem>(names.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != names.size()) throw Error("cayley: row length mismatch");
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            auto it = index.find(rows[r][c]);
            if (it == index.end()) throw Error("cayley: unknown element '" + rows[r][c] + "'");
            table[r][c] = it->second;
        }
    }
    return Magma::finite(std::move(label), std::move(names), std::move(table));
}

MagmaPtr product(const MagmaPtr& m1, const MagmaPtr& m2) {
    if (!m1->is_finite() || !m2->is_finite()) throw Error("product: both magmas must be finite");
    const auto n1 = static_cast<Elem>(m1->size());
    const auto n2 = static_cast<Elem>(m2->size());
    std::vector<std::string> names;
    for (Elem a = 0; a < n1; ++a)
        for (Elem b = 0; b < n2; ++b) names.push_back("(" + m1->name(a) + "," + m2->name(b) + ")");
    return from_op(m1->label() + "x" + m2->label(), names, [&](Elem x, Elem y) {
        return m1->op(x / n2, y / n2) * n2 + m2->op(x % n2, y % n2);
    });
}

Elem pair_elem(const Magma& m2, Elem a, Elem b) { return a * static_cast<Elem>(m2.size()) + b; }

std::pair<Elem, Elem> split_elem(const Magma& m2, Elem ab) {
    const auto n2 = static_cast<Elem>(m2.size());
    return {ab / n2, ab % n2};
}

bool is_right_cancellable(const Magma& m) {
    if (m.kind() == Magma::Kind::Integers) return true;
    const auto all = m.elements();
    for (Elem x : all)
        for (Elem y : all)
            for (Elem z : all)
                if (y != z && m.op(y, x) == m.op(z, x)) return false;
    return true;
}

bool has_no_nontrivial_unit_divisors(const Magma& m) {
    if (m.kind() == Magma::Kind::Integers) return false;  // 1 + (-1) = 0
    const auto all = m.elements();
    for (Elem x : all)
        for (Elem y : all)
            if (m.op(x, y) == kUnit && (x != kUnit || y != kUnit)) return false;
    return true;
}

bool is_quasi_injective(const Magma& m, const std::vector<Elem>& e, const std::vector<Elem>& b) {
    for (Elem x : e)
        for (Elem y : b)
            for (Elem x2 : e)
                for (Elem y2 : b) {
                    const Elem v = m.op(x, y);
                    if (v != kUnit && v == m.op(x2, y2) && (x != x2 || y != y2)) return false;
                }
    return true;
}

namespace {

std::vector<Elem> sample_elements(const Magma& m, int window) {
    if (m.is_finite()) return m.elements();
    std::vector<Elem> out;
    for (Elem v = -window; v <= window; ++v) out.push_back(v);
    return out;
}

}  // namespace

bool check_rank_function(const Magma& m, const std::function<std::int64_t(Elem)>& theta, int window) {
    if (theta(kUnit) != 0) return false;
    const auto all = sample_elements(m, window);
    for (Elem x : all)
        for (Elem y : all)
            if (theta(m.op(x, y)) != theta(x) + theta(y)) return false;
    return true;
}

bool MagmaMorphism::verify(int window) const {
    if (map(kUnit) != kUnit) return false;
    const auto all = sample_elements(*source, window);
    for (Elem x : all) {
        if (!target->contains(map(x))) return false;
        for (Elem y : all)
            if (map(source->op(x, y)) != target->op(map(x), map(y))) return false;
    }
    return true;
}

}  // namespace clq
