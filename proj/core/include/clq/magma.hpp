#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clq {

/// Raised on malformed input or violated preconditions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Element of a unitary magma. Index 0 is always the unit; for the integers
/// the value is the integer itself.
using Elem = std::int64_t;
inline constexpr Elem kUnit = 0;

class Magma;
using MagmaPtr = std::shared_ptr<const Magma>;

/// A unitary magma: a finite Cayley table, or the additive integers.
class Magma {
public:
    enum class Kind { Finite, Integers };

    static MagmaPtr finite(std::string label, std::vector<std::string> names,
                           std::vector<std::vector<Elem>> table);
    static MagmaPtr integers();

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    const std::string& label() const { return label_; }

    /// Carrier size; throws for the integers.
    std::size_t size() const;
    Elem op(Elem a, Elem b) const {
        if (kind_ == Kind::Integers) return a + b;
        return table_[static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b)];
    }
    bool contains(Elem a) const;

    std::string name(Elem a) const;
    Elem parse_element(std::string_view text) const;

    /// All elements, unit first. Throws for the integers.
    std::vector<Elem> elements() const;
    std::vector<Elem> non_unit() const;

    bool same_as(const Magma& other) const;

private:
    Magma() = default;
    Kind kind_ = Kind::Finite;
    std::string label_;
    std::vector<std::string> names_;
    std::vector<Elem> table_;
};

/// Built-in magmas: N (Z/l), D, E, S (subsets under union), Z, BNC.
MagmaPtr make_standard(std::string_view name, int l = 0);

/// Parses `Z | N<l> | D<l> | E<l> | S<l> | BNC`, optionally joined by `x`
/// for a Cartesian product (e.g. `D0xD0`).
MagmaPtr parse_magma_spec(std::string_view spec);

/// Reads the Cayley-table format: `unit <name>` then n rows of n names,
/// row = left operand. The first row is the unit row and fixes the order.
MagmaPtr read_cayley(std::istream& in, std::string label = "custom");

/// Component-wise product. Element (a, b) has index a * |M2| + b.
MagmaPtr product(const MagmaPtr& m1, const MagmaPtr& m2);
Elem pair_elem(const Magma& m2, Elem a, Elem b);
std::pair<Elem, Elem> split_elem(const Magma& m2, Elem ab);

bool is_right_cancellable(const Magma& m);
bool has_no_nontrivial_unit_divisors(const Magma& m);
bool is_quasi_injective(const Magma& m, const std::vector<Elem>& e, const std::vector<Elem>& b);

/// True iff theta(1) = 0 and theta(x * y) = theta(x) + theta(y). On the
/// integers the check runs over the window [-window, window].
bool check_rank_function(const Magma& m, const std::function<std::int64_t(Elem)>& theta,
                         int window = 8);

/// A map between unitary magmas, verified before use.
struct MagmaMorphism {
    MagmaPtr source;
    MagmaPtr target;
    std::function<Elem(Elem)> map;

    bool verify(int window = 8) const;
};

}  // namespace clq
