#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clq/series.hpp"

namespace clq {

/// Multi-tilde (n, s): s is a set of pairs (x, y) with 1 <= x <= y <= n.
struct MultiTilde {
    int arity = 1;
    std::set<std::pair<int, int>> pairs;

    /// Throws when a pair lies outside the allowed range.
    void validate() const;
    bool operator==(const MultiTilde&) const = default;
};

/// Double multi-tilde (n, s, t).
struct DoubleMultiTilde {
    int arity = 1;
    std::set<std::pair<int, int>> first;
    std::set<std::pair<int, int>> second;

    void validate() const;
    bool operator==(const DoubleMultiTilde&) const = default;
};

MultiTilde mt_compose(const MultiTilde& a, int i, const MultiTilde& b);
DoubleMultiTilde dmt_compose(const DoubleMultiTilde& a, int i, const DoubleMultiTilde& b);

/// The D0-clique whose arc (x, y) is labeled 0 iff (x, y - 1) is in s.
/// Throws on (1, {(1, 1)}), which has no image.
Clique mt_encode(const MultiTilde& a);
MultiTilde mt_decode(const Clique& p);
/// The same over D0 x D0, one component per set. Throws on the three
/// arity-1 double multi-tildes other than the unit.
Clique dmt_encode(const DoubleMultiTilde& a);
DoubleMultiTilde dmt_decode(const Clique& p);

/// Every encodable multi-tilde of the given arity.
std::vector<MultiTilde> all_multi_tildes(int arity);
/// Each pair is kept with probability 1/2; arity 1 gives the unit.
MultiTilde random_multi_tilde(std::mt19937_64& rng, int arity);

/// `mt <n> { (x,y) ... }` and `dmt <n> { ... } { ... }`.
std::string to_string(const MultiTilde& a);
std::string to_string(const DoubleMultiTilde& a);
MultiTilde parse_multi_tilde(std::string_view text);
DoubleMultiTilde parse_double_multi_tilde(std::string_view text);

enum class KnownOperad { NCP, FF4, BNC, E2cubic, MotzQuad, MT };

std::string to_string(KnownOperad which);
/// Accepts NCP, FF4, BNC, E2cubic, MotzQuad and MT.
KnownOperad parse_known_operad(std::string_view name);

struct KnownCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct KnownReport {
    KnownOperad which = KnownOperad::NCP;
    std::vector<KnownCheck> checks;
    /// Dimensions by arity starting at 1, with the expected values.
    std::vector<BigInt> dims;
    std::vector<BigInt> expected_dims;

    bool ok() const;
};

/// Instantiates the generators inside the clique operad, checks the
/// relations by composition, and compares the dimensions of the generated
/// suboperad (or subspace) with the known sequence. Random samples are drawn
/// from seed.
KnownReport verify_known_presentation(KnownOperad which, std::uint64_t seed = 1);

/// Generators of NCP, FF4, E2cubic or MotzQuad as cliques; throws for the
/// others.
struct KnownGenerators {
    MagmaPtr magma;
    std::vector<Clique> generators;
    std::vector<std::string> names;
};
KnownGenerators known_generators(KnownOperad which);

/// Hilbert series cut at order, from enumeration: NC and its dual by
/// counting cliques over N_m and N_m x N_m, the others by closure of their
/// generators.
TruncatedSeries enumerated_hilbert_series(HilbertEquation which, std::optional<int> m, int order, int jobs = 1);

}  // namespace clq
