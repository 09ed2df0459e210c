#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "clq/linops.hpp"

namespace clq {

/// Basis in which a LinComb is expressed.
enum class BasisTag { Fundamental, H, K };

std::string to_string(BasisTag tag);

/// p with its base (d_0) or its i-th edge (d_i) relabeled by the unit.
Clique erase_base(const Clique& p);
Clique erase_edge(const Clique& p, int i);

/// Expands H_p (sum over the cliques obtained by erasing solid edges and
/// base) or K_p (signed sum over erasures of solid diagonals) into the
/// fundamental basis.
LinComb to_fundamental(const LinComb& f, BasisTag tag);
/// Inverse of to_fundamental.
LinComb from_fundamental(const LinComb& f, BasisTag target);

/// f o_i g with f and g both expressed in the basis tag. Pairs of basis
/// elements use the closed-form rules, except when one of them is the unit
/// clique, which goes through the fundamental basis.
LinComb compose_in_basis(const LinComb& f, int i, const LinComb& g, BasisTag tag);

/// The linops format, prefixed by `H:` or `K:` outside the fundamental basis.
std::string to_string(const LinComb& f, BasisTag tag);
/// Reads an optional `H:`/`K:` prefix into tag, then the combination.
LinComb parse_tagged_lincomb(const MagmaPtr& magma, std::string_view text, BasisTag& tag);

struct BasisCheckReport {
    std::size_t checked = 0;
    std::vector<std::string> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};

/// Both conversions are mutually inverse on every clique of arity <=
/// max_arity, for H and K.
BasisCheckReport check_basis_roundtrips(const MagmaPtr& magma, int max_arity);
/// compose_in_basis agrees with converting to the fundamental basis,
/// composing there and converting back, on all pairs of cliques of the
/// given arity, all positions, both bases.
BasisCheckReport check_basis_square(const MagmaPtr& magma, int arity);

}  // namespace clq
