#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "clq/linops.hpp"

namespace clq {

/// Skeleton constraints plus the labels allowed on each kind of arc.
/// Every constraint is monotone: removing a solid arc keeps a clique inside.
struct CliqueFilter {
    int max_crossing = -1;  // -1: unbounded
    int max_degree = -1;
    bool inclusion_free = false;
    bool acyclic = false;
    // Allowed labels per arc kind, unit included when the arc may be absent.
    // An empty list leaves the kind unrestricted.
    std::vector<Elem> base;
    std::vector<Elem> edge;
    std::vector<Elem> diagonal;
};

bool accepts(const CliqueFilter& f, const Clique& p);

/// Number of accepted cliques of arity 1..n_max (entry k is arity k + 1).
/// Arity 1 always counts the unit clique only.
std::vector<BigInt> count_filtered(const MagmaPtr& magma, const CliqueFilter& f, int n_max, int jobs = 1);
/// The accepted cliques of one arity, sorted.
std::vector<Clique> list_filtered(const MagmaPtr& magma, const CliqueFilter& f, int arity);

enum class FamilyKind { Cli, Cro, Bub, Deg, Inf, Acy, Lab, Whi, WNC, Pat, For, Mot, Dis, Luc, NC };
enum class FamilyMode { Suboperad, Quotient };

struct FamilySpec {
    FamilyKind kind = FamilyKind::Cli;
    int k = 0;  // for Cro and Deg
    MagmaPtr magma;
    FamilyMode mode = FamilyMode::Suboperad;
    std::vector<Elem> lab_base, lab_edge, lab_diagonal;  // for Lab

    /// Throws Error when the magma or label sets do not meet the
    /// requirements of the family.
    void validate() const;
    CliqueFilter filter() const;
    std::string name() const;
};

/// `Cli | NC | Bub | Inf | Acy | Whi | WNC | Pat | For | Mot | Dis | Luc |
/// Cro<k> | Deg<k>`; the mode defaults to how the family is built.
FamilySpec make_family(std::string_view name, MagmaPtr magma);
FamilySpec make_lab_family(MagmaPtr magma, std::vector<Elem> b, std::vector<Elem> e, std::vector<Elem> d);

bool member(const FamilySpec& spec, const Clique& p);

/// Composition in the quotient: the composite if it is a member, else zero.
std::optional<Clique> quotient_compose_basis(const FamilySpec& spec, const Clique& p, int i, const Clique& q);
LinComb quotient_compose(const FamilySpec& spec, const Clique& p, int i, const Clique& q);

/// Composition inside the family: quotient projection or suboperad check.
AxiomReport check_family_axioms(const FamilySpec& spec, int max_arity, int jobs = 1);

std::vector<BigInt> enumerate_dims(const FamilySpec& spec, int n_max, int jobs = 1);
std::vector<Clique> family_members(const FamilySpec& spec, int arity);

/// Smallest composition-closed set containing the generators and the unit,
/// truncated at n_max. Entry n holds the sorted elements of arity n (entry 0
/// is empty).
std::vector<std::vector<Clique>> closure(const MagmaPtr& magma, const std::vector<Clique>& generators, int n_max);

/// Pointwise checks that the ideals nest as stated: returns the cliques of
/// arity <= max_arity violating one of the implications.
std::vector<Clique> inclusion_lemma_violations(const MagmaPtr& magma, int max_arity);

}  // namespace clq
