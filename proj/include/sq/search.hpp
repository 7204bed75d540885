#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sq/quandle.hpp"

namespace sq {

// Finite group as an explicit Cayley table over {0..k-1}.
struct FiniteGroup {
    std::string name;
    int order = 0;
    std::vector<std::vector<int>> table; // table[a][b] = a*b
    int identity = 0;
    std::vector<int> inverse;

    int mul(int a, int b) const {
        return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    int inv(int a) const { return inverse[static_cast<std::size_t>(a)]; }
};

// Latin square + identity + inverses + exhaustive associativity.
bool validate_group(const FiniteGroup& g, std::string* why = nullptr);

FiniteGroup cyclic_group(int k);
FiniteGroup dihedral_group(int k); // order 2k
FiniteGroup quaternion_group();    // Q8
FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group_4();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

bool is_abelian(const FiniteGroup& g);
int element_order(const FiniteGroup& g, int a);

// First isomorphism a -> b if one exists (generator images + closure).
std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& a,
                                                       const FiniteGroup& b);
inline bool group_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
    return find_group_isomorphism(a, b).has_value();
}

// Built-in catalog up to max_order <= 16: cyclics, dihedrals, Q8, symmetric,
// alternating, and direct products of members, deduplicated by isomorphism.
std::vector<FiniteGroup> group_catalog(int max_order);

struct FiniteAutomorphism {
    std::string name;
    std::vector<int> perm;
    bool involutive = false;
    bool is_inversion = false; // perm(x) = x^{-1}; coincides with id on exponent-2 groups
};

// Full automorphism group, enumerated over generator images and validated
// exhaustively. Inversion is flagged as "Inv" when it appears (abelian case).
std::vector<FiniteAutomorphism> automorphisms(const FiniteGroup& g);

// Quandle tables derived from a finite group.
FiniteQuandle core_table(const FiniteGroup& g);
FiniteQuandle conj_table(const FiniteGroup& g);
FiniteQuandle twisted_conj_table(const FiniteGroup& g, const FiniteAutomorphism& psi);
FiniteQuandle alexander_table(const FiniteGroup& g, const FiniteAutomorphism& psi);

// Adapter into the generic group machinery.
GroupOps<int> group_ops(const FiniteGroup& g);

// Witness of a quandle isomorphism, or a certified exhaustion: when
// `isomorphic` is false the backtracking search ran to completion and
// `nodes` records the explored node count.
struct IsoWitness {
    bool isomorphic = false;
    std::vector<int> mapping;
    std::uint64_t nodes = 0;
};

// Backtracking over bijections with consistency propagation. Pruning keys
// (per-element: cycle type of S_y, Inn-orbit size, fixed-point count) can be
// disabled to cross-check verdicts.
IsoWitness quandle_isomorphic(const FiniteQuandle& a, const FiniteQuandle& b,
                              bool use_pruning = true);

// One (G, H, psi) comparison: is Core G isomorphic to Conj(H, psi)?
struct SearchRecord {
    std::string group;
    std::string other;
    std::string psi_name;
    std::vector<int> psi;
    bool isomorphic = false;
    std::vector<int> witness; // empty on exhaustion
    std::uint64_t nodes = 0;
};

struct GroupSummary {
    std::string group;
    bool abelian = false;
    int matches = 0;
    int exhausted = 0;
    bool inv_self_match = false; // (G, G, Inv) found
};

struct SearchFindings {
    int max_order = 0;
    bool pruning = true;
    std::vector<SearchRecord> records;
    std::vector<GroupSummary> summary;
};

// For every catalog G, scan all catalog H of the same order and every
// psi in Aut H; every produced table is axiom-checked before searching.
SearchFindings search_core_vs_twisted(int max_order, bool use_pruning = true);

std::string findings_to_json(const SearchFindings& f);
void write_findings(const std::string& path, const SearchFindings& f);

} // namespace sq
