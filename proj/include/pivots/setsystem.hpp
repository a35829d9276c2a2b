#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pivots/graph.hpp"

namespace pivots {

// A finite ground set with a family of subsets. The family is stored
// deduplicated and sorted by bit pattern, so equal systems compare equal
// member by member once labels are aligned.
class SetSystem {
public:
    SetSystem(std::vector<std::string> ground, std::vector<VertexSet> family);

    const std::vector<std::string>& ground() const { return ground_; }
    const std::vector<VertexSet>& family() const { return family_; }
    std::size_t size() const { return family_.size(); }

    bool contains(VertexSet s) const;

    bool operator==(const SetSystem& other) const;
    bool operator!=(const SetSystem& other) const { return !(*this == other); }

private:
    std::vector<std::string> ground_;
    std::vector<VertexSet> family_;
};

// Subset enumeration is kept explicit and bounded.
inline constexpr std::size_t exhaustive_cap = 20;

// XOR every member with x; an involution.
SetSystem twist(const SetSystem& m, VertexSet x);

// All subsets whose principal submatrix has determinant 1. Always
// contains the empty set.
SetSystem delta_matroid(const Graph& g);

// Inclusion-maximal members of delta_matroid(g); each has cardinality
// rank(g).
SetSystem maximal_family(const Graph& g);

// Inclusion-minimal nonempty members of delta_matroid(g); coincide with
// the elementary pivot sets.
SetSystem minimal_family(const Graph& g);

// Generic inclusion filters on a stored family.
SetSystem maximal_sets(const SetSystem& m);
SetSystem minimal_nonempty_sets(const SetSystem& m);

// Rebuild the graph from its determinant family: a loop where the
// singleton is a member, an edge where pair membership differs from the
// conjunction of the singleton memberships.
Graph reconstruct_graph(const SetSystem& m);

// Checks that equal kernels and equal basis families occur together.
// Computes both sides independently and returns whether the biconditional
// holds; a test oracle.
bool kernel_bases_equivalence(const Graph& g1, const Graph& g2);

}  // namespace pivots
