#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pivots/graph.hpp"
#include "pivots/setsystem.hpp"

namespace pivots {

enum class MoveKind { pivot, dual_pivot, contraction };

std::string move_kind_name(MoveKind kind);

// One recorded move: applying it to nodes[from] yields nodes[to]. The set
// is expressed in the label order of the source node.
struct OrbitEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    VertexSet move;
    MoveKind kind = MoveKind::pivot;
};

// Closure of a seed graph under a move family, nodes deduplicated by
// labeled graph equality, discovered breadth first with moves tried in
// canonical order. Node and edge order are therefore deterministic.
struct OrbitGraph {
    std::vector<Graph> nodes;
    std::vector<OrbitEdge> edges;
    std::size_t root = 0;

    std::vector<std::size_t> sink_indices() const;
};

inline constexpr std::size_t orbit_cap = 16;

// Closure under elementary pivots.
OrbitGraph pivot_orbit(const Graph& g);

// Closure under elementary dual pivots; always contains the seed.
OrbitGraph dual_orbit(const Graph& g);

// All graphs in the dual orbit share one family of maximal pivot sets.
// Returns whether that holds for g's orbit; a test oracle.
bool verify_theorem_dual(const Graph& g);

// Contractions of g on its maximal pivot sets, deduplicated and in
// canonical order. Each is discrete and loopless with nullity(g) vertices.
std::vector<Graph> maximal_contraction_results(const Graph& g);

// DAG of graphs reachable from g by contracting elementary pivot sets,
// edges recording the set removed. Sinks are the discrete graphs the
// maximal contractions produce.
OrbitGraph contraction_dag(const Graph& g);

}  // namespace pivots
