#pragma once

#include <cstddef>
#include <vector>

#include "pivots/bitmatrix.hpp"
#include "pivots/graph.hpp"

namespace pivots {

// The four blocks of the adjacency matrix split along a pivot set:
// p on x, s on the complement, q and r the mixed rectangles.
struct PivotBlocks {
    std::vector<std::size_t> inside;   // indices of x in label order
    std::vector<std::size_t> outside;  // complement in label order
    BitMatrix p, q, r, s;
};

PivotBlocks split_blocks(const Graph& g, VertexSet x);

// Inverse of split_blocks; used to check the split round-trips.
Graph assemble_blocks(const Graph& g, const PivotBlocks& blocks);

// Partial inversion of the adjacency matrix on x, defined when the
// principal submatrix on x is nonsingular. An involution; composing
// pivots on x then y equals one pivot on x ^ y.
Graph pivot(const Graph& g, VertexSet x);

// The characteristic property of partial inversion, checked for one probe
// vector: if G maps (x1,x2) to (y1,y2) then the pivot maps (y1,x2) to
// (x1,y2). Returns whether the identity holds; a test oracle.
bool verify_partial_inverse(const Graph& g, VertexSet x, VertexSet probe);

// det (G*X)[Y] == det G[X ^ Y]; a test oracle.
bool tucker_check(const Graph& g, VertexSet x, VertexSet y);

// The pivot restricted to the complement of x.
Graph schur_complement(const Graph& g, VertexSet x);

// Pivot on a single looped vertex: complement all adjacencies and loop
// states inside the open neighbourhood of u.
Graph local_complement(const Graph& g, std::size_t u);

struct NeighborhoodPartition {
    VertexSet v1;  // closed neighbours of u only
    VertexSet v2;  // closed neighbours of v only
    VertexSet v3;  // common closed neighbours; contains u and v
};

NeighborhoodPartition neighborhood_partition(const Graph& g, std::size_t u, std::size_t v);

// Pivot on an edge between two loopless vertices: toggle every connection
// whose endpoints lie in different parts of the neighbourhood partition.
// Loops are untouched; the neighbours of u and v end up interchanged.
Graph edge_complement(const Graph& g, std::size_t u, std::size_t v);

// Apply the elementary pivot on e, dispatching on |e|.
Graph apply_elementary(const Graph& g, VertexSet e);

// All single-vertex loops plus all edges between loopless vertices, i.e.
// the minimal nonempty pivotable sets. Loops first in label order, then
// edges in lexicographic index order.
std::vector<VertexSet> elementary_pivots(const Graph& g);

// Split y into disjoint elementary pivot sets whose in-order application
// reproduces pivot(g, y). Greedy: always take the first elementary pivot
// of the intermediate graph that fits inside the rest of y.
std::vector<VertexSet> decompose_pivot(const Graph& g, VertexSet y);

// The pivot conjugated by toggling all loops; applicable when the
// loop-toggled submatrix on x is nonsingular. Same graph effect as pivot
// on elementary sets, different applicability.
Graph dual_pivot(const Graph& g, VertexSet x);

// Dual pivot carried out by elementary row operations on the adjacency
// matrix, one elementary step at a time. Must agree with dual_pivot;
// kept as an independent construction for testing.
Graph dual_pivot_by_row_ops(const Graph& g, VertexSet x);

// Pivot on x followed by deletion of x. Preserves nullity.
Graph contraction(const Graph& g, VertexSet x);

// Whether x is a maximal pivotable set: det g[x] = 1 and |x| = rank(g).
bool is_maximal_pivot_set(const Graph& g, VertexSet x);

}  // namespace pivots
