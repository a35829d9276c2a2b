#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pivots/errors.hpp"

namespace pivots {

// A subset of a graph's vertices, stored as a bit vector aligned to the
// graph's label order. Comparison order is the bit-pattern order used
// everywhere for canonical listings.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

    static constexpr VertexSet single(std::size_t i) { return VertexSet(std::uint64_t(1) << i); }
    static constexpr VertexSet pair(std::size_t i, std::size_t j) {
        return VertexSet((std::uint64_t(1) << i) | (std::uint64_t(1) << j));
    }
    static constexpr VertexSet first_n(std::size_t n) {
        return VertexSet(n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1);
    }

    constexpr bool empty() const { return bits == 0; }
    constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits)); }
    constexpr bool contains(std::size_t i) const { return (bits >> i) & 1u; }
    constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }

    constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits ^ o.bits); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
    constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits & ~o.bits); }

    constexpr VertexSet& operator^=(VertexSet o) { bits ^= o.bits; return *this; }
    constexpr VertexSet& operator|=(VertexSet o) { bits |= o.bits; return *this; }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        std::uint64_t w = bits;
        while (w) {
            out.push_back(static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
        return out;
    }

    friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits <=> b.bits; }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
};

// An undirected graph with loops, identified with its symmetric adjacency
// matrix over GF(2). Vertices carry distinct string labels; the label order
// fixed at construction defines all bit indices. Two graphs are equal when
// they have the same label set and the same bits after aligning by label.
class Graph {
public:
    static constexpr std::size_t max_vertices = 64;

    Graph() = default;
    Graph(std::vector<std::string> labels, std::vector<std::uint64_t> rows);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }

    bool has_label(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;  // throws invalid_vertex_error

    bool bit(std::size_t u, std::size_t v) const { return (rows_[u] >> v) & 1u; }
    bool has_loop(std::size_t u) const { return bit(u, u); }
    bool adjacent(std::size_t u, std::size_t v) const { return u != v && bit(u, v); }
    std::uint64_t row_bits(std::size_t u) const { return rows_[u]; }

    VertexSet vertex_set() const { return VertexSet::first_n(size()); }
    // Open neighbourhood: vertices joined to u by an edge, not counting u.
    VertexSet neighbourhood(std::size_t u) const {
        return VertexSet(rows_[u] & ~(std::uint64_t(1) << u));
    }
    VertexSet closed_neighbourhood(std::size_t u) const {
        return VertexSet(rows_[u] | (std::uint64_t(1) << u));
    }

    VertexSet set_of(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(VertexSet s) const;

    // Matrix-vector product G·v with sets standing in for GF(2) vectors.
    VertexSet image(VertexSet v) const;

    void require_subset(VertexSet x) const;

    bool operator==(const Graph& other) const;
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    std::vector<std::string> labels_;
    std::vector<std::uint64_t> rows_;
};

Graph make_graph(std::vector<std::string> labels,
                 const std::vector<std::pair<std::string, std::string>>& edges,
                 const std::vector<std::string>& loops = {});

// A GF(2) subspace of the vertex space, kept as a reduced row-echelon basis
// with pivot positions chosen in label order, so equal subspaces have
// identical basis lists.
class Subspace {
public:
    Subspace(std::vector<std::string> ground, const std::vector<VertexSet>& spanning);

    const std::vector<std::string>& ground() const { return ground_; }
    const std::vector<VertexSet>& basis() const { return basis_; }

    std::size_t dimension() const { return basis_.size(); }
    // Kernel readings: nullity is the dimension, the complement rank is
    // what elimination consumed.
    std::size_t nullity() const { return basis_.size(); }
    std::size_t complement_rank() const { return ground_.size() - basis_.size(); }

    bool contains(VertexSet v) const;
    bool operator==(const Subspace& other) const;  // same space, labels aligned
    bool operator!=(const Subspace& other) const { return !(*this == other); }

private:
    std::vector<std::string> ground_;
    std::vector<VertexSet> basis_;
};

// --- core linear algebra on graphs ---------------------------------------

// det of the principal submatrix on x; det of the empty submatrix is 1.
int determinant(const Graph& g, VertexSet x);

Graph induced_subgraph(const Graph& g, VertexSet x);

// Toggle every loop (add the identity matrix); an involution.
Graph add_identity(const Graph& g);

Subspace kernel(const Graph& g);

// Fixed points of the adjacency map: {S : G·S = S} = ker(G + I).
Subspace eigenspace_one(const Graph& g);

bool is_independent(const Graph& g, VertexSet x);

// All maximal independent column sets, each of cardinality rank(g),
// sorted by bit pattern.
std::vector<VertexSet> bases(const Graph& g);

std::size_t rank(const Graph& g);
std::size_t nullity(const Graph& g);

}  // namespace pivots
