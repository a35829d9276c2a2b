#include "pivots/pivot.hpp"

#include <algorithm>

namespace pivots {

PivotBlocks split_blocks(const Graph& g, VertexSet x) {
    g.require_subset(x);
    PivotBlocks b;
    b.inside = x.indices();
    b.outside = g.vertex_set().minus(x).indices();
    const auto fill = [&g](BitMatrix& m, const std::vector<std::size_t>& rs,
                           const std::vector<std::size_t>& cs) {
        m = BitMatrix(rs.size(), cs.size());
        for (std::size_t r = 0; r < rs.size(); ++r)
            for (std::size_t c = 0; c < cs.size(); ++c)
                if (g.bit(rs[r], cs[c])) m.set(r, c, true);
    };
    fill(b.p, b.inside, b.inside);
    fill(b.q, b.inside, b.outside);
    fill(b.r, b.outside, b.inside);
    fill(b.s, b.outside, b.outside);
    return b;
}

namespace {

Graph scatter_blocks(const Graph& g, const PivotBlocks& b, const BitMatrix& top_left,
                     const BitMatrix& top_right, const BitMatrix& bottom_left,
                     const BitMatrix& bottom_right) {
    std::vector<std::uint64_t> rows(g.size(), 0);
    const auto place = [&rows](const BitMatrix& m, const std::vector<std::size_t>& rs,
                               const std::vector<std::size_t>& cs) {
        for (std::size_t r = 0; r < rs.size(); ++r)
            for (std::size_t c = 0; c < cs.size(); ++c)
                if (m.get(r, c)) rows[rs[r]] |= std::uint64_t(1) << cs[c];
    };
    place(top_left, b.inside, b.inside);
    place(top_right, b.inside, b.outside);
    place(bottom_left, b.outside, b.inside);
    place(bottom_right, b.outside, b.outside);
    return Graph(g.labels(), std::move(rows));
}

}  // namespace

Graph assemble_blocks(const Graph& g, const PivotBlocks& b) {
    return scatter_blocks(g, b, b.p, b.q, b.r, b.s);
}

Graph pivot(const Graph& g, VertexSet x) {
    auto b = split_blocks(g, x);
    const auto pinv = b.p.inverted();
    if (!pinv) throw pivot_undefined_error(g.names_of(x));
    const BitMatrix piq = *pinv * b.q;
    const BitMatrix rpi = b.r * *pinv;
    const BitMatrix schur = b.s ^ (b.r * piq);
    return scatter_blocks(g, b, *pinv, piq, rpi, schur);
}

bool verify_partial_inverse(const Graph& g, VertexSet x, VertexSet probe) {
    const Graph pivoted = pivot(g, x);
    g.require_subset(probe);
    const VertexSet y = g.image(probe);
    const VertexSet pivoted_input = (y & x) | probe.minus(x);
    const VertexSet expected = (probe & x) | y.minus(x);
    return pivoted.image(pivoted_input) == expected;
}

bool tucker_check(const Graph& g, VertexSet x, VertexSet y) {
    g.require_subset(y);
    return determinant(pivot(g, x), y) == determinant(g, x ^ y);
}

Graph schur_complement(const Graph& g, VertexSet x) {
    return induced_subgraph(pivot(g, x), g.vertex_set().minus(x));
}

Graph local_complement(const Graph& g, std::size_t u) {
    if (!g.has_loop(u))
        throw not_elementary_error("local complementation needs a loop on " + g.label(u));
    const VertexSet nbrs = g.neighbourhood(u);
    std::vector<std::uint64_t> rows;
    rows.reserve(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        std::uint64_t row = g.row_bits(v);
        if (nbrs.contains(v)) row ^= nbrs.bits;
        rows.push_back(row);
    }
    return Graph(g.labels(), std::move(rows));
}

NeighborhoodPartition neighborhood_partition(const Graph& g, std::size_t u, std::size_t v) {
    const VertexSet nu = g.closed_neighbourhood(u);
    const VertexSet nv = g.closed_neighbourhood(v);
    return NeighborhoodPartition{nu.minus(nv), nv.minus(nu), nu & nv};
}

Graph edge_complement(const Graph& g, std::size_t u, std::size_t v) {
    if (u == v || !g.adjacent(u, v) || g.has_loop(u) || g.has_loop(v))
        throw not_elementary_error("edge complementation needs an edge between loopless " +
                                   g.label(u) + " and " + g.label(v));
    const auto part = neighborhood_partition(g, u, v);
    std::vector<std::uint64_t> rows;
    rows.reserve(g.size());
    for (std::size_t w = 0; w < g.size(); ++w) {
        std::uint64_t row = g.row_bits(w);
        if (part.v1.contains(w))
            row ^= part.v2.bits | part.v3.bits;
        else if (part.v2.contains(w))
            row ^= part.v1.bits | part.v3.bits;
        else if (part.v3.contains(w))
            row ^= part.v1.bits | part.v2.bits;
        rows.push_back(row);
    }
    return Graph(g.labels(), std::move(rows));
}

Graph apply_elementary(const Graph& g, VertexSet e) {
    const auto idx = e.indices();
    if (idx.size() == 1) return local_complement(g, idx[0]);
    if (idx.size() == 2) return edge_complement(g, idx[0], idx[1]);
    throw not_elementary_error("elementary pivot sets have one or two vertices");
}

std::vector<VertexSet> elementary_pivots(const Graph& g) {
    std::vector<VertexSet> out;
    for (std::size_t u = 0; u < g.size(); ++u)
        if (g.has_loop(u)) out.push_back(VertexSet::single(u));
    for (std::size_t u = 0; u < g.size(); ++u) {
        if (g.has_loop(u)) continue;
        for (std::size_t v = u + 1; v < g.size(); ++v)
            if (g.adjacent(u, v) && !g.has_loop(v)) out.push_back(VertexSet::pair(u, v));
    }
    return out;
}

std::vector<VertexSet> decompose_pivot(const Graph& g, VertexSet y) {
    if (determinant(g, y) != 1) throw pivot_undefined_error(g.names_of(y));
    std::vector<VertexSet> steps;
    Graph current = g;
    VertexSet rest = y;
    while (!rest.empty()) {
        bool advanced = false;
        for (const VertexSet e : elementary_pivots(current)) {
            if (!e.subset_of(rest)) continue;
            current = apply_elementary(current, e);
            rest = rest.minus(e);
            steps.push_back(e);
            advanced = true;
            break;
        }
        // A pivotable set always contains an elementary one.
        if (!advanced) throw math_error("no elementary pivot inside a pivotable set");
    }
    return steps;
}

Graph dual_pivot(const Graph& g, VertexSet x) {
    const Graph toggled = add_identity(g);
    if (determinant(toggled, x) != 1) throw dual_pivot_undefined_error(g.names_of(x));
    return add_identity(pivot(toggled, x));
}

Graph dual_pivot_by_row_ops(const Graph& g, VertexSet x) {
    if (determinant(add_identity(g), x) != 1) throw dual_pivot_undefined_error(g.names_of(x));
    Graph current = g;
    VertexSet rest = x;
    while (!rest.empty()) {
        VertexSet step;
        for (const VertexSet e : elementary_pivots(add_identity(current)))
            if (e.subset_of(rest)) { step = e; break; }
        if (step.empty()) throw math_error("no elementary dual pivot inside a pivotable set");
        std::vector<std::uint64_t> rows;
        rows.reserve(current.size());
        for (std::size_t w = 0; w < current.size(); ++w) rows.push_back(current.row_bits(w));
        const auto idx = step.indices();
        if (idx.size() == 1) {
            // Non-loop vertex u: add row u to every row in its neighbourhood.
            const std::size_t u = idx[0];
            const std::uint64_t src = rows[u];
            for (std::size_t w : current.neighbourhood(u).indices()) rows[w] ^= src;
        } else {
            // Edge between two looped vertices: cross-add the two rows into
            // the opposite neighbourhoods, then swap them.
            const std::size_t u = idx[0];
            const std::size_t v = idx[1];
            const std::uint64_t row_u = rows[u];
            const std::uint64_t row_v = rows[v];
            for (std::size_t w : current.neighbourhood(v).minus(VertexSet::single(u)).indices())
                rows[w] ^= row_u;
            for (std::size_t w : current.neighbourhood(u).minus(VertexSet::single(v)).indices())
                rows[w] ^= row_v;
            std::swap(rows[u], rows[v]);
        }
        // The Graph constructor rejects asymmetric matrices, so each
        // completed elementary step is checked to land back on a graph.
        current = Graph(current.labels(), std::move(rows));
        rest = rest.minus(step);
    }
    return current;
}

Graph contraction(const Graph& g, VertexSet x) {
    return induced_subgraph(pivot(g, x), g.vertex_set().minus(x));
}

bool is_maximal_pivot_set(const Graph& g, VertexSet x) {
    g.require_subset(x);
    return determinant(g, x) == 1 && x.count() == rank(g);
}

}  // namespace pivots
