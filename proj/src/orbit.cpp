#include "pivots/orbit.hpp"

#include <algorithm>
#include <map>

#include "pivots/pivot.hpp"

namespace pivots {

std::string move_kind_name(MoveKind kind) {
    switch (kind) {
        case MoveKind::pivot: return "pivot";
        case MoveKind::dual_pivot: return "dual";
        case MoveKind::contraction: return "contract";
    }
    return "?";
}

std::vector<std::size_t> OrbitGraph::sink_indices() const {
    std::vector<bool> has_out(nodes.size(), false);
    for (const auto& e : edges) has_out[e.from] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (!has_out[i]) out.push_back(i);
    return out;
}

namespace {

// Dedup key: labels plus adjacency rows. Within one closure all graphs
// either share the label list (pivot moves) or are induced on subsets of
// it, so exact keys coincide with labeled graph equality.
std::string node_key(const Graph& g) {
    std::string key;
    for (const auto& l : g.labels()) {
        key += l;
        key += '\x1f';
    }
    key += '\x1e';
    for (std::size_t u = 0; u < g.size(); ++u) {
        key += std::to_string(g.row_bits(u));
        key += ',';
    }
    return key;
}

template <typename Moves, typename Apply>
OrbitGraph closure(const Graph& seed, MoveKind kind, Moves&& moves, Apply&& apply) {
    if (seed.size() > orbit_cap)
        throw over_cap_error(seed.size(), orbit_cap, "orbit exploration");
    OrbitGraph out;
    std::map<std::string, std::size_t> index;
    out.nodes.push_back(seed);
    index.emplace(node_key(seed), 0);
    for (std::size_t at = 0; at < out.nodes.size(); ++at) {
        // Copy: applying moves grows out.nodes and may invalidate refs.
        const Graph current = out.nodes[at];
        for (const VertexSet move : moves(current)) {
            Graph next = apply(current, move);
            const auto [it, inserted] = index.emplace(node_key(next), out.nodes.size());
            if (inserted) out.nodes.push_back(std::move(next));
            out.edges.push_back(OrbitEdge{at, it->second, move, kind});
        }
    }
    return out;
}

}  // namespace

OrbitGraph pivot_orbit(const Graph& g) {
    return closure(
        g, MoveKind::pivot, [](const Graph& h) { return elementary_pivots(h); },
        [](const Graph& h, VertexSet e) { return apply_elementary(h, e); });
}

OrbitGraph dual_orbit(const Graph& g) {
    return closure(
        g, MoveKind::dual_pivot,
        [](const Graph& h) { return elementary_pivots(add_identity(h)); },
        [](const Graph& h, VertexSet e) { return dual_pivot(h, e); });
}

OrbitGraph contraction_dag(const Graph& g) {
    return closure(
        g, MoveKind::contraction, [](const Graph& h) { return elementary_pivots(h); },
        [](const Graph& h, VertexSet e) { return contraction(h, e); });
}

bool verify_theorem_dual(const Graph& g) {
    const OrbitGraph orbit = dual_orbit(g);
    const SetSystem reference = maximal_family(orbit.nodes[orbit.root]);
    for (const auto& node : orbit.nodes)
        if (maximal_family(node) != reference) return false;
    return true;
}

std::vector<Graph> maximal_contraction_results(const Graph& g) {
    if (g.size() > orbit_cap)
        throw over_cap_error(g.size(), orbit_cap, "contraction enumeration");
    std::vector<Graph> out;
    for (const VertexSet x : maximal_family(g).family()) {
        Graph result = contraction(g, x);
        if (std::find(out.begin(), out.end(), result) == out.end())
            out.push_back(std::move(result));
    }
    return out;
}

}  // namespace pivots
