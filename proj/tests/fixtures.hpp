#pragma once

#include <string>
#include <vector>

#include "pivots/graph.hpp"
#include "pivots/setsystem.hpp"

// Shared fixtures: the four-vertex running example and its relatives.
namespace fixtures {

using pivots::Graph;
using pivots::SetSystem;
using pivots::VertexSet;

// Edges pq, pr, ps, qs, rs; loop on q.
inline Graph running_example() {
    return pivots::make_graph({"p", "q", "r", "s"},
                              {{"p", "q"}, {"p", "r"}, {"p", "s"}, {"q", "s"}, {"r", "s"}},
                              {"q"});
}

// The loop-toggled companion: same edges, loops on p, r, s.
inline Graph running_example_toggled() {
    return pivots::make_graph({"p", "q", "r", "s"},
                              {{"p", "q"}, {"p", "r"}, {"p", "s"}, {"q", "s"}, {"r", "s"}},
                              {"p", "r", "s"});
}

// Pivot of the toggled graph on p: edges pq, pr, ps, qr; loops p, q.
inline Graph toggled_pivot_p() {
    return pivots::make_graph({"p", "q", "r", "s"},
                              {{"p", "q"}, {"p", "r"}, {"p", "s"}, {"q", "r"}},
                              {"p", "q"});
}

// Dual pivot of the running example on p: edges pq, pr, ps, qr; loops r, s.
inline Graph dual_pivot_p() {
    return pivots::make_graph({"p", "q", "r", "s"},
                              {{"p", "q"}, {"p", "r"}, {"p", "s"}, {"q", "r"}},
                              {"r", "s"});
}

// The five graphs of the pivot orbit of the running example.
inline Graph orbit_after_q() {  // local complement at q
    return pivots::make_graph({"p", "q", "r", "s"},
                              {{"p", "q"}, {"p", "r"}, {"q", "s"}, {"r", "s"}},
                              {"p", "q", "s"});
}
inline Graph orbit_after_pq() {  // pivot on {p,q}
    return pivots::make_graph({"p", "q", "r", "s"},
                              {{"p", "q"}, {"p", "r"}, {"q", "r"}, {"q", "s"}, {"r", "s"}},
                              {"p", "r", "s"});
}
inline Graph orbit_after_pr() {  // pivot on {p,r}
    return pivots::make_graph({"p", "q", "r", "s"},
                              {{"p", "r"}, {"p", "s"}, {"q", "r"}, {"r", "s"}},
                              {"q"});
}
inline Graph orbit_fifth() {  // pivot on {p,q,r} ({p,r} then local at q side)
    return pivots::make_graph({"p", "q", "r", "s"},
                              {{"p", "r"}, {"p", "s"}, {"q", "r"}, {"r", "s"}},
                              {"q", "r"});
}

inline VertexSet set_of(const Graph& g, const std::vector<std::string>& names) {
    return g.set_of(names);
}

// The ten determinant-1 subsets of the running example.
inline SetSystem running_family() {
    const Graph g = running_example();
    std::vector<VertexSet> family = {
        g.set_of({}),
        g.set_of({"q"}),
        g.set_of({"p", "q"}),
        g.set_of({"p", "r"}),
        g.set_of({"p", "s"}),
        g.set_of({"q", "s"}),
        g.set_of({"r", "s"}),
        g.set_of({"p", "q", "s"}),
        g.set_of({"p", "q", "r"}),
        g.set_of({"q", "r", "s"}),
    };
    return SetSystem(g.labels(), std::move(family));
}

// The same family twisted by {p,q}.
inline SetSystem running_family_twisted() {
    const Graph g = running_example();
    std::vector<VertexSet> family = {
        g.set_of({}),
        g.set_of({"p"}),
        g.set_of({"r"}),
        g.set_of({"s"}),
        g.set_of({"p", "q"}),
        g.set_of({"p", "s"}),
        g.set_of({"q", "r"}),
        g.set_of({"q", "s"}),
        g.set_of({"p", "r", "s"}),
        g.set_of({"p", "q", "r", "s"}),
    };
    return SetSystem(g.labels(), std::move(family));
}

// Determinant-1 subsets of dual_pivot_p().
inline SetSystem dual_pivot_p_family() {
    const Graph g = dual_pivot_p();
    std::vector<VertexSet> family = {
        g.set_of({}),
        g.set_of({"r"}),
        g.set_of({"s"}),
        g.set_of({"p", "q"}),
        g.set_of({"p", "r"}),
        g.set_of({"p", "s"}),
        g.set_of({"q", "r"}),
        g.set_of({"r", "s"}),
        g.set_of({"p", "q", "r"}),
        g.set_of({"p", "q", "s"}),
        g.set_of({"q", "r", "s"}),
    };
    return SetSystem(g.labels(), std::move(family));
}

}  // namespace fixtures
