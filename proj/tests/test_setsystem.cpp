#include "pivots/setsystem.hpp"

#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "pivots/pivot.hpp"
#include "pivots/suites.hpp"

using namespace pivots;

TEST_CASE("set system storage is canonical") {
    const Graph g = fixtures::running_example();
    const SetSystem a(g.labels(), {g.set_of({"p", "q"}), VertexSet{}, g.set_of({"p", "q"})});
    CHECK(a.size() == 2);  // deduplicated
    CHECK(a.family().front() == VertexSet{});
    CHECK(a.contains(g.set_of({"p", "q"})));
    CHECK_FALSE(a.contains(g.set_of({"r"})));

    // Equality aligns ground labels.
    const SetSystem b({"s", "r", "q", "p"}, {VertexSet{}, VertexSet::pair(2, 3)});
    CHECK(a == b);
}

TEST_CASE("twist") {
    const SetSystem family = fixtures::running_family();
    const Graph g = fixtures::running_example();
    const VertexSet pq = g.set_of({"p", "q"});
    CHECK(twist(family, pq) == fixtures::running_family_twisted());
    CHECK(twist(family, VertexSet{}) == family);
    CHECK(twist(twist(family, pq), pq) == family);
    CHECK_THROWS_AS(twist(family, VertexSet{1u << 10}), invalid_vertex_error);
}

TEST_CASE("determinant family of the running example") {
    const Graph g = fixtures::running_example();
    CHECK(delta_matroid(g) == fixtures::running_family());
    CHECK(delta_matroid(Graph({"a", "b"}, {0, 0})) ==
          SetSystem({"a", "b"}, {VertexSet{}}));

    // Pivot acts on the family as a twist.
    for (std::size_t n = 0; n <= 3; ++n) {
        const auto labels = suites::default_labels(n);
        for (std::uint64_t code = 0; code < suites::graph_code_count(n); ++code) {
            const Graph h = suites::graph_from_code(n, code, labels);
            const SetSystem family = delta_matroid(h);
            for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
                const VertexSet x{bits};
                if (determinant(h, x) != 1) continue;
                CHECK(delta_matroid(pivot(h, x)) == twist(family, x));
            }
        }
    }
}

TEST_CASE("exhaustive enumeration is capped") {
    const auto labels = suites::default_labels(21);
    CHECK_THROWS_AS(delta_matroid(Graph(labels, std::vector<std::uint64_t>(21, 0))),
                    over_cap_error);
}

TEST_CASE("maximal and minimal families") {
    const Graph g = fixtures::running_example();
    const SetSystem expected_max(
        g.labels(), {g.set_of({"p", "q", "s"}), g.set_of({"p", "q", "r"}), g.set_of({"q", "r", "s"})});
    CHECK(maximal_family(g) == expected_max);
    CHECK(maximal_family(fixtures::orbit_after_pq()) ==
          SetSystem(g.labels(), {g.vertex_set()}));
    CHECK(maximal_family(fixtures::dual_pivot_p()) == expected_max);

    const SetSystem expected_min(g.labels(), {g.set_of({"q"}), g.set_of({"p", "s"}),
                                              g.set_of({"p", "r"}), g.set_of({"r", "s"})});
    CHECK(minimal_family(g) == expected_min);
    CHECK(minimal_family(fixtures::dual_pivot_p()) ==
          SetSystem(g.labels(), {g.set_of({"r"}), g.set_of({"s"}), g.set_of({"p", "q"})}));

    const Graph two_loops = make_graph({"a", "b"}, {}, {"a", "b"});
    CHECK(minimal_family(two_loops) ==
          SetSystem({"a", "b"}, {VertexSet{1}, VertexSet{2}}));

    // Full family of the dual-pivoted running example, read off its
    // inclusion diagram.
    CHECK(delta_matroid(fixtures::dual_pivot_p()) == fixtures::dual_pivot_p_family());
}

TEST_CASE("minimal dependent sets span the kernel") {
    for (std::size_t n = 0; n <= 4; ++n) {
        const auto labels = suites::default_labels(n);
        for (std::uint64_t code = 0; code < suites::graph_code_count(n); ++code) {
            const Graph h = suites::graph_from_code(n, code, labels);

            // Minimal nonempty dependent sets, by brute force.
            std::vector<VertexSet> dependent;
            for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << n); ++bits)
                if (!is_independent(h, VertexSet{bits})) dependent.push_back(VertexSet{bits});
            std::vector<VertexSet> circuits;
            for (const VertexSet d : dependent) {
                bool minimal = true;
                for (const VertexSet e : dependent)
                    if (e != d && e.subset_of(d)) minimal = false;
                if (minimal) circuits.push_back(d);
            }

            // Their closure under symmetric difference is exactly the kernel.
            const Subspace span(labels, circuits);
            const Subspace ker = kernel(h);
            CHECK(span == ker);
        }
    }
}

TEST_CASE("graph reconstruction from the family") {
    const Graph g = fixtures::running_example();
    CHECK(reconstruct_graph(delta_matroid(g)) == g);
    CHECK(reconstruct_graph(SetSystem({"a", "b"}, {VertexSet{}})) == Graph({"a", "b"}, {0, 0}));
    CHECK(reconstruct_graph(SetSystem({"a", "b"},
                                      {VertexSet{}, VertexSet{1}, VertexSet{2}, VertexSet{3}})) ==
          make_graph({"a", "b"}, {}, {"a", "b"}));
    CHECK_THROWS_AS(reconstruct_graph(SetSystem({"a"}, {VertexSet{1}})), not_graphic_error);

    for (std::size_t n = 0; n <= 4; ++n) {
        const auto labels = suites::default_labels(n);
        for (std::uint64_t code = 0; code < suites::graph_code_count(n); ++code) {
            const Graph h = suites::graph_from_code(n, code, labels);
            CHECK(reconstruct_graph(delta_matroid(h)) == h);
        }
    }
}

TEST_CASE("kernel and bases determine each other") {
    const Graph g = fixtures::running_example();
    CHECK(kernel_bases_equivalence(g, g));
    CHECK(kernel_bases_equivalence(g, fixtures::dual_pivot_p()));
    CHECK(kernel(g) == kernel(fixtures::dual_pivot_p()));

    const Graph moved = pivot(g, g.set_of({"p", "q"}));
    CHECK(kernel_bases_equivalence(g, moved));
    CHECK(kernel(g) != kernel(moved));
    CHECK(maximal_family(g) != maximal_family(moved));

    CHECK_THROWS_AS(kernel_bases_equivalence(g, Graph({"a"}, {0})), ground_mismatch_error);
}
