#include "pivots/orbit.hpp"

#include <algorithm>
#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "pivots/pivot.hpp"
#include "pivots/suites.hpp"

using namespace pivots;

namespace {

Graph replay_move(const Graph& source, const OrbitEdge& e) {
    switch (e.kind) {
        case MoveKind::pivot: return pivot(source, e.move);
        case MoveKind::dual_pivot: return dual_pivot(source, e.move);
        case MoveKind::contraction: return contraction(source, e.move);
    }
    return source;
}

void check_replay(const OrbitGraph& o) {
    for (const auto& e : o.edges) CHECK(replay_move(o.nodes[e.from], e) == o.nodes[e.to]);
}

std::vector<std::vector<std::string>> leaf_label_sets(const std::vector<Graph>& leaves) {
    std::vector<std::vector<std::string>> out;
    for (const auto& leaf : leaves) {
        auto labels = leaf.labels();
        std::sort(labels.begin(), labels.end());
        out.push_back(std::move(labels));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("pivot orbit of the running example") {
    const Graph g = fixtures::running_example();
    const OrbitGraph orbit = pivot_orbit(g);

    REQUIRE(orbit.nodes.size() == 5);
    CHECK(orbit.nodes[orbit.root] == g);

    // The five orbit members, in any order.
    const std::vector<Graph> expected = {g, fixtures::orbit_after_q(), fixtures::orbit_after_pq(),
                                         fixtures::orbit_after_pr(), fixtures::orbit_fifth()};
    for (const auto& want : expected)
        CHECK(std::count(orbit.nodes.begin(), orbit.nodes.end(), want) == 1);

    // Directed edge counts per move set: bidirectional arrows appear twice,
    // fixed points once.
    std::map<std::vector<std::string>, int> counts;
    int self_loops = 0;
    for (const auto& e : orbit.edges) {
        counts[orbit.nodes[e.from].names_of(e.move)]++;
        if (e.from == e.to) ++self_loops;
    }
    CHECK(orbit.edges.size() == 17);
    CHECK(self_loops == 3);
    CHECK(counts[{"q"}] == 4);
    CHECK(counts[{"p"}] == 2);
    CHECK(counts[{"s"}] == 2);
    CHECK(counts[{"r"}] == 2);
    CHECK(counts[{"p", "r"}] == 2);
    CHECK(counts[{"r", "s"}] == 2);
    CHECK(counts[{"p", "s"}] == 3);

    check_replay(orbit);

    // Deterministic exploration.
    const OrbitGraph again = pivot_orbit(g);
    CHECK(again.nodes.size() == orbit.nodes.size());
    for (std::size_t i = 0; i < orbit.nodes.size(); ++i)
        CHECK(again.nodes[i] == orbit.nodes[i]);
    REQUIRE(again.edges.size() == orbit.edges.size());
    for (std::size_t i = 0; i < orbit.edges.size(); ++i) {
        CHECK(again.edges[i].from == orbit.edges[i].from);
        CHECK(again.edges[i].to == orbit.edges[i].to);
        CHECK(again.edges[i].move == orbit.edges[i].move);
    }
}

TEST_CASE("pivot orbit of an edgeless graph") {
    const Graph isolated({"a", "b"}, {0, 0});
    const OrbitGraph orbit = pivot_orbit(isolated);
    CHECK(orbit.nodes.size() == 1);
    CHECK(orbit.edges.empty());
}

TEST_CASE("orbit cap") {
    const auto labels = suites::default_labels(17);
    CHECK_THROWS_AS(pivot_orbit(Graph(labels, std::vector<std::uint64_t>(17, 0))),
                    over_cap_error);
}

TEST_CASE("dual orbit") {
    const Graph all_loops = make_graph({"a", "b"}, {}, {"a", "b"});
    const OrbitGraph fixed = dual_orbit(all_loops);
    CHECK(fixed.nodes.size() == 1);
    CHECK(fixed.nodes[0] == all_loops);

    const Graph g = fixtures::running_example();
    const OrbitGraph orbit = dual_orbit(g);
    CHECK(std::count(orbit.nodes.begin(), orbit.nodes.end(), fixtures::dual_pivot_p()) == 1);
    const Subspace ker = kernel(g);
    for (const auto& node : orbit.nodes) CHECK(kernel(node) == ker);
    check_replay(orbit);

    // Along pivot orbits the fixed-point space is preserved instead.
    const Subspace eig = eigenspace_one(g);
    for (const auto& node : pivot_orbit(g).nodes) CHECK(eigenspace_one(node) == eig);
}

TEST_CASE("maximal pivot family across a dual orbit") {
    const Graph g = fixtures::running_example();
    CHECK(verify_theorem_dual(g));
    const SetSystem expected(
        g.labels(), {g.set_of({"p", "q", "s"}), g.set_of({"p", "q", "r"}), g.set_of({"q", "r", "s"})});
    for (const auto& node : dual_orbit(g).nodes) CHECK(maximal_family(node) == expected);

    CHECK(verify_theorem_dual(Graph({"a"}, {0})));

    for (std::size_t n = 0; n <= 3; ++n) {
        const auto labels = suites::default_labels(n);
        for (std::uint64_t code = 0; code < suites::graph_code_count(n); ++code)
            CHECK(verify_theorem_dual(suites::graph_from_code(n, code, labels)));
    }
}

TEST_CASE("maximal contraction results") {
    const Graph g = fixtures::running_example();
    const auto leaves = maximal_contraction_results(g);
    REQUIRE(leaves.size() == 3);
    for (const auto& leaf : leaves) {
        CHECK(leaf.size() == 1);
        CHECK(leaf.row_bits(0) == 0);
    }
    CHECK(leaf_label_sets(leaves) ==
          std::vector<std::vector<std::string>>{{"p"}, {"r"}, {"s"}});

    CHECK(leaf_label_sets(maximal_contraction_results(fixtures::dual_pivot_p())) ==
          leaf_label_sets(leaves));

    // Invertible graph: a single empty leaf.
    const Graph edge = make_graph({"a", "b"}, {{"a", "b"}});
    const auto single = maximal_contraction_results(edge);
    REQUIRE(single.size() == 1);
    CHECK(single[0].size() == 0);
}

TEST_CASE("contraction DAG") {
    const Graph g = fixtures::running_example();
    const OrbitGraph dag = contraction_dag(g);
    CHECK(dag.nodes.size() == 10);
    CHECK(dag.edges.size() == 13);
    check_replay(dag);

    std::vector<Graph> sinks;
    for (const std::size_t i : dag.sink_indices()) sinks.push_back(dag.nodes[i]);
    CHECK(leaf_label_sets(sinks) == std::vector<std::vector<std::string>>{{"p"}, {"r"}, {"s"}});
    for (const auto& sink : sinks) CHECK(sink.row_bits(0) == 0);

    // The intermediate three-vertex graph below the root.
    const Graph path = make_graph({"p", "r", "s"}, {{"p", "r"}, {"r", "s"}}, {"p", "s"});
    CHECK(std::count(dag.nodes.begin(), dag.nodes.end(), path) == 1);

    const OrbitGraph dual_dag = contraction_dag(fixtures::dual_pivot_p());
    CHECK(dual_dag.nodes.size() == 11);
    std::vector<Graph> dual_sinks;
    for (const std::size_t i : dual_dag.sink_indices()) dual_sinks.push_back(dual_dag.nodes[i]);
    CHECK(leaf_label_sets(dual_sinks) == leaf_label_sets(sinks));

    CHECK(contraction_dag(Graph()).nodes.size() == 1);

    // Sinks coincide with the maximal contraction results.
    for (std::size_t n = 0; n <= 3; ++n) {
        const auto labels = suites::default_labels(n);
        for (std::uint64_t code = 0; code < suites::graph_code_count(n); ++code) {
            const Graph h = suites::graph_from_code(n, code, labels);
            const OrbitGraph d = contraction_dag(h);
            std::vector<Graph> hs;
            for (const std::size_t i : d.sink_indices()) hs.push_back(d.nodes[i]);
            CHECK(leaf_label_sets(hs) == leaf_label_sets(maximal_contraction_results(h)));
        }
    }
}

TEST_CASE("equal families do not force equal orbits") {
    const auto witness = suites::run_nonconverse_witness();
    CHECK(witness.passed);

    // Concrete witness at n = 2: a single edge shares the maximal family
    // of the all-loops graph but sits in a disjoint orbit.
    const Graph all_loops = make_graph({"a", "b"}, {}, {"a", "b"});
    const Graph edge = make_graph({"a", "b"}, {{"a", "b"}});
    CHECK(maximal_family(all_loops) == maximal_family(edge));
    CHECK(dual_orbit(all_loops).nodes.size() == 1);
    for (const auto& node : dual_orbit(edge).nodes) CHECK(node != all_loops);
}
