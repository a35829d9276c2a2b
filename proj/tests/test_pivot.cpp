#include "pivots/pivot.hpp"

#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "pivots/setsystem.hpp"
#include "pivots/suites.hpp"

using namespace pivots;

namespace {

// Complement all adjacencies and loop states inside the set nbrs.
Graph complement_within(const Graph& g, VertexSet nbrs) {
    std::vector<std::uint64_t> rows;
    for (std::size_t v = 0; v < g.size(); ++v) {
        std::uint64_t row = g.row_bits(v);
        if (nbrs.contains(v)) row ^= nbrs.bits;
        rows.push_back(row);
    }
    return Graph(g.labels(), std::move(rows));
}

}  // namespace

TEST_CASE("pivot on the running example") {
    const Graph g = fixtures::running_example();
    CHECK(pivot(g, g.set_of({"p", "s"})) == g);
    CHECK(pivot(g, g.set_of({"p", "q"})) == fixtures::orbit_after_pq());
    CHECK(pivot(g, VertexSet{}) == g);
    CHECK(pivot(pivot(g, g.set_of({"p", "q"})), g.set_of({"p", "q"})) == g);

    const Graph gp = fixtures::running_example_toggled();
    CHECK(pivot(gp, gp.set_of({"p"})) == fixtures::toggled_pivot_p());

    CHECK_THROWS_AS(pivot(g, g.set_of({"p"})), pivot_undefined_error);
    try {
        pivot(g, g.set_of({"p", "q", "r", "s"}));
        FAIL("pivot on a singular set must throw");
    } catch (const pivot_undefined_error& e) {
        CHECK(e.set() == std::vector<std::string>{"p", "q", "r", "s"});
    }
}

TEST_CASE("block split and reassembly") {
    const Graph g = fixtures::running_example();
    for (std::uint64_t bits = 0; bits < 16; ++bits) {
        const auto blocks = split_blocks(g, VertexSet{bits});
        CHECK(blocks.r == blocks.q.transposed());
        CHECK(blocks.p.is_symmetric());
        CHECK(blocks.s.is_symmetric());
        CHECK(assemble_blocks(g, blocks) == g);
    }
}

TEST_CASE("partial inverse identity") {
    const Graph g = fixtures::running_example();
    CHECK(verify_partial_inverse(g, g.set_of({"p", "s"}), VertexSet{}));
    for (std::uint64_t probe = 0; probe < 16; ++probe)
        CHECK(verify_partial_inverse(g, g.set_of({"p", "q"}), VertexSet{probe}));

    const Graph gp = fixtures::running_example_toggled();
    CHECK(verify_partial_inverse(gp, gp.set_of({"p"}), gp.set_of({"p", "r", "s"})));

    CHECK_THROWS_AS(verify_partial_inverse(g, g.set_of({"p"}), VertexSet{}),
                    pivot_undefined_error);
}

TEST_CASE("determinant transfer under pivot") {
    const Graph g = fixtures::running_example();
    CHECK(tucker_check(g, g.set_of({"p", "q"}), g.set_of({"p", "q"})));
    CHECK(determinant(pivot(g, g.set_of({"p", "q"})), g.set_of({"p", "q"})) == 1);
    for (std::uint64_t y = 0; y < 16; ++y) CHECK(tucker_check(g, g.set_of({"p", "q"}), VertexSet{y}));
    for (std::uint64_t y = 0; y < 16; ++y) CHECK(tucker_check(g, VertexSet{}, VertexSet{y}));
}

TEST_CASE("schur complement") {
    const Graph g = fixtures::running_example();
    const Graph path = make_graph({"p", "r", "s"}, {{"p", "r"}, {"r", "s"}}, {"p", "s"});
    CHECK(schur_complement(g, g.set_of({"q"})) == path);
    CHECK(schur_complement(g, VertexSet{}) == g);

    for (std::size_t n = 0; n <= 3; ++n) {
        const auto labels = suites::default_labels(n);
        for (std::uint64_t code = 0; code < suites::graph_code_count(n); ++code) {
            const Graph h = suites::graph_from_code(n, code, labels);
            for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
                const VertexSet x{bits};
                if (determinant(h, x) != 1) continue;
                const Graph sc = schur_complement(h, x);
                CHECK(nullity(sc) == nullity(h));
                CHECK(sc == contraction(h, x));
            }
        }
    }
}

TEST_CASE("local complementation") {
    const Graph g = fixtures::running_example();
    const std::size_t q = g.index_of("q");
    CHECK(local_complement(g, q) == fixtures::orbit_after_q());
    CHECK(local_complement(g, q) == pivot(g, g.set_of({"q"})));
    CHECK(local_complement(local_complement(g, q), q) == g);
    CHECK_THROWS_AS(local_complement(g, g.index_of("p")), not_elementary_error);

    const Graph lonely = make_graph({"a", "b"}, {}, {"a"});
    CHECK(local_complement(lonely, 0) == lonely);
}

TEST_CASE("edge complementation") {
    const Graph g = fixtures::running_example();
    const std::size_t p = g.index_of("p");
    const std::size_t r = g.index_of("r");
    const std::size_t s = g.index_of("s");

    CHECK(edge_complement(g, p, s) == g);
    CHECK(edge_complement(g, p, r) == fixtures::orbit_after_pr());
    CHECK(edge_complement(g, p, r) == pivot(g, g.set_of({"p", "r"})));
    CHECK(edge_complement(edge_complement(g, p, r), p, r) == g);

    const auto part = neighborhood_partition(g, p, r);
    CHECK((part.v1 & part.v2).empty());
    CHECK((part.v1 & part.v3).empty());
    CHECK((part.v2 & part.v3).empty());
    CHECK(part.v3.contains(p));
    CHECK(part.v3.contains(r));

    CHECK_THROWS_AS(edge_complement(g, p, g.index_of("q")), not_elementary_error);  // loop on q
    CHECK_THROWS_AS(edge_complement(fixtures::orbit_after_pr(), p, s), not_elementary_error);
    CHECK_THROWS_AS(edge_complement(g, p, p), not_elementary_error);
}

TEST_CASE("elementary pivot listing") {
    const Graph g = fixtures::running_example();
    const std::vector<VertexSet> expected = {g.set_of({"q"}), g.set_of({"p", "r"}),
                                             g.set_of({"p", "s"}), g.set_of({"r", "s"})};
    CHECK(elementary_pivots(g) == expected);

    const Graph d = fixtures::dual_pivot_p();
    const std::vector<VertexSet> expected_dual = {d.set_of({"r"}), d.set_of({"s"}),
                                                  d.set_of({"p", "q"})};
    CHECK(elementary_pivots(d) == expected_dual);

    CHECK(elementary_pivots(Graph({"a", "b"}, {0, 0})).empty());

    // Elementary sets are exactly the minimal nonempty determinant-1 sets.
    for (std::size_t n = 0; n <= 3; ++n) {
        const auto labels = suites::default_labels(n);
        for (std::uint64_t code = 0; code < suites::graph_code_count(n); ++code) {
            const Graph h = suites::graph_from_code(n, code, labels);
            auto elems = elementary_pivots(h);
            std::sort(elems.begin(), elems.end());
            CHECK(elems == minimal_family(h).family());
        }
    }
}

TEST_CASE("pivot decomposition into elementary steps") {
    const Graph g = fixtures::running_example();

    const auto steps = decompose_pivot(g, g.set_of({"p", "q"}));
    CHECK(steps.size() == 2);

    CHECK(decompose_pivot(g, g.set_of({"q"})) == std::vector<VertexSet>{g.set_of({"q"})});
    CHECK(decompose_pivot(g, VertexSet{}).empty());
    CHECK_THROWS_AS(decompose_pivot(g, g.set_of({"p"})), pivot_undefined_error);

    // Replaying the steps agrees with the block-formula pivot, for every
    // applicable set.
    for (std::uint64_t bits = 0; bits < 16; ++bits) {
        const VertexSet y{bits};
        if (determinant(g, y) != 1) continue;
        Graph replay = g;
        VertexSet used;
        for (const VertexSet e : decompose_pivot(g, y)) {
            CHECK((used & e).empty());
            used |= e;
            replay = apply_elementary(replay, e);
        }
        CHECK(used == y);
        CHECK(replay == pivot(g, y));
    }
}

TEST_CASE("dual pivot") {
    const Graph g = fixtures::running_example();
    const VertexSet p = g.set_of({"p"});
    CHECK(dual_pivot(g, p) == fixtures::dual_pivot_p());
    CHECK(dual_pivot(dual_pivot(g, p), p) == g);
    CHECK(kernel(dual_pivot(g, p)) == kernel(g));
    CHECK(dual_pivot(g, VertexSet{}) == g);

    // q has a loop, so the toggled graph has no loop there and no edge
    // can help: the dual pivot on {q} is undefined.
    CHECK_THROWS_AS(dual_pivot(g, g.set_of({"q"})), dual_pivot_undefined_error);

    // Elementary dual pivots act like neighbourhood complementation.
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto labels = suites::default_labels(n);
        for (std::uint64_t code = 0; code < suites::graph_code_count(n); ++code) {
            const Graph h = suites::graph_from_code(n, code, labels);
            for (std::size_t u = 0; u < n; ++u) {
                if (h.has_loop(u)) continue;
                CHECK(dual_pivot(h, VertexSet::single(u)) ==
                      complement_within(h, h.neighbourhood(u)));
            }
        }
    }
}

TEST_CASE("dual pivot by row operations") {
    const Graph g = fixtures::running_example();
    CHECK(dual_pivot_by_row_ops(g, g.set_of({"p"})) == dual_pivot(g, g.set_of({"p"})));
    CHECK(dual_pivot_by_row_ops(g, VertexSet{}) == g);

    for (std::size_t n = 0; n <= 3; ++n) {
        const auto labels = suites::default_labels(n);
        for (std::uint64_t code = 0; code < suites::graph_code_count(n); ++code) {
            const Graph h = suites::graph_from_code(n, code, labels);
            const Graph toggled = add_identity(h);
            for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
                const VertexSet x{bits};
                if (determinant(toggled, x) != 1) continue;
                CHECK(dual_pivot_by_row_ops(h, x) == dual_pivot(h, x));
            }
        }
    }
}

TEST_CASE("contraction") {
    const Graph g = fixtures::running_example();
    const Graph leaf = contraction(g, g.set_of({"p", "q", "r"}));
    CHECK(leaf == Graph({"s"}, {0}));
    CHECK(contraction(g, VertexSet{}) == g);

    // Two elementary contraction steps compose like one contraction.
    const Graph after_q = contraction(g, g.set_of({"q"}));
    const Graph two_steps = contraction(after_q, after_q.set_of({"p", "r"}));
    CHECK(two_steps == contraction(g, g.set_of({"p", "q", "r"})));
}

TEST_CASE("maximal pivot sets") {
    const Graph g = fixtures::running_example();
    CHECK(is_maximal_pivot_set(g, g.set_of({"p", "q", "s"})));
    CHECK_FALSE(is_maximal_pivot_set(g, g.set_of({"p", "q"})));
    const Graph h = fixtures::orbit_after_pq();
    CHECK(is_maximal_pivot_set(h, h.vertex_set()));

    // Against the superset definition.
    for (std::size_t n = 0; n <= 3; ++n) {
        const auto labels = suites::default_labels(n);
        for (std::uint64_t code = 0; code < suites::graph_code_count(n); ++code) {
            const Graph k = suites::graph_from_code(n, code, labels);
            for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
                const VertexSet x{bits};
                bool expected = determinant(k, x) == 1;
                if (expected) {
                    for (std::uint64_t sup = 0; sup < (std::uint64_t(1) << n); ++sup) {
                        const VertexSet y{sup};
                        if (x.subset_of(y) && x != y && determinant(k, y) == 1) expected = false;
                    }
                }
                CHECK(is_maximal_pivot_set(k, x) == expected);
            }
        }
    }
}
