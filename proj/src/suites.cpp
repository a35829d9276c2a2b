#include "pivots/suites.hpp"

#include <algorithm>
#include <unordered_set>

#include "pivots/orbit.hpp"
#include "pivots/pivot.hpp"
#include "pivots/setsystem.hpp"

namespace pivots::suites {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    return labels;
}

std::uint64_t graph_code_count(std::size_t n) {
    return std::uint64_t(1) << (n * (n + 1) / 2);
}

Graph graph_from_code(std::size_t n, std::uint64_t code, const std::vector<std::string>& labels) {
    std::vector<std::uint64_t> rows(n, 0);
    std::size_t bit = 0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u; v < n; ++v, ++bit) {
            if ((code >> bit) & 1u) {
                rows[u] |= std::uint64_t(1) << v;
                rows[v] |= std::uint64_t(1) << u;
            }
        }
    }
    return Graph(labels, std::move(rows));
}

namespace {

std::uint64_t code_of(const Graph& g) {
    std::uint64_t code = 0;
    std::size_t bit = 0;
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u; v < g.size(); ++v, ++bit)
            if (g.bit(u, v)) code |= std::uint64_t(1) << bit;
    return code;
}

struct Check {
    PropertyResult result;

    explicit Check(std::string name) { result.name = std::move(name); }

    bool require(bool ok, const std::string& context) {
        ++result.checks;
        if (!ok && result.passed) {
            result.passed = false;
            result.detail = context;
        }
        return ok;
    }
};

template <typename Fn>
void for_all_graphs(std::size_t max_n, Fn&& fn) {
    for (std::size_t n = 0; n <= max_n; ++n) {
        const auto labels = default_labels(n);
        const std::uint64_t end = graph_code_count(n);
        for (std::uint64_t code = 0; code < end; ++code) fn(graph_from_code(n, code, labels));
    }
}

std::vector<VertexSet> pivotable_sets(const Graph& g) {
    std::vector<VertexSet> out;
    const std::uint64_t end = std::uint64_t(1) << g.size();
    for (std::uint64_t bits = 0; bits < end; ++bits)
        if (determinant(g, VertexSet{bits}) == 1) out.push_back(VertexSet{bits});
    return out;
}

std::string describe(const Graph& g) {
    std::string out = "graph[";
    for (std::size_t u = 0; u < g.size(); ++u) {
        if (u) out += ' ';
        out += std::to_string(g.row_bits(u));
    }
    out += "] n=" + std::to_string(g.size());
    return out;
}

PropertyResult tucker_property(std::size_t max_n) {
    Check check("tucker");
    for_all_graphs(max_n, [&](const Graph& g) {
        const std::uint64_t end = std::uint64_t(1) << g.size();
        for (const VertexSet x : pivotable_sets(g)) {
            for (std::uint64_t y = 0; y < end; ++y) {
                if (!check.require(tucker_check(g, x, VertexSet{y}),
                                   "det identity fails at " + describe(g)))
                    return;
            }
        }
    });
    return check.result;
}

PropertyResult partial_inverse_property(std::size_t max_n) {
    Check check("partial-inverse");
    for_all_graphs(max_n, [&](const Graph& g) {
        const std::uint64_t end = std::uint64_t(1) << g.size();
        for (const VertexSet x : pivotable_sets(g)) {
            for (std::uint64_t probe = 0; probe < end; ++probe) {
                if (!check.require(verify_partial_inverse(g, x, VertexSet{probe}),
                                   "partial inverse identity fails at " + describe(g)))
                    return;
            }
        }
    });
    return check.result;
}

PropertyResult involution_composition_property(std::size_t max_n) {
    Check check("involution-composition");
    for_all_graphs(max_n, [&](const Graph& g) {
        const auto applicable = pivotable_sets(g);
        for (const VertexSet x : applicable) {
            const Graph p = pivot(g, x);
            if (!check.require(pivot(p, x) == g, "pivot involution fails at " + describe(g)))
                return;
            for (const VertexSet y : pivotable_sets(p)) {
                if (!check.require(determinant(g, x ^ y) == 1,
                                   "pivot composition undefined at " + describe(g)))
                    return;
                if (!check.require(pivot(p, y) == pivot(g, x ^ y),
                                   "pivot composition fails at " + describe(g)))
                    return;
            }
        }
        const Graph toggled = add_identity(g);
        for (const VertexSet x : pivotable_sets(toggled)) {
            const Graph d = dual_pivot(g, x);
            if (!check.require(dual_pivot(d, x) == g,
                               "dual pivot involution fails at " + describe(g)))
                return;
            for (const VertexSet y : pivotable_sets(add_identity(d))) {
                if (!check.require(determinant(toggled, x ^ y) == 1,
                                   "dual composition undefined at " + describe(g)))
                    return;
                if (!check.require(dual_pivot(d, y) == dual_pivot(g, x ^ y),
                                   "dual composition fails at " + describe(g)))
                    return;
            }
        }
    });
    return check.result;
}

PropertyResult kernel_invariance_property(std::size_t max_n) {
    Check check("kernel-invariance");
    for_all_graphs(max_n, [&](const Graph& g) {
        const Subspace ker = kernel(g);
        const Subspace eig = eigenspace_one(g);
        for (const VertexSet x : pivotable_sets(add_identity(g))) {
            if (!check.require(kernel(dual_pivot(g, x)) == ker,
                               "kernel changes under dual pivot at " + describe(g)))
                return;
        }
        for (const VertexSet x : pivotable_sets(g)) {
            if (!check.require(eigenspace_one(pivot(g, x)) == eig,
                               "eigenspace changes under pivot at " + describe(g)))
                return;
        }
    });
    return check.result;
}

PropertyResult bases_maximal_property(std::size_t max_n) {
    Check check("bases-maximal");
    for_all_graphs(max_n, [&](const Graph& g) {
        const std::size_t r = rank(g);
        const SetSystem maximal = maximal_family(g);
        if (!check.require(maximal.family() == bases(g),
                           "maximal family differs from bases at " + describe(g)))
            return;
        for (const VertexSet x : maximal.family())
            if (!check.require(x.count() == r, "maximal member of wrong size at " + describe(g)))
                return;
        // Strong principal minor property at cardinality = rank.
        const std::uint64_t end = std::uint64_t(1) << g.size();
        for (std::uint64_t bits = 0; bits < end; ++bits) {
            const VertexSet x{bits};
            if (x.count() != r) continue;
            if (!check.require(is_independent(g, x) == (determinant(g, x) == 1),
                               "rank-sized independence mismatch at " + describe(g)))
                return;
        }
    });
    return check.result;
}

PropertyResult kernel_maximal_biconditional_property(std::size_t max_n) {
    Check check("kernel-maximal-biconditional");
    const std::size_t cap = std::min<std::size_t>(max_n, 3);
    for (std::size_t n = 0; n <= cap; ++n) {
        const auto labels = default_labels(n);
        const std::uint64_t end = graph_code_count(n);
        for (std::uint64_t c1 = 0; c1 < end; ++c1) {
            const Graph g1 = graph_from_code(n, c1, labels);
            const Subspace k1 = kernel(g1);
            const SetSystem f1 = maximal_family(g1);
            for (std::uint64_t c2 = 0; c2 < end; ++c2) {
                const Graph g2 = graph_from_code(n, c2, labels);
                const bool kernels_equal = k1 == kernel(g2);
                const bool families_equal = f1 == maximal_family(g2);
                if (!check.require(kernels_equal == families_equal,
                                   "biconditional fails between codes " + std::to_string(c1) +
                                       " and " + std::to_string(c2) + " at n=" + std::to_string(n)))
                    return check.result;
            }
        }
    }
    return check.result;
}

// One pass over every dual orbit: families of maximal pivots, contraction
// results, and gnrdom values must agree across each orbit.
void orbit_sweep(std::size_t max_n, Check& family_check, Check& contraction_check,
                 Check& gnrdom_check) {
    for (std::size_t n = 0; n <= max_n; ++n) {
        const auto labels = default_labels(n);
        const std::uint64_t end = graph_code_count(n);
        std::unordered_set<std::uint64_t> visited;
        for (std::uint64_t code = 0; code < end; ++code) {
            if (visited.count(code)) continue;
            const Graph seed = graph_from_code(n, code, labels);
            const OrbitGraph orbit = dual_orbit(seed);
            for (const auto& node : orbit.nodes) visited.insert(code_of(node));

            const SetSystem family = maximal_family(seed);
            const std::size_t k = nullity(seed);

            std::vector<std::vector<std::string>> reference_leaves;
            for (const auto& leaf : maximal_contraction_results(seed))
                reference_leaves.push_back(leaf.labels());
            std::sort(reference_leaves.begin(), reference_leaves.end());

            const auto reference_gnrdom = gnrdom_family(seed);

            for (const auto& node : orbit.nodes) {
                family_check.require(maximal_family(node) == family,
                                     "maximal family differs inside orbit of " + describe(seed));

                std::vector<std::vector<std::string>> leaves;
                for (const auto& leaf : maximal_contraction_results(node)) {
                    contraction_check.require(leaf.size() == k,
                                              "contraction leaf of wrong size at " + describe(node));
                    bool discrete = true;
                    for (std::size_t u = 0; u < leaf.size(); ++u)
                        if (leaf.row_bits(u)) discrete = false;
                    contraction_check.require(discrete,
                                              "contraction leaf not discrete at " + describe(node));
                    leaves.push_back(leaf.labels());
                }
                std::sort(leaves.begin(), leaves.end());
                contraction_check.require(leaves == reference_leaves,
                                          "contraction results differ inside orbit of " +
                                              describe(seed));

                gnrdom_check.require(gnrdom_family(node) == reference_gnrdom,
                                     "gnrdom family differs inside orbit of " + describe(seed));
            }

            // gnrdom values are exactly the complements of maximal pivot
            // sets, and strategy enumeration realizes all of them.
            std::vector<VertexSet> complements;
            for (const VertexSet x : family.family())
                complements.push_back(seed.vertex_set().minus(x));
            std::sort(complements.begin(), complements.end());
            gnrdom_check.require(reference_gnrdom == complements,
                                 "gnrdom family differs from maximal complements at " +
                                     describe(seed));
            std::vector<VertexSet> from_strategies;
            for (const auto& strategy : complete_contractions(seed, 1000000))
                from_strategies.push_back(strategy.gnrdom);
            std::sort(from_strategies.begin(), from_strategies.end());
            from_strategies.erase(std::unique(from_strategies.begin(), from_strategies.end()),
                                  from_strategies.end());
            gnrdom_check.require(from_strategies == reference_gnrdom,
                                 "strategy gnrdoms differ from sink gnrdoms at " + describe(seed));
        }
    }
}

PropertyResult reconstruct_property(std::size_t max_n) {
    Check check("reconstruct-roundtrip");
    for_all_graphs(max_n, [&](const Graph& g) {
        check.require(reconstruct_graph(delta_matroid(g)) == g,
                      "reconstruction differs at " + describe(g));
    });
    return check.result;
}

PropertyResult row_operation_property(std::size_t max_n) {
    Check check("row-operation-dual");
    for_all_graphs(max_n, [&](const Graph& g) {
        for (const VertexSet x : pivotable_sets(add_identity(g))) {
            if (!check.require(dual_pivot_by_row_ops(g, x) == dual_pivot(g, x),
                               "row operations disagree with dual pivot at " + describe(g)))
                return;
        }
    });
    return check.result;
}

PropertyResult delta_twist_property(std::size_t max_n) {
    Check check("delta-twist-pivot");
    for_all_graphs(max_n, [&](const Graph& g) {
        const SetSystem family = delta_matroid(g);
        for (const VertexSet x : pivotable_sets(g)) {
            if (!check.require(delta_matroid(pivot(g, x)) == twist(family, x),
                               "delta matroid twist mismatch at " + describe(g)))
                return;
        }
    });
    return check.result;
}

PropertyResult orbit_closure_property(std::size_t max_n) {
    Check check("orbit-closure");
    const std::size_t cap = std::min<std::size_t>(max_n, 4);
    for_all_graphs(cap, [&](const Graph& g) {
        std::vector<std::uint64_t> direct;
        for (const VertexSet x : pivotable_sets(g)) direct.push_back(code_of(pivot(g, x)));
        std::sort(direct.begin(), direct.end());
        direct.erase(std::unique(direct.begin(), direct.end()), direct.end());
        std::vector<std::uint64_t> closed;
        for (const auto& node : pivot_orbit(g).nodes) closed.push_back(code_of(node));
        std::sort(closed.begin(), closed.end());
        if (!check.require(direct == closed,
                           "elementary closure differs from direct pivots at " + describe(g)))
            return;

        std::vector<std::uint64_t> direct_dual;
        for (const VertexSet x : pivotable_sets(add_identity(g)))
            direct_dual.push_back(code_of(dual_pivot(g, x)));
        std::sort(direct_dual.begin(), direct_dual.end());
        direct_dual.erase(std::unique(direct_dual.begin(), direct_dual.end()), direct_dual.end());
        std::vector<std::uint64_t> closed_dual;
        for (const auto& node : dual_orbit(g).nodes) closed_dual.push_back(code_of(node));
        std::sort(closed_dual.begin(), closed_dual.end());
        check.require(direct_dual == closed_dual,
                      "elementary dual closure differs from direct dual pivots at " + describe(g));
    });
    return check.result;
}

}  // namespace

std::vector<PropertyResult> run_graph_properties(std::size_t max_n) {
    std::vector<PropertyResult> results;
    results.push_back(tucker_property(max_n));
    results.push_back(partial_inverse_property(max_n));
    results.push_back(involution_composition_property(max_n));
    results.push_back(kernel_invariance_property(max_n));
    results.push_back(bases_maximal_property(max_n));
    results.push_back(kernel_maximal_biconditional_property(max_n));

    Check family_check("dual-orbit-maximal-family");
    Check contraction_check("dual-orbit-contractions");
    Check gnrdom_check("dual-orbit-gnrdom");
    orbit_sweep(max_n, family_check, contraction_check, gnrdom_check);
    results.push_back(family_check.result);
    results.push_back(contraction_check.result);
    results.push_back(gnrdom_check.result);

    results.push_back(reconstruct_property(max_n));
    results.push_back(row_operation_property(max_n));
    results.push_back(delta_twist_property(max_n));
    results.push_back(orbit_closure_property(max_n));
    return results;
}

LegalString random_legal_string(std::mt19937_64& rng, std::size_t max_letters) {
    const std::size_t k = rng() % (max_letters + 1);
    std::vector<SignedLetter> symbols;
    symbols.reserve(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        const SignedLetter letter{std::string(1, static_cast<char>('a' + i)), false};
        symbols.push_back(letter);
        symbols.push_back(letter);
    }
    // Fisher-Yates with explicit modulo keeps the sequence reproducible
    // for a given seed independent of the standard library.
    for (std::size_t i = symbols.size(); i > 1; --i)
        std::swap(symbols[i - 1], symbols[rng() % i]);
    for (auto& s : symbols) s.barred = rng() & 1u;
    return LegalString(std::move(symbols));
}

PropertyResult run_simulation_property(std::uint64_t seed, std::size_t count,
                                       std::size_t max_letters) {
    Check check("simulation");
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const LegalString u = random_legal_string(rng, max_letters);
        std::string diagnostic;
        if (!check.require(verify_simulation(u, &diagnostic),
                           "string '" + u.str() + "': " + diagnostic))
            break;
    }
    return check.result;
}

PropertyResult run_nonconverse_witness() {
    Check check("nonconverse-witness");
    const auto labels = default_labels(2);
    const Graph identity = graph_from_code(2, 0b101, labels);  // loops only
    const OrbitGraph identity_orbit = dual_orbit(identity);
    check.require(identity_orbit.nodes.size() == 1, "all-loops orbit is not a fixed point");
    const SetSystem identity_family = maximal_family(identity);

    bool found = false;
    for (std::uint64_t code = 0; code < graph_code_count(2); ++code) {
        const Graph g = graph_from_code(2, code, labels);
        if (g == identity) continue;
        if (maximal_family(g) != identity_family) continue;
        // Same maximal family; the orbits must nevertheless be disjoint.
        bool contains_identity = false;
        for (const auto& node : dual_orbit(g).nodes)
            if (node == identity) contains_identity = true;
        check.require(!contains_identity, "orbit of a witness reaches the all-loops graph");
        found = true;
    }
    check.require(found, "no witness graph with the same maximal family exists at n=2");
    return check.result;
}

}  // namespace pivots::suites
