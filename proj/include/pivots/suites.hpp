#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pivots/geneassembly.hpp"
#include "pivots/graph.hpp"

namespace pivots::suites {

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::uint64_t checks = 0;
    std::string detail;  // first failure, empty when passed
};

std::vector<std::string> default_labels(std::size_t n);

// Enumeration of all labeled graphs on n vertices: one bit per unordered
// vertex pair including the diagonal, 2^(n(n+1)/2) codes in total.
std::uint64_t graph_code_count(std::size_t n);
Graph graph_from_code(std::size_t n, std::uint64_t code, const std::vector<std::string>& labels);

// Exhaustive property checks over every graph with at most max_n
// vertices. Pairwise checks run at min(max_n, 3); orbit closure
// cross-checks at min(max_n, 4).
std::vector<PropertyResult> run_graph_properties(std::size_t max_n);

// Seeded random legal strings fed through the string/graph simulation
// oracle.
PropertyResult run_simulation_property(std::uint64_t seed, std::size_t count,
                                       std::size_t max_letters);

// Search at n = 2 for a graph outside the all-loops orbit sharing its
// maximal pivot family, showing orbit equality is not implied by family
// equality.
PropertyResult run_nonconverse_witness();

LegalString random_legal_string(std::mt19937_64& rng, std::size_t max_letters);

}  // namespace pivots::suites
