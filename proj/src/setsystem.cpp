#include "pivots/setsystem.hpp"

#include <algorithm>

namespace pivots {

SetSystem::SetSystem(std::vector<std::string> ground, std::vector<VertexSet> family)
    : ground_(std::move(ground)), family_(std::move(family)) {
    const VertexSet valid = VertexSet::first_n(ground_.size());
    for (const auto& s : family_)
        if (!s.subset_of(valid))
            throw invalid_vertex_error("family member beyond the ground set");
    for (std::size_t u = 0; u < ground_.size(); ++u)
        for (std::size_t v = u + 1; v < ground_.size(); ++v)
            if (ground_[u] == ground_[v])
                throw parse_error("duplicate ground label: " + ground_[u]);
    std::sort(family_.begin(), family_.end());
    family_.erase(std::unique(family_.begin(), family_.end()), family_.end());
}

bool SetSystem::contains(VertexSet s) const {
    return std::binary_search(family_.begin(), family_.end(), s);
}

bool SetSystem::operator==(const SetSystem& other) const {
    if (ground_.size() != other.ground_.size() || family_.size() != other.family_.size())
        return false;
    if (ground_ == other.ground_) return family_ == other.family_;
    std::vector<std::size_t> perm(other.ground_.size());
    for (std::size_t i = 0; i < other.ground_.size(); ++i) {
        const auto it = std::find(ground_.begin(), ground_.end(), other.ground_[i]);
        if (it == ground_.end()) return false;
        perm[i] = static_cast<std::size_t>(it - ground_.begin());
    }
    std::vector<VertexSet> remapped;
    remapped.reserve(other.family_.size());
    for (const auto& s : other.family_) {
        VertexSet v;
        for (std::size_t i : s.indices()) v |= VertexSet::single(perm[i]);
        remapped.push_back(v);
    }
    std::sort(remapped.begin(), remapped.end());
    return family_ == remapped;
}

SetSystem twist(const SetSystem& m, VertexSet x) {
    if (!x.subset_of(VertexSet::first_n(m.ground().size())))
        throw invalid_vertex_error("twist set beyond the ground set");
    std::vector<VertexSet> twisted;
    twisted.reserve(m.size());
    for (const auto& s : m.family()) twisted.push_back(s ^ x);
    return SetSystem(m.ground(), std::move(twisted));
}

SetSystem delta_matroid(const Graph& g) {
    if (g.size() > exhaustive_cap)
        throw over_cap_error(g.size(), exhaustive_cap, "subset enumeration");
    std::vector<VertexSet> family;
    const std::uint64_t end = std::uint64_t(1) << g.size();
    for (std::uint64_t bits = 0; bits < end; ++bits) {
        const VertexSet x{bits};
        if (determinant(g, x) == 1) family.push_back(x);
    }
    return SetSystem(g.labels(), std::move(family));
}

SetSystem maximal_sets(const SetSystem& m) {
    std::vector<VertexSet> out;
    for (const auto& s : m.family()) {
        bool maximal = true;
        for (const auto& t : m.family()) {
            if (t.count() > s.count() && s.subset_of(t)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(s);
    }
    return SetSystem(m.ground(), std::move(out));
}

SetSystem minimal_nonempty_sets(const SetSystem& m) {
    std::vector<VertexSet> out;
    for (const auto& s : m.family()) {
        if (s.empty()) continue;
        bool minimal = true;
        for (const auto& t : m.family()) {
            if (!t.empty() && t.count() < s.count() && t.subset_of(s)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(s);
    }
    return SetSystem(m.ground(), std::move(out));
}

SetSystem maximal_family(const Graph& g) { return maximal_sets(delta_matroid(g)); }

SetSystem minimal_family(const Graph& g) { return minimal_nonempty_sets(delta_matroid(g)); }

Graph reconstruct_graph(const SetSystem& m) {
    if (!m.contains(VertexSet{})) throw not_graphic_error();
    const std::size_t n = m.ground().size();
    std::vector<std::uint64_t> rows(n, 0);
    for (std::size_t u = 0; u < n; ++u)
        if (m.contains(VertexSet::single(u))) rows[u] |= std::uint64_t(1) << u;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const bool pair_in = m.contains(VertexSet::pair(u, v));
            const bool both_singletons =
                m.contains(VertexSet::single(u)) && m.contains(VertexSet::single(v));
            if (pair_in != both_singletons) {
                rows[u] |= std::uint64_t(1) << v;
                rows[v] |= std::uint64_t(1) << u;
            }
        }
    }
    return Graph(m.ground(), std::move(rows));
}

bool kernel_bases_equivalence(const Graph& g1, const Graph& g2) {
    if (g1.size() != g2.size()) throw ground_mismatch_error();
    for (const auto& l : g1.labels())
        if (!g2.has_label(l)) throw ground_mismatch_error();
    const bool kernels_equal = kernel(g1) == kernel(g2);
    const bool bases_equal = maximal_family(g1) == maximal_family(g2);
    return kernels_equal == bases_equal;
}

}  // namespace pivots
