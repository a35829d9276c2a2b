#include "pivots/graph.hpp"

#include <algorithm>

#include "pivots/bitmatrix.hpp"

namespace pivots {

namespace {

BitMatrix adjacency_matrix(const Graph& g) {
    BitMatrix m(g.size(), g.size());
    for (std::size_t u = 0; u < g.size(); ++u) m.data[u] = g.row_bits(u);
    return m;
}

}  // namespace

Graph::Graph(std::vector<std::string> labels, std::vector<std::uint64_t> rows)
    : labels_(std::move(labels)), rows_(std::move(rows)) {
    const std::size_t n = labels_.size();
    if (n > max_vertices)
        throw over_cap_error(n, max_vertices, "graphs");
    if (rows_.size() != n)
        throw parse_error("adjacency row count does not match vertex count");
    const std::uint64_t valid = VertexSet::first_n(n).bits;
    for (std::size_t u = 0; u < n; ++u) {
        if (rows_[u] & ~valid)
            throw parse_error("adjacency bits outside the vertex range");
        for (std::size_t v = u + 1; v < n; ++v)
            if (bit(u, v) != bit(v, u))
                throw parse_error("adjacency matrix is not symmetric");
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (labels_[u] == labels_[v])
                throw parse_error("duplicate vertex label: " + labels_[u]);
}

bool Graph::has_label(std::string_view name) const {
    for (const auto& l : labels_)
        if (l == name) return true;
    return false;
}

std::size_t Graph::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == name) return i;
    throw invalid_vertex_error(std::string(name));
}

VertexSet Graph::set_of(const std::vector<std::string>& names) const {
    VertexSet s;
    for (const auto& name : names) s |= VertexSet::single(index_of(name));
    return s;
}

std::vector<std::string> Graph::names_of(VertexSet s) const {
    require_subset(s);
    std::vector<std::string> out;
    for (std::size_t i : s.indices()) out.push_back(labels_[i]);
    return out;
}

VertexSet Graph::image(VertexSet v) const {
    require_subset(v);
    VertexSet out;
    for (std::size_t u = 0; u < size(); ++u)
        if (std::popcount(rows_[u] & v.bits) & 1) out |= VertexSet::single(u);
    return out;
}

void Graph::require_subset(VertexSet x) const {
    if (!x.subset_of(vertex_set()))
        throw invalid_vertex_error("bit " + std::to_string(std::countr_zero(x.minus(vertex_set()).bits)) +
                                   " beyond the vertex range");
}

bool Graph::operator==(const Graph& other) const {
    if (size() != other.size()) return false;
    if (labels_ == other.labels_) return rows_ == other.rows_;
    // Same label set in a different order: align columns before comparing.
    std::vector<std::size_t> perm(size());
    for (std::size_t i = 0; i < size(); ++i) {
        if (!other.has_label(labels_[i])) return false;
        perm[i] = other.index_of(labels_[i]);
    }
    for (std::size_t u = 0; u < size(); ++u)
        for (std::size_t v = u; v < size(); ++v)
            if (bit(u, v) != other.bit(perm[u], perm[v])) return false;
    return true;
}

Graph make_graph(std::vector<std::string> labels,
                 const std::vector<std::pair<std::string, std::string>>& edges,
                 const std::vector<std::string>& loops) {
    const std::size_t n = labels.size();
    std::vector<std::uint64_t> rows(n, 0);
    Graph skeleton(labels, rows);
    for (const auto& [a, b] : edges) {
        const std::size_t u = skeleton.index_of(a);
        const std::size_t v = skeleton.index_of(b);
        if (u == v) throw parse_error("self edge on " + a + "; declare a loop instead");
        rows[u] |= std::uint64_t(1) << v;
        rows[v] |= std::uint64_t(1) << u;
    }
    for (const auto& a : loops) {
        const std::size_t u = skeleton.index_of(a);
        rows[u] |= std::uint64_t(1) << u;
    }
    return Graph(std::move(labels), std::move(rows));
}

// --- Subspace -------------------------------------------------------------

namespace {

// Reduced row echelon over the spanning vectors: pivot on the lowest set
// bit still available, eliminate it everywhere else, sort by pivot.
std::vector<VertexSet> canonical_basis(std::vector<VertexSet> vecs) {
    std::vector<VertexSet> basis;
    for (std::size_t c = 0; c < 64; ++c) {
        const std::uint64_t mask = std::uint64_t(1) << c;
        std::size_t found = vecs.size();
        for (std::size_t i = 0; i < vecs.size(); ++i)
            if (vecs[i].bits & mask) { found = i; break; }
        if (found == vecs.size()) continue;
        VertexSet piv = vecs[found];
        vecs.erase(vecs.begin() + static_cast<std::ptrdiff_t>(found));
        for (auto& v : vecs)
            if (v.bits & mask) v ^= piv;
        for (auto& b : basis)
            if (b.bits & mask) b ^= piv;
        basis.push_back(piv);
    }
    std::sort(basis.begin(), basis.end(),
              [](VertexSet a, VertexSet b) { return std::countr_zero(a.bits) < std::countr_zero(b.bits); });
    return basis;
}

}  // namespace

Subspace::Subspace(std::vector<std::string> ground, const std::vector<VertexSet>& spanning)
    : ground_(std::move(ground)), basis_(canonical_basis(spanning)) {
    const VertexSet valid = VertexSet::first_n(ground_.size());
    for (const auto& b : basis_)
        if (!b.subset_of(valid))
            throw invalid_vertex_error("basis vector beyond the ground set");
}

bool Subspace::contains(VertexSet v) const {
    for (const auto& b : basis_) {
        const std::uint64_t lead = b.bits & (~b.bits + 1);
        if (v.bits & lead) v ^= b;
    }
    return v.empty();
}

bool Subspace::operator==(const Subspace& other) const {
    if (ground_.size() != other.ground_.size()) return false;
    if (ground_ == other.ground_) return basis_ == other.basis_;
    std::vector<VertexSet> remapped;
    for (const auto& b : other.basis_) {
        VertexSet v;
        for (std::size_t i : b.indices()) {
            const auto& name = other.ground_[i];
            const auto it = std::find(ground_.begin(), ground_.end(), name);
            if (it == ground_.end()) return false;
            v |= VertexSet::single(static_cast<std::size_t>(it - ground_.begin()));
        }
        remapped.push_back(v);
    }
    return basis_ == canonical_basis(remapped);
}

// --- linear algebra -------------------------------------------------------

namespace {

BitMatrix principal_submatrix(const Graph& g, VertexSet x) {
    const auto idx = x.indices();
    BitMatrix m(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c)
            if (g.bit(idx[r], idx[c])) m.set(r, c, true);
    return m;
}

}  // namespace

int determinant(const Graph& g, VertexSet x) {
    g.require_subset(x);
    return principal_submatrix(g, x).det();
}

Graph induced_subgraph(const Graph& g, VertexSet x) {
    g.require_subset(x);
    const auto idx = x.indices();
    std::vector<std::string> labels;
    labels.reserve(idx.size());
    for (std::size_t i : idx) labels.push_back(g.label(i));
    std::vector<std::uint64_t> rows(idx.size(), 0);
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c)
            if (g.bit(idx[r], idx[c])) rows[r] |= std::uint64_t(1) << c;
    return Graph(std::move(labels), std::move(rows));
}

Graph add_identity(const Graph& g) {
    std::vector<std::uint64_t> rows(g.size());
    for (std::size_t u = 0; u < g.size(); ++u)
        rows[u] = g.row_bits(u) ^ (std::uint64_t(1) << u);
    return Graph(g.labels(), std::move(rows));
}

Subspace kernel(const Graph& g) {
    const auto raw = adjacency_matrix(g).kernel_basis();
    std::vector<VertexSet> vecs;
    vecs.reserve(raw.size());
    for (auto b : raw) vecs.emplace_back(b);
    return Subspace(g.labels(), vecs);
}

Subspace eigenspace_one(const Graph& g) { return kernel(add_identity(g)); }

bool is_independent(const Graph& g, VertexSet x) {
    g.require_subset(x);
    const auto idx = x.indices();
    BitMatrix cols(idx.size(), g.size());
    for (std::size_t r = 0; r < idx.size(); ++r) cols.data[r] = g.row_bits(idx[r]);
    return cols.rank() == idx.size();
}

std::size_t rank(const Graph& g) { return adjacency_matrix(g).rank(); }

std::size_t nullity(const Graph& g) { return g.size() - rank(g); }

namespace {

std::size_t column_rank(const Graph& g, VertexSet x) {
    const auto idx = x.indices();
    BitMatrix cols(idx.size(), g.size());
    for (std::size_t r = 0; r < idx.size(); ++r) cols.data[r] = g.row_bits(idx[r]);
    return cols.rank();
}

void extend_basis(const Graph& g, std::size_t next, std::size_t target,
                  VertexSet current, std::vector<VertexSet>& out) {
    if (current.count() == target) {
        out.push_back(current);
        return;
    }
    for (std::size_t c = next; c < g.size(); ++c) {
        if (current.count() + (g.size() - c) < target) break;
        const VertexSet extended = current | VertexSet::single(c);
        if (column_rank(g, extended) != extended.count()) continue;
        extend_basis(g, c + 1, target, extended, out);
    }
}

}  // namespace

std::vector<VertexSet> bases(const Graph& g) {
    const std::size_t r = rank(g);
    std::vector<VertexSet> out;
    extend_basis(g, 0, r, VertexSet(), out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pivots
