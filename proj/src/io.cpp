#include "pivots/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pivots {

namespace {

bool valid_label(std::string_view token) {
    if (token.empty()) return false;
    return std::all_of(token.begin(), token.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string token;
    while (in >> token) out.push_back(token);
    return out;
}

struct Line {
    std::string directive;
    std::vector<std::string> args;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(start, nl - start);
        start = nl + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        Line l;
        l.directive = tokens.front();
        l.args.assign(tokens.begin() + 1, tokens.end());
        out.push_back(std::move(l));
    }
    return out;
}

void check_labels(const std::vector<std::string>& labels) {
    for (const auto& l : labels)
        if (!valid_label(l))
            throw parse_error("labels must be alphanumeric or '_', got '" + l + "'");
}

// Edge list with endpoints and list both ordered by label name.
std::vector<std::pair<std::string, std::string>> sorted_edges(const Graph& g) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u + 1; v < g.size(); ++v)
            if (g.adjacent(u, v)) {
                auto a = g.label(u);
                auto b = g.label(v);
                if (b < a) std::swap(a, b);
                edges.emplace_back(std::move(a), std::move(b));
            }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<std::string> sorted_loops(const Graph& g) {
    std::vector<std::string> loops;
    for (std::size_t u = 0; u < g.size(); ++u)
        if (g.has_loop(u)) loops.push_back(g.label(u));
    std::sort(loops.begin(), loops.end());
    return loops;
}

std::vector<std::string> split_csv(std::string_view csv) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string token(csv.substr(start, comma - start));
        if (token.empty()) throw parse_error("empty label in set '" + std::string(csv) + "'");
        out.push_back(std::move(token));
        if (comma == csv.size()) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw parse_error("graph file has no content");
    if (lines.front().directive != "vertices")
        throw parse_error("graph file must start with a 'vertices' line");
    std::vector<std::string> labels = lines.front().args;
    check_labels(labels);
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> loops;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.directive == "edge") {
            if (l.args.size() != 2) throw parse_error("'edge' takes two vertices");
            edges.emplace_back(l.args[0], l.args[1]);
        } else if (l.directive == "loop") {
            if (l.args.size() != 1) throw parse_error("'loop' takes one vertex");
            loops.push_back(l.args[0]);
        } else if (l.directive == "vertices") {
            throw parse_error("duplicate 'vertices' line");
        } else {
            throw parse_error("unknown directive '" + l.directive + "'");
        }
    }
    return make_graph(std::move(labels), edges, loops);
}

std::string serialize_graph(const Graph& g) {
    std::string out = "vertices";
    for (const auto& l : g.labels()) {
        out += ' ';
        out += l;
    }
    out += '\n';
    for (const auto& [a, b] : sorted_edges(g)) out += "edge " + a + " " + b + "\n";
    for (const auto& l : sorted_loops(g)) out += "loop " + l + "\n";
    return out;
}

SetSystem parse_family(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw parse_error("family file has no content");
    if (lines.front().directive != "ground")
        throw parse_error("family file must start with a 'ground' line");
    std::vector<std::string> ground = lines.front().args;
    check_labels(ground);
    Graph skeleton(ground, std::vector<std::uint64_t>(ground.size(), 0));
    std::vector<VertexSet> family;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.directive != "set") throw parse_error("unknown directive '" + l.directive + "'");
        if (l.args.size() != 1) throw parse_error("'set' takes one comma-separated list");
        family.push_back(parse_set_csv(skeleton, l.args[0]));
    }
    return SetSystem(std::move(ground), std::move(family));
}

std::string serialize_family(const SetSystem& m) {
    std::string out = "ground";
    for (const auto& l : m.ground()) {
        out += ' ';
        out += l;
    }
    out += '\n';
    for (const auto& s : m.family()) out += "set " + set_csv(m.ground(), s) + "\n";
    return out;
}

std::string set_csv(const std::vector<std::string>& labels, VertexSet s) {
    if (s.empty()) return "-";
    std::string out;
    for (std::size_t i : s.indices()) {
        if (!out.empty()) out += ',';
        out += labels[i];
    }
    return out;
}

VertexSet parse_set_csv(const Graph& g, std::string_view csv) {
    if (csv.empty() || csv == "-") return VertexSet{};
    return g.set_of(split_csv(csv));
}

std::string family_line(const SetSystem& m) {
    std::string out;
    for (const auto& s : m.family()) {
        if (!out.empty()) out += " | ";
        out += set_csv(m.ground(), s);
    }
    return out;
}

std::string compact_graph(const Graph& g) {
    std::string out;
    for (const auto& l : g.labels()) {
        if (!out.empty()) out += ' ';
        out += l;
    }
    if (out.empty()) out = "-";
    out += " | ";
    const auto edges = sorted_edges(g);
    if (edges.empty()) {
        out += "-";
    } else {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (i) out += ' ';
            out += edges[i].first + "-" + edges[i].second;
        }
    }
    out += " | ";
    const auto loops = sorted_loops(g);
    if (loops.empty()) {
        out += "-";
    } else {
        for (std::size_t i = 0; i < loops.size(); ++i) {
            if (i) out += ' ';
            out += loops[i];
        }
    }
    return out;
}

std::string move_label(MoveKind kind, const std::vector<std::string>& names) {
    std::string out = "*";
    if (kind == MoveKind::dual_pivot) out += '\'';
    if (kind == MoveKind::contraction) out += '\\';
    out += '{';
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ',';
        out += names[i];
    }
    out += '}';
    return out;
}

nlohmann::ordered_json graph_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = g.labels();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [a, b] : sorted_edges(g)) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    j["loops"] = sorted_loops(g);
    return j;
}

nlohmann::ordered_json family_json(const SetSystem& m) {
    nlohmann::ordered_json j;
    j["vertices"] = m.ground();
    auto sets = nlohmann::ordered_json::array();
    for (const auto& s : m.family()) {
        auto one = nlohmann::ordered_json::array();
        for (std::size_t i : s.indices()) one.push_back(m.ground()[i]);
        sets.push_back(std::move(one));
    }
    j["sets"] = std::move(sets);
    return j;
}

nlohmann::ordered_json subspace_json(const Subspace& s) {
    nlohmann::ordered_json j;
    j["vertices"] = s.ground();
    auto basis = nlohmann::ordered_json::array();
    for (const auto& b : s.basis()) {
        auto one = nlohmann::ordered_json::array();
        for (std::size_t i : b.indices()) one.push_back(s.ground()[i]);
        basis.push_back(std::move(one));
    }
    j["basis"] = std::move(basis);
    j["dimension"] = s.dimension();
    j["rank"] = s.complement_rank();
    j["nullity"] = s.nullity();
    return j;
}

nlohmann::ordered_json orbit_json(const OrbitGraph& o) {
    nlohmann::ordered_json j;
    j["root"] = o.root;
    auto nodes = nlohmann::ordered_json::array();
    for (const auto& n : o.nodes) nodes.push_back(graph_json(n));
    j["nodes"] = std::move(nodes);
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : o.edges) {
        nlohmann::ordered_json ej;
        ej["from"] = e.from;
        ej["to"] = e.to;
        ej["set"] = o.nodes[e.from].names_of(e.move);
        ej["kind"] = move_kind_name(e.kind);
        edges.push_back(std::move(ej));
    }
    j["edges"] = std::move(edges);
    return j;
}

nlohmann::ordered_json strategies_json(const Graph& g,
                                       const std::vector<ContractionStrategy>& strategies) {
    nlohmann::ordered_json j;
    auto list = nlohmann::ordered_json::array();
    for (const auto& strategy : strategies) {
        nlohmann::ordered_json sj;
        auto steps = nlohmann::ordered_json::array();
        for (const auto& step : strategy.steps) {
            nlohmann::ordered_json stepj;
            switch (step.kind) {
                case GraphRuleKind::gnr: stepj["rule"] = "gnr"; break;
                case GraphRuleKind::gpr: stepj["rule"] = "gpr"; break;
                case GraphRuleKind::gdr: stepj["rule"] = "gdr"; break;
            }
            auto verts = nlohmann::ordered_json::array();
            verts.push_back(step.u);
            if (step.kind == GraphRuleKind::gdr) verts.push_back(step.v);
            stepj["vertices"] = std::move(verts);
            steps.push_back(std::move(stepj));
        }
        sj["steps"] = std::move(steps);
        sj["gnrdom"] = g.names_of(strategy.gnrdom);
        list.push_back(std::move(sj));
    }
    j["strategies"] = std::move(list);
    return j;
}

namespace {

std::string dot_escape(std::string_view s) {
    std::string out;
    for (const char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string graph_dot(const Graph& g, std::string_view name) {
    std::string out = "graph " + std::string(name) + " {\n";
    for (const auto& l : g.labels()) out += "  \"" + dot_escape(l) + "\";\n";
    for (const auto& [a, b] : sorted_edges(g))
        out += "  \"" + dot_escape(a) + "\" -- \"" + dot_escape(b) + "\";\n";
    for (const auto& l : sorted_loops(g))
        out += "  \"" + dot_escape(l) + "\" -- \"" + dot_escape(l) + "\";\n";
    out += "}\n";
    return out;
}

std::string orbit_dot(const OrbitGraph& o, std::string_view name) {
    std::string out = "digraph " + std::string(name) + " {\n";
    for (std::size_t i = 0; i < o.nodes.size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(compact_graph(o.nodes[i])) +
               "\"];\n";
    for (const auto& e : o.edges) {
        const auto names = o.nodes[e.from].names_of(e.move);
        out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" +
               dot_escape(move_label(e.kind, names)) + "\"];\n";
    }
    out += "}\n";
    return out;
}

std::string orbit_text(const OrbitGraph& o) {
    std::string out = "nodes: " + std::to_string(o.nodes.size()) + "\n";
    for (std::size_t i = 0; i < o.nodes.size(); ++i)
        out += "n" + std::to_string(i) + ": " + compact_graph(o.nodes[i]) + "\n";
    out += "edges: " + std::to_string(o.edges.size()) + "\n";
    for (const auto& e : o.edges) {
        const auto names = o.nodes[e.from].names_of(e.move);
        out += "n" + std::to_string(e.from) + " -" + move_label(e.kind, names) + "-> n" +
               std::to_string(e.to) + "\n";
    }
    return out;
}

}  // namespace pivots
