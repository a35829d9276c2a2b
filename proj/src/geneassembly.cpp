#include "pivots/geneassembly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "pivots/orbit.hpp"
#include "pivots/pivot.hpp"
#include "pivots/setsystem.hpp"

namespace pivots {

LegalString::LegalString(std::vector<SignedLetter> symbols) : symbols_(std::move(symbols)) {
    std::map<std::string, int> counts;
    for (const auto& s : symbols_) {
        if (s.name.empty()) throw parse_error("empty letter name");
        ++counts[s.name];
    }
    for (const auto& [name, count] : counts)
        if (count != 2) throw illegal_string_error(name);
}

LegalString LegalString::parse(std::string_view text) {
    std::vector<SignedLetter> symbols;
    const bool spaced = std::any_of(text.begin(), text.end(),
                                    [](unsigned char c) { return std::isspace(c); });
    if (spaced) {
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            std::size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
            if (j > i) {
                std::string token(text.substr(i, j - i));
                bool barred = false;
                if (token.back() == '\'') {
                    barred = true;
                    token.pop_back();
                }
                if (token.empty() || token.find('\'') != std::string::npos)
                    throw parse_error("bad letter token: " + std::string(text.substr(i, j - i)));
                symbols.push_back(SignedLetter{std::move(token), barred});
            }
            i = j;
        }
    } else {
        // Compact form: one character per letter, apostrophe bars the
        // character before it.
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '\'') throw parse_error("apostrophe without a letter");
            bool barred = false;
            if (i + 1 < text.size() && text[i + 1] == '\'') {
                barred = true;
            }
            symbols.push_back(SignedLetter{std::string(1, text[i]), barred});
            if (barred) ++i;
        }
    }
    return LegalString(std::move(symbols));
}

std::vector<std::string> LegalString::letters() const {
    std::vector<std::string> out;
    for (const auto& s : symbols_)
        if (std::find(out.begin(), out.end(), s.name) == out.end()) out.push_back(s.name);
    return out;
}

std::pair<std::size_t, std::size_t> LegalString::occurrences(std::string_view letter) const {
    std::size_t first = size(), second = size();
    for (std::size_t i = 0; i < size(); ++i) {
        if (symbols_[i].name != letter) continue;
        if (first == size())
            first = i;
        else
            second = i;
    }
    if (second == size()) throw unknown_letter_error(std::string(letter));
    return {first, second};
}

std::string LegalString::str() const {
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i) out += ' ';
        out += symbols_[i].str();
    }
    return out;
}

Interval y_interval(const LegalString& u, std::string_view letter) {
    const auto [i, j] = u.occurrences(letter);
    Interval out;
    out.letter = std::string(letter);
    out.start = u.at(i).barred ? i + 1 : i;
    out.end = u.at(j).barred ? j - 1 : j;
    return out;
}

// --- string rules -----------------------------------------------------------

namespace {

std::vector<SignedLetter> slice(const LegalString& u, std::size_t from, std::size_t to) {
    std::vector<SignedLetter> out;
    for (std::size_t i = from; i < to; ++i) out.push_back(u.at(i));
    return out;
}

std::vector<SignedLetter> inverted(std::vector<SignedLetter> part) {
    std::reverse(part.begin(), part.end());
    for (auto& s : part) s = s.flipped();
    return part;
}

void append(std::vector<SignedLetter>& out, const std::vector<SignedLetter>& part) {
    out.insert(out.end(), part.begin(), part.end());
}

}  // namespace

std::optional<std::size_t> find_snr(const LegalString& u, const SignedLetter& x) {
    for (std::size_t i = 0; i + 1 < u.size(); ++i)
        if (u.at(i) == x && u.at(i + 1) == x) return i;
    return std::nullopt;
}

LegalString apply_snr(const LegalString& u, const SignedLetter& x) {
    const auto pos = find_snr(u, x);
    if (!pos) throw rule_inapplicable_error("snr_" + x.str() + ": no factor " + x.str() + " " + x.str());
    std::vector<SignedLetter> out = slice(u, 0, *pos);
    append(out, slice(u, *pos + 2, u.size()));
    return LegalString(std::move(out));
}

std::optional<std::pair<std::size_t, std::size_t>> find_spr(const LegalString& u,
                                                            const SignedLetter& x) {
    const SignedLetter xbar = x.flipped();
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u.at(i) != x) continue;
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u.at(j) == xbar) return std::make_pair(i, j);
    }
    return std::nullopt;
}

LegalString apply_spr(const LegalString& u, const SignedLetter& x) {
    const auto pos = find_spr(u, x);
    if (!pos)
        throw rule_inapplicable_error("spr_" + x.str() + ": no pattern " + x.str() + " ... " +
                                      x.flipped().str());
    const auto [i, j] = *pos;
    std::vector<SignedLetter> out = slice(u, 0, i);
    append(out, inverted(slice(u, i + 1, j)));
    append(out, slice(u, j + 1, u.size()));
    return LegalString(std::move(out));
}

std::optional<SdrMatch> find_sdr(const LegalString& u, const SignedLetter& x,
                                 const SignedLetter& y) {
    if (x.name == y.name) return std::nullopt;
    std::vector<std::size_t> xs, ys;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u.at(i) == x) xs.push_back(i);
        if (u.at(i) == y) ys.push_back(i);
    }
    if (xs.size() != 2 || ys.size() != 2) return std::nullopt;
    if (xs[0] < ys[0] && ys[0] < xs[1] && xs[1] < ys[1])
        return SdrMatch{xs[0], ys[0], xs[1], ys[1]};
    return std::nullopt;
}

LegalString apply_sdr(const LegalString& u, const SignedLetter& x, const SignedLetter& y) {
    const auto m = find_sdr(u, x, y);
    if (!m)
        throw rule_inapplicable_error("sdr_" + x.str() + "," + y.str() +
                                      ": no interleaved pattern");
    std::vector<SignedLetter> out = slice(u, 0, m->x1);
    append(out, slice(u, m->x2 + 1, m->y2));  // u4
    append(out, slice(u, m->y1 + 1, m->x2));  // u3
    append(out, slice(u, m->x1 + 1, m->y1));  // u2
    append(out, slice(u, m->y2 + 1, u.size()));
    return LegalString(std::move(out));
}

// --- overlap graph ----------------------------------------------------------

Graph overlap_graph(const LegalString& u) {
    const auto labels = u.letters();
    const std::size_t n = labels.size();
    std::vector<std::uint64_t> rows(n, 0);
    std::vector<Interval> intervals;
    intervals.reserve(n);
    for (const auto& name : labels) intervals.push_back(y_interval(u, name));

    const auto occurs_once_in = [&u](const std::string& name, const Interval& iv) {
        if (iv.is_empty()) return false;
        int count = 0;
        for (std::size_t p = iv.start; p <= iv.end; ++p)
            if (u.at(p).name == name) ++count;
        return count == 1;
    };

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            // Filling both directions independently lets the Graph
            // constructor check the definition is symmetric.
            if (occurs_once_in(labels[a], intervals[b])) rows[a] |= std::uint64_t(1) << b;
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        const auto [i, j] = u.occurrences(labels[a]);
        if (u.at(i).barred != u.at(j).barred) rows[a] |= std::uint64_t(1) << a;
    }
    return Graph(labels, std::move(rows));
}

// --- graph rules --------------------------------------------------------------

std::string GraphRule::str() const {
    switch (kind) {
        case GraphRuleKind::gnr: return "gnr(" + u + ")";
        case GraphRuleKind::gpr: return "gpr(" + u + ")";
        case GraphRuleKind::gdr: return "gdr(" + u + "," + v + ")";
    }
    return "?";
}

bool graph_rule_applicable(const Graph& g, const GraphRule& rule) {
    switch (rule.kind) {
        case GraphRuleKind::gnr: {
            const std::size_t i = g.index_of(rule.u);
            return g.row_bits(i) == 0;
        }
        case GraphRuleKind::gpr:
            return g.has_loop(g.index_of(rule.u));
        case GraphRuleKind::gdr: {
            const std::size_t i = g.index_of(rule.u);
            const std::size_t j = g.index_of(rule.v);
            return i != j && g.adjacent(i, j) && !g.has_loop(i) && !g.has_loop(j);
        }
    }
    return false;
}

Graph apply_graph_rule(const Graph& g, const GraphRule& rule) {
    if (!graph_rule_applicable(g, rule))
        throw rule_inapplicable_error(rule.str() + " is not applicable");
    switch (rule.kind) {
        case GraphRuleKind::gnr: {
            const std::size_t i = g.index_of(rule.u);
            return induced_subgraph(g, g.vertex_set().minus(VertexSet::single(i)));
        }
        case GraphRuleKind::gpr:
            return contraction(g, VertexSet::single(g.index_of(rule.u)));
        case GraphRuleKind::gdr:
            return contraction(g, VertexSet::pair(g.index_of(rule.u), g.index_of(rule.v)));
    }
    throw rule_inapplicable_error("unknown graph rule");
}

// --- complete contractions ----------------------------------------------------

namespace {

GraphRule rule_for_elementary(const Graph& g, VertexSet e) {
    const auto idx = e.indices();
    if (idx.size() == 1) return GraphRule{GraphRuleKind::gpr, g.label(idx[0]), {}};
    return GraphRule{GraphRuleKind::gdr, g.label(idx[0]), g.label(idx[1])};
}

void enumerate_strategies(const Graph& source, const Graph& current,
                          std::vector<GraphRule>& steps, std::size_t limit,
                          std::vector<ContractionStrategy>& out) {
    if (out.size() >= limit) return;
    const auto moves = elementary_pivots(current);
    if (moves.empty()) {
        ContractionStrategy strategy;
        strategy.steps = steps;
        for (const auto& name : current.labels()) {
            strategy.steps.push_back(GraphRule{GraphRuleKind::gnr, name, {}});
            strategy.gnrdom |= VertexSet::single(source.index_of(name));
        }
        out.push_back(std::move(strategy));
        return;
    }
    for (const VertexSet e : moves) {
        if (out.size() >= limit) return;
        steps.push_back(rule_for_elementary(current, e));
        enumerate_strategies(source, contraction(current, e), steps, limit, out);
        steps.pop_back();
    }
}

}  // namespace

std::vector<ContractionStrategy> complete_contractions(const Graph& g, std::size_t limit) {
    if (g.size() > orbit_cap)
        throw over_cap_error(g.size(), orbit_cap, "strategy enumeration");
    std::vector<ContractionStrategy> out;
    std::vector<GraphRule> steps;
    enumerate_strategies(g, g, steps, limit, out);
    return out;
}

std::vector<VertexSet> gnrdom_family(const Graph& g) {
    const OrbitGraph dag = contraction_dag(g);
    std::vector<VertexSet> out;
    for (const std::size_t s : dag.sink_indices()) {
        VertexSet dom;
        for (const auto& name : dag.nodes[s].labels())
            dom |= VertexSet::single(g.index_of(name));
        out.push_back(dom);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// --- simulation of string rules by graph rules ---------------------------------

namespace {

bool simulation_failure(std::string* diagnostic, const std::string& message) {
    if (diagnostic) *diagnostic = message;
    return false;
}

}  // namespace

bool verify_simulation(const LegalString& u, std::string* diagnostic) {
    const Graph gu = overlap_graph(u);
    for (const auto& name : u.letters()) {
        const GraphRule gnr{GraphRuleKind::gnr, name, {}};
        const GraphRule gpr{GraphRuleKind::gpr, name, {}};
        bool spr_applies = false;
        for (const bool barred : {false, true}) {
            const SignedLetter x{name, barred};
            if (find_snr(u, x)) {
                // Forward direction only: an isolated vertex need not come
                // from an adjacent pair in the string.
                if (!graph_rule_applicable(gu, gnr))
                    return simulation_failure(diagnostic, "snr_" + x.str() + " applies but " +
                                                              gnr.str() + " does not");
                if (overlap_graph(apply_snr(u, x)) != apply_graph_rule(gu, gnr))
                    return simulation_failure(diagnostic,
                                              "snr_" + x.str() + " disagrees with " + gnr.str());
            }
            if (find_spr(u, x)) {
                spr_applies = true;
                if (!graph_rule_applicable(gu, gpr))
                    return simulation_failure(diagnostic, "spr_" + x.str() + " applies but " +
                                                              gpr.str() + " does not");
                if (overlap_graph(apply_spr(u, x)) != apply_graph_rule(gu, gpr))
                    return simulation_failure(diagnostic,
                                              "spr_" + x.str() + " disagrees with " + gpr.str());
            }
        }
        if (graph_rule_applicable(gu, gpr) != spr_applies)
            return simulation_failure(diagnostic,
                                      gpr.str() + " applicability disagrees with spr on " + name);
    }
    const auto names = u.letters();
    for (std::size_t a = 0; a < names.size(); ++a) {
        for (std::size_t b = a + 1; b < names.size(); ++b) {
            const GraphRule gdr{GraphRuleKind::gdr, names[a], names[b]};
            bool sdr_applies = false;
            for (const bool bar_x : {false, true}) {
                for (const bool bar_y : {false, true}) {
                    for (const bool swap : {false, true}) {
                        const SignedLetter x{swap ? names[b] : names[a], bar_x};
                        const SignedLetter y{swap ? names[a] : names[b], bar_y};
                        if (!find_sdr(u, x, y)) continue;
                        sdr_applies = true;
                        if (!graph_rule_applicable(gu, gdr))
                            return simulation_failure(diagnostic,
                                                      "sdr_" + x.str() + "," + y.str() +
                                                          " applies but " + gdr.str() + " does not");
                        if (overlap_graph(apply_sdr(u, x, y)) != apply_graph_rule(gu, gdr))
                            return simulation_failure(diagnostic, "sdr_" + x.str() + "," + y.str() +
                                                                      " disagrees with " + gdr.str());
                    }
                }
            }
            if (graph_rule_applicable(gu, gdr) != sdr_applies)
                return simulation_failure(diagnostic, gdr.str() +
                                                          " applicability disagrees with sdr");
        }
    }
    return true;
}

bool verify_theorem_ga_gnr(const Graph& g) {
    const OrbitGraph orbit = dual_orbit(g);
    const auto reference = gnrdom_family(orbit.nodes[orbit.root]);
    for (const auto& node : orbit.nodes)
        if (gnrdom_family(node) != reference) return false;
    return true;
}

// --- CLI plumbing ---------------------------------------------------------------

StringRule parse_string_rule(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw parse_error("rule must look like kind:operands, got '" + std::string(text) + "'");
    const std::string_view kind = text.substr(0, colon);
    std::string_view rest = text.substr(colon + 1);

    std::vector<SignedLetter> operands;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        std::string token(rest.substr(0, comma));
        if (comma == std::string_view::npos)
            rest = {};
        else
            rest = rest.substr(comma + 1);
        bool barred = false;
        if (!token.empty() && token.back() == '\'') {
            barred = true;
            token.pop_back();
        }
        if (token.empty()) throw parse_error("empty rule operand");
        operands.push_back(SignedLetter{std::move(token), barred});
    }

    StringRule rule;
    if (kind == "snr")
        rule.kind = StringRuleKind::snr;
    else if (kind == "spr")
        rule.kind = StringRuleKind::spr;
    else if (kind == "sdr")
        rule.kind = StringRuleKind::sdr;
    else
        throw parse_error("unknown rule kind: " + std::string(kind));

    const std::size_t expected = rule.kind == StringRuleKind::sdr ? 2 : 1;
    if (operands.size() != expected)
        throw parse_error("rule " + std::string(kind) + " takes " + std::to_string(expected) +
                          " operand(s)");
    rule.x = operands[0];
    if (expected == 2) rule.y = operands[1];
    return rule;
}

LegalString apply_string_rule(const LegalString& u, const StringRule& rule) {
    switch (rule.kind) {
        case StringRuleKind::snr: return apply_snr(u, rule.x);
        case StringRuleKind::spr: return apply_spr(u, rule.x);
        case StringRuleKind::sdr:
            if (rule.x.name == rule.y.name)
                throw rule_inapplicable_error("sdr operands must be distinct letters");
            return apply_sdr(u, rule.x, rule.y);
    }
    throw rule_inapplicable_error("unknown string rule");
}

}  // namespace pivots
