#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pivots/geneassembly.hpp"
#include "pivots/graph.hpp"
#include "pivots/orbit.hpp"
#include "pivots/setsystem.hpp"

namespace pivots {

// Line-based graph files: a required `vertices` line, then `edge a b` and
// `loop a` lines; '#' starts a comment. Serialization is canonical, so
// parse-then-serialize is a fixpoint.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// Family files: a `ground` line, then one `set` line per member with
// comma-separated labels; `-` stands for the empty set.
SetSystem parse_family(std::string_view text);
std::string serialize_family(const SetSystem& m);

// One-line rendering of a family: members joined with " | ".
std::string family_line(const SetSystem& m);

std::string set_csv(const std::vector<std::string>& labels, VertexSet s);
VertexSet parse_set_csv(const Graph& g, std::string_view csv);

// Single-line graph rendering used in orbit listings and DOT node labels.
std::string compact_graph(const Graph& g);

// Move rendering: "*{q}" for pivots, "*'{p}" for dual pivots, "*\{q}" for
// contractions.
std::string move_label(MoveKind kind, const std::vector<std::string>& names);

nlohmann::ordered_json graph_json(const Graph& g);
nlohmann::ordered_json family_json(const SetSystem& m);
nlohmann::ordered_json subspace_json(const Subspace& s);
nlohmann::ordered_json orbit_json(const OrbitGraph& o);
nlohmann::ordered_json strategies_json(const Graph& g,
                                       const std::vector<ContractionStrategy>& strategies);

std::string graph_dot(const Graph& g, std::string_view name = "G");
std::string orbit_dot(const OrbitGraph& o, std::string_view name = "orbit");

std::string orbit_text(const OrbitGraph& o);

}  // namespace pivots
