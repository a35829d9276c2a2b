#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pivots/graph.hpp"

namespace pivots {

// A letter together with its orientation flag; rendered with a trailing
// apostrophe when barred.
struct SignedLetter {
    std::string name;
    bool barred = false;

    SignedLetter flipped() const { return SignedLetter{name, !barred}; }
    std::string str() const { return barred ? name + "'" : name; }

    friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

// A signed double occurrence word: dropping the bars, every letter that
// occurs does so exactly twice. The empty word is legal.
class LegalString {
public:
    LegalString() = default;
    explicit LegalString(std::vector<SignedLetter> symbols);

    // Whitespace-separated tokens, each a letter name optionally suffixed
    // with an apostrophe. Input without any whitespace is read one
    // character per letter instead.
    static LegalString parse(std::string_view text);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    const SignedLetter& at(std::size_t i) const { return symbols_[i]; }
    const std::vector<SignedLetter>& symbols() const { return symbols_; }

    // Distinct letter names in order of first occurrence.
    std::vector<std::string> letters() const;

    // The two positions where a letter occurs, ignoring bars.
    std::pair<std::size_t, std::size_t> occurrences(std::string_view letter) const;

    std::string str() const;

    friend bool operator==(const LegalString&, const LegalString&) = default;

private:
    std::vector<SignedLetter> symbols_;
};

// Positions delimiting a letter's interval, inclusive on both ends; a
// border is kept at an unbarred occurrence and dropped at a barred one,
// so start > end encodes the empty interval.
struct Interval {
    std::string letter;
    std::size_t start = 0;
    std::size_t end = 0;

    bool is_empty() const { return start > end; }
};

Interval y_interval(const LegalString& u, std::string_view letter);

// --- string reduction rules ------------------------------------------------
// Each finder returns the matched occurrence positions, or nothing when
// the pattern is absent; appliers throw rule_inapplicable_error instead.

// Factor xx: delete it.
std::optional<std::size_t> find_snr(const LegalString& u, const SignedLetter& x);
LegalString apply_snr(const LegalString& u, const SignedLetter& x);

// x ... x-bar: invert the enclosed segment.
std::optional<std::pair<std::size_t, std::size_t>> find_spr(const LegalString& u,
                                                            const SignedLetter& x);
LegalString apply_spr(const LegalString& u, const SignedLetter& x);

// x .. y .. x .. y with matching signs: swap the inner segments.
struct SdrMatch {
    std::size_t x1, y1, x2, y2;
};
std::optional<SdrMatch> find_sdr(const LegalString& u, const SignedLetter& x,
                                 const SignedLetter& y);
LegalString apply_sdr(const LegalString& u, const SignedLetter& x, const SignedLetter& y);

// Vertices are the letters; two letters are adjacent when one occurs
// exactly once inside the other's interval, and a letter has a loop when
// it occurs both barred and unbarred.
Graph overlap_graph(const LegalString& u);

// --- graph reduction rules ---------------------------------------------------

enum class GraphRuleKind { gnr, gpr, gdr };

struct GraphRule {
    GraphRuleKind kind = GraphRuleKind::gnr;
    std::string u;
    std::string v;  // second operand, gdr only

    std::string str() const;

    friend bool operator==(const GraphRule&, const GraphRule&) = default;
};

bool graph_rule_applicable(const Graph& g, const GraphRule& rule);

// gnr deletes an isolated loopless vertex; gpr contracts a loop; gdr
// contracts an edge between loopless vertices.
Graph apply_graph_rule(const Graph& g, const GraphRule& rule);

// A run of gpr/gdr steps consuming a maximal pivot set, then gnr steps
// clearing the leftover isolated vertices down to the empty graph.
struct ContractionStrategy {
    std::vector<GraphRule> steps;  // in application order
    VertexSet gnrdom;              // relative to the source graph's labels
};

// Depth-first enumeration of complete contractions, at most `limit` of
// them, in deterministic rule order.
std::vector<ContractionStrategy> complete_contractions(const Graph& g, std::size_t limit);

// The gnrdom values complete contractions of g can realize, computed
// exactly as the vertex sets of the contraction DAG sinks. Sorted by bit
// pattern over g's label order.
std::vector<VertexSet> gnrdom_family(const Graph& g);

// Cross-checks every string rule against its graph counterpart on the
// overlap graph of u: results must match, and applicability must agree in
// both directions except that gnr may apply when snr does not. Returns
// true when all checks pass; a test oracle.
bool verify_simulation(const LegalString& u, std::string* diagnostic = nullptr);

// All graphs in the dual orbit admit the same gnrdom family. Returns
// whether that holds for g's orbit; a test oracle.
bool verify_theorem_ga_gnr(const Graph& g);

// --- CLI plumbing -----------------------------------------------------------

enum class StringRuleKind { snr, spr, sdr };

struct StringRule {
    StringRuleKind kind = StringRuleKind::snr;
    SignedLetter x;
    SignedLetter y;  // sdr only
};

// "snr:s'", "spr:q", "sdr:p,s" and the like.
StringRule parse_string_rule(std::string_view text);

LegalString apply_string_rule(const LegalString& u, const StringRule& rule);

}  // namespace pivots
