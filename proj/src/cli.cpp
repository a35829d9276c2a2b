#include "pivots/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pivots/io.hpp"
#include "pivots/pivot.hpp"
#include "pivots/suites.hpp"

namespace pivots {

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw input_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

Graph load_graph(const std::string& path) { return parse_graph(read_input(path)); }

void print_graph(std::ostream& out, const Graph& g, const std::string& format) {
    if (format == "text")
        out << serialize_graph(g);
    else if (format == "json")
        out << graph_json(g).dump(2) << "\n";
    else if (format == "dot")
        out << graph_dot(g);
    else
        throw input_error("unknown format: " + format);
}

void print_family(std::ostream& out, const SetSystem& m, const std::string& format) {
    if (format == "text")
        out << family_line(m) << "\n";
    else if (format == "json")
        out << family_json(m).dump(2) << "\n";
    else if (format == "file")
        out << serialize_family(m);
    else
        throw input_error("format '" + format + "' not available for set families");
}

void print_orbit(std::ostream& out, const OrbitGraph& o, const std::string& format,
                 const std::string& name) {
    if (format == "text")
        out << orbit_text(o);
    else if (format == "json")
        out << orbit_json(o).dump(2) << "\n";
    else if (format == "dot")
        out << orbit_dot(o, name);
    else
        throw input_error("unknown format: " + format);
}

struct Options {
    std::string graph_path;
    std::string family_path;
    std::string string_arg;
    std::string set_arg;
    std::string format = "text";
    std::vector<std::string> rules;
    std::size_t limit = 100;
    std::size_t max_n = 4;
    std::uint64_t seed = 0;
    std::size_t string_count = 1000;
};

void add_graph_option(CLI::App* cmd, Options& opt) {
    cmd->add_option("--graph", opt.graph_path, "graph file ('-' for stdin)")->required();
}

void add_format_option(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "output format (default text)");
}

int run_verify(const Options& opt, std::ostream& out) {
    auto results = suites::run_graph_properties(opt.max_n);
    results.push_back(suites::run_simulation_property(opt.seed, opt.string_count, 6));
    results.push_back(suites::run_nonconverse_witness());
    std::size_t failed = 0;
    for (const auto& r : results) {
        if (r.passed) {
            out << "PASS " << r.name << " (" << r.checks << " checks)\n";
        } else {
            ++failed;
            out << "FAIL " << r.name << ": " << r.detail << "\n";
        }
    }
    if (failed) {
        out << failed << " of " << results.size() << " properties failed\n";
        return 1;
    }
    out << "all " << results.size() << " properties passed\n";
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"pivots, dual pivots, and contraction systems on graphs over GF(2)"};
    app.require_subcommand(1);
    Options opt;

    auto* cmd_pivot = app.add_subcommand("pivot", "pivot a graph on a vertex set");
    add_graph_option(cmd_pivot, opt);
    cmd_pivot->add_option("--set", opt.set_arg, "comma-separated vertices ('-' for empty)")
        ->required();
    add_format_option(cmd_pivot, opt);

    auto* cmd_dual = app.add_subcommand("dual-pivot", "dual pivot a graph on a vertex set");
    add_graph_option(cmd_dual, opt);
    cmd_dual->add_option("--set", opt.set_arg, "comma-separated vertices ('-' for empty)")
        ->required();
    add_format_option(cmd_dual, opt);

    auto* cmd_contract = app.add_subcommand("contract", "pivot then delete the pivot set");
    add_graph_option(cmd_contract, opt);
    cmd_contract->add_option("--set", opt.set_arg, "comma-separated vertices ('-' for empty)")
        ->required();
    add_format_option(cmd_contract, opt);

    auto* cmd_orbit = app.add_subcommand("orbit", "closure under elementary pivots");
    add_graph_option(cmd_orbit, opt);
    add_format_option(cmd_orbit, opt);

    auto* cmd_dual_orbit = app.add_subcommand("dual-orbit", "closure under elementary dual pivots");
    add_graph_option(cmd_dual_orbit, opt);
    add_format_option(cmd_dual_orbit, opt);

    auto* cmd_dag = app.add_subcommand("contraction-dag", "elementary contraction DAG");
    add_graph_option(cmd_dag, opt);
    add_format_option(cmd_dag, opt);

    auto* cmd_delta = app.add_subcommand("delta-matroid", "all determinant-1 vertex subsets");
    add_graph_option(cmd_delta, opt);
    add_format_option(cmd_delta, opt);

    auto* cmd_max = app.add_subcommand("maximal-pivots", "maximal determinant-1 subsets");
    add_graph_option(cmd_max, opt);
    add_format_option(cmd_max, opt);

    auto* cmd_min = app.add_subcommand("minimal-pivots", "minimal nonempty determinant-1 subsets");
    add_graph_option(cmd_min, opt);
    add_format_option(cmd_min, opt);

    auto* cmd_kernel = app.add_subcommand("kernel", "kernel of the adjacency matrix");
    add_graph_option(cmd_kernel, opt);
    add_format_option(cmd_kernel, opt);

    auto* cmd_strategies =
        app.add_subcommand("complete-contractions", "maximal contraction strategies");
    add_graph_option(cmd_strategies, opt);
    cmd_strategies->add_option("--limit", opt.limit, "maximum strategies to list (default 100)");
    add_format_option(cmd_strategies, opt);

    auto* cmd_overlap = app.add_subcommand("overlap", "overlap graph of a legal string");
    cmd_overlap->add_option("--string", opt.string_arg, "legal string")->required();
    add_format_option(cmd_overlap, opt);

    auto* cmd_reduce = app.add_subcommand("reduce", "apply string reduction rules");
    cmd_reduce->add_option("--string", opt.string_arg, "legal string")->required();
    cmd_reduce
        ->add_option("--rule", opt.rules, "rule like snr:x, spr:q, sdr:p,s (repeatable, in order)")
        ->required();

    auto* cmd_reconstruct = app.add_subcommand("reconstruct", "rebuild a graph from its family");
    cmd_reconstruct->add_option("--family", opt.family_path, "family file ('-' for stdin)")
        ->required();
    add_format_option(cmd_reconstruct, opt);

    auto* cmd_verify = app.add_subcommand("verify", "run the exhaustive property suites");
    cmd_verify->add_option("--max-n", opt.max_n, "largest vertex count swept (default 4)");
    cmd_verify->add_option("--seed", opt.seed, "seed for random legal strings (default 0)");
    cmd_verify->add_option("--strings", opt.string_count,
                           "number of random legal strings (default 1000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_pivot->parsed()) {
            const Graph g = load_graph(opt.graph_path);
            print_graph(out, pivot(g, parse_set_csv(g, opt.set_arg)), opt.format);
        } else if (cmd_dual->parsed()) {
            const Graph g = load_graph(opt.graph_path);
            print_graph(out, dual_pivot(g, parse_set_csv(g, opt.set_arg)), opt.format);
        } else if (cmd_contract->parsed()) {
            const Graph g = load_graph(opt.graph_path);
            print_graph(out, contraction(g, parse_set_csv(g, opt.set_arg)), opt.format);
        } else if (cmd_orbit->parsed()) {
            print_orbit(out, pivot_orbit(load_graph(opt.graph_path)), opt.format, "orbit");
        } else if (cmd_dual_orbit->parsed()) {
            print_orbit(out, dual_orbit(load_graph(opt.graph_path)), opt.format, "dual_orbit");
        } else if (cmd_dag->parsed()) {
            print_orbit(out, contraction_dag(load_graph(opt.graph_path)), opt.format,
                        "contractions");
        } else if (cmd_delta->parsed()) {
            print_family(out, delta_matroid(load_graph(opt.graph_path)), opt.format);
        } else if (cmd_max->parsed()) {
            print_family(out, maximal_family(load_graph(opt.graph_path)), opt.format);
        } else if (cmd_min->parsed()) {
            print_family(out, minimal_family(load_graph(opt.graph_path)), opt.format);
        } else if (cmd_kernel->parsed()) {
            const Subspace k = kernel(load_graph(opt.graph_path));
            if (opt.format == "text") {
                std::string basis;
                for (const auto& b : k.basis()) {
                    if (!basis.empty()) basis += " | ";
                    basis += set_csv(k.ground(), b);
                }
                if (basis.empty()) basis = "-";
                out << "basis: " << basis << "\n";
                out << "dimension: " << k.dimension() << "\n";
                out << "rank: " << k.complement_rank() << "\n";
                out << "nullity: " << k.nullity() << "\n";
            } else if (opt.format == "json") {
                out << subspace_json(k).dump(2) << "\n";
            } else {
                throw input_error("format '" + opt.format + "' not available for subspaces");
            }
        } else if (cmd_strategies->parsed()) {
            const Graph g = load_graph(opt.graph_path);
            const auto strategies = complete_contractions(g, opt.limit);
            if (opt.format == "text") {
                for (const auto& strategy : strategies) {
                    std::string line;
                    for (const auto& step : strategy.steps) {
                        if (!line.empty()) line += ' ';
                        line += step.str();
                    }
                    out << line << " | gnrdom: " << set_csv(g.labels(), strategy.gnrdom) << "\n";
                }
            } else if (opt.format == "json") {
                out << strategies_json(g, strategies).dump(2) << "\n";
            } else {
                throw input_error("format '" + opt.format + "' not available for strategies");
            }
        } else if (cmd_overlap->parsed()) {
            print_graph(out, overlap_graph(LegalString::parse(opt.string_arg)), opt.format);
        } else if (cmd_reduce->parsed()) {
            LegalString u = LegalString::parse(opt.string_arg);
            for (const auto& text : opt.rules) u = apply_string_rule(u, parse_string_rule(text));
            out << u.str() << "\n";
        } else if (cmd_reconstruct->parsed()) {
            print_graph(out, reconstruct_graph(parse_family(read_input(opt.family_path))),
                        opt.format);
        } else if (cmd_verify->parsed()) {
            return run_verify(opt, out);
        }
    } catch (const math_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace pivots
