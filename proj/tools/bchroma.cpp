#include "bchroma/constructions.hpp"
#include "bchroma/error.hpp"
#include "bchroma/formulas.hpp"
#include "bchroma/graph_spec.hpp"
#include "bchroma/io.hpp"
#include "bchroma/operators.hpp"
#include "bchroma/serialize.hpp"
#include "bchroma/solver.hpp"
#include "bchroma/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace bchroma;

namespace {

enum Exit { ok = 0, usage = 1, parse = 2, budget = 3, mismatch = 4 };

struct GlobalFlags {
    std::optional<std::uint64_t> max_nodes;
    std::optional<double> max_seconds;
    unsigned workers = 1;
    bool json = false;

    Budget budget() const
    {
        auto b = Budget::from_environment();
        if (max_nodes)
            b.max_nodes = *max_nodes;
        if (max_seconds)
            b.max_seconds = *max_seconds;
        b.workers = workers;
        return b;
    }
};

void write_output(const std::string& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    out << text;
}

std::string percent_bucket(const CountReport& r) { return r.probability_percent(2) + "%"; }

int cmd_phi(const std::string& spec, const GlobalFlags& flags)
{
    auto g = build_graph(parse_graph_spec(spec));
    try {
        auto report = b_chromatic_number(g, flags.budget());
        if (flags.json) {
            std::cout << search_report_to_json(g, report).dump(2) << '\n';
            return ok;
        }
        std::cout << "phi " << report.phi << '\n';
        std::cout << "outcomes";
        for (auto it = report.per_k_outcomes.rbegin(); it != report.per_k_outcomes.rend(); ++it)
            std::cout << ' ' << it->first << ':' << to_string(it->second);
        std::cout << "\nnodes " << report.nodes_explored << "\nelapsed " << std::fixed << std::setprecision(3)
                  << report.elapsed.count() << "s\n";
        std::cout << "witness " << certificate_to_json(g, report.witness).dump() << '\n';
        return ok;
    } catch (const SearchBudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        for (const auto& [k, outcome] : e.per_k_outcomes())
            std::cerr << "  k=" << k << ' ' << to_string(outcome) << '\n';
        return budget;
    }
}

int cmd_simple(const std::string& what, const std::string& spec, const GlobalFlags& flags)
{
    auto g = build_graph(parse_graph_spec(spec));
    std::size_t value = 0;
    if (what == "chi")
        value = chromatic_number(g, flags.budget());
    else if (what == "omega")
        value = clique_number(g, flags.budget());
    else
        value = m_degree(g);
    if (flags.json)
        std::cout << nlohmann::json{{"schema", schema_version}, {what, value}}.dump(2) << '\n';
    else
        std::cout << what << ' ' << value << '\n';
    return ok;
}

int cmd_count(const std::string& spec, Color k, const std::string& mode, const GlobalFlags& flags)
{
    auto g = build_graph(parse_graph_spec(spec));
    try {
        auto report = mode == "within" ? count_b_colorings_within_palette(g, k, flags.budget())
                                       : count_b_colorings(g, k, flags.budget());
        if (flags.json) {
            std::cout << count_report_to_json(report).dump(2) << '\n';
            return ok;
        }
        std::cout << "count " << report.count << "\nprobability " << report.probability_percent() << "% ("
                  << percent_bucket(report) << ")\nmode " << to_string(report.mode) << "\nnodes "
                  << report.nodes_explored << '\n';
        return ok;
    } catch (const CountBudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\npartial count " << e.partial_count() << '\n';
        return budget;
    }
}

int cmd_construct(const std::string& theorem, std::vector<std::size_t> args, const std::string& plan,
                  const std::string& dot, const GlobalFlags&)
{
    auto arg = [&](std::size_t i, const char* name) {
        if (i >= args.size())
            throw HypothesisError(theorem + " needs parameter " + name);
        return args[i];
    };
    if (theorem == "thm4.4-grid") {
        auto grid = rook_grid_coloring(arg(0, "n"));
        std::cout << grid_to_json(grid).dump(2) << '\n' << grid_to_text(grid);
        if (!dot.empty()) {
            auto cert = grid_certificate(grid);
            write_output(dot, to_dot(cartesian_product(complete(grid.rows), complete(grid.cols)), &cert));
        }
        return ok;
    }

    Graph g;
    BColoringCertificate cert;
    if (theorem == "thm3.1") {
        auto n = arg(0, "n"), m = arg(1, "m");
        g = star_product_graph(n, m);
        cert = color_star_product(n, m);
    } else if (theorem == "thm3.2") {
        auto n = arg(0, "n"), m = arg(1, "m");
        g = line_star_product_graph(n, m);
        cert = color_line_star_product(n, m);
    } else if (theorem == "thm3.3") {
        auto n = arg(0, "n"), m = arg(1, "m");
        g = total_star_product_graph(n, m);
        cert = plan == "appendix" ? color_total_star_product(n, m, appendix_total_plan(n, m))
                                  : color_total_star_product(n, m);
    } else if (theorem == "thm4.2") {
        auto n = arg(0, "n"), m = arg(1, "m"), k = arg(2, "k");
        g = power_star_product_graph(n, m, k);
        cert = color_power_star_product(n, m, k);
    } else if (theorem == "rook-embed") {
        auto n = arg(0, "n");
        g = power_star_product_graph(n, 3, 3);
        auto offset = static_cast<Color>(args.size() > 1 ? args[1] : n + 4);
        auto found = certify(g, embed_rook_into_power3(n, 3, rook_grid_coloring(n), offset));
        if (!found)
            throw Error("embedded coloring has a color class without b-vertex");
        cert = *found;
    } else {
        throw HypothesisError("unknown construction '" + theorem +
                              "' (expected thm3.1, thm3.2, thm3.3, thm4.2, thm4.4-grid or rook-embed)");
    }
    auto j = certificate_to_json(g, cert);
    j["theorem"] = theorem;
    j["valid"] = static_cast<bool>(validate_certificate(g, cert));
    std::cout << j.dump(2) << '\n';
    if (!dot.empty())
        write_output(dot, to_dot(g, &cert));
    return ok;
}

int cmd_verify(const std::string& suite, const std::string& n, const std::string& m, const std::string& k,
               const std::string& family, const std::string& mode, const GlobalFlags& flags)
{
    VerifyOptions o;
    if (suite == "thm4.4") {
        o.n = {3, 5};
    } else if (suite == "thm3.3") {
        o.n = {3, 5};
        o.m = {3, 4};
    } else if (suite == "thm4.1") {
        o.k = {1, 3};
    } else if (suite == "thm4.2") {
        o.n = {1, 4};
        o.m = {1, 4};
    } else if (suite == "lemma-mdegree") {
        o.n = {3, 6};
        o.m = {3, 6};
    }
    if (!n.empty())
        o.n = Range::parse(n);
    if (!m.empty())
        o.m = Range::parse(m);
    if (!k.empty())
        o.k = Range::parse(k);
    if (!family.empty())
        o.family = parse_family(family);
    o.count_mode = mode == "within" ? CountMode::WithinPalette : CountMode::ExactPalette;
    o.budget = flags.budget();
    auto report = run_verify(suite, o);
    if (flags.json)
        std::cout << to_json(report).dump(2) << '\n';
    else
        std::cout << to_text(report);
    return report.mismatches() == 0 ? ok : mismatch;
}

int cmd_export(const std::string& what, const std::string& spec, const std::string& format, std::size_t n_max)
{
    if (what == "theorems") {
        std::cout << theorem_table(n_max).dump(2) << '\n';
        return ok;
    }
    if (what != "graph")
        throw HypothesisError("export expects 'theorems' or 'graph'");
    if (spec.empty())
        throw HypothesisError("export graph needs a graph expression");
    auto g = build_graph(parse_graph_spec(spec));
    if (format == "edges")
        std::cout << write_edge_list(g);
    else if (format == "dot")
        std::cout << to_dot(g);
    else {
        auto j = graph_to_json(g);
        j["schema"] = schema_version;
        j["spec"] = print_graph_spec(parse_graph_spec(spec));
        std::cout << j.dump(2) << '\n';
    }
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact b-chromatic numbers, constructions and formula checks for star products"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalFlags flags;
    app.add_option("--max-nodes", flags.max_nodes, "Node budget for exact searches");
    app.add_option("--max-seconds", flags.max_seconds, "Wall-clock budget in seconds");
    app.add_option("--workers", flags.workers, "Worker threads; results do not depend on it")
        ->check(CLI::Range(1U, 256U));
    app.add_flag("--json", flags.json, "Machine-readable output");

    std::string spec;
    int status = ok;
    std::function<int()> action;

    auto* phi = app.add_subcommand("phi", "b-chromatic number with witness");
    phi->add_option("graph", spec, "Graph expression")->required();
    phi->callback([&] { action = [&] { return cmd_phi(spec, flags); }; });

    for (const char* name : {"chi", "omega", "mdegree"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "chi"     ? "Chromatic number"
                                             : std::string(name) == "omega" ? "Clique number"
                                                                            : "m-degree");
        sub->add_option("graph", spec, "Graph expression")->required();
        sub->callback([&, name] { action = [&, name] { return cmd_simple(name, spec, flags); }; });
    }

    Color k = 0;
    std::string mode = "exact";
    auto* count = app.add_subcommand("count", "Number of b-colorings with k colors");
    count->add_option("graph", spec, "Graph expression")->required();
    count->add_option("k", k, "Palette size")->required()->check(CLI::Range(1U, 64U));
    count->add_option("--mode", mode, "exact: all k colors used; within: colors drawn from [1..k]")
        ->check(CLI::IsMember({"exact", "within"}));
    count->callback([&] { action = [&] { return cmd_count(spec, k, mode, flags); }; });

    std::string theorem;
    std::vector<std::size_t> params;
    std::string plan = "canonical";
    std::string dot;
    auto* construct = app.add_subcommand("construct", "Emit a constructive b-coloring certificate");
    construct->add_option("theorem", theorem, "thm3.1 thm3.2 thm3.3 thm4.2 thm4.4-grid rook-embed")->required();
    construct->add_option("params", params, "n m [k], or n [offset] for rook-embed");
    construct->add_option("--plan", plan, "Slot plan for thm3.3")->check(CLI::IsMember({"canonical", "appendix"}));
    construct->add_option("--dot", dot, "Also write Graphviz output to this path ('-' for stdout)");
    construct->callback([&] { action = [&] { return cmd_construct(theorem, params, plan, dot, flags); }; });

    std::string suite, n_range, m_range, k_range, family;
    auto* verify = app.add_subcommand("verify", "Compare formulas, exact solver and constructions");
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(verify_suites()));
    verify->add_option("--n", n_range, "Range a..b");
    verify->add_option("--m", m_range, "Range a..b");
    verify->add_option("--k", k_range, "Range a..b (powers)");
    verify->add_option("--family", family, "m-degree family");
    verify->add_option("--mode", mode, "Counting mode for remark4.1")->check(CLI::IsMember({"exact", "within"}));
    verify->callback([&] { action = [&] { return cmd_verify(suite, n_range, m_range, k_range, family, mode, flags); }; });

    std::string what, format = "json";
    std::size_t n_max = 6;
    auto* exp = app.add_subcommand("export", "Export the theorem table or a graph");
    exp->add_option("what", what, "theorems or graph")->required()->check(CLI::IsMember({"theorems", "graph"}));
    exp->add_option("graph", spec, "Graph expression for 'graph'");
    exp->add_option("--format", format, "json, edges or dot")->check(CLI::IsMember({"json", "edges", "dot"}));
    exp->add_option("--n-max", n_max, "Largest n in the theorem table");
    exp->callback([&] { action = [&] { return cmd_export(what, spec, format, n_max); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }

    try {
        status = action();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return parse;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return budget;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis not met: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return status;
}
