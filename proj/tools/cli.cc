#include "cli.hh"

#include <iop/errors.hh>
#include <iop/exact.hh>
#include <iop/generators.hh>
#include <iop/io.hh>
#include <iop/reductions.hh>
#include <iop/subcubic.hh>
#include <iop/tree.hh>

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace iop::cli {

using std::string;

namespace {
    struct Settings {
        string graph_path;
        string second_path;
        string out_path;
        std::uint64_t budget = default_budget;
        int workers = 1;
        int k = -1;
        int n = 0;
        std::uint64_t seed = 0;
        string family;
    };

    string certificate_path(const Settings & s) { return s.out_path.empty() ? s.graph_path + ".or" : s.out_path; }

    void write_certificate(const string & path, const Graph & g, const Orientation & d)
    {
        std::ofstream file(path);
        if (! file)
            throw FormatError("cannot write " + path);
        write_orientation(file, g, d);
        if (! file)
            throw FormatError("failed writing " + path);
    }

    // Writes text to --out when given, otherwise to out.
    void emit(const Settings & s, std::ostream & out, const string & text)
    {
        if (s.out_path.empty()) {
            out << text;
            return;
        }
        std::ofstream file(s.out_path);
        if (! file || ! (file << text))
            throw FormatError("cannot write " + s.out_path);
    }

    string signed_value(int x) { return x > 0 ? "+" + std::to_string(x) : std::to_string(x); }

    int solve(const Settings & s, std::ostream & out)
    {
        auto g = read_graph_file(s.graph_path);
        if (g.order() == 0)
            throw PreconditionError("graph has no vertices");
        auto result = in_out_number(g, {s.budget, s.workers});
        string path = certificate_path(s);
        write_certificate(path, g, result.certificate);
        out << "chi = " << result.value << '\n' << "certificate " << path << '\n';
        return Ok;
    }

    int decide(const Settings & s, std::ostream & out)
    {
        auto g = read_graph_file(s.graph_path);
        auto verdict = decide_width(g, s.k, {s.budget, s.workers});
        switch (verdict.kind) {
        case VerdictKind::Feasible:
            write_certificate(certificate_path(s), g, *verdict.certificate);
            out << "FEASIBLE width " << s.k << '\n';
            return Ok;
        case VerdictKind::Infeasible: out << "INFEASIBLE width " << s.k << '\n'; return No;
        case VerdictKind::BudgetExceeded: out << "BUDGET EXCEEDED after " << verdict.nodes << " nodes\n"; return OverBudget;
        }
        return OverBudget;
    }

    int tree(const Settings & s, std::ostream & out)
    {
        auto g = read_graph_file(s.graph_path);
        auto d = orient_any_tree(g, s.workers);
        string path = certificate_path(s);
        write_certificate(path, g, d);
        out << "width " << check_proper(g, d).width << '\n' << "certificate " << path << '\n';
        return Ok;
    }

    int subcubic(const Settings & s, std::ostream & out)
    {
        auto g = read_graph_file(s.graph_path);
        auto verdict = decide_subcubic_width2(g, {FeasibilityBackend::Flow, s.workers});
        if (! verdict.feasible()) {
            out << "INFEASIBLE: chi = 3\n";
            return No;
        }
        write_certificate(certificate_path(s), g, *verdict.certificate);
        out << "FEASIBLE width 2\n";
        return Ok;
    }

    int verify(const Settings & s, std::ostream & out)
    {
        auto g = read_graph_file(s.graph_path);
        auto d = read_orientation_file(s.second_path, g);
        auto check = check_proper(g, d);
        if (check.proper)
            out << "proper\n";
        else {
            const auto & e = g.edge(*check.violating_edge);
            out << "improper: edge " << e.u << ' ' << e.v << '\n';
        }
        out << "width " << check.width << '\n' << "degrees";
        for (int x : in_out_degrees(g, d))
            out << ' ' << signed_value(x);
        out << '\n';
        return check.proper ? Ok : No;
    }

    int reduce_nae(const Settings & s, std::ostream & out)
    {
        std::ifstream file(s.graph_path);
        if (! file)
            throw FormatError("cannot open " + s.graph_path);
        auto phi = read_nae(file);
        auto reduction = build_g_phi(phi);
        std::ostringstream text;
        write_graph(text, reduction.graph);
        write_maps(text, phi, reduction.maps);
        emit(s, out, text.str());
        return Ok;
    }

    int reduce_linegraph(const Settings & s, std::ostream & out)
    {
        auto g = read_graph_file(s.graph_path);
        std::ostringstream text;
        write_graph(text, build_line_instance(g));
        emit(s, out, text.str());
        return Ok;
    }

    int gen(const Settings & s, std::ostream & out)
    {
        auto family = parse_family(s.family);
        if (! family)
            throw PreconditionError("unknown family " + s.family);
        std::ostringstream text;
        write_graph(text, generate(*family, s.n, s.seed));
        emit(s, out, text.str());
        return Ok;
    }

    int export_dot(const Settings & s, std::ostream & out)
    {
        auto g = read_graph_file(s.graph_path);
        if (s.second_path.empty()) {
            emit(s, out, to_dot(g));
            return Ok;
        }
        auto d = read_orientation_file(s.second_path, g);
        emit(s, out, to_dot(g, &d));
        return Ok;
    }
}

int run(const std::vector<string> & args, std::ostream & out, std::ostream & err)
{
    Settings s;
    CLI::App app{"In-out-proper orientations: exact search, tree and subcubic algorithms, reductions", "iop"};
    app.require_subcommand(1);

    auto add_out = [&](CLI::App * c, const string & what) { c->add_option("--out,-o", s.out_path, what); };
    auto add_workers = [&](CLI::App * c) { c->add_option("--workers,-w", s.workers, "Worker threads")->check(CLI::PositiveNumber); };
    auto add_budget = [&](CLI::App * c) { c->add_option("--budget,-b", s.budget, "Search node limit")->capture_default_str(); };

    auto * c_solve = app.add_subcommand("solve", "Exact in-out-proper orientation number");
    c_solve->add_option("graph", s.graph_path)->required();
    add_out(c_solve, "Certificate path (default: <graph>.or)");
    add_budget(c_solve);
    add_workers(c_solve);

    auto * c_decide = app.add_subcommand("decide", "Is there a proper orientation of width <= k?");
    c_decide->add_option("graph", s.graph_path)->required();
    c_decide->add_option("-k", s.k, "Width")->required()->check(CLI::NonNegativeNumber);
    add_out(c_decide, "Certificate path (default: <graph>.or)");
    add_budget(c_decide);
    add_workers(c_decide);

    auto * c_tree = app.add_subcommand("tree", "Width <= 3 orientation of a forest");
    c_tree->add_option("graph", s.graph_path)->required();
    add_out(c_tree, "Certificate path (default: <graph>.or)");
    add_workers(c_tree);

    auto * c_subcubic = app.add_subcommand("subcubic", "Decide width <= 2 for maximum degree <= 3");
    c_subcubic->add_option("graph", s.graph_path)->required();
    add_out(c_subcubic, "Certificate path (default: <graph>.or)");
    add_workers(c_subcubic);

    auto * c_verify = app.add_subcommand("verify", "Check an orientation");
    c_verify->add_option("graph", s.graph_path)->required();
    c_verify->add_option("orientation", s.second_path)->required();

    auto * c_nae = app.add_subcommand("reduce-nae", "Graph for a cubic monotone NAE (2,3)-SAT instance");
    c_nae->add_option("instance", s.graph_path)->required();
    add_out(c_nae, "Output path (default: stdout)");

    auto * c_line = app.add_subcommand("reduce-linegraph", "Line graph of a 3-regular graph");
    c_line->add_option("graph", s.graph_path)->required();
    add_out(c_line, "Output path (default: stdout)");

    auto * c_gen = app.add_subcommand("gen", "Generate an instance");
    c_gen->add_option("family", s.family, "cycle, complete, star, tree or subcubic")
        ->required()
        ->check(CLI::IsMember({"cycle", "complete", "star", "tree", "subcubic"}));
    c_gen->add_option("--n,-n", s.n, "Vertex count")->required();
    c_gen->add_option("--seed,-s", s.seed, "Random seed");
    add_out(c_gen, "Output path (default: stdout)");

    auto * c_dot = app.add_subcommand("export-dot", "DOT text, labelled by in-out-degree when an orientation is given");
    c_dot->add_option("graph", s.graph_path)->required();
    c_dot->add_option("orientation", s.second_path);
    add_out(c_dot, "Output path (default: stdout)");

    std::vector<string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return Ok;
        }
        err << "error: " << e.what() << '\n';
        return InputError;
    }

    try {
        if (c_solve->parsed())
            return solve(s, out);
        if (c_decide->parsed())
            return decide(s, out);
        if (c_tree->parsed())
            return tree(s, out);
        if (c_subcubic->parsed())
            return subcubic(s, out);
        if (c_verify->parsed())
            return verify(s, out);
        if (c_nae->parsed())
            return reduce_nae(s, out);
        if (c_line->parsed())
            return reduce_linegraph(s, out);
        if (c_gen->parsed())
            return gen(s, out);
        return export_dot(s, out);
    }
    catch (const BudgetExceeded & e) {
        err << "budget exceeded: " << e.what() << '\n';
        return OverBudget;
    }
    catch (const FormatError & e) {
        err << "error: " << e.what() << '\n';
        return InputError;
    }
    catch (const PreconditionError & e) {
        err << "error: " << e.what() << '\n';
        return InputError;
    }
}

}  // namespace iop::cli
