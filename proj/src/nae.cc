#include <iop/errors.hh>
#include <iop/reductions.hh>

#include "line_reader.hh"

#include <ostream>
#include <string>

namespace iop {

using detail::at_end;
using detail::LineReader;
using std::string;
using std::to_string;
using std::vector;

void NaeInstance::validate() const
{
    if (var_count < 1)
        throw PreconditionError("instance needs at least one variable");
    vector<int> occurrences(var_count + 1, 0);
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        const auto & c = clauses[i];
        const string name = "clause " + to_string(i + 1);
        if (c.size() != 2 && c.size() != 3)
            throw PreconditionError(name + " has " + to_string(c.size()) + " variables");
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] < 1 || c[j] > var_count)
                throw PreconditionError(name + " mentions unknown variable " + to_string(c[j]));
            for (std::size_t k = 0; k < j; ++k)
                if (c[k] == c[j])
                    throw PreconditionError(name + " repeats variable " + to_string(c[j]));
            ++occurrences[c[j]];
        }
    }
    for (int a = 1; a <= var_count; ++a)
        if (occurrences[a] != 3)
            throw PreconditionError("variable " + to_string(a) + " occurs " + to_string(occurrences[a]) + " times, expected 3");
}

bool NaeInstance::satisfied_by(const vector<bool> & assignment) const
{
    for (const auto & c : clauses) {
        bool any_true = false, any_false = false;
        for (int a : c)
            (assignment[a - 1] ? any_true : any_false) = true;
        if (! any_true || ! any_false)
            return false;
    }
    return true;
}

NaeInstance read_nae(std::istream & in)
{
    LineReader reader(in);
    std::istringstream fields;
    if (! reader.next(fields))
        throw FormatError("empty NAE file");
    string tag;
    long long vars, count;
    if (! (fields >> tag >> vars >> count) || tag != "nae" || ! at_end(fields))
        reader.fail("expected header \"nae <var_count> <clause_count>\"");
    if (vars < 1 || count < 0 || vars > 1'000'000 || count > 1'000'000)
        reader.fail("header values out of range");

    NaeInstance phi;
    phi.var_count = static_cast<int>(vars);
    for (long long i = 0; i < count; ++i) {
        if (! reader.next(fields))
            throw FormatError("expected " + to_string(count) + " clauses, found " + to_string(i));
        vector<int> clause;
        long long a;
        while (fields >> a) {
            if (a < 1 || a > vars)
                reader.fail("variable " + to_string(a) + " outside [1, " + to_string(vars) + "]");
            clause.push_back(static_cast<int>(a));
        }
        if (! at_end(fields))
            reader.fail("clause entries must be integers");
        phi.clauses.push_back(std::move(clause));
    }
    if (reader.next(fields))
        reader.fail("unexpected data after " + to_string(count) + " clauses");
    try {
        phi.validate();
    }
    catch (const PreconditionError & e) {
        throw FormatError(e.what());
    }
    return phi;
}

void write_nae(std::ostream & out, const NaeInstance & phi)
{
    out << "nae " << phi.var_count << ' ' << phi.clauses.size() << '\n';
    for (const auto & c : phi.clauses) {
        for (std::size_t j = 0; j < c.size(); ++j)
            out << (j ? " " : "") << c[j];
        out << '\n';
    }
}

GPhi build_g_phi(const NaeInstance & phi, const Gadget & gadget)
{
    phi.validate();
    const int vars = phi.var_count;
    const int clauses = static_cast<int>(phi.clauses.size());
    const int gn = gadget.graph.order();

    GPhi result;
    auto & maps = result.maps;
    maps.gadget = gadget;
    maps.clause_terminal.resize(clauses);

    // Each clause claims the lowest free terminal of every member variable.
    vector<int> next_terminal(vars, 0);
    vector<vector<int>> merged_into(vars, vector<int>(3, -1));
    for (int i = 0; i < clauses; ++i)
        for (int a : phi.clauses[i]) {
            int t = next_terminal[a - 1]++;
            if (t >= 3)
                throw std::logic_error("terminal exhaustion for variable " + to_string(a));
            maps.clause_terminal[i].push_back(t);
            if (phi.clauses[i].size() == 2)
                merged_into[a - 1][t] = i;
        }

    vector<bool> is_terminal(gn, false);
    vector<int> terminal_index(gn, -1);
    for (int t = 0; t < 3; ++t) {
        is_terminal[gadget.terminals[t]] = true;
        terminal_index[gadget.terminals[t]] = t;
    }

    int next = 0;
    maps.gadget_vertex.assign(vars, vector<int>(gn, -1));
    for (int a = 0; a < vars; ++a)
        for (int v = 0; v < gn; ++v)
            if (! is_terminal[v] || merged_into[a][terminal_index[v]] == -1)
                maps.gadget_vertex[a][v] = next++;

    maps.clause_vertex.resize(clauses);
    for (int i = 0; i < clauses; ++i) {
        maps.clause_vertex[i] = next++;
        if (phi.clauses[i].size() == 2)
            for (std::size_t j = 0; j < 2; ++j) {
                int a = phi.clauses[i][j] - 1;
                maps.gadget_vertex[a][gadget.terminals[maps.clause_terminal[i][j]]] = maps.clause_vertex[i];
            }
    }

    vector<std::pair<int, int>> edges;
    for (int a = 0; a < vars; ++a)
        for (const auto & e : gadget.graph.edges())
            edges.emplace_back(maps.gadget_vertex[a][e.u], maps.gadget_vertex[a][e.v]);
    for (int i = 0; i < clauses; ++i) {
        if (phi.clauses[i].size() != 3)
            continue;
        for (std::size_t j = 0; j < 3; ++j) {
            int a = phi.clauses[i][j] - 1;
            edges.emplace_back(maps.clause_vertex[i], maps.gadget_vertex[a][gadget.terminals[maps.clause_terminal[i][j]]]);
        }
    }
    result.graph = Graph(next, edges);
    return result;
}

void write_maps(std::ostream & out, const NaeInstance & phi, const ReductionMaps & maps)
{
    for (std::size_t a = 0; a < maps.gadget_vertex.size(); ++a) {
        out << "# var " << a + 1 << " -> vertices";
        for (int v : maps.gadget_vertex[a])
            out << ' ' << v;
        out << '\n';
    }
    for (std::size_t i = 0; i < maps.clause_vertex.size(); ++i)
        out << "# clause " << i + 1 << " -> vertex " << maps.clause_vertex[i]
            << (phi.clauses[i].size() == 2 ? " merged" : "") << '\n';
}

namespace {
    // Sets the G_phi edge between from and to to point from -> to.
    void direct(const Graph & g, vector<bool> & forward, int from, int to)
    {
        auto e = g.find_edge(from, to);
        if (! e)
            throw std::logic_error("missing edge in G_phi");
        forward[*e] = g.edge(*e).u == from;
    }

    bool is_terminal_edge(const Gadget & gadget, int e)
    {
        for (int t : gadget.terminals)
            if (gadget.graph.edge(e).u == t || gadget.graph.edge(e).v == t)
                return true;
        return false;
    }
}

Orientation assignment_to_orientation(const NaeInstance & phi, const GPhi & reduction, const vector<bool> & assignment)
{
    if (static_cast<int>(assignment.size()) != phi.var_count)
        throw PreconditionError("assignment has " + to_string(assignment.size()) + " values for " +
                                to_string(phi.var_count) + " variables");
    for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
        bool first = assignment[phi.clauses[i][0] - 1], mixed = false;
        for (int a : phi.clauses[i])
            mixed = mixed || assignment[a - 1] != first;
        if (! mixed)
            throw PreconditionError("clause " + to_string(i + 1) + " has all variables " + (first ? "true" : "false"));
    }

    const auto & g = reduction.graph;
    const auto & maps = reduction.maps;
    const auto & gadget = maps.gadget;
    vector<bool> forward(g.size(), true);
    for (int a = 0; a < phi.var_count; ++a) {
        const auto & type = assignment[a] ? gadget.type2 : gadget.type1;
        const auto & at = maps.gadget_vertex[a];
        for (int e = 0; e < gadget.graph.size(); ++e)
            direct(g, forward, at[type.tail(gadget.graph, e)], at[type.head(gadget.graph, e)]);
    }
    // A true variable's terminal already has an arc in from its gadget, so
    // its clause arc leaves it; a false one is entered from the clause.
    for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
        if (phi.clauses[i].size() != 3)
            continue;
        int c = maps.clause_vertex[i];
        for (std::size_t j = 0; j < 3; ++j) {
            int a = phi.clauses[i][j] - 1;
            int t = maps.gadget_vertex[a][gadget.terminals[maps.clause_terminal[i][j]]];
            if (assignment[a])
                direct(g, forward, t, c);
            else
                direct(g, forward, c, t);
        }
    }
    return Orientation(g, std::move(forward));
}

vector<bool> orientation_to_assignment(const NaeInstance & phi, const GPhi & reduction, const Orientation & d)
{
    const auto & g = reduction.graph;
    auto check = check_proper(g, d);
    if (! check.proper)
        throw PreconditionError("orientation is not in-out-proper");
    if (check.width > 1)
        throw PreconditionError("orientation has width " + to_string(check.width) + ", expected at most 1");

    const auto & maps = reduction.maps;
    const auto & gadget = maps.gadget;
    vector<bool> assignment(phi.var_count);
    for (int a = 0; a < phi.var_count; ++a) {
        const auto & at = maps.gadget_vertex[a];
        bool like1 = true, like2 = true;
        for (int e = 0; e < gadget.graph.size(); ++e) {
            if (is_terminal_edge(gadget, e))
                continue;
            int tail = at[gadget.type1.tail(gadget.graph, e)];
            int head = at[gadget.type1.head(gadget.graph, e)];
            int f = *g.find_edge(tail, head);
            bool tail_matches = d.tail(g, f) == tail;
            like1 = like1 && tail_matches;
            int tail2 = at[gadget.type2.tail(gadget.graph, e)];
            like2 = like2 && d.tail(g, f) == tail2;
        }
        if (like1 == like2)
            throw std::runtime_error("gadget of variable " + to_string(a + 1) + " matches neither type");
        assignment[a] = like2;
    }
    return assignment;
}

}  // namespace iop
