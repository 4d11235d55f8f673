#include <iop/errors.hh>
#include <iop/io.hh>

#include "line_reader.hh"

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace iop {

using std::string;
using std::to_string;
using std::vector;
using detail::at_end;
using detail::LineReader;

namespace {
    std::pair<int, int> read_pair(LineReader & reader, std::istringstream & fields)
    {
        long long a, b;
        if (! (fields >> a >> b) || ! at_end(fields))
            reader.fail("expected two integers \"u v\"");
        if (a < 0 || b < 0 || a > INT32_MAX || b > INT32_MAX)
            reader.fail("vertex index out of range");
        return {static_cast<int>(a), static_cast<int>(b)};
    }
}

Graph read_graph(std::istream & in)
{
    LineReader reader(in);
    std::istringstream fields;
    if (! reader.next(fields))
        throw FormatError("empty graph file");

    long long n, m;
    if (! (fields >> n >> m) || ! at_end(fields))
        reader.fail("expected header \"n m\"");
    if (n < 0 || m < 0 || n > INT32_MAX || m > INT32_MAX)
        reader.fail("negative or oversized header values");

    vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        if (! reader.next(fields))
            throw FormatError("expected " + to_string(m) + " edges, found " + to_string(i));
        auto [a, b] = read_pair(reader, fields);
        if (a >= n || b >= n)
            reader.fail("endpoint outside [0, " + to_string(n) + ")");
        if (a == b)
            reader.fail("self-loop at vertex " + to_string(a));
        edges.emplace_back(a, b);
    }
    if (reader.next(fields))
        reader.fail("unexpected data after " + to_string(m) + " edges");

    try {
        return Graph(static_cast<int>(n), edges);
    }
    catch (const PreconditionError & e) {
        throw FormatError(e.what());
    }
}

void write_graph(std::ostream & out, const Graph & g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto & e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

Orientation read_orientation(std::istream & in, const Graph & g)
{
    LineReader reader(in);
    std::istringstream fields;
    vector<bool> forward(g.size(), true);
    vector<bool> seen(g.size(), false);
    int count = 0;
    while (reader.next(fields)) {
        auto [tail, head] = read_pair(reader, fields);
        auto e = g.find_edge(tail, head);
        if (! e)
            reader.fail("arc " + to_string(tail) + " -> " + to_string(head) + " is not an edge of the graph");
        if (seen[*e])
            reader.fail("edge (" + to_string(g.edge(*e).u) + ", " + to_string(g.edge(*e).v) + ") oriented twice");
        seen[*e] = true;
        forward[*e] = (tail == g.edge(*e).u);
        ++count;
    }
    if (count != g.size())
        throw FormatError("orientation covers " + to_string(count) + " of " + to_string(g.size()) + " edges");
    return Orientation(g, std::move(forward));
}

void write_orientation(std::ostream & out, const Graph & g, const Orientation & d)
{
    if (d.size() != g.size())
        throw PreconditionError("orientation does not belong to the graph");
    for (int e = 0; e < g.size(); ++e)
        out << d.tail(g, e) << ' ' << d.head(g, e) << '\n';
}

Graph read_graph_file(const string & path)
{
    std::ifstream in(path);
    if (! in)
        throw FormatError("cannot open " + path);
    return read_graph(in);
}

Orientation read_orientation_file(const string & path, const Graph & g)
{
    std::ifstream in(path);
    if (! in)
        throw FormatError("cannot open " + path);
    return read_orientation(in, g);
}

}  // namespace iop
