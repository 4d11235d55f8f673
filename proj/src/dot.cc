#include <iop/io.hh>

#include <sstream>

namespace iop {

std::string to_dot(const Graph & g, const Orientation * d)
{
    std::ostringstream out;
    if (! d) {
        out << "graph G {\n";
        for (int v = 0; v < g.order(); ++v)
            out << "  " << v << ";\n";
        for (const auto & e : g.edges())
            out << "  " << e.u << " -- " << e.v << ";\n";
        out << "}\n";
        return out.str();
    }

    auto degrees = in_out_degrees(g, *d);
    out << "digraph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v << " [label=\"" << v << " (";
        if (degrees[v] > 0)
            out << '+';
        out << degrees[v] << ")\"];\n";
    }
    for (int e = 0; e < g.size(); ++e)
        out << "  " << d->tail(g, e) << " -> " << d->head(g, e) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace iop
