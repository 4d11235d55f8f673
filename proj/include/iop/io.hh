#pragma once

#include <iop/graph.hh>

#include <iosfwd>
#include <string>

namespace iop {

// Graph files: a header line "n m" followed by m lines "u v" (0-based).
// Orientation files: one line "u v" per arc u -> v, covering exactly the
// edges of the companion graph in any order. In both, blank lines and lines
// starting with '#' are ignored. Malformed input throws FormatError.

Graph read_graph(std::istream & in);
void write_graph(std::ostream & out, const Graph & g);

Orientation read_orientation(std::istream & in, const Graph & g);
void write_orientation(std::ostream & out, const Graph & g, const Orientation & d);

Graph read_graph_file(const std::string & path);
Orientation read_orientation_file(const std::string & path, const Graph & g);

/// DOT text for g; with an orientation, a digraph whose vertices are
/// labelled with their in-out-degree.
std::string to_dot(const Graph & g, const Orientation * d = nullptr);

}  // namespace iop
