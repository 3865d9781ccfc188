#ifndef VMTK_IO_HPP
#define VMTK_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "vmtk/graph.hpp"

namespace vmtk {

// Edge-list text format: line 1 "n m"; then m lines "u v" with
// 0 <= u < v < n; lines starting with '#' are comments.
Graph read_edgelist(std::istream& in);
std::string write_edgelist(const Graph& g);

// graph6 ASCII encoding, one graph per line, n <= 62 handled with the
// short form and larger orders with the 4-byte form (n < 2^18).
Graph read_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

enum class GraphFormat { EdgeList, Graph6 };

// Reads the first graph from `path`. Format from `fmt` when given, else
// by extension (".g6" -> graph6, otherwise edge list).
Graph load_graph(const std::string& path, std::optional<GraphFormat> fmt = std::nullopt);

} // namespace vmtk

#endif
