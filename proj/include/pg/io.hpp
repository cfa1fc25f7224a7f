#ifndef PG_IO_HPP
#define PG_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "pg/graph.hpp"

namespace pg {

// Edge-list text format. Line 1: "n m kind" with kind "graph" or "digraph";
// then m lines "u v" with 0-based endpoints. '#' starts a comment line.
// Undirected files must not repeat an edge in either orientation; loops are
// rejected. Throws Error(FileFormat).
std::variant<Graph, DiGraph> read_edge_list(std::istream& in);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(std::ostream& out, const DiGraph& d);

// DOT export. Every vertex gets a node line; labels[i], when given, is
// appended to the index as "i: name".
void write_dot(std::ostream& out, const Graph& g,
               const std::vector<std::string>& labels = {});
void write_dot(std::ostream& out, const DiGraph& d,
               const std::vector<std::string>& labels = {});

// Cayley table text format. Line 1: n; then n rows of n whitespace-separated
// 0-based indices; '#' starts a comment line. Returns the raw rows; group
// validation is the caller's choice. Throws Error(FileFormat).
std::vector<std::vector<int>> read_cayley_table(std::istream& in);

}  // namespace pg

#endif
