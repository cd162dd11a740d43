#pragma once

#include <filesystem>
#include <iosfwd>

#include <netchrono/graph.hpp>

namespace netchrono::io {

// Edge-list format: one "u v" pair per line, '#' starts a comment line. A
// "# vertices: N" header declares labels 0..N-1 so isolated vertices survive.

UndirectedGraph read_edge_list(std::istream &in);
UndirectedGraph read_edge_list(const std::filesystem::path &path);

/// Writes the "# vertices: N" header whenever labels are exactly 0..N-1.
void write_edge_list(std::ostream &out, const UndirectedGraph &g);
void write_edge_list(const std::filesystem::path &path, const UndirectedGraph &g);

// Chronology format: one vertex label per line, in arrival order.

Chronology read_chronology(std::istream &in);
Chronology read_chronology(const std::filesystem::path &path);
void write_chronology(std::ostream &out, const Chronology &chronology);
void write_chronology(const std::filesystem::path &path, const Chronology &chronology);

} // namespace netchrono::io
