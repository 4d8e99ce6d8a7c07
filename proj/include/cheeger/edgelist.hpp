#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cheeger/graph.hpp"

namespace cheeger {

// Parse failure with the offending 1-based line number.
class EdgeListError : public std::runtime_error {
public:
    EdgeListError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// Lines are "u v w" or "u v" (weight 1); '#' starts a comment; blank lines
// are ignored. Vertex ids are dense 0-based; the vertex count is one past the
// largest id. Self-loops and duplicate unordered edges are rejected with the
// line number.
WeightedGraph read_edge_list(std::istream& in);
WeightedGraph load_edge_list(const std::string& path);

// Canonical serialization: edges sorted by (u, v), weights in shortest
// round-trip decimal form. parse -> serialize is idempotent.
void write_edge_list(const WeightedGraph& g, std::ostream& out);
std::string edge_list_string(const WeightedGraph& g);

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double x);

}  // namespace cheeger
