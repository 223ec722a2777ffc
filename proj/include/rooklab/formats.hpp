#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "rooklab/dicolor.hpp"
#include "rooklab/digraph.hpp"

namespace rooklab {

// Input error with the 1-based line it was found on.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Arc list format:
//   digraph <n> <m>
//   u v          (m lines, 0-based ids, no duplicates)
Digraph read_arc_list(std::istream& in);
Digraph read_arc_list_file(const std::string& path);
std::string write_arc_list(const Digraph& d);
void write_arc_list_file(const Digraph& d, const std::string& path);

// Coloring format:
//   coloring <n> <k>
//   v c          (each vertex exactly once, c < k)
Coloring read_coloring(std::istream& in);
Coloring read_coloring_file(const std::string& path);
std::string write_coloring(const Coloring& c);
void write_coloring_file(const Coloring& c, const std::string& path);

/// DOT text; cells labeled "(a,b)" when rook_n is given (requires n == N^2),
/// plain ids otherwise. Node and edge lines come out in id order.
std::string write_dot(const Digraph& d, std::optional<int> rook_n = std::nullopt);

} // namespace rooklab
