#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "netsimp/graph.hpp"

namespace netsimp {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Edge-list text format: UTF-8, one link per line as "u<whitespace>v",
// lines whose first non-blank character is '#' are comments. Node labels are
// arbitrary whitespace-free tokens mapped to dense indices in
// first-appearance order. A line with any other token count is an error;
// input without a single data line is an error.
Graph load_edge_list(std::istream& in, bool directed);
Graph load_edge_list_file(const std::string& path, bool directed);

// One "u v" line per stored link, in stored order. Comments are not emitted,
// so output is byte-stable for a given graph.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace netsimp
