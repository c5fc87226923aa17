#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "kempe/graph.hpp"

namespace kempe {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct DimacsWarnings {
    int duplicate_edges = 0;
    int ignored_lines = 0;
};

// DIMACS .col reader: `c` comments, one `p edge N M` header, `e u v` edges
// with 1-based vertices. Self-loops are rejected; repeated edges are dropped
// and counted; unknown line kinds are counted and skipped. Throws ParseError
// with the offending line number.
SimpleGraph parse_dimacs(std::istream& in, DimacsWarnings* warnings = nullptr);
SimpleGraph parse_dimacs_file(const std::string& path, DimacsWarnings* warnings = nullptr);

// Writer emitting edges in id order; parse(write(g)) reproduces g exactly.
void write_dimacs(std::ostream& out, const SimpleGraph& graph, const std::string& comment = "");

}  // namespace kempe
