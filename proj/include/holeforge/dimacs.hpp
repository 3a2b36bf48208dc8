#ifndef HOLEFORGE_DIMACS_HPP
#define HOLEFORGE_DIMACS_HPP

#include "holeforge/graph.hpp"

#include <stdexcept>
#include <string>

namespace holeforge {

class DimacsError : public std::runtime_error {
public:
    explicit DimacsError(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

// DIMACS .col dialect: comment lines `c ...`, one `p edge <n> <m>`,
// edge lines `e <u> <v>` with 1-indexed vertices. The writer emits the
// canonical form: no comments, edges sorted u < v lexicographic.
Graph parse_dimacs(const std::string& text);
std::string write_dimacs(const Graph& g);

Graph read_dimacs_file(const std::string& path);
void write_dimacs_file(const Graph& g, const std::string& path);

} // namespace holeforge

#endif
