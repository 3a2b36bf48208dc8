#ifndef HOLEFORGE_COLORING_HPP
#define HOLEFORGE_COLORING_HPP

#include "holeforge/graph.hpp"

namespace holeforge {

// Vertex -> color map; -1 marks uncolored slots when the coloring
// covers only part of a host graph.
struct Coloring {
    std::vector<int> color;
    int count = 0; // distinct colors used

    static Coloring empty(int n) { return {std::vector<int>(n, -1), 0}; }
    void recount();
};

// true iff every vertex is colored and no edge is monochromatic
bool verify_coloring(const Graph& g, const Coloring& c);

// same, restricted to G[s]
bool verify_coloring_within(const Graph& g, const Coloring& c, const Bits& s);

struct CliqueWitness {
    Bits vertices;
    int size = 0;
};

// exact maximum clique, branch and bound with a greedy coloring bound
CliqueWitness max_clique(const Graph& g);
CliqueWitness max_clique_within(const Graph& g, const Bits& s);

// exact chromatic number and an optimal coloring; DSATUR-style branch
// and bound with omega as lower bound and a greedy upper bound
std::pair<int, Coloring> exact_chromatic(const Graph& g);

} // namespace holeforge

#endif
