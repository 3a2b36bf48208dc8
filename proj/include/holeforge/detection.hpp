#ifndef HOLEFORGE_DETECTION_HPP
#define HOLEFORGE_DETECTION_HPP

#include "holeforge/graph.hpp"

#include <optional>
#include <string>

namespace holeforge {

// The closed pattern set: the class-defining patterns 4K1, C4, C6, the
// pivotal holes C5, C7, and the C5-twin (a C5 plus a twin of one cycle
// vertex).
enum class Pattern { FourK1, C4, C5, C6, C7, C5Twin };

int pattern_size(Pattern p);
const char* pattern_name(Pattern p);

// fixed template graph; cycles in cyclic order, C5Twin with the cycle
// on template vertices 0..4 and the twin of vertex 2 at position 5
const Graph& pattern_template(Pattern p);

struct Embedding {
    Pattern pattern;
    std::vector<int> vertices; // tuple order matches the template order
};

// edge-by-edge recheck against the template (edges and non-edges)
bool verify_embedding(const Graph& g, const Embedding& e);

// First (index-th) induced copy of p in g in deterministic search
// order, or nullopt when exhaustive search certifies absence.
std::optional<Embedding> find_induced(const Graph& g, Pattern p, int index = 0);

struct PatternHit {
    bool present = false;
    std::optional<Embedding> witness;
};

struct ClassReport {
    PatternHit four_k1, c4, c5, c6, c7, c5_twin;
    bool member = false; // free of 4K1, C4 and C6
    bool c5_present = false;
    bool c7_present = false;
    bool c5_twin_present = false;
};

ClassReport class_report(const Graph& g);

} // namespace holeforge

#endif
