#ifndef HOLEFORGE_COLOR_PIPELINE_HPP
#define HOLEFORGE_COLOR_PIPELINE_HPP

#include "holeforge/c5_structure.hpp"
#include "holeforge/cliquewidth.hpp"
#include "holeforge/decomposition.hpp"

namespace holeforge {

enum class AtomBranch {
    Perfect,       // no C5, no C7: chi = omega asserted
    C7Uniform,     // uniform partition + expression certificate
    T8CaseIII,     // near-uniform construction certificate
    T8CaseIV,      // clique join C5, colored directly
    FallbackExact, // the open case (C5, no C7, with C5-twins) or
                   // out-of-class input when the caller relaxed
};

const char* atom_branch_name(AtomBranch b);

// Per-atom record. The atom graph is the dense induced subgraph;
// original_ids maps its vertices back to the host graph, and every
// stored artifact speaks atom-local ids.
struct AtomTrace {
    Bits vertices; // original ids
    Graph atom;
    std::vector<int> original_ids;
    bool member = false, c5 = false, c7 = false, c5_twin = false;
    AtomBranch branch = AtomBranch::FallbackExact;
    int colors_used = 0;
    int omega = -1; // recorded on the Perfect branch
    std::optional<NearUniformPartition> partition;
    std::optional<std::string> expression_text;
    int expression_width = -1;
    bool certificate_ok = false;
    std::optional<Theorem8Outcome> outcome;
};

struct StructureTrace {
    std::vector<AtomTrace> atoms;
};

// An atom contradicting the structure theory: a counterexample
// candidate, surfaced as a hard error.
class StructureViolation : public std::runtime_error {
public:
    StructureViolation(Graph atom_graph, std::vector<int> ids,
        const std::string& detail)
        : std::runtime_error("structure violation: " + detail)
        , atom(std::move(atom_graph))
        , original_ids(std::move(ids))
        , detail(detail)
    {
    }
    Graph atom;
    std::vector<int> original_ids;
    std::string detail;
};

// The structure-driven pipeline: decompose on clique cutsets, pick a
// branch per atom from its class report, certify the branch's
// structural artifacts, color, and merge. Requires class_report
// membership; out-of-class atoms fall back to the exact oracle with a
// trace flag.
std::pair<Coloring, StructureTrace> color_in_class(const Graph& g);

} // namespace holeforge

#endif
