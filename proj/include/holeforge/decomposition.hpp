#ifndef HOLEFORGE_DECOMPOSITION_HPP
#define HOLEFORGE_DECOMPOSITION_HPP

#include "holeforge/coloring.hpp"

#include <optional>
#include <stdexcept>

namespace holeforge {

struct CliqueCutsetSplit {
    Bits cutset; // empty for the degenerate disconnected split
    Bits v1, v2; // v1 u v2 = V, v1 n v2 = cutset, no edges across
};

// First clique whose removal disconnects G[within], in lexicographic
// clique order; v1 is the component containing the smallest vertex id,
// plus the cutset. Disconnected input yields the degenerate empty
// cutset. nullopt means G[within] is an atom.
std::optional<CliqueCutsetSplit> find_clique_cutset_within(
    const Graph& g, const Bits& within);
std::optional<CliqueCutsetSplit> find_clique_cutset(const Graph& g);

struct DecompNode {
    Bits vertices;
    Bits cutset;
    int left = -1, right = -1;
    bool leaf() const { return left < 0; }
};

struct DecompTree {
    std::vector<DecompNode> nodes;
    int root = -1;

    std::vector<int> leaf_indices() const;
    int atom_count() const { return int(leaf_indices().size()); }
};

DecompTree decompose(const Graph& g);

class ImproperInput : public std::runtime_error {
public:
    explicit ImproperInput(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

// Combine proper per-atom colorings into a proper coloring of G using
// max(chi(G1), chi(G2)) colors at every internal node, by permuting the
// right child's colors to agree with the left on the shared cutset.
// atom_colorings[i] colors the vertices of the i-th leaf (in
// leaf_indices order) and is -1 elsewhere. Throws ImproperInput when a
// leaf coloring fails verification.
Coloring merge_colorings(const Graph& g, const DecompTree& t,
    const std::vector<Coloring>& atom_colorings);

} // namespace holeforge

#endif
