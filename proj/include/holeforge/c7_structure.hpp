#ifndef HOLEFORGE_C7_STRUCTURE_HPP
#define HOLEFORGE_C7_STRUCTURE_HPP

#include "holeforge/hole.hpp"

#include <array>
#include <optional>

namespace holeforge {

// Neighborhood partition of V(G) - C7 by trace on the hole, indices
// 0-based mod 7:
//   x[i]: 3-vertices adjacent to positions {i, i+1, i+2}
//   y[i]: 3-vertices adjacent to positions {i, i+1, i+4}
//   z[i]: 5-vertices adjacent to positions {i, ..., i+4}
//   w:    7-vertices
struct C7Partition {
    HoleEmbedding hole;
    std::array<Bits, 7> x, y, z;
    Bits w;
};

// Classify every vertex outside the hole by its trace. Throws
// UnclassifiableVertex (with a detection witness) when some trace is
// illegal, i.e. the graph is outside the class.
C7Partition build_c7_partition(const Graph& g, const HoleEmbedding& hole);

// Check the structural claims (a)..(o) about the partition; failures
// are report entries carrying concrete witnesses, never errors.
AuditReport audit_c7(const Graph& g, const C7Partition& p);

// Partition of a graph into cliques with a join/cojoin matrix; at most
// one pair may be Mixed (the uniform-pair), and that pair is handled
// by the chain construction in cliquewidth.
struct NearUniformPartition {
    std::vector<Bits> sets; // nonempty disjoint cliques
    std::vector<std::string> names;
    std::vector<std::vector<UniformStatus>> matrix; // symmetric, diag unused
    std::optional<std::pair<int, int>> nonuniform_pair;
};

class InvalidPartition : public std::runtime_error {
public:
    explicit InvalidPartition(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

// Compute the matrix for the given clique sets; throws InvalidPartition
// if a set is empty or not a clique, sets overlap, or more than one
// pair is Mixed.
NearUniformPartition make_near_uniform(const Graph& g, std::vector<Bits> sets,
    std::vector<std::string> names = {});

// The whole-graph partition: all nonempty sets among X_i, Y_i, Z_i, W
// plus the seven hole vertices as singletons. For in-class graphs the
// result has no Mixed pair and at most 20 sets.
NearUniformPartition c7_uniform_sets(const Graph& g, const HoleEmbedding& hole);

} // namespace holeforge

#endif
