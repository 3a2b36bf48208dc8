#ifndef HOLEFORGE_GRAPH_HPP
#define HOLEFORGE_GRAPH_HPP

#include "holeforge/bits.hpp"

#include <utility>
#include <vector>

namespace holeforge {

using VertexSet = Bits;

// Relation between two disjoint nonempty vertex sets: all cross edges,
// no cross edges, or anything in between.
enum class UniformStatus { Join, Cojoin, Mixed };

// Simple undirected graph on vertices 0..n-1, immutable after
// construction. Induced subgraphs and partitions always refer to the
// original vertex identities of the graph they were derived from.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bits& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    Bits full_set() const { return Bits::full(n_); }

    // edges sorted with u < v, lexicographic
    std::vector<std::pair<int, int>> edge_list() const;

    bool operator==(const Graph& o) const
    {
        return n_ == o.n_ && adj_ == o.adj_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Bits> adj_;
};

// Throws std::invalid_argument on out-of-range endpoints or self-loops.
// Duplicate edges collapse.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_ids; // dense vertex i <-> original_ids[i]
};

// G[S] with the identity map back to G. Members of S must be in range.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// true iff every pair in s is adjacent (vacuous for |s| <= 1)
bool is_clique(const Graph& g, const VertexSet& s);

// Throws std::invalid_argument unless a, b are disjoint and nonempty.
UniformStatus are_joined(const Graph& g, const VertexSet& a, const VertexSet& b);

// connected components of G[within]
std::vector<Bits> components_within(const Graph& g, const Bits& within);
bool is_connected_within(const Graph& g, const Bits& within);
bool is_connected(const Graph& g);

} // namespace holeforge

#endif
