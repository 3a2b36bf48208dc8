#include "holeforge/graph.hpp"

#include <stdexcept>
#include <string>

namespace holeforge {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges)
    : n_(n)
    , adj_(n, Bits(n))
{
    for (auto [u, v] : edges) {
        if (!adj_[u].test(v))
            ++m_;
        adj_[u].set(v);
        adj_[v].set(u);
    }
}

std::vector<std::pair<int, int>> Graph::edge_list() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges)
{
    if (n < 0)
        throw std::invalid_argument("make_graph: negative vertex count");
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("make_graph: vertex out of range: ("
                + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument(
                "make_graph: self-loop at vertex " + std::to_string(u));
    }
    return Graph(n, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    std::vector<int> ids;
    for (int v : s) {
        if (v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: member out of range");
        ids.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j)
            if (g.adjacent(ids[i], ids[j]))
                edges.emplace_back(int(i), int(j));
    return {Graph(int(ids.size()), edges), std::move(ids)};
}

bool is_clique(const Graph& g, const VertexSet& s)
{
    for (int u : s)
        for (int v = s.next(u); v >= 0; v = s.next(v))
            if (!g.adjacent(u, v))
                return false;
    return true;
}

UniformStatus are_joined(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("are_joined: empty set");
    if (a.intersects(b))
        throw std::invalid_argument("are_joined: overlapping sets");
    bool any_edge = false, any_nonedge = false;
    for (int u : a)
        for (int v : b) {
            (g.adjacent(u, v) ? any_edge : any_nonedge) = true;
            if (any_edge && any_nonedge)
                return UniformStatus::Mixed;
        }
    return any_edge ? UniformStatus::Join : UniformStatus::Cojoin;
}

std::vector<Bits> components_within(const Graph& g, const Bits& within)
{
    std::vector<Bits> comps;
    Bits seen(within.capacity());
    for (int s : within) {
        if (seen.test(s))
            continue;
        Bits comp(within.capacity());
        std::vector<int> stack{s};
        comp.set(s);
        seen.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            Bits nbrs = g.neighbors(v) & within;
            nbrs -= comp;
            for (int u : nbrs) {
                comp.set(u);
                seen.set(u);
                stack.push_back(u);
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected_within(const Graph& g, const Bits& within)
{
    return components_within(g, within).size() <= 1;
}

bool is_connected(const Graph& g)
{
    return is_connected_within(g, g.full_set());
}

} // namespace holeforge
