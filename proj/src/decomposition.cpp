#include "holeforge/decomposition.hpp"

#include <algorithm>
#include <map>

namespace holeforge {

namespace {

    CliqueCutsetSplit make_split(const Bits& within,
        const Bits& cutset, const std::vector<Bits>& comps)
    {
        // the component holding the smallest id goes to side 1
        const Bits* best = &comps[0];
        for (const auto& c : comps)
            if (c.first() < best->first())
                best = &c;
        CliqueCutsetSplit s;
        s.cutset = cutset;
        s.v1 = *best | cutset;
        s.v2 = within - *best;
        return s;
    }

    // Cliques of exactly `need` more vertices, lexicographic; first one
    // whose removal disconnects the rest wins. Scanning sizes from 1
    // upward yields inclusion-minimal separators: a proper separating
    // subset of a clique is a smaller clique cutset and would have been
    // found at an earlier size.
    bool clique_dfs(const Graph& g, const Bits& within, Bits& clique,
        const Bits& common, int min_next, int need, CliqueCutsetSplit& out)
    {
        if (need == 0) {
            auto comps = components_within(g, within - clique);
            if (comps.size() >= 2) {
                out = make_split(within, clique, comps);
                return true;
            }
            return false;
        }
        for (int v = common.next(min_next - 1); v >= 0; v = common.next(v)) {
            clique.set(v);
            Bits next_common = common & g.neighbors(v);
            if (clique_dfs(g, within, clique, next_common, v + 1, need - 1,
                    out))
                return true;
            clique.reset(v);
        }
        return false;
    }

} // namespace

std::optional<CliqueCutsetSplit> find_clique_cutset_within(
    const Graph& g, const Bits& within)
{
    auto comps = components_within(g, within);
    if (comps.size() >= 2)
        return make_split(within, Bits(g.vertex_count()), comps);
    int n = within.count();
    if (n <= 2)
        return std::nullopt;
    for (int size = 1; size <= n - 2; ++size) {
        Bits clique(g.vertex_count());
        CliqueCutsetSplit out;
        if (clique_dfs(g, within, clique, within, 0, size, out))
            return out;
    }
    return std::nullopt;
}

std::optional<CliqueCutsetSplit> find_clique_cutset(const Graph& g)
{
    return find_clique_cutset_within(g, g.full_set());
}

std::vector<int> DecompTree::leaf_indices() const
{
    std::vector<int> out;
    for (int i = 0; i < int(nodes.size()); ++i)
        if (nodes[i].leaf())
            out.push_back(i);
    return out;
}

namespace {

    int build_tree(const Graph& g, DecompTree& t, const Bits& within)
    {
        int idx = int(t.nodes.size());
        t.nodes.push_back({within, Bits(g.vertex_count()), -1, -1});
        if (auto split = find_clique_cutset_within(g, within)) {
            int left = build_tree(g, t, split->v1);
            int right = build_tree(g, t, split->v2);
            t.nodes[idx].cutset = split->cutset;
            t.nodes[idx].left = left;
            t.nodes[idx].right = right;
        }
        return idx;
    }

} // namespace

DecompTree decompose(const Graph& g)
{
    DecompTree t;
    if (g.vertex_count() == 0) {
        t.nodes.push_back({Bits(0), Bits(0), -1, -1});
        t.root = 0;
        return t;
    }
    t.root = build_tree(g, t, g.full_set());
    return t;
}

void Coloring::recount()
{
    std::vector<int> seen;
    for (int c : color)
        if (c >= 0)
            seen.push_back(c);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    count = int(seen.size());
}

bool verify_coloring_within(const Graph& g, const Coloring& c, const Bits& s)
{
    for (int v : s) {
        if (v >= int(c.color.size()) || c.color[v] < 0)
            return false;
        for (int u = s.next(v); u >= 0; u = s.next(u))
            if (g.adjacent(u, v) && c.color[u] == c.color[v])
                return false;
    }
    return true;
}

bool verify_coloring(const Graph& g, const Coloring& c)
{
    if (int(c.color.size()) != g.vertex_count())
        return false;
    return verify_coloring_within(g, c, g.full_set());
}

namespace {

    // colors used on s
    std::vector<int> palette(const Coloring& c, const Bits& s)
    {
        std::vector<int> out;
        for (int v : s)
            out.push_back(c.color[v]);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    Coloring merge_node(const Graph& g, const DecompTree& t, int idx,
        const std::vector<Coloring>& atom_colorings,
        std::map<int, int>& leaf_slot)
    {
        const DecompNode& node = t.nodes[idx];
        if (node.leaf()) {
            const Coloring& c = atom_colorings[leaf_slot.at(idx)];
            for (int v = 0; v < int(c.color.size()); ++v)
                if (c.color[v] >= 0 && !node.vertices.test(v))
                    throw ImproperInput("leaf coloring colors a vertex "
                                        "outside its atom");
            if (!verify_coloring_within(g, c, node.vertices))
                throw ImproperInput("leaf coloring is not a proper coloring "
                                    "of its atom");
            return c;
        }

        Coloring c1 = merge_node(g, t, node.left, atom_colorings, leaf_slot);
        Coloring c2 = merge_node(g, t, node.right, atom_colorings, leaf_slot);

        // permute c2's colors: cutset colors follow c1, the rest take the
        // smallest colors not used on the cutset
        std::map<int, int> perm;
        for (int v : node.cutset)
            perm[c2.color[v]] = c1.color[v];
        std::vector<int> targets;
        for (auto& kv : perm)
            targets.push_back(kv.second);
        std::sort(targets.begin(), targets.end());
        int next_free = 0;
        auto take_free = [&]() {
            while (std::binary_search(targets.begin(), targets.end(),
                next_free))
                ++next_free;
            return next_free++;
        };
        for (int col : palette(c2, t.nodes[node.right].vertices))
            if (!perm.count(col))
                perm[col] = take_free();

        Coloring out = Coloring::empty(g.vertex_count());
        for (int v : t.nodes[node.left].vertices)
            out.color[v] = c1.color[v];
        for (int v : t.nodes[node.right].vertices)
            out.color[v] = perm.at(c2.color[v]);
        return out;
    }

} // namespace

Coloring merge_colorings(const Graph& g, const DecompTree& t,
    const std::vector<Coloring>& atom_colorings)
{
    auto leaves = t.leaf_indices();
    if (atom_colorings.size() != leaves.size())
        throw ImproperInput("one coloring per atom required");
    std::map<int, int> leaf_slot;
    for (size_t i = 0; i < leaves.size(); ++i)
        leaf_slot[leaves[i]] = int(i);
    Coloring out = merge_node(g, t, t.root, atom_colorings, leaf_slot);
    out.recount();
    return out;
}

} // namespace holeforge
