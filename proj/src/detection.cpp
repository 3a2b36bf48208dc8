#include "holeforge/detection.hpp"

#include <array>
#include <stdexcept>

namespace holeforge {

namespace {

    Graph cycle_graph(int k)
    {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < k; ++i)
            e.emplace_back(i, (i + 1) % k);
        return Graph(k, e);
    }

    Graph c5_twin_graph()
    {
        // C5 on 0..4 plus vertex 5 forming twins with cycle vertex 2
        std::vector<std::pair<int, int>> e
            = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 1}, {5, 2}, {5, 3}};
        return Graph(6, e);
    }

    // m(i) < m(j) constraints killing the template's automorphisms, so
    // each induced copy is reported by exactly one tuple
    const std::vector<std::pair<int, int>>& symmetry_breaks(Pattern p)
    {
        static const std::vector<std::pair<int, int>> four_k1
            = {{0, 1}, {1, 2}, {2, 3}};
        static const std::vector<std::pair<int, int>> c4
            = {{0, 1}, {0, 2}, {0, 3}, {1, 3}};
        static const std::vector<std::pair<int, int>> c5
            = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}};
        static const std::vector<std::pair<int, int>> c6
            = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 5}};
        static const std::vector<std::pair<int, int>> c7
            = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 6}};
        // Aut(C5-twin) = {id, twin swap (2 5), reflection (1 3)(0 4),
        // their product}
        static const std::vector<std::pair<int, int>> c5t = {{2, 5}, {1, 3}};
        switch (p) {
        case Pattern::FourK1:
            return four_k1;
        case Pattern::C4:
            return c4;
        case Pattern::C5:
            return c5;
        case Pattern::C6:
            return c6;
        case Pattern::C7:
            return c7;
        case Pattern::C5Twin:
            return c5t;
        }
        throw std::logic_error("unknown pattern");
    }

    struct Searcher {
        const Graph& g;
        const Graph& tmpl;
        const std::vector<std::pair<int, int>>& breaks;
        int k;
        int skip; // return the (skip+1)-th match
        std::vector<int> map;
        Bits used;

        Searcher(const Graph& g_, Pattern p, int index)
            : g(g_)
            , tmpl(pattern_template(p))
            , breaks(symmetry_breaks(p))
            , k(tmpl.vertex_count())
            , skip(index)
            , map(k, -1)
            , used(g_.vertex_count())
        {
        }

        bool feasible(int pos, int v) const
        {
            for (int q = 0; q < pos; ++q)
                if (tmpl.adjacent(q, pos) != g.adjacent(map[q], v))
                    return false;
            for (auto [a, b] : breaks) {
                if (a < pos && b == pos && !(map[a] < v))
                    return false;
                if (b < pos && a == pos && !(v < map[b]))
                    return false;
            }
            return true;
        }

        bool extend(int pos)
        {
            if (pos == k)
                return skip-- == 0;
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (used.test(v) || !feasible(pos, v))
                    continue;
                map[pos] = v;
                used.set(v);
                if (extend(pos + 1))
                    return true;
                used.reset(v);
                map[pos] = -1;
            }
            return false;
        }
    };

} // namespace

int pattern_size(Pattern p)
{
    switch (p) {
    case Pattern::FourK1:
        return 4;
    case Pattern::C4:
        return 4;
    case Pattern::C5:
        return 5;
    case Pattern::C6:
        return 6;
    case Pattern::C7:
        return 7;
    case Pattern::C5Twin:
        return 6;
    }
    throw std::logic_error("unknown pattern");
}

const char* pattern_name(Pattern p)
{
    switch (p) {
    case Pattern::FourK1:
        return "4K1";
    case Pattern::C4:
        return "C4";
    case Pattern::C5:
        return "C5";
    case Pattern::C6:
        return "C6";
    case Pattern::C7:
        return "C7";
    case Pattern::C5Twin:
        return "C5-twin";
    }
    throw std::logic_error("unknown pattern");
}

const Graph& pattern_template(Pattern p)
{
    static const Graph four_k1(4, {});
    static const Graph c4 = cycle_graph(4);
    static const Graph c5 = cycle_graph(5);
    static const Graph c6 = cycle_graph(6);
    static const Graph c7 = cycle_graph(7);
    static const Graph c5t = c5_twin_graph();
    switch (p) {
    case Pattern::FourK1:
        return four_k1;
    case Pattern::C4:
        return c4;
    case Pattern::C5:
        return c5;
    case Pattern::C6:
        return c6;
    case Pattern::C7:
        return c7;
    case Pattern::C5Twin:
        return c5t;
    }
    throw std::logic_error("unknown pattern");
}

bool verify_embedding(const Graph& g, const Embedding& e)
{
    const Graph& t = pattern_template(e.pattern);
    int k = t.vertex_count();
    if (int(e.vertices.size()) != k)
        return false;
    for (int i = 0; i < k; ++i) {
        int u = e.vertices[i];
        if (u < 0 || u >= g.vertex_count())
            return false;
        for (int j = i + 1; j < k; ++j) {
            int v = e.vertices[j];
            if (u == v || t.adjacent(i, j) != g.adjacent(u, v))
                return false;
        }
    }
    return true;
}

std::optional<Embedding> find_induced(const Graph& g, Pattern p, int index)
{
    if (g.vertex_count() < pattern_size(p))
        return std::nullopt;
    Searcher s(g, p, index);
    if (!s.extend(0))
        return std::nullopt;
    return Embedding{p, s.map};
}

ClassReport class_report(const Graph& g)
{
    ClassReport r;
    auto run = [&](Pattern p, PatternHit& hit) {
        hit.witness = find_induced(g, p);
        hit.present = hit.witness.has_value();
    };
    run(Pattern::FourK1, r.four_k1);
    run(Pattern::C4, r.c4);
    run(Pattern::C5, r.c5);
    run(Pattern::C6, r.c6);
    run(Pattern::C7, r.c7);
    run(Pattern::C5Twin, r.c5_twin);
    r.member = !r.four_k1.present && !r.c4.present && !r.c6.present;
    r.c5_present = r.c5.present;
    r.c7_present = r.c7.present;
    r.c5_twin_present = r.c5_twin.present;
    return r;
}

} // namespace holeforge
