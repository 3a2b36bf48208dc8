#include "holeforge/coloring.hpp"

#include <algorithm>

namespace holeforge {

namespace {

    // Matula-Beck smallest-last ordering
    std::vector<int> degeneracy_order(const Graph& g)
    {
        int n = g.vertex_count();
        std::vector<int> order;
        Bits alive = g.full_set();
        for (int step = 0; step < n; ++step) {
            int best = -1, best_deg = n + 1;
            for (int v : alive) {
                int d = (g.neighbors(v) & alive).count();
                if (d < best_deg) {
                    best_deg = d;
                    best = v;
                }
            }
            order.push_back(best);
            alive.reset(best);
        }
        std::reverse(order.begin(), order.end());
        return order;
    }

    struct CliqueSearch {
        const Graph& g;
        Bits best;
        int best_size = 0;

        // greedy coloring bound on the candidate set
        int color_bound(const Bits& cand) const
        {
            int classes = 0;
            Bits left = cand;
            while (!left.empty()) {
                ++classes;
                Bits cls(left.capacity());
                for (int v : left)
                    if (!g.neighbors(v).intersects(cls))
                        cls.set(v);
                left -= cls;
            }
            return classes;
        }

        void expand(Bits current, Bits cand)
        {
            int size = current.count();
            if (size > best_size) {
                best_size = size;
                best = current;
            }
            if (cand.empty())
                return;
            if (size + color_bound(cand) <= best_size)
                return;
            for (int v = cand.first(); v >= 0; v = cand.next(v)) {
                if (size + cand.count() <= best_size)
                    return;
                Bits next_cur = current;
                next_cur.set(v);
                expand(next_cur, cand & g.neighbors(v));
                cand.reset(v);
            }
        }
    };

} // namespace

CliqueWitness max_clique_within(const Graph& g, const Bits& s)
{
    CliqueSearch search{g, Bits(g.vertex_count()), 0};
    search.expand(Bits(g.vertex_count()), s);
    return {search.best, search.best_size};
}

CliqueWitness max_clique(const Graph& g)
{
    return max_clique_within(g, g.full_set());
}

namespace {

    struct ChromaticSearch {
        const Graph& g;
        std::vector<int> degen; // branching tie-break order
        std::vector<int> rank;  // position in degen
        std::vector<int> assigned;
        std::vector<int> best_colors;
        int best = 0; // current upper bound, strictly improved on save
        int lb = 1;

        ChromaticSearch(const Graph& g_)
            : g(g_)
            , degen(degeneracy_order(g_))
            , rank(g_.vertex_count())
            , assigned(g_.vertex_count(), -1)
        {
            for (int i = 0; i < int(degen.size()); ++i)
                rank[degen[i]] = i;
        }

        int pick_vertex() const
        {
            int best_v = -1, best_sat = -1;
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (assigned[v] >= 0)
                    continue;
                Bits used(g.vertex_count());
                int sat = 0;
                for (int u : g.neighbors(v))
                    if (assigned[u] >= 0 && !used.test(assigned[u])) {
                        used.set(assigned[u]);
                        ++sat;
                    }
                if (best_v < 0 || sat > best_sat
                    || (sat == best_sat && rank[v] < rank[best_v])) {
                    best_sat = sat;
                    best_v = v;
                }
            }
            return best_v;
        }

        void dfs(int colored, int used)
        {
            if (used >= best)
                return;
            if (colored == g.vertex_count()) {
                best = used;
                best_colors = assigned;
                return;
            }
            int v = pick_vertex();
            Bits banned(g.vertex_count());
            for (int u : g.neighbors(v))
                if (assigned[u] >= 0)
                    banned.set(assigned[u]);
            int limit = std::min(used + 1, best - 1);
            for (int c = 0; c < limit; ++c) {
                if (banned.test(c))
                    continue;
                assigned[v] = c;
                dfs(colored + 1, std::max(used, c + 1));
                assigned[v] = -1;
                if (best <= lb)
                    return;
            }
        }
    };

    Coloring dsatur_greedy(const Graph& g)
    {
        int n = g.vertex_count();
        Coloring c = Coloring::empty(n);
        std::vector<int> sat(n, 0);
        std::vector<std::vector<bool>> nb_colors(n);
        for (int step = 0; step < n; ++step) {
            int v = -1;
            for (int u = 0; u < n; ++u) {
                if (c.color[u] >= 0)
                    continue;
                if (v < 0 || sat[u] > sat[v]
                    || (sat[u] == sat[v] && g.degree(u) > g.degree(v)))
                    v = u;
            }
            std::vector<bool> banned(n, false);
            for (int u : g.neighbors(v))
                if (c.color[u] >= 0)
                    banned[c.color[u]] = true;
            int col = 0;
            while (banned[col])
                ++col;
            c.color[v] = col;
            for (int u : g.neighbors(v)) {
                auto& seen = nb_colors[u];
                if (seen.empty())
                    seen.assign(n, false);
                if (!seen[col]) {
                    seen[col] = true;
                    ++sat[u];
                }
            }
        }
        c.recount();
        return c;
    }

} // namespace

std::pair<int, Coloring> exact_chromatic(const Graph& g)
{
    int n = g.vertex_count();
    if (n == 0)
        return {0, Coloring::empty(0)};

    Coloring greedy = dsatur_greedy(g);
    int lb = max_clique(g).size;
    if (greedy.count == lb)
        return {greedy.count, greedy};

    ChromaticSearch search(g);
    search.best = greedy.count;
    search.best_colors = greedy.color;
    search.lb = lb;
    search.dfs(0, 0);

    Coloring out;
    out.color = search.best_colors;
    out.recount();
    return {out.count, out};
}

} // namespace holeforge
