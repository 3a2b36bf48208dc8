#include "holeforge/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

namespace holeforge {

bool TemplateSpec::valid() const
{
    for (int i = 0; i < 7; ++i)
        if (x[i] < 0 || y[i] < 0 || z[i] < 0)
            return false;
    if (w < 0)
        return false;
    int ny = 0;
    for (int i = 0; i < 7; ++i)
        ny += y[i] > 0;
    if (ny > 2)
        return false;
    for (int i = 0; i < 7; ++i) {
        if (y[i] > 0) {
            // only Y_{i+3} or Y_{i+4} may accompany Y_i, not both
            for (int d : {1, 2, 5, 6})
                if (y[(i + d) % 7] > 0)
                    return false;
            if (y[(i + 3) % 7] > 0 && y[(i + 4) % 7] > 0)
                return false;
            if (z[(i + 5) % 7] > 0 || z[(i + 6) % 7] > 0)
                return false;
        }
        if (z[i] > 0 && (z[(i + 2) % 7] > 0 || z[(i + 5) % 7] > 0))
            return false;
    }
    return true;
}

int TemplateSpec::total_vertices() const
{
    int n = 7 + w;
    for (int i = 0; i < 7; ++i)
        n += x[i] + y[i] + z[i];
    return n;
}

std::optional<Graph> random_in_class(
    int n, uint64_t seed, std::optional<Pattern> require, int max_attempts)
{
    if (require && *require != Pattern::C5 && *require != Pattern::C7)
        throw std::invalid_argument("random_in_class: require must be C5 or C7");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> density(0.4, 0.7);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        double p = density(rng);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p)
                    edges.emplace_back(u, v);
        Graph g(n, edges);
        ClassReport rep = class_report(g);
        if (!rep.member)
            continue;
        if (require == Pattern::C5 && !rep.c5_present)
            continue;
        if (require == Pattern::C7 && !rep.c7_present)
            continue;
        return g;
    }
    return std::nullopt;
}

namespace {

    enum class SetKind { X, Y, Z, W };

    struct NamedSet {
        SetKind kind;
        int index; // 0 for W
        int begin, size;
    };

    // hole positions a member of the set attaches to
    int hole_mask(SetKind k, int i)
    {
        auto rot = [&](std::initializer_list<int> offs) {
            int m = 0;
            for (int d : offs)
                m |= 1 << ((i + d) % 7);
            return m;
        };
        switch (k) {
        case SetKind::X:
            return rot({0, 1, 2});
        case SetKind::Y:
            return rot({0, 1, 4});
        case SetKind::Z:
            return rot({0, 1, 2, 3, 4});
        case SetKind::W:
            return 0x7f;
        }
        return 0;
    }

    // forced relation between two distinct nonempty sets; d = index
    // difference where it matters
    bool forced_join(const NamedSet& a, const NamedSet& b)
    {
        if (a.kind == SetKind::W || b.kind == SetKind::W)
            return true; // every set joins W
        auto d = [&](const NamedSet& from, const NamedSet& to) {
            return ((to.index - from.index) % 7 + 7) % 7;
        };
        SetKind ka = a.kind, kb = b.kind;
        const NamedSet *lo = &a, *hi = &b;
        auto ordered = [&](SetKind k1, SetKind k2) {
            if (ka == k1 && kb == k2) {
                lo = &a;
                hi = &b;
                return true;
            }
            if (ka == k2 && kb == k1) {
                lo = &b;
                hi = &a;
                return true;
            }
            return false;
        };
        if (ordered(SetKind::X, SetKind::X)) {
            int dd = d(*lo, *hi);
            return dd == 1 || dd == 6;
        }
        if (ordered(SetKind::X, SetKind::Y)) {
            int dd = d(*lo, *hi); // X_i vs Y_{i+dd}
            return dd == 0 || dd == 1 || dd == 4;
        }
        if (ordered(SetKind::X, SetKind::Z)) {
            int dd = d(*lo, *hi);
            return dd == 0 || dd == 1 || dd == 4 || dd == 5 || dd == 6;
        }
        if (ordered(SetKind::Y, SetKind::Y))
            return true; // coexisting Y sets are at distance 3 or 4: join
        if (ordered(SetKind::Y, SetKind::Z)) {
            int dd = d(*lo, *hi); // Y_i vs Z_{i+dd}, dd in {0,1,3,4} join
            return dd != 2;      // dd 5, 6 cannot coexist
        }
        if (ordered(SetKind::Z, SetKind::Z))
            return true; // coexisting Z sets are at distance 1, 3 or 4
        throw std::logic_error("unhandled set pair");
    }

} // namespace

Graph c7_template(const TemplateSpec& spec)
{
    if (!spec.valid())
        throw std::invalid_argument(
            "c7_template: sizes violate the emptiness constraints");

    std::vector<NamedSet> sets;
    int next = 7;
    for (int i = 0; i < 7; ++i)
        if (spec.x[i] > 0) {
            sets.push_back({SetKind::X, i, next, spec.x[i]});
            next += spec.x[i];
        }
    for (int i = 0; i < 7; ++i)
        if (spec.y[i] > 0) {
            sets.push_back({SetKind::Y, i, next, spec.y[i]});
            next += spec.y[i];
        }
    for (int i = 0; i < 7; ++i)
        if (spec.z[i] > 0) {
            sets.push_back({SetKind::Z, i, next, spec.z[i]});
            next += spec.z[i];
        }
    if (spec.w > 0) {
        sets.push_back({SetKind::W, 0, next, spec.w});
        next += spec.w;
    }

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 7; ++i)
        edges.emplace_back(i, (i + 1) % 7);
    for (const auto& s : sets) {
        int mask = hole_mask(s.kind, s.index);
        for (int v = s.begin; v < s.begin + s.size; ++v) {
            for (int p = 0; p < 7; ++p)
                if (mask & (1 << p))
                    edges.emplace_back(p, v);
            for (int u = s.begin; u < v; ++u)
                edges.emplace_back(u, v);
        }
    }
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j)
            if (forced_join(sets[i], sets[j]))
                for (int u = sets[i].begin; u < sets[i].begin + sets[i].size;
                     ++u)
                    for (int v = sets[j].begin;
                         v < sets[j].begin + sets[j].size; ++v)
                        edges.emplace_back(u, v);

    Graph g(next, edges);
    ClassReport rep = class_report(g);
    if (!rep.member) {
        Embedding w = rep.four_k1.present ? *rep.four_k1.witness
            : rep.c4.present             ? *rep.c4.witness
                                         : *rep.c6.witness;
        throw Unrealizable(spec, g, std::move(w));
    }
    return g;
}

namespace {

    // fast class membership on adjacency masks, n <= 7; must agree with
    // class_report.member (cross-checked by tests)
    bool member_fast(const std::array<uint8_t, 7>& adj, int n)
    {
        // induced C4: a nonadjacent pair with two nonadjacent common
        // neighbors
        for (int a = 0; a < n; ++a)
            for (int c = a + 1; c < n; ++c) {
                if (adj[a] & (1 << c))
                    continue;
                int common = adj[a] & adj[c];
                for (int b = 0; b < n; ++b) {
                    if (!(common & (1 << b)))
                        continue;
                    if (common & ~adj[b] & ~(1 << b) & ((1 << n) - 1))
                        return false;
                }
            }
        // 4K1
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (adj[a] & (1 << b))
                    continue;
                for (int c = b + 1; c < n; ++c) {
                    if ((adj[a] | adj[b]) & (1 << c))
                        continue;
                    for (int d = c + 1; d < n; ++d)
                        if (!((adj[a] | adj[b] | adj[c]) & (1 << d)))
                            return false;
                }
            }
        // induced C6: a 6-subset where every induced degree is 2 and the
        // subgraph is connected
        if (n >= 6) {
            for (int out = 0; out < (n == 7 ? 7 : 1); ++out) {
                int subset = ((1 << n) - 1) & ~(n == 7 ? (1 << out) : 0);
                bool all_deg2 = true;
                for (int v = 0; v < n && all_deg2; ++v)
                    if (subset & (1 << v))
                        all_deg2 = __builtin_popcount(adj[v] & subset) == 2;
                if (!all_deg2)
                    continue;
                int start = __builtin_ctz(subset);
                int reach = 1 << start;
                for (int it = 0; it < 6; ++it) {
                    int grow = reach;
                    for (int v = 0; v < n; ++v)
                        if (reach & (1 << v))
                            grow |= adj[v] & subset;
                    reach = grow;
                }
                if (reach == subset)
                    return false;
            }
        }
        return true;
    }

    uint32_t edge_mask_of(const std::array<uint8_t, 7>& adj, int n)
    {
        uint32_t mask = 0;
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (adj[u] & (1 << v))
                    mask |= uint32_t{1} << bit;
        return mask;
    }

    uint32_t canonical_mask(const std::array<uint8_t, 7>& adj, int n)
    {
        std::array<int, 7> perm;
        std::iota(perm.begin(), perm.begin() + n, 0);
        uint32_t best = ~uint32_t{0};
        do {
            std::array<uint8_t, 7> pa{};
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (adj[u] & (1 << v))
                        pa[perm[u]] |= uint8_t(1 << perm[v]);
            best = std::min(best, edge_mask_of(pa, n));
        } while (std::next_permutation(perm.begin(), perm.begin() + n));
        return best;
    }

} // namespace

void enumerate_small(
    int n, const std::function<void(const Graph&)>& emit, bool dedup)
{
    if (n < 1 || n > 7)
        throw std::invalid_argument("enumerate_small: n must be 1..7");
    int pairs = n * (n - 1) / 2;
    std::unordered_set<uint32_t> seen;
    for (uint32_t mask = 0; mask < (uint32_t{1} << pairs); ++mask) {
        std::array<uint8_t, 7> adj{};
        std::vector<std::pair<int, int>> edges;
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (mask & (uint32_t{1} << bit)) {
                    adj[u] |= uint8_t(1 << v);
                    adj[v] |= uint8_t(1 << u);
                    edges.emplace_back(u, v);
                }
        if (!member_fast(adj, n))
            continue;
        if (dedup && !seen.insert(canonical_mask(adj, n)).second)
            continue;
        emit(Graph(n, edges));
    }
}

} // namespace holeforge
