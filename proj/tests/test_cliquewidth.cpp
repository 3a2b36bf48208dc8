#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "holeforge/c7_structure.hpp"
#include "holeforge/cliquewidth.hpp"
#include "holeforge/generate.hpp"

#include <set>

using namespace holeforge;

namespace {

Graph cycle(int k)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        e.emplace_back(i, (i + 1) % k);
    return make_graph(k, e);
}

CwdExpression k2_expression()
{
    CwdExpression e;
    int a = e.add_create(0, 1);
    int b = e.add_create(1, 2);
    int u = e.add_union(a, b);
    e.set_root(e.add_join(1, 2, u));
    return e;
}

} // namespace

TEST_CASE("evaluate basics")
{
    CwdExpression e = k2_expression();
    LabeledGraph lg = evaluate(e);
    CHECK(lg.ids == std::vector<int>{0, 1});
    CHECK(lg.edges == std::set<std::pair<int, int>>{{0, 1}});
    CHECK(lg.label_of(0) == 1);
    CHECK(lg.label_of(1) == 2);
    CHECK(width(e) == 2);

    e.set_root(e.add_relabel(2, 1, e.root()));
    LabeledGraph relabeled = evaluate(e);
    CHECK(relabeled.label_of(0) == 1);
    CHECK(relabeled.label_of(1) == 1);

    CwdExpression co;
    co.set_root(co.add_union(co.add_create(0, 1), co.add_create(1, 1)));
    LabeledGraph two_k1 = evaluate(co);
    CHECK(two_k1.edges.empty());
    CHECK(width(co) == 1);
}

TEST_CASE("evaluate errors")
{
    CwdExpression dup;
    dup.set_root(dup.add_union(dup.add_create(0, 1), dup.add_create(0, 2)));
    CHECK_THROWS_AS(evaluate(dup), EvaluationError);

    CwdExpression e;
    int c = e.add_create(0, 1);
    CHECK_THROWS_AS(e.add_join(1, 1, c), std::invalid_argument);
}

TEST_CASE("join idempotence")
{
    // duplicating a join node changes nothing
    CwdExpression e = k2_expression();
    LabeledGraph before = evaluate(e);
    e.set_root(e.add_join(1, 2, e.root()));
    LabeledGraph after = evaluate(e);
    CHECK(before.edges == after.edges);
    CHECK(before.ids == after.ids);
}

TEST_CASE("text round trip")
{
    CwdExpression e = k2_expression();
    e.set_root(e.add_relabel(2, 1, e.root()));
    std::string text = e.to_text();
    CwdExpression parsed = CwdExpression::from_text(text);
    CHECK(parsed.to_text() == text);
    LabeledGraph a = evaluate(e), b = evaluate(parsed);
    CHECK(a.ids == b.ids);
    CHECK(a.labels == b.labels);
    CHECK(a.edges == b.edges);

    CHECK_THROWS_AS(CwdExpression::from_text("u\n"), std::invalid_argument);
    CHECK_THROWS_AS(
        CwdExpression::from_text("v 0 1\nv 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(
        CwdExpression::from_text("q 1 2\n"), std::invalid_argument);
}

TEST_CASE("chain_order examples")
{
    // nested cross neighborhoods: a1 sees both, a2 sees b1 only
    Graph g = make_graph(4, {{0, 1}, {2, 3}, {0, 2}, {0, 3}, {1, 2}});
    Bits a = Bits::of(4, {0, 1}), b = Bits::of(4, {2, 3});
    ChainOrderResult r = chain_order(g, a, b);
    REQUIRE(r.ok());
    CHECK(r.order == std::vector<int>{1, 0});

    // crossing edges a1b1, a2b2 force the C4 (a1, b1, b2, a2)
    Graph x = make_graph(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
    ChainOrderResult rx = chain_order(x, Bits::of(4, {0, 1}),
        Bits::of(4, {2, 3}));
    REQUIRE(!rx.ok());
    CHECK(*rx.c4 == std::array<int, 4>{0, 2, 3, 1});
    Embedding c4{Pattern::C4,
        {(*rx.c4)[0], (*rx.c4)[1], (*rx.c4)[2], (*rx.c4)[3]}};
    CHECK(verify_embedding(x, c4));

    // no cross edges: any order works, ties break by id
    Graph n = make_graph(4, {{0, 1}, {2, 3}});
    ChainOrderResult rn = chain_order(n, Bits::of(4, {0, 1}),
        Bits::of(4, {2, 3}));
    REQUIRE(rn.ok());
    CHECK(rn.order == std::vector<int>{0, 1});
}

TEST_CASE("chain_order property: random nested pairs")
{
    std::mt19937_64 rng(47);
    for (int round = 0; round < 200; ++round) {
        int na = 1 + int(rng() % 4), nb = 1 + int(rng() % 4);
        int n = na + nb;
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < na; ++i)
            for (int j = i + 1; j < na; ++j)
                e.emplace_back(i, j);
        for (int i = 0; i < nb; ++i)
            for (int j = i + 1; j < nb; ++j)
                e.emplace_back(na + i, na + j);
        // nested neighborhoods by construction
        std::vector<int> quota(na);
        for (int i = 0; i < na; ++i)
            quota[i] = int(rng() % (nb + 1));
        std::sort(quota.begin(), quota.end());
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < quota[i]; ++j)
                e.emplace_back(i, na + j);
        Graph g = make_graph(n, e);
        Bits a(n), b(n);
        for (int i = 0; i < na; ++i)
            a.set(i);
        for (int j = 0; j < nb; ++j)
            b.set(na + j);
        ChainOrderResult r = chain_order(g, a, b);
        REQUIRE(r.ok());
        for (size_t i = 0; i + 1 < r.order.size(); ++i) {
            Bits lo = g.neighbors(r.order[i]) & b;
            Bits hi = g.neighbors(r.order[i + 1]) & b;
            CHECK(lo.is_subset_of(hi));
        }
    }
}

TEST_CASE("build_from_near_uniform: two joined cliques make K4")
{
    Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    NearUniformPartition p = make_near_uniform(
        k4, {Bits::of(4, {0, 1}), Bits::of(4, {2, 3})});
    CwdExpression e = build_from_near_uniform(k4, p);
    CHECK(evaluate(e).matches_induced(k4, k4.full_set()));
    CHECK(width(e) <= 3);
}

TEST_CASE("build_from_near_uniform: bare C7 via its uniform sets")
{
    Graph c7 = cycle(7);
    NearUniformPartition p
        = c7_uniform_sets(c7, HoleEmbedding{{0, 1, 2, 3, 4, 5, 6}});
    CwdExpression e = build_from_near_uniform(c7, p);
    CHECK(evaluate(e).matches_induced(c7, c7.full_set()));
    CHECK(width(e) <= 8);
}

TEST_CASE("build_from_near_uniform: non-uniform pair in chain order")
{
    // cliques {0,1}, {2,3} with nested cross edges 0-2, 0-3, 1-2
    Graph g = make_graph(4, {{0, 1}, {2, 3}, {0, 2}, {0, 3}, {1, 2}});
    NearUniformPartition p = make_near_uniform(
        g, {Bits::of(4, {0, 1}), Bits::of(4, {2, 3})});
    REQUIRE(p.nonuniform_pair.has_value());
    CwdExpression e = build_from_near_uniform(g, p);
    CHECK(evaluate(e).matches_induced(g, g.full_set()));
    CHECK(width(e) <= 3);
}

TEST_CASE("build_from_near_uniform: random near-uniform partitions")
{
    std::mt19937_64 rng(53);
    for (int round = 0; round < 150; ++round) {
        // sets of cliques, one designated pair mixed with nested
        // neighborhoods, all other pairs join or cojoin
        int k = 2 + int(rng() % 3);
        std::vector<int> sizes(k);
        int n = 0;
        for (auto& s : sizes) {
            s = 1 + int(rng() % 3);
            n += s;
        }
        std::vector<Bits> sets;
        std::vector<std::pair<int, int>> e;
        int base = 0;
        for (int s = 0; s < k; ++s) {
            Bits set(n);
            for (int i = 0; i < sizes[s]; ++i) {
                set.set(base + i);
                for (int j = i + 1; j < sizes[s]; ++j)
                    e.emplace_back(base + i, base + j);
            }
            sets.push_back(set);
            base += sizes[s];
        }
        for (int s = 0; s < k; ++s)
            for (int t = s + 1; t < k; ++t) {
                if (s == 0 && t == 1) {
                    // nested cross edges between the pair
                    std::vector<int> quota(sizes[0]);
                    for (auto& q : quota)
                        q = int(rng() % (sizes[1] + 1));
                    std::sort(quota.begin(), quota.end());
                    auto sv = sets[0].to_vector();
                    auto tv = sets[1].to_vector();
                    for (int i = 0; i < sizes[0]; ++i)
                        for (int j = 0; j < quota[i]; ++j)
                            e.emplace_back(sv[i], tv[j]);
                } else if (rng() & 1) {
                    for (int u : sets[s])
                        for (int v : sets[t])
                            e.emplace_back(u, v);
                }
            }
        Graph g = make_graph(n, e);
        NearUniformPartition p;
        try {
            p = make_near_uniform(g, sets);
        } catch (const InvalidPartition&) {
            continue; // the random pair came out uniform elsewhere mixed
        }
        CwdExpression expr = build_from_near_uniform(g, p);
        CHECK(evaluate(expr).matches_induced(g, g.full_set()));
        CHECK(width(expr) <= k + 1);
        CHECK(width(expr) <= 2 * k);
    }
}

TEST_CASE("add_back_vertices examples")
{
    // K2 plus an apex makes K3
    Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    CwdExpression base = k2_expression();
    CwdExpression full = add_back_vertices(base, k3, Bits::of(3, {2}));
    CHECK(evaluate(full).matches_induced(k3, k3.full_set()));
    CHECK(width(full) <= 2 * 2 + 1);

    // C7 minus a vertex is a path; adding it back rebuilds the cycle
    Graph c7 = cycle(7);
    CwdExpression path;
    {
        // path 1-2-...-6 with 3 labels: prev, cur, done
        int acc = path.add_create(1, 1);
        for (int v = 2; v <= 6; ++v) {
            acc = path.add_union(acc, path.add_create(v, 2));
            acc = path.add_join(1, 2, acc);
            acc = path.add_relabel(1, 3, acc);
            acc = path.add_relabel(2, 1, acc);
        }
        path.set_root(acc);
    }
    CHECK(evaluate(path).matches_induced(c7, Bits::of(7, {1, 2, 3, 4, 5, 6})));
    CwdExpression rebuilt = add_back_vertices(path, c7, Bits::of(7, {0}));
    CHECK(evaluate(rebuilt).matches_induced(c7, c7.full_set()));
    CHECK(width(rebuilt) <= 3 * 2 + 1);

    // S empty returns the expression unchanged
    CwdExpression same = add_back_vertices(base, k3, Bits(3));
    CHECK(same.to_text() == base.to_text());
}

TEST_CASE("the hole-removed route agrees with the whole-graph route")
{
    // partition G - C7 into the named sets alone, build, then add the
    // hole back; both routes must rebuild G exactly
    std::mt19937_64 rng(97);
    int built = 0;
    for (int round = 0; round < 80 && built < 20; ++round) {
        TemplateSpec spec;
        spec.x[rng() % 7] = 1 + int(rng() % 2);
        spec.y[rng() % 7] = int(rng() % 2);
        spec.z[rng() % 7] = int(rng() % 2);
        spec.w = int(rng() % 2);
        if (!spec.valid())
            continue;
        Graph g;
        try {
            g = c7_template(spec);
        } catch (const Unrealizable&) {
            continue;
        }
        ++built;
        HoleEmbedding hole{{0, 1, 2, 3, 4, 5, 6}};
        C7Partition part = build_c7_partition(g, hole);

        // whole-graph route
        NearUniformPartition whole = c7_uniform_sets(g, hole);
        CwdExpression direct = build_from_near_uniform(g, whole);
        CHECK(evaluate(direct).matches_induced(g, g.full_set()));

        // hole-removed route
        std::vector<Bits> sets;
        for (int i = 0; i < 7; ++i) {
            if (!part.x[i].empty())
                sets.push_back(part.x[i]);
            if (!part.y[i].empty())
                sets.push_back(part.y[i]);
            if (!part.z[i].empty())
                sets.push_back(part.z[i]);
        }
        if (!part.w.empty())
            sets.push_back(part.w);
        if (sets.empty())
            continue;
        NearUniformPartition outside = make_near_uniform(g, sets);
        CHECK(!outside.nonuniform_pair); // the partition is uniform
        CwdExpression base = build_from_near_uniform(g, outside);
        Bits hole_set = Bits::of(g.vertex_count(), hole.vertices);
        CHECK(evaluate(base).matches_induced(g, g.full_set() - hole_set));
        CwdExpression full = add_back_vertices(base, g, hole_set);
        CHECK(evaluate(full).matches_induced(g, g.full_set()));
    }
    CHECK(built >= 20);
}

TEST_CASE("add_back_vertices rejects a mismatched base")
{
    Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    CwdExpression wrong;
    wrong.set_root(
        wrong.add_union(wrong.add_create(0, 1), wrong.add_create(1, 1)));
    CHECK_THROWS_AS(
        add_back_vertices(wrong, k3, Bits::of(3, {2})), EvaluationMismatch);
}

TEST_CASE("add_back_vertices property: random graphs")
{
    std::mt19937_64 rng(59);
    for (int round = 0; round < 100; ++round) {
        int n = 5 + int(rng() % 5);
        Graph g = test::random_graph(n, 0.5, rng);
        Bits s(n);
        int removed = 1 + int(rng() % 3);
        while (s.count() < removed)
            s.set(int(rng() % n));
        Bits rest = g.full_set() - s;
        // base expression: singletons labeled by id, joined pairwise
        CwdExpression base;
        int acc = -1;
        for (int v : rest) {
            int c = base.add_create(v, v + 1);
            acc = acc < 0 ? c : base.add_union(acc, c);
        }
        for (int u : rest)
            for (int v = rest.next(u); v >= 0; v = rest.next(v))
                if (g.adjacent(u, v))
                    acc = base.add_join(u + 1, v + 1, acc);
        base.set_root(acc);
        REQUIRE(evaluate(base).matches_induced(g, rest));
        CwdExpression full = add_back_vertices(base, g, s);
        CHECK(evaluate(full).matches_induced(g, g.full_set()));
        CHECK(width(full)
            <= width(base) * (1 << s.count()) + s.count());
    }
}

namespace {

// Exhaustive reachability search over labeled graphs on <= 5 vertices
// with at most k labels: can the four operations build C5? States are
// canonicalized over vertex and label permutations.
struct MiniState {
    int m = 0;
    std::array<uint8_t, 5> adj{};
    std::array<uint8_t, 5> lab{};
};

uint64_t encode(const MiniState& s, const std::vector<int>& vperm,
    const std::vector<int>& lperm)
{
    uint64_t bits = 0;
    int b = 0;
    for (int i = 0; i < s.m; ++i)
        for (int j = i + 1; j < s.m; ++j, ++b)
            if (s.adj[vperm[i]] & (1 << vperm[j]))
                bits |= uint64_t{1} << b;
    for (int i = 0; i < s.m; ++i)
        bits |= uint64_t(lperm[s.lab[vperm[i]]]) << (10 + 3 * i);
    return (bits << 3) | uint64_t(s.m);
}

uint64_t canon(const MiniState& s, int k)
{
    std::vector<int> vperm(s.m), lperm(k);
    std::iota(vperm.begin(), vperm.end(), 0);
    uint64_t best = ~uint64_t{0};
    do {
        std::iota(lperm.begin(), lperm.end(), 0);
        do {
            best = std::min(best, encode(s, vperm, lperm));
        } while (std::next_permutation(lperm.begin(), lperm.end()));
    } while (std::next_permutation(vperm.begin(), vperm.end()));
    return best;
}

bool is_c5(const MiniState& s)
{
    if (s.m != 5)
        return false;
    for (int i = 0; i < 5; ++i)
        if (__builtin_popcount(s.adj[i]) != 2)
            return false;
    // 2-regular on 5 vertices and connected means C5
    int reach = 1, frontier = 1;
    for (int step = 0; step < 5; ++step) {
        int grow = frontier;
        for (int v = 0; v < 5; ++v)
            if (frontier & (1 << v))
                grow |= s.adj[v];
        frontier = grow;
        reach = grow;
    }
    return reach == 31;
}

bool cwd_reaches_c5(int k)
{
    std::vector<MiniState> states;
    std::set<uint64_t> seen;
    auto push = [&](const MiniState& s) {
        uint64_t c = canon(s, k);
        if (seen.insert(c).second)
            states.push_back(s);
    };
    MiniState single;
    single.m = 1;
    single.lab[0] = 0;
    push(single);

    for (size_t i = 0; i < states.size(); ++i) {
        MiniState s = states[i];
        if (is_c5(s))
            return true;
        // join and relabel
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                if (a == b)
                    continue;
                MiniState j = s;
                for (int u = 0; u < s.m; ++u)
                    for (int v = 0; v < s.m; ++v)
                        if (u != v && s.lab[u] == a && s.lab[v] == b) {
                            j.adj[u] |= uint8_t(1 << v);
                            j.adj[v] |= uint8_t(1 << u);
                        }
                push(j);
                MiniState r = s;
                for (int u = 0; u < s.m; ++u)
                    if (r.lab[u] == a)
                        r.lab[u] = uint8_t(b);
                push(r);
            }
        // union with every state that fits (including itself); the two
        // operands carry independent label namespaces, so try every
        // label permutation of the second one
        for (size_t t = 0; t <= i; ++t) {
            MiniState o = states[t]; // push below may reallocate
            if (s.m + o.m > 5)
                continue;
            std::vector<int> lperm(k);
            std::iota(lperm.begin(), lperm.end(), 0);
            do {
                MiniState u;
                u.m = s.m + o.m;
                for (int v = 0; v < s.m; ++v) {
                    u.adj[v] = s.adj[v];
                    u.lab[v] = s.lab[v];
                }
                for (int v = 0; v < o.m; ++v) {
                    u.adj[s.m + v] = uint8_t(o.adj[v] << s.m);
                    u.lab[s.m + v] = uint8_t(lperm[o.lab[v]]);
                }
                push(u);
            } while (std::next_permutation(lperm.begin(), lperm.end()));
        }
    }
    return false;
}

} // namespace

TEST_CASE("minimal clique-width of C5 is exactly 3")
{
    // regression value settled by exhaustive search over expressions;
    // nothing in the library relies on it
    CHECK(!cwd_reaches_c5(2));
    CHECK(cwd_reaches_c5(3));
}
