#include "holeforge/c7_structure.hpp"

#include <stdexcept>

namespace holeforge {

namespace {

    // first forbidden structure in g; the partition builders call this
    // only when one must exist
    Embedding forbidden_witness(const Graph& g)
    {
        for (Pattern p : {Pattern::FourK1, Pattern::C4, Pattern::C6})
            if (auto e = find_induced(g, p))
                return *e;
        throw std::logic_error(
            "illegal hole trace in a graph with no 4K1/C4/C6");
    }

    int trace_mask(const Graph& g, const HoleEmbedding& h, int v)
    {
        int mask = 0;
        for (int p = 0; p < h.length(); ++p)
            if (g.adjacent(v, h.at(p)))
                mask |= 1 << p;
        return mask;
    }

    std::vector<int> mask_positions(int mask, int k)
    {
        std::vector<int> out;
        for (int p = 0; p < k; ++p)
            if (mask & (1 << p))
                out.push_back(p);
        return out;
    }

    int rot7(std::initializer_list<int> offsets, int i)
    {
        int m = 0;
        for (int d : offsets)
            m |= 1 << ((i + d) % 7);
        return m;
    }

} // namespace

C7Partition build_c7_partition(const Graph& g, const HoleEmbedding& hole)
{
    if (hole.length() != 7 || !hole.verify(g))
        throw std::invalid_argument("build_c7_partition: not an induced C7");

    int n = g.vertex_count();
    C7Partition part{hole, {}, {}, {}, Bits(n)};
    for (auto* sets : {&part.x, &part.y, &part.z})
        sets->fill(Bits(n));

    Bits on_hole(n);
    for (int v : hole.vertices)
        on_hole.set(v);

    for (int v = 0; v < n; ++v) {
        if (on_hole.test(v))
            continue;
        int mask = trace_mask(g, hole, v);
        int bits = __builtin_popcount(mask);
        bool placed = false;
        if (bits == 7) {
            part.w.set(v);
            placed = true;
        } else if (bits == 3) {
            for (int i = 0; i < 7 && !placed; ++i) {
                if (mask == rot7({0, 1, 2}, i)) {
                    part.x[i].set(v);
                    placed = true;
                } else if (mask == rot7({0, 1, 4}, i)) {
                    part.y[i].set(v);
                    placed = true;
                }
            }
        } else if (bits == 5) {
            for (int i = 0; i < 7 && !placed; ++i)
                if (mask == rot7({0, 1, 2, 3, 4}, i)) {
                    part.z[i].set(v);
                    placed = true;
                }
        }
        if (!placed)
            throw UnclassifiableVertex(
                v, mask_positions(mask, 7), forbidden_witness(g));
    }
    return part;
}

namespace {

    struct Auditor {
        const Graph& g;
        AuditReport report;

        void relation(const std::string& claim, const std::string& desc,
            const Bits& a, const Bits& b, UniformStatus want,
            const std::string& note)
        {
            AuditEntry* e = entry(claim, desc);
            if (!e->pass || a.empty() || b.empty())
                return;
            for (int u : a)
                for (int v : b) {
                    bool adj = g.adjacent(u, v);
                    if ((want == UniformStatus::Join && !adj)
                        || (want == UniformStatus::Cojoin && adj)) {
                        e->pass = false;
                        e->witness = {u, v};
                        e->note = note
                            + (want == UniformStatus::Join ? " missing edge"
                                                           : " stray edge");
                        return;
                    }
                }
        }

        void clique(const std::string& claim, const std::string& desc,
            const Bits& s, const std::string& note)
        {
            AuditEntry* e = entry(claim, desc);
            if (!e->pass)
                return;
            for (int u : s)
                for (int v = s.next(u); v >= 0; v = s.next(v))
                    if (!g.adjacent(u, v)) {
                        e->pass = false;
                        e->witness = {u, v};
                        e->note = note + " not a clique";
                        return;
                    }
        }

        void require(const std::string& claim, const std::string& desc,
            bool ok, std::vector<int> witness, const std::string& note)
        {
            AuditEntry* e = entry(claim, desc);
            if (!e->pass || ok)
                return;
            e->pass = false;
            e->witness = std::move(witness);
            e->note = note;
        }

        void info(const std::string& claim, const std::string& desc, bool ok,
            const std::string& note)
        {
            AuditEntry* e = entry(claim, desc);
            e->informational = true;
            if (!ok && e->pass) {
                e->pass = false;
                e->note = note;
            }
        }

        AuditEntry* entry(const std::string& claim, const std::string& desc)
        {
            for (auto& e : report.entries)
                if (e.claim == claim)
                    return &e;
            report.entries.push_back({claim, desc, true, false, {}, {}});
            return &report.entries.back();
        }
    };

} // namespace

AuditReport audit_c7(const Graph& g, const C7Partition& p)
{
    Auditor a{g, {}};
    auto nm = [](const char* s, int i) {
        return std::string(s) + std::to_string(i + 1);
    };

    // stable entry order
    a.entry("a", "each set is a clique");
    a.entry("b", "X_i join X_{i+1} and X_{i+6}");
    a.entry("c", "X_i cojoin X_{i+2},X_{i+3},X_{i+4},X_{i+5}");
    a.entry("d", "X_i join Y_i,Y_{i+1},Y_{i+4}");
    a.entry("e", "X_i cojoin Y_{i+2},Y_{i+3},Y_{i+5},Y_{i+6}");
    a.entry("f", "X_i join Z_i,Z_{i+1},Z_{i+4},Z_{i+5},Z_{i+6}");
    a.entry("g", "X_i cojoin Z_{i+2},Z_{i+3}");
    a.entry("h", "X_i join W");
    a.entry("i",
        "Y_i nonempty forces Y_{i+1},Y_{i+2},Y_{i+5},Y_{i+6} empty and not "
        "both Y_{i+3},Y_{i+4}");
    a.entry("j", "Y_i join Y_{i+3} and Y_{i+4}");
    a.entry("k", "Y_i nonempty forces Z_{i+5},Z_{i+6} empty");
    a.entry("l", "Y_i join W,Z_i,Z_{i+1},Z_{i+3},Z_{i+4}");
    a.entry("m", "Y_i cojoin Z_{i+2}");
    a.entry("n", "Z_i nonempty forces Z_{i+2},Z_{i+5} empty");
    a.entry("o", "Z_i join W,Z_{i+1},Z_{i+3},Z_{i+4},Z_{i+6}");

    for (int i = 0; i < 7; ++i) {
        a.clique("a", "each set is a clique", p.x[i], nm("X", i));
        a.clique("a", "each set is a clique", p.y[i], nm("Y", i));
        a.clique("a", "each set is a clique", p.z[i], nm("Z", i));
    }
    a.clique("a", "each set is a clique", p.w, "W");

    for (int i = 0; i < 7; ++i) {
        auto X = [&](int d) -> const Bits& { return p.x[(i + d) % 7]; };
        auto Y = [&](int d) -> const Bits& { return p.y[(i + d) % 7]; };
        auto Z = [&](int d) -> const Bits& { return p.z[(i + d) % 7]; };

        // (b) X_i (1) X_{i+1}, X_{i+6}
        for (int d : {1, 6})
            a.relation("b", "X_i join X_{i+1} and X_{i+6}", X(0), X(d),
                UniformStatus::Join, nm("X", i) + "/" + nm("X", (i + d) % 7));
        // (c) X_i (0) X_{i+2..i+5}
        for (int d : {2, 3, 4, 5})
            a.relation("c", "X_i cojoin X_{i+2},X_{i+3},X_{i+4},X_{i+5}", X(0),
                X(d), UniformStatus::Cojoin,
                nm("X", i) + "/" + nm("X", (i + d) % 7));
        // (d) X_i (1) Y_i, Y_{i+1}, Y_{i+4}
        for (int d : {0, 1, 4})
            a.relation("d", "X_i join Y_i,Y_{i+1},Y_{i+4}", X(0), Y(d),
                UniformStatus::Join, nm("X", i) + "/" + nm("Y", (i + d) % 7));
        // (e) X_i (0) Y_{i+2}, Y_{i+3}, Y_{i+5}, Y_{i+6}
        for (int d : {2, 3, 5, 6})
            a.relation("e", "X_i cojoin Y_{i+2},Y_{i+3},Y_{i+5},Y_{i+6}", X(0),
                Y(d), UniformStatus::Cojoin,
                nm("X", i) + "/" + nm("Y", (i + d) % 7));
        // (f) X_i (1) Z_i, Z_{i+1}, Z_{i+4}, Z_{i+5}, Z_{i+6}
        for (int d : {0, 1, 4, 5, 6})
            a.relation("f", "X_i join Z_i,Z_{i+1},Z_{i+4},Z_{i+5},Z_{i+6}",
                X(0), Z(d), UniformStatus::Join,
                nm("X", i) + "/" + nm("Z", (i + d) % 7));
        // (g) X_i (0) Z_{i+2}, Z_{i+3}
        for (int d : {2, 3})
            a.relation("g", "X_i cojoin Z_{i+2},Z_{i+3}", X(0), Z(d),
                UniformStatus::Cojoin,
                nm("X", i) + "/" + nm("Z", (i + d) % 7));
        // (h) X_i (1) W
        a.relation("h", "X_i join W", X(0), p.w, UniformStatus::Join,
            nm("X", i) + "/W");

        // (i) emptiness cascade for Y
        if (!Y(0).empty()) {
            for (int d : {1, 2, 5, 6})
                a.require("i",
                    "Y_i nonempty forces Y_{i+1},Y_{i+2},Y_{i+5},Y_{i+6} "
                    "empty and not both Y_{i+3},Y_{i+4}",
                    Y(d).empty(), {Y(0).first(), Y(d).first()},
                    nm("Y", i) + " and " + nm("Y", (i + d) % 7)
                        + " both nonempty");
            a.require("i",
                "Y_i nonempty forces Y_{i+1},Y_{i+2},Y_{i+5},Y_{i+6} empty "
                "and not both Y_{i+3},Y_{i+4}",
                Y(3).empty() || Y(4).empty(),
                {Y(0).first(), !Y(3).empty() ? Y(3).first() : -1,
                    !Y(4).empty() ? Y(4).first() : -1},
                nm("Y", (i + 3) % 7) + " and " + nm("Y", (i + 4) % 7)
                    + " both nonempty");
            // the paper also claims one of Y_{i+3}, Y_{i+4} must be
            // nonempty, but proves only "not both"; log, never assert
            a.info("i-exists",
                "informational: Y_i nonempty suggests Y_{i+3} or Y_{i+4} "
                "nonempty (unproven in source)",
                !Y(3).empty() || !Y(4).empty(),
                nm("Y", i) + " nonempty with Y_{i+3} and Y_{i+4} both empty");
        }
        // (j) Y_i (1) Y_{i+3} u Y_{i+4}
        for (int d : {3, 4})
            a.relation("j", "Y_i join Y_{i+3} and Y_{i+4}", Y(0), Y(d),
                UniformStatus::Join, nm("Y", i) + "/" + nm("Y", (i + d) % 7));
        // (k) Y_i nonempty forces Z_{i+5} = Z_{i+6} = empty
        if (!Y(0).empty())
            for (int d : {5, 6})
                a.require("k", "Y_i nonempty forces Z_{i+5},Z_{i+6} empty",
                    Z(d).empty(), {Y(0).first(), Z(d).first()},
                    nm("Y", i) + " nonempty with " + nm("Z", (i + d) % 7)
                        + " nonempty");
        // (l) Y_i (1) W u Z_i u Z_{i+1} u Z_{i+3} u Z_{i+4}
        a.relation("l", "Y_i join W,Z_i,Z_{i+1},Z_{i+3},Z_{i+4}", Y(0), p.w,
            UniformStatus::Join, nm("Y", i) + "/W");
        for (int d : {0, 1, 3, 4})
            a.relation("l", "Y_i join W,Z_i,Z_{i+1},Z_{i+3},Z_{i+4}", Y(0),
                Z(d), UniformStatus::Join,
                nm("Y", i) + "/" + nm("Z", (i + d) % 7));
        // (m) Y_i (0) Z_{i+2}
        a.relation("m", "Y_i cojoin Z_{i+2}", Y(0), Z(2),
            UniformStatus::Cojoin, nm("Y", i) + "/" + nm("Z", (i + 2) % 7));
        // (n) Z_i nonempty forces Z_{i+2} = Z_{i+5} = empty
        if (!Z(0).empty())
            for (int d : {2, 5})
                a.require("n", "Z_i nonempty forces Z_{i+2},Z_{i+5} empty",
                    Z(d).empty(), {Z(0).first(), Z(d).first()},
                    nm("Z", i) + " and " + nm("Z", (i + d) % 7)
                        + " both nonempty");
        // (o) Z_i (1) W u Z_{i+1} u Z_{i+3} u Z_{i+4} u Z_{i+6}
        a.relation("o", "Z_i join W,Z_{i+1},Z_{i+3},Z_{i+4},Z_{i+6}", Z(0),
            p.w, UniformStatus::Join, nm("Z", i) + "/W");
        for (int d : {1, 3, 4, 6})
            a.relation("o", "Z_i join W,Z_{i+1},Z_{i+3},Z_{i+4},Z_{i+6}", Z(0),
                Z(d), UniformStatus::Join,
                nm("Z", i) + "/" + nm("Z", (i + d) % 7));
    }

    // global count consequences of (i) and (n)
    int ny = 0, nz = 0;
    for (int i = 0; i < 7; ++i) {
        ny += !p.y[i].empty();
        nz += !p.z[i].empty();
    }
    a.require("i",
        "Y_i nonempty forces Y_{i+1},Y_{i+2},Y_{i+5},Y_{i+6} empty and not "
        "both Y_{i+3},Y_{i+4}",
        ny <= 2, {}, "more than two nonempty Y sets");
    a.require("n", "Z_i nonempty forces Z_{i+2},Z_{i+5} empty", nz <= 3, {},
        "more than three nonempty Z sets");

    return a.report;
}

NearUniformPartition make_near_uniform(
    const Graph& g, std::vector<Bits> sets, std::vector<std::string> names)
{
    NearUniformPartition p;
    Bits seen(g.vertex_count());
    for (size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].empty())
            throw InvalidPartition("empty set in partition");
        if (sets[i].intersects(seen))
            throw InvalidPartition("overlapping sets in partition");
        if (!is_clique(g, sets[i]))
            throw InvalidPartition("set " + std::to_string(i)
                + " does not induce a clique");
        seen |= sets[i];
    }
    size_t k = sets.size();
    p.sets = std::move(sets);
    p.names = std::move(names);
    p.matrix.assign(k, std::vector<UniformStatus>(k, UniformStatus::Cojoin));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            UniformStatus s = are_joined(g, p.sets[i], p.sets[j]);
            p.matrix[i][j] = p.matrix[j][i] = s;
            if (s == UniformStatus::Mixed) {
                if (p.nonuniform_pair)
                    throw InvalidPartition(
                        "more than one non-uniform pair in partition");
                p.nonuniform_pair = {int(i), int(j)};
            }
        }
    return p;
}

NearUniformPartition c7_uniform_sets(const Graph& g, const HoleEmbedding& hole)
{
    C7Partition part = build_c7_partition(g, hole);

    std::vector<Bits> sets;
    std::vector<std::string> names;
    auto push = [&](const Bits& s, std::string name) {
        if (!s.empty()) {
            sets.push_back(s);
            names.push_back(std::move(name));
        }
    };
    for (int i = 0; i < 7; ++i)
        push(part.x[i], "X" + std::to_string(i + 1));
    for (int i = 0; i < 7; ++i)
        push(part.y[i], "Y" + std::to_string(i + 1));
    for (int i = 0; i < 7; ++i)
        push(part.z[i], "Z" + std::to_string(i + 1));
    push(part.w, "W");
    for (int i = 0; i < 7; ++i)
        push(Bits::of(g.vertex_count(), {hole.at(i)}),
            "hole" + std::to_string(i + 1));

    return make_near_uniform(g, std::move(sets), std::move(names));
}

} // namespace holeforge
