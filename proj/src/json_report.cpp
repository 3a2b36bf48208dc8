#include "holeforge/json_report.hpp"

namespace holeforge {

using nlohmann::json;

json vertices_json(const std::vector<int>& s)
{
    json a = json::array();
    for (int v : s)
        a.push_back(v + 1);
    return a;
}

json vertices_json(const Bits& s)
{
    return vertices_json(s.to_vector());
}

json to_json(const Embedding& e)
{
    return {{"pattern", pattern_name(e.pattern)},
        {"vertices", vertices_json(e.vertices)}};
}

json to_json(const ClassReport& r)
{
    json patterns;
    auto put = [&](const char* name, const PatternHit& h) {
        json j = {{"present", h.present}};
        if (h.witness)
            j["witness"] = vertices_json(h.witness->vertices);
        patterns[name] = j;
    };
    put("4K1", r.four_k1);
    put("C4", r.c4);
    put("C5", r.c5);
    put("C6", r.c6);
    put("C7", r.c7);
    put("C5-twin", r.c5_twin);
    return {{"patterns", patterns}, {"member", r.member},
        {"c5_present", r.c5_present}, {"c7_present", r.c7_present},
        {"c5_twin_present", r.c5_twin_present}};
}

json to_json(const AuditReport& r)
{
    json claims = json::array();
    for (const auto& e : r.entries) {
        json j = {{"id", e.claim}, {"description", e.description},
            {"pass", e.pass}, {"informational", e.informational}};
        if (!e.pass) {
            std::vector<int> w;
            for (int v : e.witness)
                if (v >= 0)
                    w.push_back(v);
            j["witness"] = vertices_json(w);
            j["note"] = e.note;
        }
        claims.push_back(j);
    }
    return {{"claims", claims}, {"all_pass", r.all_pass()}};
}

json to_json(const HoleEmbedding& h)
{
    return {{"length", h.length()}, {"vertices", vertices_json(h.vertices)}};
}

json to_json(const C7Partition& p)
{
    json x = json::array(), y = json::array(), z = json::array();
    for (int i = 0; i < 7; ++i) {
        x.push_back(vertices_json(p.x[i]));
        y.push_back(vertices_json(p.y[i]));
        z.push_back(vertices_json(p.z[i]));
    }
    return {{"hole", to_json(p.hole)}, {"X", x}, {"Y", y}, {"Z", z},
        {"W", vertices_json(p.w)}};
}

json to_json(const C5Partition& p)
{
    json f = json::array(), t = json::array(), x = json::array();
    for (int i = 0; i < 5; ++i) {
        f.push_back(vertices_json(p.f[i]));
        t.push_back(vertices_json(p.t[i]));
        x.push_back(vertices_json(p.x[i]));
    }
    return {{"hole", to_json(p.hole)}, {"F", f}, {"T", t}, {"X", x},
        {"R", vertices_json(p.r)}, {"W", vertices_json(p.w)}};
}

namespace {

    const char* status_name(UniformStatus s)
    {
        switch (s) {
        case UniformStatus::Join:
            return "join";
        case UniformStatus::Cojoin:
            return "cojoin";
        case UniformStatus::Mixed:
            return "mixed";
        }
        return "?";
    }

} // namespace

json to_json(const NearUniformPartition& p)
{
    json sets = json::array();
    for (size_t i = 0; i < p.sets.size(); ++i) {
        json s = {{"vertices", vertices_json(p.sets[i])}};
        if (i < p.names.size())
            s["name"] = p.names[i];
        sets.push_back(s);
    }
    json matrix = json::array();
    for (size_t i = 0; i < p.sets.size(); ++i)
        for (size_t j = i + 1; j < p.sets.size(); ++j)
            matrix.push_back({{"a", int(i)}, {"b", int(j)},
                {"status", status_name(p.matrix[i][j])}});
    json out = {{"k", int(p.sets.size())}, {"sets", sets},
        {"pairs", matrix}};
    if (p.nonuniform_pair)
        out["nonuniform_pair"]
            = {p.nonuniform_pair->first, p.nonuniform_pair->second};
    return out;
}

namespace {

    json decomp_node_json(const Graph& g, const DecompTree& t, int idx)
    {
        const DecompNode& n = t.nodes[idx];
        json j = {{"vertices", vertices_json(n.vertices)}};
        if (!n.leaf()) {
            j["cutset"] = vertices_json(n.cutset);
            j["children"] = {decomp_node_json(g, t, n.left),
                decomp_node_json(g, t, n.right)};
        } else {
            j["atom"] = true;
        }
        return j;
    }

} // namespace

json to_json(const Graph& g, const DecompTree& t)
{
    json atoms = json::array();
    for (int leaf : t.leaf_indices())
        atoms.push_back(vertices_json(t.nodes[leaf].vertices));
    return {{"tree", decomp_node_json(g, t, t.root)}, {"atoms", atoms},
        {"atom_count", t.atom_count()}};
}

json to_json(const Theorem8Outcome& o)
{
    if (auto* c = std::get_if<CutsetCase>(&o))
        return {{"case", "clique-cutset"},
            {"cutset", vertices_json(c->cutset)},
            {"side1", vertices_json(c->side1)},
            {"side2", vertices_json(c->side2)}};
    if (auto* c = std::get_if<C7Case>(&o))
        return {{"case", "has-c7"}, {"embedding", to_json(c->embedding)}};
    if (auto* c = std::get_if<NearUniformCase>(&o))
        return {{"case", "near-uniform"},
            {"removed", vertices_json(c->removed)},
            {"partition", to_json(c->partition)}, {"hole", to_json(c->hole)},
            {"t3_vertex", c->t3_vertex + 1}};
    const auto& c = std::get<JoinCliqueC5Case>(o);
    return {{"case", "join-clique-c5"}, {"clique", vertices_json(c.clique)},
        {"hole", to_json(c.hole)}};
}

json to_json(const StructureTrace& t)
{
    json atoms = json::array();
    for (const auto& a : t.atoms) {
        json j = {{"vertices", vertices_json(a.vertices)},
            {"branch", atom_branch_name(a.branch)}, {"member", a.member},
            {"c5_present", a.c5}, {"c7_present", a.c7},
            {"c5_twin_present", a.c5_twin}, {"colors_used", a.colors_used}};
        if (a.omega >= 0)
            j["omega"] = a.omega;
        if (a.partition)
            j["partition"] = to_json(*a.partition);
        if (a.expression_text) {
            j["expression"] = *a.expression_text;
            j["expression_width"] = a.expression_width;
            j["certificate_ok"] = a.certificate_ok;
        }
        if (a.outcome)
            j["outcome"] = to_json(*a.outcome);
        // artifacts speak atom-local ids; the map translates them
        j["atom_vertex_map"] = vertices_json(a.original_ids);
        atoms.push_back(j);
    }
    return {{"atoms", atoms}};
}

} // namespace holeforge
