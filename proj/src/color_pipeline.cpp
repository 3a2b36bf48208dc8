#include "holeforge/color_pipeline.hpp"

namespace holeforge {

const char* atom_branch_name(AtomBranch b)
{
    switch (b) {
    case AtomBranch::Perfect:
        return "Perfect";
    case AtomBranch::C7Uniform:
        return "C7-uniform";
    case AtomBranch::T8CaseIII:
        return "Theorem8-case-iii";
    case AtomBranch::T8CaseIV:
        return "Theorem8-case-iv";
    case AtomBranch::FallbackExact:
        return "Fallback-exact";
    }
    return "?";
}

namespace {

    Coloring color_join_clique_c5(
        const Graph& atom, const JoinCliqueC5Case& jc)
    {
        Coloring c = Coloring::empty(atom.vertex_count());
        int next = 0;
        for (int v : jc.clique)
            c.color[v] = next++;
        // 3 fresh colors around the cycle: a b a b c
        static const int wheel[5] = {0, 1, 0, 1, 2};
        for (int i = 0; i < 5; ++i)
            c.color[jc.hole.at(i)] = next + wheel[i];
        c.recount();
        return c;
    }

    std::pair<AtomTrace, Coloring> process_atom(
        const Graph& g, const Bits& atom_vertices)
    {
        AtomTrace tr;
        tr.vertices = atom_vertices;
        auto [atom, ids] = induced_subgraph(g, atom_vertices);
        tr.atom = atom;
        tr.original_ids = ids;

        ClassReport rep = class_report(atom);
        tr.member = rep.member;
        tr.c5 = rep.c5_present;
        tr.c7 = rep.c7_present;
        tr.c5_twin = rep.c5_twin_present;

        auto violation = [&](const std::string& detail) {
            return StructureViolation(atom, ids, detail);
        };

        auto color_exact = [&]() {
            auto [k, col] = exact_chromatic(atom);
            tr.colors_used = k;
            return col;
        };

        Coloring col;
        if (!rep.member) {
            tr.branch = AtomBranch::FallbackExact;
            col = color_exact();
        } else if (!rep.c5_present && !rep.c7_present) {
            // perfect within the class: chi must equal omega
            tr.branch = AtomBranch::Perfect;
            col = color_exact();
            tr.omega = max_clique(atom).size;
            if (tr.colors_used != tr.omega)
                throw violation("atom with no C5 and no C7 has chi "
                    + std::to_string(tr.colors_used) + " != omega "
                    + std::to_string(tr.omega));
        } else if (rep.c7_present) {
            tr.branch = AtomBranch::C7Uniform;
            HoleEmbedding hole
                = HoleEmbedding::from_embedding(*rep.c7.witness);
            C7Partition part;
            try {
                part = build_c7_partition(atom, hole);
            } catch (const UnclassifiableVertex& e) {
                throw violation("member atom has an unclassifiable vertex "
                    + std::to_string(e.vertex) + " on its C7");
            }
            AuditReport audit = audit_c7(atom, part);
            if (!audit.all_pass())
                throw violation("member atom fails a C7 structure claim");
            NearUniformPartition nu = c7_uniform_sets(atom, hole);
            if (nu.nonuniform_pair)
                throw violation("C7 whole-graph partition has a mixed pair");
            CwdExpression expr = build_from_near_uniform(atom, nu);
            tr.certificate_ok
                = evaluate(expr).matches_induced(atom, atom.full_set());
            if (!tr.certificate_ok)
                throw violation("C7 expression does not rebuild the atom");
            tr.partition = std::move(nu);
            tr.expression_width = width(expr);
            tr.expression_text = expr.to_text();
            col = color_exact();
        } else if (!rep.c5_twin_present) {
            Theorem8Outcome outcome;
            try {
                outcome = classify_atom_with_c5(atom);
            } catch (const TheoremViolation& e) {
                throw violation(e.detail);
            }
            if (std::holds_alternative<CutsetCase>(outcome))
                throw violation("classifier found a clique cutset "
                                "inside an atom");
            if (std::holds_alternative<C7Case>(outcome))
                throw violation("classifier found a C7 the class report "
                                "missed");
            if (auto* jc = std::get_if<JoinCliqueC5Case>(&outcome)) {
                tr.branch = AtomBranch::T8CaseIV;
                col = color_join_clique_c5(atom, *jc);
                tr.colors_used = col.count;
                if (!verify_coloring(atom, col))
                    throw violation("direct coloring of clique-join-C5 "
                                    "atom is improper");
            } else {
                auto& nc = std::get<NearUniformCase>(outcome);
                tr.branch = AtomBranch::T8CaseIII;
                CwdExpression base
                    = build_from_near_uniform(atom, nc.partition);
                CwdExpression expr
                    = add_back_vertices(base, atom, nc.removed);
                tr.certificate_ok
                    = evaluate(expr).matches_induced(atom, atom.full_set());
                if (!tr.certificate_ok)
                    throw violation("near-uniform certificate does not "
                                    "rebuild the atom");
                tr.partition = nc.partition;
                tr.expression_width = width(expr);
                tr.expression_text = expr.to_text();
                col = color_exact();
            }
            tr.outcome = std::move(outcome);
        } else {
            // C5 present, no C7, with C5-twins: the open case
            tr.branch = AtomBranch::FallbackExact;
            col = color_exact();
        }

        tr.colors_used = col.count;

        // lift the atom coloring onto original ids
        Coloring lifted = Coloring::empty(g.vertex_count());
        for (int i = 0; i < atom.vertex_count(); ++i)
            lifted.color[tr.original_ids[i]] = col.color[i];
        lifted.recount();
        return {std::move(tr), std::move(lifted)};
    }

} // namespace

std::pair<Coloring, StructureTrace> color_in_class(const Graph& g)
{
    DecompTree tree = decompose(g);
    StructureTrace trace;
    std::vector<Coloring> leaf_colorings;
    for (int leaf : tree.leaf_indices()) {
        auto [tr, lifted] = process_atom(g, tree.nodes[leaf].vertices);
        trace.atoms.push_back(std::move(tr));
        leaf_colorings.push_back(std::move(lifted));
    }
    Coloring merged = merge_colorings(g, tree, leaf_colorings);
    return {merged, trace};
}

} // namespace holeforge
