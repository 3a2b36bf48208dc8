#include "holeforge/cliquewidth.hpp"

#include <algorithm>
#include <sstream>

namespace holeforge {

int CwdExpression::add_create(int vertex, int label)
{
    nodes_.push_back({Op::Create, vertex, label, -1, -1});
    return int(nodes_.size()) - 1;
}

int CwdExpression::add_union(int left, int right)
{
    nodes_.push_back({Op::Union, 0, 0, left, right});
    return int(nodes_.size()) - 1;
}

int CwdExpression::add_join(int i, int j, int child)
{
    if (i == j)
        throw std::invalid_argument("join requires two distinct labels");
    nodes_.push_back({Op::Join, i, j, child, -1});
    return int(nodes_.size()) - 1;
}

int CwdExpression::add_relabel(int from, int to, int child)
{
    nodes_.push_back({Op::Relabel, from, to, child, -1});
    return int(nodes_.size()) - 1;
}

namespace {

    void write_postfix(
        const CwdExpression& e, int idx, std::ostringstream& out)
    {
        const auto& n = e.nodes()[idx];
        switch (n.op) {
        case CwdExpression::Op::Create:
            out << "v " << n.a << ' ' << n.b << '\n';
            break;
        case CwdExpression::Op::Union:
            write_postfix(e, n.left, out);
            write_postfix(e, n.right, out);
            out << "u\n";
            break;
        case CwdExpression::Op::Join:
            write_postfix(e, n.left, out);
            out << "j " << n.a << ' ' << n.b << '\n';
            break;
        case CwdExpression::Op::Relabel:
            write_postfix(e, n.left, out);
            out << "r " << n.a << ' ' << n.b << '\n';
            break;
        }
    }

} // namespace

std::string CwdExpression::to_text() const
{
    if (root_ < 0)
        return "";
    std::ostringstream out;
    write_postfix(*this, root_, out);
    return out.str();
}

CwdExpression CwdExpression::from_text(const std::string& text)
{
    CwdExpression e;
    std::vector<int> stack;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op))
            continue;
        auto need = [&](int k) {
            if (int(stack.size()) < k)
                throw std::invalid_argument("expression text: stack underflow "
                                            "at line "
                    + std::to_string(lineno));
        };
        if (op == "v") {
            int id, label;
            if (!(ls >> id >> label))
                throw std::invalid_argument(
                    "expression text: bad create at line "
                    + std::to_string(lineno));
            stack.push_back(e.add_create(id, label));
        } else if (op == "u") {
            need(2);
            int r = stack.back();
            stack.pop_back();
            int l = stack.back();
            stack.pop_back();
            stack.push_back(e.add_union(l, r));
        } else if (op == "j") {
            int i, j;
            if (!(ls >> i >> j))
                throw std::invalid_argument("expression text: bad join at "
                                            "line "
                    + std::to_string(lineno));
            need(1);
            int c = stack.back();
            stack.pop_back();
            stack.push_back(e.add_join(i, j, c));
        } else if (op == "r") {
            int i, j;
            if (!(ls >> i >> j))
                throw std::invalid_argument("expression text: bad relabel at "
                                            "line "
                    + std::to_string(lineno));
            need(1);
            int c = stack.back();
            stack.pop_back();
            stack.push_back(e.add_relabel(i, j, c));
        } else {
            throw std::invalid_argument("expression text: unknown op '" + op
                + "' at line " + std::to_string(lineno));
        }
    }
    if (stack.size() != 1)
        throw std::invalid_argument(
            "expression text: does not reduce to a single expression");
    e.set_root(stack.back());
    return e;
}

int width(const CwdExpression& e)
{
    std::set<int> labels;
    for (const auto& n : e.nodes()) {
        switch (n.op) {
        case CwdExpression::Op::Create:
            labels.insert(n.b);
            break;
        case CwdExpression::Op::Join:
        case CwdExpression::Op::Relabel:
            labels.insert(n.a);
            labels.insert(n.b);
            break;
        case CwdExpression::Op::Union:
            break;
        }
    }
    return int(labels.size());
}

int LabeledGraph::label_of(int id) const
{
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id)
        throw std::out_of_range("label_of: unknown vertex id");
    return labels[it - ids.begin()];
}

bool LabeledGraph::matches_induced(const Graph& g, const Bits& subset) const
{
    if (ids != subset.to_vector())
        return false;
    size_t m = 0;
    for (int u : subset)
        for (int v = subset.next(u); v >= 0; v = subset.next(v))
            if (g.adjacent(u, v)) {
                ++m;
                if (!edges.count({u, v}))
                    return false;
            }
    return m == edges.size();
}

namespace {

    struct EvalState {
        std::map<int, int> label_of; // vertex id -> current label
        std::set<std::pair<int, int>> edges;
    };

    EvalState eval_node(const CwdExpression& e, int idx)
    {
        const auto& n = e.nodes()[idx];
        switch (n.op) {
        case CwdExpression::Op::Create: {
            EvalState s;
            s.label_of[n.a] = n.b;
            return s;
        }
        case CwdExpression::Op::Union: {
            EvalState s = eval_node(e, n.left);
            EvalState r = eval_node(e, n.right);
            for (auto& [v, l] : r.label_of) {
                if (s.label_of.count(v))
                    throw EvaluationError("vertex " + std::to_string(v)
                        + " created more than once");
                s.label_of[v] = l;
            }
            s.edges.insert(r.edges.begin(), r.edges.end());
            return s;
        }
        case CwdExpression::Op::Join: {
            if (n.a == n.b)
                throw EvaluationError("join with equal labels");
            EvalState s = eval_node(e, n.left);
            std::vector<int> ci, cj;
            for (auto& [v, l] : s.label_of) {
                if (l == n.a)
                    ci.push_back(v);
                else if (l == n.b)
                    cj.push_back(v);
            }
            for (int u : ci)
                for (int v : cj)
                    s.edges.insert({std::min(u, v), std::max(u, v)});
            return s;
        }
        case CwdExpression::Op::Relabel: {
            EvalState s = eval_node(e, n.left);
            for (auto& [v, l] : s.label_of)
                if (l == n.a)
                    l = n.b;
            return s;
        }
        }
        throw EvaluationError("corrupt expression node");
    }

} // namespace

LabeledGraph evaluate(const CwdExpression& e)
{
    if (e.empty())
        return {};
    EvalState s = eval_node(e, e.root());
    LabeledGraph out;
    for (auto& [v, l] : s.label_of) {
        out.ids.push_back(v);
        out.labels.push_back(l);
    }
    out.edges = std::move(s.edges);
    return out;
}

ChainOrderResult chain_order(const Graph& g, const Bits& a, const Bits& b)
{
    if (a.intersects(b))
        throw std::invalid_argument("chain_order: sets overlap");
    if (!is_clique(g, a) || !is_clique(g, b))
        throw std::invalid_argument("chain_order: sets must be cliques");

    ChainOrderResult res;
    res.order = a.to_vector();
    std::sort(res.order.begin(), res.order.end(), [&](int u, int v) {
        int du = (g.neighbors(u) & b).count();
        int dv = (g.neighbors(v) & b).count();
        return du != dv ? du < dv : u < v;
    });
    for (size_t i = 0; i + 1 < res.order.size(); ++i) {
        int u = res.order[i], v = res.order[i + 1];
        Bits nu = g.neighbors(u) & b;
        Bits nv = g.neighbors(v) & b;
        if (nu.is_subset_of(nv))
            continue;
        // u has a B-neighbor v lacks; |N(u)| <= |N(v)| forces the reverse
        // too, and the four vertices induce a C4
        int bu = (nu - nv).first();
        int bv = (nv - nu).first();
        res.c4 = {u, bu, bv, v};
        res.order.clear();
        return res;
    }
    return res;
}

namespace {

    // clique on label `mine`, newcomers pass through `temp`
    int emit_clique(CwdExpression& e, const Bits& set, int mine, int temp)
    {
        int acc = -1;
        for (int v : set) {
            if (acc < 0) {
                acc = e.add_create(v, mine);
                continue;
            }
            acc = e.add_union(acc, e.add_create(v, temp));
            acc = e.add_join(temp, mine, acc);
            acc = e.add_relabel(temp, mine, acc);
        }
        return acc;
    }

    // the non-uniform pair: cross edges are nested, so insert A in chain
    // order interleaved with the B-vertices that first appear in each
    // cross-neighborhood
    int emit_pair(CwdExpression& e, const Graph& g, const Bits& a,
        const Bits& b, int label_a, int label_b, int temp)
    {
        ChainOrderResult chain = chain_order(g, a, b);
        if (!chain.ok())
            throw ChainOrderFailure(*chain.c4);

        int p = int(chain.order.size());
        // threshold(v) = first position in the chain adjacent to v
        std::vector<std::vector<int>> group(p + 1);
        for (int v : b) {
            int thr = p;
            for (int j = 0; j < p; ++j)
                if (g.adjacent(chain.order[j], v)) {
                    thr = j;
                    break;
                }
            group[thr].push_back(v);
        }

        int acc = -1;
        auto insert = [&](int v, int side, bool join_a) {
            int c = e.add_create(v, temp);
            acc = acc < 0 ? c : e.add_union(acc, c);
            if (join_a)
                acc = e.add_join(temp, label_a, acc);
            acc = e.add_join(temp, label_b, acc);
            acc = e.add_relabel(temp, side, acc);
        };
        for (int j = 0; j < p; ++j) {
            for (int v : group[j])
                insert(v, label_b, false);
            insert(chain.order[j], label_a, true);
        }
        for (int v : group[p])
            insert(v, label_b, false);
        return acc;
    }

} // namespace

CwdExpression build_from_near_uniform(
    const Graph& g, const NearUniformPartition& p)
{
    size_t k = p.sets.size();
    if (k == 0)
        throw InvalidPartition("partition has no sets");
    Bits seen(g.vertex_count());
    for (const auto& set : p.sets) {
        if (set.empty())
            throw InvalidPartition("empty set in partition");
        if (set.intersects(seen))
            throw InvalidPartition("overlapping sets in partition");
        if (!is_clique(g, set))
            throw InvalidPartition("set does not induce a clique");
        seen |= set;
    }
    if (p.matrix.size() != k)
        throw InvalidPartition("join matrix size mismatch");

    CwdExpression e;
    const int temp = 0;
    auto label = [](int set) { return set + 1; };

    int pair_lo = -1, pair_hi = -1;
    if (p.nonuniform_pair) {
        pair_lo = std::min(p.nonuniform_pair->first, p.nonuniform_pair->second);
        pair_hi = std::max(p.nonuniform_pair->first, p.nonuniform_pair->second);
    }

    int acc = -1;
    for (int i = 0; i < int(k); ++i) {
        int sub;
        if (i == pair_lo)
            sub = emit_pair(e, g, p.sets[pair_lo], p.sets[pair_hi],
                label(pair_lo), label(pair_hi), temp);
        else if (i == pair_hi)
            continue;
        else
            sub = emit_clique(e, p.sets[i], label(i), temp);
        acc = acc < 0 ? sub : e.add_union(acc, sub);
    }

    for (int i = 0; i < int(k); ++i)
        for (int j = i + 1; j < int(k); ++j) {
            if (i == pair_lo && j == pair_hi)
                continue;
            if (p.matrix[i][j] == UniformStatus::Join)
                acc = e.add_join(label(i), label(j), acc);
        }

    e.set_root(acc);
    return e;
}

CwdExpression add_back_vertices(
    const CwdExpression& e, const Graph& g, const Bits& s)
{
    if (s.empty())
        return e;

    Bits rest = g.full_set() - s;
    LabeledGraph base = evaluate(e);
    if (!base.matches_induced(g, rest))
        throw EvaluationMismatch(
            "expression does not evaluate to G minus the added vertices");

    std::vector<int> added = s.to_vector();
    auto trace_of = [&](int v) {
        int mask = 0;
        for (size_t i = 0; i < added.size(); ++i)
            if (g.adjacent(v, added[i]))
                mask |= 1 << i;
        return mask;
    };

    // traces actually present among the existing vertices
    std::vector<int> traces;
    for (int v : rest)
        traces.push_back(trace_of(v));
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());

    // refined label (old label, trace) -> fresh integer
    std::map<std::pair<int, int>, int> refined;
    auto ref = [&](int lbl, int trace) {
        auto it = refined.find({lbl, trace});
        if (it != refined.end())
            return it->second;
        int id = int(refined.size());
        refined[{lbl, trace}] = id;
        return id;
    };

    CwdExpression out;
    auto rewrite = [&](auto&& self, int idx) -> int {
        const auto& n = e.nodes()[idx];
        switch (n.op) {
        case CwdExpression::Op::Create:
            return out.add_create(n.a, ref(n.b, trace_of(n.a)));
        case CwdExpression::Op::Union:
            return out.add_union(self(self, n.left), self(self, n.right));
        case CwdExpression::Op::Join: {
            int acc = self(self, n.left);
            for (int t1 : traces)
                for (int t2 : traces)
                    acc = out.add_join(ref(n.a, t1), ref(n.b, t2), acc);
            return acc;
        }
        case CwdExpression::Op::Relabel: {
            int acc = self(self, n.left);
            for (int t : traces)
                acc = out.add_relabel(ref(n.a, t), ref(n.b, t), acc);
            return acc;
        }
        }
        throw EvaluationError("corrupt expression node");
    };

    int acc = rewrite(rewrite, e.root());

    // fresh labels for the added vertices, joined by trace
    int fresh_base = -1; // assigned after the rewrite fixed the refined pool
    fresh_base = int(refined.size());
    for (size_t i = 0; i < added.size(); ++i) {
        int fresh = fresh_base + int(i);
        acc = out.add_union(acc, out.add_create(added[i], fresh));
        for (const auto& [key, lbl] : refined)
            if (key.second & (1 << i))
                acc = out.add_join(fresh, lbl, acc);
        for (size_t j = 0; j < i; ++j)
            if (g.adjacent(added[i], added[j]))
                acc = out.add_join(fresh, fresh_base + int(j), acc);
    }

    out.set_root(acc);
    return out;
}

} // namespace holeforge
