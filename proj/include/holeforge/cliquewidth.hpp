#ifndef HOLEFORGE_CLIQUEWIDTH_HPP
#define HOLEFORGE_CLIQUEWIDTH_HPP

#include "holeforge/c7_structure.hpp"

#include <array>
#include <map>
#include <set>

namespace holeforge {

// Expression tree over the four build operations: create a labeled
// vertex, disjoint union, join all label-i vertices to all label-j
// vertices (i != j), relabel i -> j. Nodes live in a pool; children are
// referenced by index and the tree is rooted at root().
class CwdExpression {
public:
    enum class Op { Create, Union, Join, Relabel };

    struct Node {
        Op op;
        int a = 0, b = 0;        // create: vertex,label; join: i,j; relabel: from,to
        int left = -1, right = -1;
    };

    int add_create(int vertex, int label);
    int add_union(int left, int right);
    int add_join(int i, int j, int child); // throws std::invalid_argument if i == j
    int add_relabel(int from, int to, int child);
    void set_root(int idx) { root_ = idx; }

    int root() const { return root_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    bool empty() const { return root_ < 0; }

    // stack-machine text form: one op per line
    //   v <id> <label> | u | j <i> <j> | r <i> <j>
    std::string to_text() const;
    static CwdExpression from_text(const std::string& text);

private:
    std::vector<Node> nodes_;
    int root_ = -1;
};

// number of distinct labels appearing anywhere in the expression
int width(const CwdExpression& e);

struct LabeledGraph {
    std::vector<int> ids;    // sorted vertex ids
    std::vector<int> labels; // parallel to ids
    std::set<std::pair<int, int>> edges;

    int label_of(int id) const;
    // same vertex set and edge set as G[subset], identities literal
    bool matches_induced(const Graph& g, const Bits& subset) const;
};

class EvaluationError : public std::runtime_error {
public:
    explicit EvaluationError(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

LabeledGraph evaluate(const CwdExpression& e);

// order of A with cross-neighborhoods into B nested by inclusion; c4
// carries the witness cycle when no such order exists
struct ChainOrderResult {
    std::vector<int> order;
    std::optional<std::array<int, 4>> c4; // cyclic order (a, b, b', a')
    bool ok() const { return !c4.has_value(); }
};

// Requires A, B disjoint cliques. Ties (equal neighborhoods) break by
// vertex id.
ChainOrderResult chain_order(const Graph& g, const Bits& a, const Bits& b);

class ChainOrderFailure : public std::runtime_error {
public:
    explicit ChainOrderFailure(std::array<int, 4> w)
        : std::runtime_error("clique pair is not C4-free")
        , witness(w)
    {
    }
    std::array<int, 4> witness;
};

// Build G[union of P's sets] with one label per set plus one shared
// temporary label; the non-uniform pair, if any, is built by
// interleaving its sets in chain order. Resulting width <= k+1.
// Throws ChainOrderFailure or InvalidPartition.
CwdExpression build_from_near_uniform(
    const Graph& g, const NearUniformPartition& p);

class EvaluationMismatch : public std::runtime_error {
public:
    explicit EvaluationMismatch(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

// Given evaluate(e) = G - S, produce an expression for G: split every
// label class by adjacency trace toward S, then create the vertices of
// S and join them by trace. Width grows to at most
// width(e) * 2^|S| + |S|. Throws EvaluationMismatch.
CwdExpression add_back_vertices(
    const CwdExpression& e, const Graph& g, const Bits& s);

} // namespace holeforge

#endif
