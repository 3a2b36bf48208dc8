#ifndef HOLEFORGE_C5_STRUCTURE_HPP
#define HOLEFORGE_C5_STRUCTURE_HPP

#include "holeforge/c7_structure.hpp"

#include <variant>

namespace holeforge {

// Neighborhood partition of V(G) - C5, indices 0-based mod 5:
//   f[i]: 1-vertices adjacent to position i
//   t[i]: 2-vertices adjacent to positions {i, i+1}
//   x[i]: 3-vertices adjacent to positions {i, i+1, i+2}
//   r:    0-vertices
//   w:    5-vertices
struct C5Partition {
    HoleEmbedding hole;
    std::array<Bits, 5> f, t, x;
    Bits r, w;
};

C5Partition build_c5_partition(const Graph& g, const HoleEmbedding& hole);

// Claims (a)..(i). Deliberately silent on F_i versus X_i, X_{i+3},
// X_{i+4} (may be mixed) and on W versus everything else.
AuditReport audit_c5(const Graph& g, const C5Partition& p);

// Outcomes of the structure trichotomy for (4K1, C4, C6, C5-twin)-free
// graphs containing a C5, in the order the classifier tries them.
struct CutsetCase {
    Bits cutset, side1, side2; // side1 u side2 = V, side1 n side2 = cutset
};
struct C7Case {
    HoleEmbedding embedding;
};
struct NearUniformCase {
    Bits removed; // hole + the single T_3 vertex, |removed| = 6
    NearUniformPartition partition; // {W, F_1} on G - removed
    HoleEmbedding hole;
    int t3_vertex;
};
struct JoinCliqueC5Case {
    Bits clique; // may be empty; clique join hole covers V(G)
    HoleEmbedding hole;
};
using Theorem8Outcome
    = std::variant<CutsetCase, C7Case, NearUniformCase, JoinCliqueC5Case>;

// A graph meeting the classifier's precondition for which no case of
// the trichotomy applies: a counterexample candidate.
class TheoremViolation : public std::runtime_error {
public:
    TheoremViolation(Graph g, const std::string& detail)
        : std::runtime_error("structure theorem violated: " + detail)
        , graph(std::move(g))
        , detail(detail)
    {
    }
    Graph graph;
    std::string detail;
};

class PreconditionViolation : public std::runtime_error {
public:
    PreconditionViolation(const std::string& what, std::optional<Embedding> w)
        : std::runtime_error("precondition violated: " + what)
        , witness(std::move(w))
    {
    }
    std::optional<Embedding> witness;
};

// Requires g (4K1, C4, C6, C5-twin)-free with a C5. Tries, in order:
// (i) clique cutset, (ii) C7, (iv) join of a clique and the C5,
// (iii) near-uniform construction after removing hole + T_3.
Theorem8Outcome classify_atom_with_c5(const Graph& g);

} // namespace holeforge

#endif
