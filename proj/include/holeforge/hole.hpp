#ifndef HOLEFORGE_HOLE_HPP
#define HOLEFORGE_HOLE_HPP

#include "holeforge/detection.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace holeforge {

// An induced C5 or C7 given as a cyclic vertex tuple. Positions are
// 0-based and all position arithmetic is modulo the length.
struct HoleEmbedding {
    std::vector<int> vertices;

    int length() const { return int(vertices.size()); }
    int at(int pos) const
    {
        int k = length();
        return vertices[((pos % k) + k) % k];
    }

    // consecutive pairs adjacent, non-consecutive pairs not
    bool verify(const Graph& g) const;

    HoleEmbedding rotated(int shift) const;

    static HoleEmbedding from_embedding(const Embedding& e);
};

struct AuditEntry {
    std::string claim; // "a".."o"
    std::string description;
    bool pass = true;
    bool informational = false; // logged only, never a failure
    std::vector<int> witness;   // concrete vertices on fail
    std::string note;
};

struct AuditReport {
    std::vector<AuditEntry> entries;

    bool all_pass() const
    {
        for (const auto& e : entries)
            if (!e.informational && !e.pass)
                return false;
        return true;
    }
};

// A vertex outside the hole whose neighborhood trace on the hole
// matches no legal set: the graph is outside the class, and the
// carried witness is the forbidden structure found by detection.
class UnclassifiableVertex : public std::runtime_error {
public:
    UnclassifiableVertex(int v, std::vector<int> trace_positions, Embedding w)
        : std::runtime_error("vertex " + std::to_string(v)
            + " has no legal hole trace; graph is outside the class")
        , vertex(v)
        , trace(std::move(trace_positions))
        , witness(std::move(w))
    {
    }

    int vertex;
    std::vector<int> trace; // hole positions adjacent to the vertex
    Embedding witness;
};

} // namespace holeforge

#endif
