#ifndef HOLEFORGE_GENERATE_HPP
#define HOLEFORGE_GENERATE_HPP

#include "holeforge/detection.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace holeforge {

// Sizes for a constructive C7 neighborhood template, 0-based indices.
// Every adjacency between the named sets is forced by the structure
// claims, so sizes determine the graph; seed and density are reserved
// for free choices and currently unused.
struct TemplateSpec {
    std::array<int, 7> x{}, y{}, z{};
    int w = 0;
    uint64_t seed = 0;
    double density = 0.5;

    // the up-front emptiness constraints on Y and Z
    bool valid() const;
    int total_vertices() const;
};

class Unrealizable : public std::runtime_error {
public:
    Unrealizable(TemplateSpec s, Graph g, Embedding w)
        : std::runtime_error("template sizes admit no in-class graph")
        , spec(std::move(s))
        , rejected(std::move(g))
        , witness(std::move(w))
    {
    }
    TemplateSpec spec;
    Graph rejected; // the forced graph that failed the class check
    Embedding witness;
};

// Seeded rejection sampling at edge densities drawn from [0.4, 0.7];
// returns a graph passing class_report.member plus the `require`
// pattern (C5 or C7), or nullopt after max_attempts rejections.
std::optional<Graph> random_in_class(int n, uint64_t seed,
    std::optional<Pattern> require = std::nullopt, int max_attempts = 2000);

// C7 plus the named sets with all forced joins/cojoins; verified
// in-class afterwards (some size combinations are unrealizable).
// Vertices: hole 0..6, then X_1..X_7, Y_1..Y_7, Z_1..Z_7, W blocks.
Graph c7_template(const TemplateSpec& spec);

// All labeled graphs on n <= 7 vertices passing the class filter, in
// increasing edge-mask order; dedup keeps one graph per isomorphism
// class (smallest canonical edge mask).
void enumerate_small(
    int n, const std::function<void(const Graph&)>& emit, bool dedup = false);

} // namespace holeforge

#endif
