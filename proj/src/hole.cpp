#include "holeforge/hole.hpp"

namespace holeforge {

bool HoleEmbedding::verify(const Graph& g) const
{
    int k = length();
    if (k != 5 && k != 7)
        return false;
    for (int i = 0; i < k; ++i) {
        int u = vertices[i];
        if (u < 0 || u >= g.vertex_count())
            return false;
        for (int j = i + 1; j < k; ++j) {
            int v = vertices[j];
            if (u == v)
                return false;
            bool consecutive = (j - i == 1) || (i == 0 && j == k - 1);
            if (g.adjacent(u, v) != consecutive)
                return false;
        }
    }
    return true;
}

HoleEmbedding HoleEmbedding::rotated(int shift) const
{
    int k = length();
    HoleEmbedding out;
    out.vertices.resize(k);
    for (int i = 0; i < k; ++i)
        out.vertices[i] = at(i + shift);
    return out;
}

HoleEmbedding HoleEmbedding::from_embedding(const Embedding& e)
{
    if (e.pattern != Pattern::C5 && e.pattern != Pattern::C7)
        throw std::invalid_argument("hole embedding requires a C5 or C7");
    return HoleEmbedding{e.vertices};
}

} // namespace holeforge
