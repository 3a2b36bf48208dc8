#include "holeforge/dimacs.hpp"

#include <fstream>
#include <sstream>

namespace holeforge {

Graph parse_dimacs(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int n = -1;
    long declared_m = -1;
    long edge_lines = 0;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c")
            continue;
        if (tag == "p") {
            std::string fmt;
            if (n >= 0)
                throw DimacsError("line " + std::to_string(lineno)
                    + ": duplicate problem line");
            if (!(ls >> fmt >> n >> declared_m) || fmt != "edge" || n < 0
                || declared_m < 0)
                throw DimacsError("line " + std::to_string(lineno)
                    + ": malformed problem line");
        } else if (tag == "e") {
            int u, v;
            if (n < 0)
                throw DimacsError("line " + std::to_string(lineno)
                    + ": edge before problem line");
            if (!(ls >> u >> v))
                throw DimacsError("line " + std::to_string(lineno)
                    + ": malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw DimacsError("line " + std::to_string(lineno)
                    + ": vertex out of range");
            if (u == v)
                throw DimacsError("line " + std::to_string(lineno)
                    + ": self-loop");
            edges.emplace_back(u - 1, v - 1);
            ++edge_lines;
        } else {
            throw DimacsError("line " + std::to_string(lineno)
                + ": unknown line type '" + tag + "'");
        }
    }
    if (n < 0)
        throw DimacsError("missing problem line");
    if (edge_lines != declared_m)
        throw DimacsError("edge count mismatch: declared "
            + std::to_string(declared_m) + ", found "
            + std::to_string(edge_lines));
    return make_graph(n, edges);
}

std::string write_dimacs(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edge_list())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph read_dimacs_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DimacsError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dimacs(buf.str());
}

void write_dimacs_file(const Graph& g, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw DimacsError("cannot write " + path);
    out << write_dimacs(g);
}

} // namespace holeforge
