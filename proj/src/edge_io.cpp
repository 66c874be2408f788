#include "phcavd/edge_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace phcavd {

namespace {

bool next_payload_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_payload_line(in, line))
        throw std::invalid_argument("edge list: missing header line");
    long long n = -1, m = -1;
    {
        std::istringstream hs(line);
        if (!(hs >> n >> m) || n < 0 || m < 0)
            throw std::invalid_argument("edge list: bad header, expected 'n m'");
        std::string rest;
        if (hs >> rest) throw std::invalid_argument("edge list: trailing tokens in header");
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_payload_line(in, line))
            throw std::invalid_argument("edge list: fewer edges than header declares");
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v))
            throw std::invalid_argument("edge list: bad edge line '" + line + "'");
        std::string rest;
        if (es >> rest) throw std::invalid_argument("edge list: trailing tokens on edge line");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge list: endpoint out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_payload_line(in, line))
        throw std::invalid_argument("edge list: more edges than header declares");
    return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    write_edge_list(g, out);
    if (!out) throw std::invalid_argument("failed writing '" + path + "'");
}

}  // namespace phcavd
