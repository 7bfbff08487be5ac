#include "orcycle/graph_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace orcycle {

std::string to_edge_list_text(const OrientedGraph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.edge_count() << ' '
       << (g.mode() == Mode::oriented ? 'O' : 'D') << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

OrientedGraph parse_edge_list_text(const std::string& text) {
    std::istringstream is(text);
    long long n = -1, m = -1;
    std::string mode_str;
    if (!(is >> n >> m >> mode_str)) throw Error(Errc::bad_params, "bad edge-list header");
    if (n < 0 || m < 0 || (mode_str != "O" && mode_str != "D"))
        throw Error(Errc::bad_params, "bad edge-list header");
    Mode mode = mode_str == "O" ? Mode::oriented : Mode::general_digraph;
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(is >> u >> v)) throw Error(Errc::bad_params, "truncated edge list");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return OrientedGraph::from_edge_list(static_cast<int>(n), edges, mode);
}

OrientedGraph read_edge_list_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::bad_params, "cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return parse_edge_list_text(os.str());
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error(Errc::bad_params, "cannot write " + tmp);
        f << contents;
        f.flush();
        if (!f) throw Error(Errc::bad_params, "write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

std::string to_dot(const OrientedGraph& g) {
    std::ostringstream os;
    os << "digraph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -> " << v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace orcycle
