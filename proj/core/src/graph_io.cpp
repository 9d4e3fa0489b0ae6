#include "netsimp/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace netsimp {

Graph load_edge_list(std::istream& in, bool directed) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> index;
    std::vector<Link> links;

    auto intern = [&](std::string&& token) -> NodeId {
        auto it = index.find(token);
        if (it != index.end()) return it->second;
        NodeId id = static_cast<NodeId>(labels.size());
        index.emplace(token, id);
        labels.push_back(std::move(token));
        return id;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;  // blank
        if (line[first] == '#') continue;          // comment
        std::istringstream fields(line);
        std::string u, v, extra;
        fields >> u >> v;
        if (v.empty()) throw ParseError(line_no, "expected two node tokens");
        if (fields >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");
        NodeId ui = intern(std::move(u));
        NodeId vi = intern(std::move(v));
        links.push_back({ui, vi});
    }
    if (links.empty()) throw ParseError(line_no, "no links in input");
    return Graph::build(std::move(labels), std::move(links), directed);
}

Graph load_edge_list_file(const std::string& path, bool directed) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open edge list: " + path);
    return load_edge_list(in, directed);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (const Link& l : g.links())
        out << g.label(l.u) << ' ' << g.label(l.v) << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw GraphError("cannot write edge list: " + path);
    write_edge_list(g, out);
}

}  // namespace netsimp
