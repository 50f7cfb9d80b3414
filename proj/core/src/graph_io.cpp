#include "edgeres/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace edgeres {

SimpleGraph read_graph_text(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n) {
                if (n < 0 || n > 64) throw std::invalid_argument("graph text: bad vertex count");
            }
            continue;
        }
        int u, v;
        if (ls >> u >> v) edges.emplace_back(u, v);
    }
    if (n < 0) throw std::invalid_argument("graph text: missing vertex count line");
    return SimpleGraph::from_edges(n, edges);
}

void write_graph_text(std::ostream& out, const SimpleGraph& g) {
    out << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

SimpleGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        nlohmann::json j;
        in >> j;
        return graph_from_json(j);
    }
    return read_graph_text(in);
}

nlohmann::json graph_to_json(const SimpleGraph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto arr = nlohmann::json::array();
    for (auto [u, v] : g.edges()) arr.push_back({u, v});
    j["edges"] = arr;
    return j;
}

SimpleGraph graph_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return SimpleGraph::from_edges(n, edges);
}

}  // namespace edgeres
