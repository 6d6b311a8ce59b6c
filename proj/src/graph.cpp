#include "eqaoa/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eqaoa {

Graph::Graph(int num_vertices, std::vector<std::pair<int, int>> edge_list)
    : num_vertices_(num_vertices) {
    if (num_vertices < 0) {
        throw std::invalid_argument("graph: negative vertex count");
    }
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u == v) {
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        }
        if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
            throw std::invalid_argument("graph: edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") out of range for " +
                                        std::to_string(num_vertices) + " vertices");
        }
        edges_.push_back(Edge{std::min(u, v), std::max(u, v)});
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw std::invalid_argument("graph: duplicate edge (" + std::to_string(dup->u) + "," +
                                    std::to_string(dup->v) + ")");
    }
}

int Graph::degree(int v) const {
    int deg = 0;
    for (const Edge& e : edges_) {
        deg += (e.u == v) + (e.v == v);
    }
    return deg;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < num_vertices_; ++v) {
        best = std::max(best, degree(v));
    }
    return best;
}

std::string Graph::to_edge_list() const {
    std::ostringstream os;
    os << "n " << num_vertices_ << "\n";
    for (const Edge& e : edges_) {
        os << e.u << " " << e.v << "\n";
    }
    return os.str();
}

std::vector<EdgePair> adjacent_edge_pairs(const Graph& g) {
    std::vector<EdgePair> pairs;
    const auto& edges = g.edges();
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(edges.size()); ++j) {
            const Edge& a = edges[i];
            const Edge& b = edges[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
                pairs.push_back(EdgePair{i, j});
            }
        }
    }
    return pairs;
}

namespace {

struct BuiltinDef {
    const char* name;
    int n;
    std::vector<std::pair<int, int>> edges;
};

const std::vector<BuiltinDef>& builtin_defs() {
    static const std::vector<BuiltinDef> defs = {
        {"gamma1", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {2, 3}, {3, 4}}},
        {"gamma2", 7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 6}, {2, 6}, {2, 4}}},
        {"gamma3", 6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 4}, {2, 5}, {2, 4}}},
        {"gamma4", 6, {{3, 1}, {3, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 4}, {3, 4}, {2, 4}}},
        {"gamma5", 7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 4}, {3, 4}}},
        {"gamma6", 9,
         {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {0, 8}}},
        {"frakG", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}},
    };
    return defs;
}

}  // namespace

Graph builtin_graph(std::string_view name) {
    for (const auto& def : builtin_defs()) {
        if (name == def.name) {
            return Graph(def.n, def.edges);
        }
    }
    std::string msg = "unknown graph '" + std::string(name) + "'; valid names:";
    for (const auto& def : builtin_defs()) {
        msg += " ";
        msg += def.name;
    }
    throw std::invalid_argument(msg);
}

const std::vector<std::string>& builtin_graph_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& def : builtin_defs()) out.emplace_back(def.name);
        return out;
    }();
    return names;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int declared_n = -1;
    std::vector<std::pair<int, int>> edges;
    int max_label = -1;
    bool first_content_line = true;

    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank line
        if (first_content_line && a == "n") {
            if (!(ls >> b) || (ls >> extra)) fail("expected 'n <count>'");
            try {
                declared_n = std::stoi(b);
            } catch (const std::exception&) {
                fail("bad vertex count '" + b + "'");
            }
            if (declared_n < 0) fail("negative vertex count");
            first_content_line = false;
            continue;
        }
        first_content_line = false;
        if (!(ls >> b) || (ls >> extra)) fail("expected 'u v'");
        int u = 0, v = 0;
        try {
            u = std::stoi(a);
            v = std::stoi(b);
        } catch (const std::exception&) {
            fail("bad vertex label");
        }
        if (u < 0 || v < 0) fail("negative vertex label");
        if (u == v) fail("self-loop at vertex " + std::to_string(u));
        edges.emplace_back(std::min(u, v), std::max(u, v));
        max_label = std::max({max_label, u, v});
    }

    line_no = 0;  // errors below are not line-specific
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    int n = declared_n >= 0 ? declared_n : max_label + 1;
    if (max_label >= n) {
        throw std::invalid_argument("edge list: vertex " + std::to_string(max_label) +
                                    " exceeds declared count " + std::to_string(n));
    }
    return Graph(n, std::move(edges));
}

}  // namespace eqaoa
