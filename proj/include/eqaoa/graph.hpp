#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eqaoa {

// An edge with normalized endpoints, u < v.
struct Edge {
    int u;
    int v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on dense vertex labels 0..n-1.
/// Edges are normalized to (min,max), sorted, and required to be unique;
/// the edge index doubles as the qudit index for coloring problems, so the
/// order must be deterministic.
class Graph {
public:
    Graph(int num_vertices, std::vector<std::pair<int, int>> edge_list);

    int num_vertices() const { return num_vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    int degree(int v) const;
    int max_degree() const;

    // Text form accepted back by parse_edge_list: "n <count>" then "u v" lines.
    std::string to_edge_list() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int num_vertices_ = 0;
    std::vector<Edge> edges_;
};

// Unordered pair of distinct edge indices sharing a vertex.
struct EdgePair {
    int first_edge;
    int second_edge;
    friend bool operator==(const EdgePair&, const EdgePair&) = default;
};

// All pairs of adjacent edges (the e•f pairs), each listed once with
// first_edge < second_edge.
std::vector<EdgePair> adjacent_edge_pairs(const Graph& g);

// Named instance graphs: gamma1..gamma6 and frakG.
Graph builtin_graph(std::string_view name);
const std::vector<std::string>& builtin_graph_names();

// Parses "u v" lines, optionally preceded by "n <count>"; '#' starts a
// comment. Throws std::invalid_argument with the offending line number.
Graph parse_edge_list(const std::string& text);

}  // namespace eqaoa
