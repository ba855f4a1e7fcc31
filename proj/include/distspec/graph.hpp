#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "distspec/errors.hpp"

namespace distspec {

// Simple undirected graph on vertices 0..n-1, no loops, no multi-edges.
// Adjacency is one 64-bit neighbor mask per vertex, which caps the order
// at 64 and makes BFS/complement/degree cheap bit operations.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    // Neighbor mask of v; bit u set iff u ~ v.
    std::uint64_t row(int v) const;
    int degree(int v) const;
    std::vector<int> degrees() const;
    int edge_count() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<std::uint64_t> rows_;
};

bool is_connected(const Graph& g);
Graph complement(const Graph& g);

// Plain constructors used by the family builders and the test fixtures.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph disjoint_union(const std::vector<Graph>& parts);

}  // namespace distspec
