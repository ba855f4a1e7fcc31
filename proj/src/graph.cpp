#include "distspec/graph.hpp"

#include <bit>

namespace distspec {

Graph::Graph(int n) : n_(n) {
    if (n < 1)
        throw PreconditionError("graph order must be at least 1");
    if (n > kMaxOrder)
        throw UnsupportedSizeError("graph order " + std::to_string(n) +
                                   " exceeds the supported maximum of 64");
    rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw PreconditionError("vertex " + std::to_string(v) + " out of range");
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[static_cast<std::size_t>(u)] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw PreconditionError("loops are not allowed");
    rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    rows_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    rows_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
}

std::uint64_t Graph::row(int v) const {
    check_vertex(v);
    return rows_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    return std::popcount(row(v));
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
    return d;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    std::uint64_t reached = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1u) next |= g.row(v);
        frontier = next & ~reached;
        reached |= frontier;
    }
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return reached == all;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw PreconditionError("a cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int total = 0;
    for (const Graph& p : parts) total += p.order();
    Graph g(total);
    int base = 0;
    for (const Graph& p : parts) {
        for (int u = 0; u < p.order(); ++u)
            for (int v = u + 1; v < p.order(); ++v)
                if (p.adjacent(u, v)) g.add_edge(base + u, base + v);
        base += p.order();
    }
    return g;
}

}  // namespace distspec
