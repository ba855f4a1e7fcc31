#include "distspec/families.hpp"

#include <cmath>

namespace distspec {

Graph complete_odd_multipartite(int n) {
    if (n < 3 || n % 2 == 0)
        throw PreconditionError("complete_odd_multipartite needs odd n >= 3");
    // apex 0, partner pairs (1,2), (3,4), ...
    Graph g = complete_graph(n);
    for (int v = 1; v < n; v += 2) g.remove_edge(v, v + 1);
    return g;
}

Graph dvdr(const Graph& base) {
    const int nb = base.order();
    const int r = base.degree(0);
    for (int v = 1; v < nb; ++v)
        if (base.degree(v) != r)
            throw PreconditionError("dvdr base must be regular");
    if (nb + 1 > Graph::kMaxOrder)
        throw UnsupportedSizeError("dvdr result would exceed the supported order");

    Graph g(nb + 1);
    for (int v = 0; v < nb; ++v) {
        g.add_edge(0, v + 1);
        for (int u = v + 1; u < nb; ++u)
            if (base.adjacent(v, u)) g.add_edge(v + 1, u + 1);
    }
    return g;
}

namespace {

// Partitions of m into parts >= 3, parts non-increasing, emitted in
// descending lexicographic order.
void partitions_min3(int m, int max_part, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(current);
        return;
    }
    for (int p = std::min(m, max_part); p >= 3; --p) {
        if (m - p != 0 && m - p < 3) continue;
        current.push_back(p);
        partitions_min3(m - p, p, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Graph> enumerate_n_minus_4_dvdr(int n) {
    if (n < 4 || n % 2 != 0)
        throw PreconditionError("enumerate_n_minus_4_dvdr needs even n >= 4");

    // (n-4)-regular graphs on n-1 vertices are exactly the complements of
    // 2-regular graphs, i.e. of disjoint unions of cycles with parts >= 3.
    std::vector<std::vector<int>> partitions;
    std::vector<int> current;
    partitions_min3(n - 1, n - 1, current, partitions);

    std::vector<Graph> members;
    members.reserve(partitions.size());
    for (const std::vector<int>& parts : partitions) {
        std::vector<Graph> cycles;
        cycles.reserve(parts.size());
        for (int len : parts) cycles.push_back(cycle_graph(len));
        members.push_back(dvdr(complement(disjoint_union(cycles))));
    }
    return members;
}

double closed_form_lambda1(int n, Family family) {
    switch (family) {
        case Family::odd_multipartite:
            if (n < 3 || n % 2 == 0)
                throw PreconditionError("odd_multipartite closed form needs odd n >= 3");
            return (n - 1 + std::sqrt(static_cast<double>(n - 1) * (n + 3))) / 2.0;
        case Family::dvdr_even:
            if (n < 4 || n % 2 != 0)
                throw PreconditionError("dvdr_even closed form needs even n >= 4");
            return (n + std::sqrt(static_cast<double>(n) * n + 4.0 * n - 4.0)) / 2.0;
    }
    throw PreconditionError("unknown family");
}

}  // namespace distspec
