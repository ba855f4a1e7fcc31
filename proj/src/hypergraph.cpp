#include "distspec/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <set>
#include <sstream>

namespace distspec {

UniformHypergraph::UniformHypergraph(int n, int r, const std::vector<std::vector<int>>& edges)
    : n_(n), r_(r) {
    if (n < 1 || n > Graph::kMaxOrder)
        throw PreconditionError("hypergraph order must be in [1, 64]");
    if (r < 1 || r > n)
        throw PreconditionError("uniformity must be in [1, n]");
    masks_.reserve(edges.size());
    for (const std::vector<int>& e : edges) {
        if (static_cast<int>(e.size()) != r)
            throw PreconditionError("edge has " + std::to_string(e.size()) +
                                    " vertices, expected " + std::to_string(r));
        std::uint64_t mask = 0;
        for (int v : e) {
            if (v < 0 || v >= n)
                throw PreconditionError("edge vertex " + std::to_string(v) + " out of range");
            mask |= std::uint64_t{1} << v;
        }
        if (std::popcount(mask) != r)
            throw PreconditionError("edge vertices must be distinct");
        masks_.push_back(mask);
    }
    std::sort(masks_.begin(), masks_.end());
    if (std::adjacent_find(masks_.begin(), masks_.end()) != masks_.end())
        throw PreconditionError("duplicate edge");
}

std::vector<std::vector<int>> UniformHypergraph::edges() const {
    std::vector<std::vector<int>> out;
    out.reserve(masks_.size());
    for (std::uint64_t mask : masks_) {
        std::vector<int> e;
        e.reserve(static_cast<std::size_t>(r_));
        for (int v = 0; v < n_; ++v)
            if ((mask >> v) & 1u) e.push_back(v);
        out.push_back(std::move(e));
    }
    return out;
}

int UniformHypergraph::degree(int v) const {
    if (v < 0 || v >= n_)
        throw PreconditionError("vertex out of range");
    int count = 0;
    for (std::uint64_t mask : masks_)
        if ((mask >> v) & 1u) ++count;
    return count;
}

Graph shadow(const UniformHypergraph& h) {
    Graph g(h.order());
    for (std::uint64_t mask : h.edge_masks()) {
        for (int u = 0; u < h.order(); ++u) {
            if (!((mask >> u) & 1u)) continue;
            for (int v = u + 1; v < h.order(); ++v)
                if ((mask >> v) & 1u) g.add_edge(u, v);
        }
    }
    return g;
}

DistanceMatrix hypergraph_distance_matrix(const UniformHypergraph& h) {
    return distance_matrix(shadow(h));
}

namespace {

// Assign images in vertex order; an edge can be checked as soon as its
// highest vertex is mapped.
struct IsoSearch {
    int n;
    const std::vector<std::uint64_t>& a_edges;
    std::set<std::uint64_t> b_edges;
    std::vector<int> deg_a, deg_b;
    std::vector<std::vector<std::uint64_t>> completes_at;  // a-edges by max vertex
    std::vector<int> image;
    std::uint64_t used = 0;

    bool dfs(int v) {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1u) continue;
            if (deg_a[static_cast<std::size_t>(v)] != deg_b[static_cast<std::size_t>(w)]) continue;
            image[static_cast<std::size_t>(v)] = w;
            bool ok = true;
            for (std::uint64_t e : completes_at[static_cast<std::size_t>(v)]) {
                std::uint64_t mapped = 0;
                for (int u = 0; u <= v; ++u)
                    if ((e >> u) & 1u) mapped |= std::uint64_t{1} << image[static_cast<std::size_t>(u)];
                if (!b_edges.contains(mapped)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used |= std::uint64_t{1} << w;
            if (dfs(v + 1)) return true;
            used &= ~(std::uint64_t{1} << w);
        }
        return false;
    }
};

}  // namespace

bool is_hypergraph_isomorphic(const UniformHypergraph& a, const UniformHypergraph& b) {
    if (a.order() != b.order() || a.uniformity() != b.uniformity()) return false;
    if (a.order() > 10)
        throw UnsupportedSizeError("is_hypergraph_isomorphic supports n <= 10");
    if (a.edge_count() != b.edge_count()) return false;

    const int n = a.order();
    std::vector<int> da(static_cast<std::size_t>(n)), db(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        da[static_cast<std::size_t>(v)] = a.degree(v);
        db[static_cast<std::size_t>(v)] = b.degree(v);
    }
    std::vector<int> sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;

    IsoSearch search{n,
                     a.edge_masks(),
                     {b.edge_masks().begin(), b.edge_masks().end()},
                     std::move(da),
                     std::move(db),
                     std::vector<std::vector<std::uint64_t>>(static_cast<std::size_t>(n)),
                     std::vector<int>(static_cast<std::size_t>(n), -1)};
    for (std::uint64_t e : a.edge_masks()) {
        const int top = 63 - std::countl_zero(e);
        search.completes_at[static_cast<std::size_t>(top)].push_back(e);
    }
    return search.dfs(0);
}

std::pair<UniformHypergraph, UniformHypergraph> fixture_pair() {
    auto shift = [](std::vector<std::vector<int>> edges) {
        for (std::vector<int>& e : edges)
            for (int& v : e) --v;
        return edges;
    };
    UniformHypergraph h1(7, 3,
                         shift({{1, 2, 6}, {1, 2, 7}, {1, 3, 5}, {1, 3, 7},
                                {1, 4, 5}, {1, 4, 6}, {2, 3, 4}, {5, 6, 7}}));
    UniformHypergraph h2(7, 3,
                         shift({{1, 3, 5}, {1, 4, 6}, {1, 6, 7}, {2, 3, 6},
                                {2, 3, 7}, {2, 4, 5}, {4, 5, 7}}));
    return {h1, h2};
}

UniformHypergraph read_hypergraph(std::istream& in) {
    std::string line;
    long long lineno = 0;
    int n = -1, r = -1;
    std::vector<std::vector<int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream tokens(line);
        if (n < 0) {
            std::string extra;
            if (!(tokens >> n >> r) || (tokens >> extra))
                throw ParseError("line " + std::to_string(lineno) + ": expected header \"n r\"");
            if (n < 1 || r < 1)
                throw ParseError("line " + std::to_string(lineno) + ": header values must be positive");
            continue;
        }
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<int> e;
        int v;
        while (tokens >> v) {
            if (v < 1 || v > n)
                throw ParseError("line " + std::to_string(lineno) + ": vertex label " +
                                 std::to_string(v) + " outside 1.." + std::to_string(n));
            e.push_back(v - 1);
        }
        if (!tokens.eof())
            throw ParseError("line " + std::to_string(lineno) + ": non-numeric token");
        if (static_cast<int>(e.size()) != r)
            throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(r) +
                             " labels, got " + std::to_string(e.size()));
        edges.push_back(std::move(e));
    }
    if (n < 0)
        throw ParseError("missing header line \"n r\"");
    try {
        return UniformHypergraph(n, r, edges);
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("invalid hypergraph: ") + e.what());
    }
}

}  // namespace distspec
