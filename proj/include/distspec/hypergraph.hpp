#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "distspec/distance.hpp"
#include "distspec/graph.hpp"

namespace distspec {

// r-uniform hypergraph on vertices 0..n-1. Edges are r-subsets, stored as
// sorted bit masks with no duplicates.
class UniformHypergraph {
public:
    UniformHypergraph(int n, int r, const std::vector<std::vector<int>>& edges);

    int order() const { return n_; }
    int uniformity() const { return r_; }
    int edge_count() const { return static_cast<int>(masks_.size()); }
    const std::vector<std::uint64_t>& edge_masks() const { return masks_; }
    std::vector<std::vector<int>> edges() const;
    int degree(int v) const;  // number of edges containing v

private:
    int n_;
    int r_;
    std::vector<std::uint64_t> masks_;
};

// 2-section: u ~ v iff some edge contains both. Distances in the hypergraph
// are taken to be distances in this graph, so the two share a distance
// matrix.
Graph shadow(const UniformHypergraph& h);
DistanceMatrix hypergraph_distance_matrix(const UniformHypergraph& h);

// Brute-force vertex bijection search with degree pruning; edges are checked
// as soon as all their vertices are mapped. Orders above 10 raise
// UnsupportedSizeError.
bool is_hypergraph_isomorphic(const UniformHypergraph& a, const UniformHypergraph& b);

// Bundled pair of 3-uniform hypergraphs on 7 vertices whose shadows are
// isomorphic (both K_{1,2,2,2}) while the hypergraphs themselves are not:
// distance spectra cannot separate hypergraphs.
std::pair<UniformHypergraph, UniformHypergraph> fixture_pair();

// Fixture file format: header line "n r", then one edge per line as r
// space-separated 1-based vertex labels. Parse errors name the line number.
UniformHypergraph read_hypergraph(std::istream& in);

}  // namespace distspec
