#pragma once

#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

// Exact shortest-path distance matrix of a connected graph. Entries are
// integers; the constructor enforces symmetry, zero diagonal, positivity off
// the diagonal and the triangle inequality.
class DistanceMatrix {
public:
    DistanceMatrix(int n, std::vector<int> entries);

    int order() const { return n_; }
    int at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    int max_entry() const;  // the graph diameter
    const std::vector<int>& data() const { return d_; }

    bool operator==(const DistanceMatrix&) const = default;

private:
    int n_;
    std::vector<int> d_;
};

// BFS from every vertex. Disconnected input raises NotConnectedError; there
// is no infinity sentinel.
DistanceMatrix distance_matrix(const Graph& g);

// Row sums of the distance matrix plus their extremes and the Wiener index
// W = (1/2) sum_v D_v.
struct TransmissionProfile {
    std::vector<int> transmissions;
    int d_max = 0;
    int d_min = 0;
    long long wiener = 0;

    bool transmission_regular() const { return d_max == d_min; }
};

TransmissionProfile transmissions(const DistanceMatrix& d);

}  // namespace distspec
