#pragma once

#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

// Complete multipartite graph K_{1,2,...,2} on odd n >= 3: one singleton
// block (the apex, vertex 0) and (n-1)/2 blocks of size two. Equivalently
// the complement of a perfect matching on vertices 1..n-1 plus the isolated
// apex.
Graph complete_odd_multipartite(int n);

// Join of a new apex (vertex 0) to every vertex of a regular base graph;
// the base keeps its edges on vertices 1..base.order(). Raises
// PreconditionError if the base is not regular.
Graph dvdr(const Graph& base);

// All graphs on even n >= 4 that consist of an apex joined to an
// (n-4)-regular base on n-1 vertices, one per isomorphism class. Bases are
// exactly the complements of disjoint unions of cycles (parts >= 3) covering
// n-1 vertices, so members are indexed by the partitions of n-1 into parts
// >= 3, emitted largest-part-first. For n = 4 the single member is the star
// K_{1,3} (base = complement of a triangle = three isolated vertices).
std::vector<Graph> enumerate_n_minus_4_dvdr(int n);

enum class Family {
    odd_multipartite,  // K_{1,2,...,2}, odd n
    dvdr_even,         // apex over an (n-4)-regular base, even n
};

// Distance spectral radius of the family member(s) of order n:
//   odd:  (n - 1 + sqrt((n-1)(n+3))) / 2
//   even: (n + sqrt(n^2 + 4n - 4)) / 2
// Raises PreconditionError on a parity mismatch or out-of-range n.
double closed_form_lambda1(int n, Family family);

}  // namespace distspec
