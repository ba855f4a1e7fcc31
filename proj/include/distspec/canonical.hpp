#pragma once

#include <string>

#include "distspec/graph.hpp"

namespace distspec {

// Canonical byte-string for graphs of order <= 10: the graph6 encoding of
// the labeling whose upper-triangle bit string is minimal among all vertex
// placements with non-decreasing position degrees. Equal strings iff the
// graphs are isomorphic. Orders above 10 raise UnsupportedSizeError.
std::string canonical_form(const Graph& g);

// Canonical-form comparison; graphs of different order are never isomorphic.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace distspec
