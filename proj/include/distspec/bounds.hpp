#pragma once

#include "distspec/graph.hpp"

namespace distspec {

// Parity constant: 1 for odd n, 2 for even n.
int gamma_n(int n);

// Smaller root of sigma^2 - (n + gamma_n) sigma + gamma_n = 0, the certified
// lower bound on sigma over connected non-transmission-regular graphs of
// order n. Evaluated cancellation-free as
//   2 gamma / (n + gamma + sqrt((n + gamma)^2 - 4 gamma)).
// Requires n >= 3 (no non-transmission-regular graphs exist below that).
double sigma_n(int n);

// Enclosure of sigma(G) = D_max - lambda1, derived from a Perron certificate:
// lo = D_max - lambda_hi, hi = D_max - lambda_lo. Requires a connected graph
// with n >= 2.
struct SigmaEnclosure {
    double lo = 0.0;
    double hi = 0.0;
};

SigmaEnclosure sigma(const Graph& g, double tol = 1e-10);

enum class ConjectureVerdict {
    certified_holds,  // sigma_lo > 1/(n+1)
    inconclusive,     // enclosure straddles the threshold
    not_applicable,   // transmission-regular record
};

enum class TheoremVerdict {
    strict,          // sigma_lo > sigma_n
    equality,        // structurally one of the extremal families
    inconclusive,
    not_applicable,  // transmission-regular record
};

enum class EqualityClass {
    odd_multipartite,
    even_dvdr,
    none,
};

const char* to_string(ConjectureVerdict v);
const char* to_string(TheoremVerdict v);
const char* to_string(EqualityClass c);

// Verdict logic shared by the graph-level checks and the corpus scanner.
ConjectureVerdict conjecture_verdict(const SigmaEnclosure& s, int n);
TheoremVerdict theorem_verdict(const SigmaEnclosure& s, EqualityClass cls, int n);

// Verdict on sigma(G) > 1/(n+1). Transmission-regular input is a DomainError
// (sigma is identically zero there). Never reports a violation: an enclosure
// entirely below the threshold would still come back inconclusive, for exact
// arithmetic to settle.
ConjectureVerdict check_conjecture(const Graph& g, double tol = 1e-10);

// Verdict on sigma(G) >= sigma_n. Structural membership in an equality
// family decides "equality" before any numeric comparison.
TheoremVerdict check_theorem(const Graph& g, double tol = 1e-10);

// Purely combinatorial test for the two equality families, no floating point:
//  - odd n >= 3 and the complement is a perfect matching plus one isolated
//    vertex (so G is K_{1,2,...,2});
//  - even n >= 4 and some vertex of degree n-1 leaves an (n-4)-regular graph
//    when removed.
EqualityClass classify_equality_case(const Graph& g);

// Structural facts that hold for the sigma-minimizing graphs of each order.
// claim1: n * D_max - 2W equals the parity constant gamma_n.
// claim2: the transmissions at the Perron vector's argmax/argmin vertices
//         are strictly inside [D_min, D_max].
// claim3: x_max / x_min matches 1 / (1 - sigma_n) within tol; claim3_count
//         is the number of entries within relative 1e-7 of x_max.
// claim4_count: number of vertices of maximum transmission.
// claim5: D_max = n + gamma_n - 1 and D_min = n - 1.
struct ClaimsReport {
    bool claim1 = false;
    bool claim2 = false;
    bool claim3_ratio_ok = false;
    int claim3_count = 0;
    int claim4_count = 0;
    bool claim5 = false;
    bool diameter2 = false;
    double x_ratio = 0.0;
};

ClaimsReport minimizer_claims_report(const Graph& g, double tol = 1e-6);

}  // namespace distspec
