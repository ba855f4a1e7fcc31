#pragma once

#include <vector>

#include "distspec/distance.hpp"

namespace distspec {

// Two-sided enclosure of the distance spectral radius. For the stored
// iterate x, lambda_lo = min_i (Dx)_i / x_i and lambda_hi = max_i (Dx)_i / x_i,
// so lambda_lo <= lambda1(D) <= lambda_hi by Collatz-Wielandt.
struct PerronCertificate {
    double lambda_lo = 0.0;
    double lambda_hi = 0.0;
    std::vector<double> vector;  // strictly positive, unit Euclidean norm
    int iterations = 0;

    double width() const { return lambda_hi - lambda_lo; }
};

// Power iteration on D + I (the shift keeps the matrix primitive), uniform
// start vector, until the Collatz-Wielandt gap is <= tol. Iteration cap is
// 100 * n * ceil(log10(1/tol)); hitting it raises ConvergenceError carrying
// the achieved gap. Requires n >= 2 and tol > 0.
PerronCertificate perron(const DistanceMatrix& d, double tol = 1e-10);

// Residual of the decomposition
//   d_max - x'Dx = sum_u (d_max - D_u) x_u^2 + sum_{u<v} d(u,v) (x_u - x_v)^2,
// an identity for every strictly positive unit vector x. Returns the
// absolute difference of the two sides.
double rayleigh_identity_residual(const DistanceMatrix& d,
                                  const std::vector<double>& x,
                                  int d_max);

// Row-sum averages of a distance matrix over a vertex partition.
// q[a][b] is the mean over u in block a of sum_{v in block b} d(u,v);
// equitable means that inner sum is constant within every block pair.
struct QuotientMatrix {
    int k = 0;
    std::vector<std::vector<int>> blocks;
    std::vector<double> q;  // k*k, row-major
    bool equitable = false;

    double at(int a, int b) const { return q[static_cast<std::size_t>(a) * k + b]; }
};

QuotientMatrix quotient_matrix(const DistanceMatrix& d,
                               const std::vector<std::vector<int>>& partition);

// Larger root of the characteristic polynomial of a 2x2 quotient.
// Raises PreconditionError unless q.k == 2.
double largest_eig_2x2(const QuotientMatrix& q);

}  // namespace distspec
