#include "distspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace distspec {

namespace {

void matvec(const DistanceMatrix& d, const std::vector<double>& x, std::vector<double>& z) {
    const int n = d.order();
    for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int j = 0; j < n; ++j) sum += d.at(i, j) * x[static_cast<std::size_t>(j)];
        z[static_cast<std::size_t>(i)] = sum;
    }
}

}  // namespace

PerronCertificate perron(const DistanceMatrix& d, double tol) {
    const int n = d.order();
    if (n < 2)
        throw UnsupportedSizeError("perron needs n >= 2; a single vertex has no distance spectrum to enclose");
    if (!(tol > 0.0))
        throw PreconditionError("tol must be positive");

    long long cap = 100LL * n * static_cast<long long>(std::ceil(std::log10(1.0 / tol)));
    if (cap < 1) cap = 1;

    // Start from the all-ones vector: the first round of ratios are the
    // exact integer row sums, so transmission-regular matrices converge
    // immediately with a zero-width enclosure.
    std::vector<double> x(static_cast<std::size_t>(n), 1.0);
    std::vector<double> z(static_cast<std::size_t>(n));
    double lo = 0.0;
    double hi = 0.0;
    int iters = 0;
    for (;;) {
        ++iters;
        matvec(d, x, z);
        lo = std::numeric_limits<double>::infinity();
        hi = -lo;
        for (int i = 0; i < n; ++i) {
            const double r = z[static_cast<std::size_t>(i)] / x[static_cast<std::size_t>(i)];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        if (hi - lo <= tol) break;
        if (iters >= cap) {
            char msg[128];
            std::snprintf(msg, sizeof msg,
                          "iteration cap %lld hit with certificate gap %.3e (requested %.3e)",
                          cap, hi - lo, tol);
            throw ConvergenceError(msg, hi - lo);
        }
        // shifted step: x <- normalize((D + I) x)
        double norm2 = 0.0;
        for (int i = 0; i < n; ++i) {
            z[static_cast<std::size_t>(i)] += x[static_cast<std::size_t>(i)];
            norm2 += z[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)];
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)] * inv;
    }

    double norm2 = 0.0;
    for (double v : x) norm2 += v * v;
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : x) v *= inv;

    PerronCertificate cert;
    cert.lambda_lo = lo;
    cert.lambda_hi = hi;
    cert.vector = std::move(x);
    cert.iterations = iters;
    return cert;
}

double rayleigh_identity_residual(const DistanceMatrix& d,
                                  const std::vector<double>& x,
                                  int d_max) {
    const int n = d.order();
    if (x.size() != static_cast<std::size_t>(n))
        throw PreconditionError("vector length does not match the matrix");
    double norm2 = 0.0;
    for (double v : x) {
        if (!(v > 0.0))
            throw PreconditionError("x must be strictly positive");
        norm2 += v * v;
    }
    if (std::abs(norm2 - 1.0) > 1e-9)
        throw PreconditionError("x must have unit Euclidean norm");

    std::vector<double> z(static_cast<std::size_t>(n));
    matvec(d, x, z);
    double quad = 0.0;  // x' D x
    for (int i = 0; i < n; ++i) quad += x[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)];

    double weight_term = 0.0;  // sum_u (d_max - D_u) x_u^2
    double pair_term = 0.0;    // sum_{u<v} d(u,v) (x_u - x_v)^2
    for (int u = 0; u < n; ++u) {
        int row_sum = 0;
        for (int v = 0; v < n; ++v) row_sum += d.at(u, v);
        weight_term += (d_max - row_sum) * x[static_cast<std::size_t>(u)] * x[static_cast<std::size_t>(u)];
        for (int v = u + 1; v < n; ++v) {
            const double diff = x[static_cast<std::size_t>(u)] - x[static_cast<std::size_t>(v)];
            pair_term += d.at(u, v) * diff * diff;
        }
    }
    return std::abs((d_max - quad) - (weight_term + pair_term));
}

QuotientMatrix quotient_matrix(const DistanceMatrix& d,
                               const std::vector<std::vector<int>>& partition) {
    const int n = d.order();
    const int k = static_cast<int>(partition.size());
    if (k == 0)
        throw PreconditionError("partition must have at least one block");

    std::vector<int> block_of(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < k; ++a) {
        if (partition[static_cast<std::size_t>(a)].empty())
            throw PreconditionError("partition blocks must be nonempty");
        for (int v : partition[static_cast<std::size_t>(a)]) {
            if (v < 0 || v >= n)
                throw PreconditionError("partition vertex " + std::to_string(v) + " out of range");
            if (block_of[static_cast<std::size_t>(v)] != -1)
                throw PreconditionError("partition blocks must be disjoint");
            block_of[static_cast<std::size_t>(v)] = a;
        }
    }
    for (int v = 0; v < n; ++v)
        if (block_of[static_cast<std::size_t>(v)] == -1)
            throw PreconditionError("partition must cover every vertex");

    QuotientMatrix out;
    out.k = k;
    out.blocks = partition;
    out.q.assign(static_cast<std::size_t>(k) * k, 0.0);
    out.equitable = true;
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            long long total = 0;
            long long first = -1;
            for (std::size_t ui = 0; ui < partition[static_cast<std::size_t>(a)].size(); ++ui) {
                const int u = partition[static_cast<std::size_t>(a)][ui];
                long long row = 0;
                for (int v : partition[static_cast<std::size_t>(b)]) row += d.at(u, v);
                if (ui == 0)
                    first = row;
                else if (row != first)
                    out.equitable = false;
                total += row;
            }
            out.q[static_cast<std::size_t>(a) * k + b] =
                static_cast<double>(total) / static_cast<double>(partition[static_cast<std::size_t>(a)].size());
        }
    }
    return out;
}

double largest_eig_2x2(const QuotientMatrix& q) {
    if (q.k != 2)
        throw PreconditionError("largest_eig_2x2 needs a 2x2 quotient, got k = " + std::to_string(q.k));
    const double tr = q.at(0, 0) + q.at(1, 1);
    const double det = q.at(0, 0) * q.at(1, 1) - q.at(0, 1) * q.at(1, 0);
    const double disc = std::max(tr * tr - 4.0 * det, 0.0);
    return (tr + std::sqrt(disc)) / 2.0;
}

}  // namespace distspec
