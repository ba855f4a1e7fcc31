#include "distspec/distance.hpp"

#include <algorithm>

namespace distspec {

DistanceMatrix::DistanceMatrix(int n, std::vector<int> entries) : n_(n), d_(std::move(entries)) {
    if (n < 1 || d_.size() != static_cast<std::size_t>(n) * n)
        throw PreconditionError("distance matrix has the wrong shape");
    for (int i = 0; i < n; ++i) {
        if (at(i, i) != 0)
            throw PreconditionError("distance matrix diagonal must be zero");
        for (int j = i + 1; j < n; ++j) {
            if (at(i, j) != at(j, i))
                throw PreconditionError("distance matrix must be symmetric");
            if (at(i, j) < 1)
                throw PreconditionError("off-diagonal distances must be positive");
        }
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (at(i, j) > at(i, k) + at(k, j))
                    throw PreconditionError("triangle inequality violated");
}

int DistanceMatrix::max_entry() const {
    return *std::max_element(d_.begin(), d_.end());
}

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.order();
    std::vector<int> d(static_cast<std::size_t>(n) * n, 0);
    for (int s = 0; s < n; ++s) {
        // BFS by frontier masks; every vertex must be reached.
        std::uint64_t reached = std::uint64_t{1} << s;
        std::uint64_t frontier = reached;
        int level = 0;
        while (frontier != 0) {
            ++level;
            std::uint64_t next = 0;
            for (int v = 0; v < n; ++v)
                if ((frontier >> v) & 1u) next |= g.row(v);
            frontier = next & ~reached;
            reached |= frontier;
            for (int v = 0; v < n; ++v)
                if ((frontier >> v) & 1u) d[static_cast<std::size_t>(s) * n + v] = level;
        }
        const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        if (reached != all)
            throw NotConnectedError("graph is not connected; distances are undefined");
    }
    return DistanceMatrix(n, std::move(d));
}

TransmissionProfile transmissions(const DistanceMatrix& d) {
    const int n = d.order();
    TransmissionProfile t;
    t.transmissions.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        int sum = 0;
        for (int u = 0; u < n; ++u) sum += d.at(v, u);
        t.transmissions[static_cast<std::size_t>(v)] = sum;
        t.wiener += sum;
    }
    t.wiener /= 2;
    auto [lo, hi] = std::minmax_element(t.transmissions.begin(), t.transmissions.end());
    t.d_min = *lo;
    t.d_max = *hi;
    return t;
}

}  // namespace distspec
