#include "distspec/canonical.hpp"

#include <algorithm>
#include <array>

#include "distspec/graph6.hpp"

namespace distspec {

namespace {

constexpr int kEnvelope = 10;

// Backtracking minimization of the upper-triangle bit string (column-major,
// the graph6 bit order) over vertex placements with ascending position
// degrees. The whole string fits a single 64-bit word for n <= 10: string
// bit b lives at word bit 63-b, so word comparison is string comparison.
struct CanonicalSearch {
    const Graph& g;
    int n;
    std::vector<int> deg;
    std::vector<int> want;  // degree demanded at each position
    std::array<int, kEnvelope> placed{};
    std::uint64_t used = 0;

    std::uint64_t best = ~std::uint64_t{0};
    std::array<int, kEnvelope> best_placed{};

    explicit CanonicalSearch(const Graph& graph)
        : g(graph), n(graph.order()), deg(graph.degrees()), want(deg) {
        std::sort(want.begin(), want.end());
    }

    // Two unused vertices with identical neighborhoods (ignoring each other)
    // are swapped by an automorphism, so one subtree stands for both.
    bool twins(int u, int v) const {
        const std::uint64_t keep = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
        return (g.row(u) & keep) == (g.row(v) & keep);
    }

    void dfs(int k, std::uint64_t prefix, int prefix_bits) {
        if (k == n) {
            if (prefix < best) {
                best = prefix;
                best_placed = placed;
            }
            return;
        }

        struct Cand {
            std::uint64_t col;
            int v;
        };
        std::array<Cand, kEnvelope> cands;
        int count = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1u) continue;
            if (deg[static_cast<std::size_t>(v)] != want[static_cast<std::size_t>(k)]) continue;
            std::uint64_t col = 0;
            for (int j = 0; j < k; ++j)
                col = (col << 1) | ((g.row(placed[static_cast<std::size_t>(j)]) >> v) & 1u);
            cands[static_cast<std::size_t>(count++)] = {col, v};
        }
        std::sort(cands.begin(), cands.begin() + count,
                  [](const Cand& a, const Cand& b) { return a.col < b.col || (a.col == b.col && a.v < b.v); });

        for (int i = 0; i < count; ++i) {
            const auto [col, v] = cands[static_cast<std::size_t>(i)];

            bool redundant = false;
            for (int t = i - 1; t >= 0 && cands[static_cast<std::size_t>(t)].col == col; --t) {
                if (twins(cands[static_cast<std::size_t>(t)].v, v)) {
                    redundant = true;
                    break;
                }
            }
            if (redundant) continue;

            std::uint64_t next = prefix;
            if (k > 0) next |= col << (64 - prefix_bits - k);
            const int bits = prefix_bits + k;
            if (bits > 0) {
                const std::uint64_t mask = ~std::uint64_t{0} << (64 - bits);
                // candidates come in ascending column order, so the rest
                // of this level cannot beat the incumbent either
                if (next > (best & mask)) break;
            }

            placed[static_cast<std::size_t>(k)] = v;
            used |= std::uint64_t{1} << v;
            dfs(k + 1, next, bits);
            used &= ~(std::uint64_t{1} << v);
        }
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    const int n = g.order();
    if (n > kEnvelope)
        throw UnsupportedSizeError("canonical_form supports n <= 10, got n = " + std::to_string(n));

    CanonicalSearch search(g);
    search.dfs(0, 0, 0);

    Graph relabeled(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(search.best_placed[static_cast<std::size_t>(i)],
                           search.best_placed[static_cast<std::size_t>(j)]))
                relabeled.add_edge(i, j);
    return encode_graph6(relabeled);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    std::vector<int> da = a.degrees();
    std::vector<int> db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace distspec
