#pragma once

// Brute-force reference computations for tests. Deliberately independent of
// the library: adjacency comes from the original 0-based definition
// (1, j) ~ (2, (j + 2^k - 1) mod n/2) and is stored as a dense matrix.

#include <cstdint>
#include <vector>

namespace oracle {

/// Vertices 0..h-1 are (1, j) = u_{j+1}; h..n-1 are (2, j) = v_{j+1}.
struct DenseGraph {
    int n = 0;
    int half = 0;
    std::vector<std::vector<bool>> adj;
};

inline DenseGraph knodel(int delta, int n)
{
    DenseGraph g{n, n / 2, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
    for (int j = 0; j < g.half; ++j)
        for (int k = 0; k < delta; ++k) {
            const int t = (j + (1 << k) - 1) % g.half;
            g.adj[j][g.half + t] = true;
            g.adj[g.half + t][j] = true;
        }
    return g;
}

inline int degree(const DenseGraph& g, int x)
{
    int d = 0;
    for (int y = 0; y < g.n; ++y)
        d += g.adj[x][y] ? 1 : 0;
    return d;
}

inline int common_count(const DenseGraph& g, int a, int b)
{
    int c = 0;
    for (int y = 0; y < g.n; ++y)
        c += (g.adj[a][y] && g.adj[b][y]) ? 1 : 0;
    return c;
}

inline bool dominates(const DenseGraph& g, std::uint32_t subset, bool total)
{
    for (int x = 0; x < g.n; ++x) {
        bool hit = !total && ((subset >> x) & 1u);
        for (int y = 0; y < g.n && !hit; ++y)
            hit = ((subset >> y) & 1u) && g.adj[x][y];
        if (!hit)
            return false;
    }
    return true;
}

/// Minimum (total) dominating set size by scanning all 2^n subsets; n <= 24.
inline int min_domination(const DenseGraph& g, bool total)
{
    int best = g.n;
    for (std::uint32_t s = 0; s < (1u << g.n); ++s) {
        const int size = __builtin_popcount(s);
        if (size < best && dominates(g, s, total))
            best = size;
    }
    return best;
}

} // namespace oracle
