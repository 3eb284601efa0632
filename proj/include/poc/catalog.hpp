#pragma once

// Instance families: all graphs on n vertices up to isomorphism, and seeded
// random weighted graphs.

#include <poc/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace poc {

namespace detail {

    inline auto pair_index(int n) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> idx(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
        int k = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                idx[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = idx[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = k++;
        return idx;
    }

    inline auto graph_from_mask(int n, std::uint32_t mask) -> Graph
    {
        std::vector<std::pair<Vertex, Vertex>> e;
        int k = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b, ++k)
                if (mask >> k & 1)
                    e.emplace_back(a, b);
        return Graph(n, e);
    }

}

/// One representative per isomorphism class of graphs on n vertices (n <= 7):
/// the edge mask that is minimal over all vertex permutations.
inline auto graphs_up_to_isomorphism(int n) -> std::vector<Graph>
{
    if (n < 0 || n > 7)
        throw PreconditionError("isomorphism catalogue supports 0 <= n <= 7");
    const int pairs = n * (n - 1) / 2;
    const auto idx = detail::pair_index(n);

    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    // image[k][bit] = position of edge bit under permutation k
    std::vector<std::vector<int>> image;
    for (const auto & perm : perms) {
        std::vector<int> row;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                row.push_back(idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])][static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])]);
        image.push_back(std::move(row));
    }

    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
        bool minimal = true;
        for (const auto & row : image) {
            std::uint32_t mapped = 0;
            for (int k = 0; k < pairs; ++k)
                if (mask >> k & 1)
                    mapped |= std::uint32_t{1} << row[static_cast<std::size_t>(k)];
            if (mapped < mask) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            out.push_back(detail::graph_from_mask(n, mask));
    }
    return out;
}

/// Deterministic generator built on raw mt19937_64 output only, so a seed
/// means the same stream on every platform.
class InstanceRng
{
public:
    explicit InstanceRng(std::uint64_t seed) :
        _engine(seed)
    {
    }

    auto uniform(int lo, int hi) -> int
    {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<int>(_engine() % span);
    }

    auto chance(double p) -> bool
    {
        return static_cast<double>(_engine() >> 11) * 0x1.0p-53 < p;
    }

private:
    std::mt19937_64 _engine;
};

inline auto random_graph(int n, double p, InstanceRng & rng) -> Graph
{
    if (n < 0 || p < 0.0 || p > 1.0)
        throw PreconditionError("random graph needs n >= 0 and 0 <= p <= 1");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.chance(p))
                e.emplace_back(a, b);
    return Graph(n, e);
}

/// G(n,p) with weights uniform in 1..t.
inline auto random_weighted_graph(int n, double p, int t, InstanceRng & rng) -> WeightedGraph
{
    if (t < 1)
        throw PreconditionError("random weights need t >= 1");
    auto g = random_graph(n, p, rng);
    std::vector<int> w;
    for (int v = 0; v < n; ++v)
        w.push_back(rng.uniform(1, t));
    return {std::move(g), std::move(w)};
}

}
