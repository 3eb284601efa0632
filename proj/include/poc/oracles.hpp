#pragma once

// Exact computations by exhaustive or branch-and-bound search. These are
// deliberately independent of one another: chi_poc_exact never looks at
// orientations and ell_prime_gw never looks at colorings.

#include <poc/chromatic.hpp>
#include <poc/graph.hpp>

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace poc {

/// Search caps. Exceeding one raises CapExceeded, never approximates.
struct Caps
{
    int longest_path = 20;     // n for longest_path_exact
    int chi_poc = 12;          // n for chi_poc_exact
    int ell_prime_edges = 24;  // equal-weight edges for ell_prime_gw
    int f = 8;                 // n for f_exact
    int chi_poc_t = 8;         // n for chi_poc_t
    int enumerate_pocs = 10;   // n for enumerate_pocs
    long mocs = 100000;        // MOCs decompositions for enumerate_mocs

    /// Applies a comma-separated `name=value` list on top of `*this`.
    auto with_overrides(const std::string & list) const -> Caps
    {
        Caps c = *this;
        std::istringstream in(list);
        for (std::string item; std::getline(in, item, ',');) {
            if (item.empty())
                continue;
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw PreconditionError("cap override '" + item + "' is not name=value");
            auto name = item.substr(0, eq);
            long value = 0;
            try {
                value = std::stol(item.substr(eq + 1));
            }
            catch (const std::exception &) {
                throw PreconditionError("cap override '" + item + "' has a non-integer value");
            }
            if (value < 0)
                throw PreconditionError("cap override '" + item + "' is negative");
            if (name == "longest_path")
                c.longest_path = static_cast<int>(value);
            else if (name == "chi_poc")
                c.chi_poc = static_cast<int>(value);
            else if (name == "ell_prime")
                c.ell_prime_edges = static_cast<int>(value);
            else if (name == "f")
                c.f = static_cast<int>(value);
            else if (name == "chi_poc_t")
                c.chi_poc_t = static_cast<int>(value);
            else if (name == "enumerate_pocs")
                c.enumerate_pocs = static_cast<int>(value);
            else if (name == "mocs")
                c.mocs = value;
            else
                throw PreconditionError("unknown cap '" + name + "'");
        }
        return c;
    }

    /// Defaults overridden by the POC_CAPS environment variable, if set.
    static auto from_env() -> Caps
    {
        const char * env = std::getenv("POC_CAPS");
        return env ? Caps{}.with_overrides(env) : Caps{};
    }
};

/// Ordered partition of the vertices into weight classes; block i (1-based)
/// is the class of weight i.
class WeakOrdering
{
public:
    WeakOrdering(std::vector<int> block_of) :
        _block_of(std::move(block_of))
    {
        int s = 0;
        for (int b : _block_of)
            s = std::max(s, b);
        std::vector<bool> hit(static_cast<std::size_t>(s) + 1, false);
        for (int b : _block_of) {
            if (b < 1)
                throw PreconditionError("weak ordering blocks are numbered from 1");
            hit[static_cast<std::size_t>(b)] = true;
        }
        for (int b = 1; b <= s; ++b)
            if (! hit[static_cast<std::size_t>(b)])
                throw PreconditionError("weak ordering has an empty block");
        _blocks = s;
    }

    auto block_count() const -> int { return _blocks; }
    auto weights() const -> const std::vector<int> & { return _block_of; }

    auto blocks() const -> std::vector<std::vector<Vertex>>
    {
        std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(_blocks));
        for (std::size_t v = 0; v < _block_of.size(); ++v)
            out[static_cast<std::size_t>(_block_of[v] - 1)].push_back(static_cast<Vertex>(v));
        return out;
    }

private:
    std::vector<int> _block_of;
    int _blocks = 0;
};

/// Calls `fn(weights)` for every weak ordering of n vertices whose block count
/// lies in [min_blocks, max_blocks]; `weights` is the 1-based block per vertex.
/// Blocks ascending, then lexicographic.
template <typename Fn>
void for_each_weak_ordering(int n, int min_blocks, int max_blocks, Fn && fn)
{
    if (n == 0) {
        if (min_blocks <= 0)
            fn(std::vector<int>{});
        return;
    }
    std::vector<int> block_of(static_cast<std::size_t>(n), 0);
    for (int s = std::max(1, min_blocks); s <= std::min(n, max_blocks); ++s) {
        std::vector<int> count(static_cast<std::size_t>(s) + 1, 0);
        int empty = s;
        // returns false to stop early
        std::function<bool(int)> rec = [&](int v) -> bool {
            if (v == n)
                return fn(static_cast<const std::vector<int> &>(block_of)) != false;
            for (int b = 1; b <= s; ++b) {
                bool fresh = count[static_cast<std::size_t>(b)] == 0;
                if (n - v - 1 < empty - (fresh ? 1 : 0))
                    continue;
                block_of[static_cast<std::size_t>(v)] = b;
                ++count[static_cast<std::size_t>(b)];
                if (fresh)
                    --empty;
                bool go = rec(v + 1);
                --count[static_cast<std::size_t>(b)];
                if (fresh)
                    ++empty;
                if (! go)
                    return false;
            }
            return true;
        };
        if (! rec(0))
            return;
    }
}

inline auto all_weak_orderings(int n, int max_blocks) -> std::vector<std::vector<int>>
{
    std::vector<std::vector<int>> out;
    for_each_weak_ordering(n, 1, max_blocks, [&](const std::vector<int> & w) { out.push_back(w); return true; });
    return out;
}

namespace detail {

    /// Max of `value(i)` over i in [0, count) with the lowest maximizing index;
    /// stops early once `ceiling` is reached. Same answer for any job count.
    template <typename Fn>
    auto parallel_argmax(std::size_t count, int jobs, int ceiling, Fn && value) -> std::pair<int, std::size_t>
    {
        auto scan = [&](std::size_t lo, std::size_t hi) {
            std::pair<int, std::size_t> best{-1, hi};
            for (std::size_t i = lo; i < hi; ++i) {
                int v = value(i);
                if (v > best.first)
                    best = {v, i};
                if (v >= ceiling)
                    break;
            }
            return best;
        };
        if (jobs <= 1 || count < 2)
            return scan(0, count);

        const auto workers = static_cast<std::size_t>(jobs);
        std::vector<std::pair<int, std::size_t>> partial(workers, {-1, count});
        {
            std::vector<std::jthread> pool;
            for (std::size_t j = 0; j < workers; ++j) {
                std::size_t lo = count * j / workers, hi = count * (j + 1) / workers;
                pool.emplace_back([&, j, lo, hi] { partial[j] = scan(lo, hi); });
            }
        }
        std::pair<int, std::size_t> best{-1, count};
        for (auto & p : partial)
            if (p.first > best.first)
                best = p;
        return best;
    }

    inline auto greedy_clique_size(const std::vector<std::uint64_t> & adj) -> int
    {
        const int n = static_cast<int>(adj.size());
        int best = n ? 1 : 0;
        for (int start = 0; start < n; ++start) {
            std::uint64_t cand = adj[static_cast<std::size_t>(start)];
            int size = 1;
            while (cand) {
                int v = std::countr_zero(cand);
                ++size;
                cand &= adj[static_cast<std::size_t>(v)];
            }
            best = std::max(best, size);
        }
        return best;
    }

    // Backtracking over colorings consistent with the two POC rules.
    class PocSearch
    {
    public:
        explicit PocSearch(const WeightedGraph & g) :
            _g(g), _n(g.size()), _adj(g.graph().adjacency_masks())
        {
            // colors live in a 64-bit ban mask
            if (_n > 62)
                throw PreconditionError("POC search supports n <= 62");
            _order.resize(static_cast<std::size_t>(_n));
            std::iota(_order.begin(), _order.end(), 0);
            std::stable_sort(_order.begin(), _order.end(), [&](Vertex a, Vertex b) {
                if (g.weight(a) != g.weight(b))
                    return g.weight(a) < g.weight(b);
                return g.graph().degree(a) > g.graph().degree(b);
            });

            // longest strictly weight-increasing path ending / starting at v
            _below.assign(static_cast<std::size_t>(_n), 1);
            _above.assign(static_cast<std::size_t>(_n), 1);
            for (Vertex v : _order)
                for (Vertex u : g.graph().neighbors(v))
                    if (g.weight(u) < g.weight(v))
                        _below[static_cast<std::size_t>(v)] = std::max(_below[static_cast<std::size_t>(v)], _below[static_cast<std::size_t>(u)] + 1);
            for (auto it = _order.rbegin(); it != _order.rend(); ++it)
                for (Vertex u : g.graph().neighbors(*it))
                    if (g.weight(u) > g.weight(*it))
                        _above[static_cast<std::size_t>(*it)] = std::max(_above[static_cast<std::size_t>(*it)], _above[static_cast<std::size_t>(u)] + 1);

            _color.assign(static_cast<std::size_t>(_n), 0);
        }

        auto lower_bound() const -> int
        {
            if (_n == 0)
                return 0;
            int chain = *std::max_element(_below.begin(), _below.end());
            return std::max(chain, greedy_clique_size(_adj));
        }

        /// Visits every valid POC with colors in 1..theta; `visit` returns false to stop.
        template <typename Visit>
        auto run(int theta, Visit && visit) -> bool
        {
            _theta = theta;
            return descend(0, visit);
        }

        auto colors() const -> const std::vector<int> & { return _color; }

    private:
        template <typename Visit>
        auto descend(int depth, Visit & visit) -> bool
        {
            if (depth == _n)
                return visit(_color);
            const Vertex v = _order[static_cast<std::size_t>(depth)];
            const auto vi = static_cast<std::size_t>(v);
            int lo = _below[vi], hi = _theta - _above[vi] + 1;
            std::uint64_t banned = 0;
            const int wv = _g.weight(v);
            for (auto nb = _adj[vi]; nb; nb &= nb - 1) {
                int u = std::countr_zero(nb);
                int cu = _color[static_cast<std::size_t>(u)];
                if (! cu)
                    continue;
                int wu = _g.weight(u);
                if (wu < wv)
                    lo = std::max(lo, cu + 1);
                else if (wu > wv)
                    hi = std::min(hi, cu - 1);
                else
                    banned |= std::uint64_t{1} << cu;
            }
            for (int c = lo; c <= hi; ++c) {
                if (banned >> c & 1)
                    continue;
                _color[vi] = c;
                bool go = descend(depth + 1, visit);
                _color[vi] = 0;
                if (! go)
                    return false;
            }
            return true;
        }

        const WeightedGraph & _g;
        int _n;
        std::vector<std::uint64_t> _adj;
        std::vector<Vertex> _order;
        std::vector<int> _below, _above, _color;
        int _theta = 0;
    };

}

struct ChiPocResult
{
    int value = 0;
    Coloring witness;
};

/// Exact chi_POC(G,w) with a witness, by backtracking from a lower bound upward.
inline auto chi_poc_exact(const WeightedGraph & g, const Caps & caps = {}) -> ChiPocResult
{
    if (g.size() > caps.chi_poc)
        throw CapExceeded("chi_poc", g.size(), caps.chi_poc);
    if (g.size() == 0)
        return {0, Coloring({}, 0)};
    detail::PocSearch search(g);
    for (int theta = search.lower_bound(); theta <= g.size(); ++theta) {
        std::vector<int> found;
        search.run(theta, [&](const std::vector<int> & c) { found = c; return false; });
        if (! found.empty())
            return {theta, Coloring(std::move(found), theta)};
    }
    throw PocError("chi_poc_exact: no POC with n colors, which is impossible");
}

/// Number of valid POCs with colors drawn from 1..theta. `listing`, if given,
/// receives each one.
inline auto enumerate_pocs(const WeightedGraph & g, int theta, const Caps & caps = {},
    const std::function<void(const Coloring &)> & listing = {}) -> std::uint64_t
{
    if (g.size() > caps.enumerate_pocs)
        throw CapExceeded("enumerate_pocs", g.size(), caps.enumerate_pocs);
    if (theta < 0 || theta > std::max(g.size(), 1))
        throw PreconditionError("enumerate_pocs needs 0 <= theta <= n");
    if (g.size() == 0)
        return 1;
    std::uint64_t count = 0;
    detail::PocSearch search(g);
    search.run(theta, [&](const std::vector<int> & c) {
        ++count;
        if (listing)
            listing(Coloring(c, theta));
        return true;
    });
    return count;
}

struct EllPrimeResult
{
    int value = 0;
    Orientation witness;
};

/// Exact l'(G,w): cross-weight arcs forced heavier to lighter, every
/// orientation of the equal-weight edges tried, acyclic ones scored by their
/// longest directed path.
inline auto ell_prime_gw(const WeightedGraph & g, const Caps & caps = {}) -> EllPrimeResult
{
    const int n = g.size();
    if (n > 64)
        throw PreconditionError("ell_prime_gw supports n <= 64");
    std::vector<std::uint64_t> forced(static_cast<std::size_t>(n), 0);
    std::vector<Edge> free_edges;
    for (auto e : g.graph().edges()) {
        if (g.weight(e.u) > g.weight(e.v))
            forced[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        else if (g.weight(e.u) < g.weight(e.v))
            forced[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
        else
            free_edges.push_back(e);
    }
    const int m = static_cast<int>(free_edges.size());
    if (m > caps.ell_prime_edges)
        throw CapExceeded("ell_prime", m, caps.ell_prime_edges);
    if (m > 40)
        throw PreconditionError("ell_prime_gw supports at most 40 equal-weight edges");
    if (n == 0)
        return {0, Orientation(0, {})};

    std::vector<std::uint64_t> out(static_cast<std::size_t>(n));
    std::vector<int> depth(static_cast<std::size_t>(n));
    std::vector<char> state(static_cast<std::size_t>(n));

    // longest path starting at v (vertex count); -1 on a cycle
    std::function<int(int)> longest = [&](int v) -> int {
        auto vi = static_cast<std::size_t>(v);
        if (state[vi] == 2)
            return depth[vi];
        if (state[vi] == 1)
            return -1;
        state[vi] = 1;
        int best = 1;
        for (auto o = out[vi]; o; o &= o - 1) {
            int d = longest(std::countr_zero(o));
            if (d < 0)
                return -1;
            best = std::max(best, d + 1);
        }
        state[vi] = 2;
        depth[vi] = best;
        return best;
    };

    int best = n + 1;
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        out = forced;
        for (int i = 0; i < m; ++i) {
            auto e = free_edges[static_cast<std::size_t>(i)];
            if (mask >> i & 1)
                out[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
            else
                out[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        }
        std::fill(state.begin(), state.end(), 0);
        int len = 0;
        for (int v = 0; v < n && len >= 0; ++v) {
            int d = longest(v);
            len = d < 0 ? -1 : std::max(len, d);
        }
        if (len > 0 && len < best) {
            best = len;
            best_mask = mask;
        }
    }

    std::vector<Arc> arcs;
    for (auto e : g.graph().edges()) {
        if (g.weight(e.u) != g.weight(e.v))
            arcs.push_back(g.weight(e.u) > g.weight(e.v) ? Arc{e.u, e.v} : Arc{e.v, e.u});
    }
    for (int i = 0; i < m; ++i) {
        auto e = free_edges[static_cast<std::size_t>(i)];
        arcs.push_back(best_mask >> i & 1 ? Arc{e.v, e.u} : Arc{e.u, e.v});
    }
    return {best, Orientation(n, std::move(arcs))};
}

/// Exact l(G), the vertex count of a longest path, by DP over
/// (vertex subset, endpoint) states.
inline auto longest_path_exact(const Graph & g, const Caps & caps = {}) -> int
{
    const int n = g.size();
    if (n > caps.longest_path)
        throw CapExceeded("longest_path", n, caps.longest_path);
    if (n == 0)
        return 0;
    if (n > 31)
        throw PreconditionError("longest_path_exact supports n <= 31");
    const auto adj = g.adjacency_masks();
    // ends[S] = endpoints v such that some path visits exactly S and ends at v
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v)
        ends[std::size_t{1} << v] = std::uint32_t{1} << v;
    int best = 1;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
        auto e = ends[s];
        if (! e)
            continue;
        best = std::max(best, std::popcount(s));
        for (; e; e &= e - 1) {
            int v = std::countr_zero(e);
            auto next = static_cast<std::uint32_t>(adj[static_cast<std::size_t>(v)]) & ~s;
            for (; next; next &= next - 1) {
                int u = std::countr_zero(next);
                ends[s | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
            }
        }
    }
    return best;
}

/// Direct depth-first search for a path through all vertices.
inline auto has_hamiltonian_path(const Graph & g) -> bool
{
    const int n = g.size();
    if (n <= 1)
        return true;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<bool(Vertex, int)> extend = [&](Vertex v, int length) -> bool {
        if (length == n)
            return true;
        for (Vertex u : g.neighbors(v)) {
            if (used[static_cast<std::size_t>(u)])
                continue;
            used[static_cast<std::size_t>(u)] = true;
            if (extend(u, length + 1))
                return true;
            used[static_cast<std::size_t>(u)] = false;
        }
        return false;
    };
    for (Vertex s = 0; s < n; ++s) {
        std::fill(used.begin(), used.end(), false);
        used[static_cast<std::size_t>(s)] = true;
        if (extend(s, 1))
            return true;
    }
    return false;
}

struct WorstWeighting
{
    int value = 0;
    std::vector<int> weights;  // a maximizing weighting (first in enumeration order)
};

namespace detail {

    inline auto max_chi_poc(const Graph & g, int min_blocks, int max_blocks, const Caps & caps, int jobs) -> WorstWeighting
    {
        const int n = g.size();
        if (n == 0)
            return {0, {}};
        WorstWeighting best{-1, {}};
        if (jobs <= 1) {
            for_each_weak_ordering(n, min_blocks, max_blocks, [&](const std::vector<int> & w) {
                int v = chi_poc_exact(WeightedGraph(g, w), caps).value;
                if (v > best.value)
                    best = {v, w};
                return v < n;
            });
        }
        else {
            std::vector<std::vector<int>> all;
            for_each_weak_ordering(n, min_blocks, max_blocks, [&](const std::vector<int> & w) { all.push_back(w); return true; });
            auto [v, i] = parallel_argmax(all.size(), jobs, n, [&](std::size_t k) {
                return chi_poc_exact(WeightedGraph(g, all[k]), caps).value;
            });
            if (i < all.size())
                best = {v, all[i]};
        }
        if (best.value < 0)
            throw PreconditionError("no weighting in the requested family");
        return best;
    }

}

/// f(G): max of chi_POC(G,w) over all weightings, i.e. over all weak orderings.
inline auto f_exact(const Graph & g, const Caps & caps = {}, int jobs = 1) -> WorstWeighting
{
    if (g.size() > caps.f)
        throw CapExceeded("f", g.size(), caps.f);
    return detail::max_chi_poc(g, 1, g.size(), caps, jobs);
}

/// chi_POC(G;t): max of chi_POC(G,w) over w: V -> {1..t}. With `surjective`
/// only weightings using exactly t values count.
inline auto chi_poc_t(const Graph & g, int t, const Caps & caps = {}, bool surjective = false, int jobs = 1) -> WorstWeighting
{
    if (t < 1)
        throw PreconditionError("chi_poc_t needs t >= 1");
    if (g.size() > caps.chi_poc_t)
        throw CapExceeded("chi_poc_t", g.size(), caps.chi_poc_t);
    if (surjective && t > g.size())
        throw PreconditionError("no surjective weighting onto " + std::to_string(t) + " values of " + std::to_string(g.size()) + " vertices");
    return detail::max_chi_poc(g, surjective ? t : 1, t, caps, jobs);
}

/// chi_POC(G;t) for t = 1..t_max in one sweep (index t-1).
inline auto chi_poc_t_profile(const Graph & g, int t_max, const Caps & caps = {}, bool surjective = false) -> std::vector<int>
{
    if (t_max < 1)
        throw PreconditionError("chi_poc_t_profile needs t_max >= 1");
    if (g.size() > caps.chi_poc_t)
        throw CapExceeded("chi_poc_t", g.size(), caps.chi_poc_t);
    if (g.size() == 0)
        return std::vector<int>(static_cast<std::size_t>(t_max), 0);
    std::vector<int> by_blocks(static_cast<std::size_t>(t_max) + 1, 0);
    for_each_weak_ordering(g.size(), 1, t_max, [&](const std::vector<int> & w) {
        auto s = static_cast<std::size_t>(*std::max_element(w.begin(), w.end()));
        by_blocks[s] = std::max(by_blocks[s], chi_poc_exact(WeightedGraph(g, w), caps).value);
        return true;
    });
    std::vector<int> out;
    int running = 0;
    for (int t = 1; t <= t_max; ++t) {
        running = std::max(running, by_blocks[static_cast<std::size_t>(t)]);
        out.push_back(surjective ? by_blocks[static_cast<std::size_t>(t)] : running);
    }
    return out;
}

}
