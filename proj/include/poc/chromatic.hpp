#pragma once

#include <poc/graph.hpp>

#include <bit>
#include <cstdint>
#include <vector>

namespace poc {

struct ChromaticResult
{
    int count = 0;
    Coloring coloring;  // optimal proper coloring, colors relabelled by first appearance
};

namespace detail {

    class DsaturSearch
    {
    public:
        explicit DsaturSearch(const Graph & g) :
            _n(g.size()), _adj(g.adjacency_masks()), _color(static_cast<std::size_t>(_n), 0)
        {
        }

        auto run() -> ChromaticResult
        {
            if (_n == 0)
                return {0, Coloring({}, 0)};
            _lower = greedy_clique();
            _best = _n + 1;
            search(0, 0);
            return {_best, canonical(_best_color)};
        }

    private:
        auto greedy_clique() const -> int
        {
            int best = 1;
            for (int start = 0; start < _n; ++start) {
                std::uint64_t cand = _adj[static_cast<std::size_t>(start)];
                int size = 1;
                while (cand) {
                    // pick the candidate with most candidate-neighbours
                    int pick = -1, pick_deg = -1;
                    for (auto rest = cand; rest; rest &= rest - 1) {
                        int v = std::countr_zero(rest);
                        int d = std::popcount(_adj[static_cast<std::size_t>(v)] & cand);
                        if (d > pick_deg)
                            pick = v, pick_deg = d;
                    }
                    ++size;
                    cand &= _adj[static_cast<std::size_t>(pick)];
                }
                best = std::max(best, size);
            }
            return best;
        }

        auto saturation(int v) const -> int
        {
            std::uint64_t seen = 0;
            for (auto nb = _adj[static_cast<std::size_t>(v)]; nb; nb &= nb - 1) {
                int c = _color[static_cast<std::size_t>(std::countr_zero(nb))];
                if (c)
                    seen |= std::uint64_t{1} << (c - 1);
            }
            return std::popcount(seen);
        }

        void search(int assigned, int used)
        {
            if (used >= _best)
                return;
            if (assigned == _n) {
                _best = used;
                _best_color = _color;
                return;
            }

            int pick = -1, pick_sat = -1, pick_deg = -1;
            for (int v = 0; v < _n; ++v) {
                if (_color[static_cast<std::size_t>(v)])
                    continue;
                int sat = saturation(v);
                int deg = std::popcount(_adj[static_cast<std::size_t>(v)]);
                if (sat > pick_sat || (sat == pick_sat && deg > pick_deg))
                    pick = v, pick_sat = sat, pick_deg = deg;
            }

            for (int c = 1; c <= used + 1 && c < _best; ++c) {
                bool clash = false;
                for (auto nb = _adj[static_cast<std::size_t>(pick)]; nb && ! clash; nb &= nb - 1)
                    clash = _color[static_cast<std::size_t>(std::countr_zero(nb))] == c;
                if (clash)
                    continue;
                _color[static_cast<std::size_t>(pick)] = c;
                search(assigned + 1, std::max(used, c));
                _color[static_cast<std::size_t>(pick)] = 0;
                if (_best == _lower)
                    return;
            }
        }

        static auto canonical(const std::vector<int> & raw) -> Coloring
        {
            std::vector<int> relabel(raw.size() + 1, 0), out;
            int next = 0;
            for (int c : raw) {
                if (! relabel[static_cast<std::size_t>(c)])
                    relabel[static_cast<std::size_t>(c)] = ++next;
                out.push_back(relabel[static_cast<std::size_t>(c)]);
            }
            return Coloring(std::move(out), next);
        }

        int _n;
        std::vector<std::uint64_t> _adj;
        std::vector<int> _color, _best_color;
        int _best = 0, _lower = 1;
    };

}

/// Exact chromatic number by DSATUR branch and bound (clique lower bound).
inline auto chromatic_coloring(const Graph & g) -> ChromaticResult
{
    return detail::DsaturSearch(g).run();
}

inline auto chromatic_number(const Graph & g) -> int
{
    return chromatic_coloring(g).count;
}

}
