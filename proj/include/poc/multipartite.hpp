#pragma once

// Weighted complete multipartite graphs: maximum ordered cliques (MOCs),
// maximum (H_1..H_t)-paths, the path-merging POC construction, the g and h
// functions, and the completion of an arbitrary graph to a multipartite one.

#include <poc/chromatic.hpp>
#include <poc/engine.hpp>
#include <poc/graph.hpp>
#include <poc/oracles.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace poc {

/// K_{n_1..n_k} with a weight per vertex; vertices numbered part by part.
class MultipartiteInstance
{
public:
    MultipartiteInstance(std::vector<int> part_sizes, std::vector<int> weights) :
        _parts(std::move(part_sizes)), _weights(std::move(weights))
    {
        if (_parts.size() < 2)
            throw PreconditionError("multipartite instances need k >= 2 parts");
        for (std::size_t p = 0; p < _parts.size(); ++p) {
            if (_parts[p] < 1)
                throw PreconditionError("part sizes must be >= 1");
            for (int i = 0; i < _parts[p]; ++i) {
                _part_of.push_back(static_cast<int>(p));
                _offset_of.push_back(i);
            }
        }
        if (_weights.size() != _part_of.size())
            throw PreconditionError("expected " + std::to_string(_part_of.size()) + " weights, got " + std::to_string(_weights.size()));
        for (int w : _weights)
            if (w < 1)
                throw PreconditionError("weights must be >= 1");
    }

    auto part_sizes() const -> const std::vector<int> & { return _parts; }
    auto weights() const -> const std::vector<int> & { return _weights; }
    auto weight(Vertex v) const -> int { return _weights.at(static_cast<std::size_t>(v)); }
    auto k() const -> int { return static_cast<int>(_parts.size()); }
    auto n() const -> int { return static_cast<int>(_weights.size()); }
    auto part_of(Vertex v) const -> int { return _part_of.at(static_cast<std::size_t>(v)); }
    auto offset_of(Vertex v) const -> int { return _offset_of.at(static_cast<std::size_t>(v)); }
    auto t() const -> int { return *std::max_element(_weights.begin(), _weights.end()); }

    auto graph() const -> Graph { return complete_multipartite_graph(_parts); }
    auto weighted_graph() const -> WeightedGraph { return {graph(), _weights}; }

    auto normalized() const -> MultipartiteInstance
    {
        return {_parts, normalize_weights(weighted_graph()).weights()};
    }

    auto is_normalized() const -> bool { return poc::is_normalized(weighted_graph()); }

    /// "a1", "b3", ...: part letter then 1-based offset.
    auto label(Vertex v) const -> std::string
    {
        return std::string(1, static_cast<char>('a' + part_of(v) % 26)) + std::to_string(offset_of(v) + 1);
    }

private:
    std::vector<int> _parts, _weights, _part_of, _offset_of;
};

/// cliques[i-1] is H_i, sorted by vertex id.
struct MocsDecomposition
{
    std::vector<std::vector<Vertex>> cliques;

    auto total() const -> int
    {
        int s = 0;
        for (const auto & h : cliques)
            s += static_cast<int>(h.size());
        return s;
    }

    friend auto operator==(const MocsDecomposition &, const MocsDecomposition &) -> bool = default;
};

/// Paths ordered by their lowest weight; each path listed in weight order.
struct SPaths
{
    std::vector<std::vector<Vertex>> paths;

    auto vertex_count() const -> int
    {
        int s = 0;
        for (const auto & p : paths)
            s += static_cast<int>(p.size());
        return s;
    }

    auto q() const -> int { return static_cast<int>(paths.size()); }

    friend auto operator==(const SPaths &, const SPaths &) -> bool = default;
};

namespace detail {

    inline void require_normalized(const MultipartiteInstance & inst)
    {
        if (! inst.is_normalized())
            throw PreconditionError("weights must use exactly the values 1..t (normalize first)");
    }

    // choices[i-1][p] = weight-i vertices of part p
    inline auto clique_choices(const MultipartiteInstance & inst) -> std::vector<std::vector<std::vector<Vertex>>>
    {
        std::vector<std::vector<std::vector<Vertex>>> choices(static_cast<std::size_t>(inst.t()),
            std::vector<std::vector<Vertex>>(static_cast<std::size_t>(inst.k())));
        for (Vertex v = 0; v < inst.n(); ++v)
            choices[static_cast<std::size_t>(inst.weight(v) - 1)][static_cast<std::size_t>(inst.part_of(v))].push_back(v);
        return choices;
    }

}

/// The canonical MOCs: H_i takes, from every part having a weight-i vertex,
/// the one with the lowest offset.
inline auto find_mocs(const MultipartiteInstance & inst) -> MocsDecomposition
{
    detail::require_normalized(inst);
    MocsDecomposition m;
    for (const auto & per_part : detail::clique_choices(inst)) {
        std::vector<Vertex> h;
        for (const auto & cand : per_part)
            if (! cand.empty())
                h.push_back(cand.front());
        m.cliques.push_back(std::move(h));
    }
    return m;
}

/// Every maximum decomposition, find_mocs() first.
inline auto enumerate_mocs(const MultipartiteInstance & inst, const Caps & caps = {}) -> std::vector<MocsDecomposition>
{
    detail::require_normalized(inst);
    auto choices = detail::clique_choices(inst);

    std::vector<const std::vector<Vertex> *> slots;
    long total = 1;
    for (const auto & per_part : choices)
        for (const auto & cand : per_part)
            if (! cand.empty()) {
                slots.push_back(&cand);
                total *= static_cast<long>(cand.size());
                if (total > caps.mocs)
                    throw CapExceeded("mocs", total, caps.mocs);
            }

    std::vector<MocsDecomposition> out;
    std::vector<std::size_t> pick(slots.size(), 0);
    while (true) {
        MocsDecomposition m;
        m.cliques.resize(choices.size());
        for (std::size_t s = 0; s < slots.size(); ++s) {
            Vertex v = (*slots[s])[pick[s]];
            m.cliques[static_cast<std::size_t>(inst.weight(v) - 1)].push_back(v);
        }
        for (auto & h : m.cliques)
            std::sort(h.begin(), h.end());
        out.push_back(std::move(m));

        // odometer, last slot fastest
        std::size_t s = slots.size();
        while (s > 0) {
            --s;
            if (++pick[s] < slots[s]->size())
                break;
            pick[s] = 0;
            if (s == 0)
                return out;
        }
        if (slots.empty())
            return out;
    }
}

/// Checks the MOCs invariants: H_i non-empty, all of weight i, at most one
/// vertex per part, and as large as the part structure allows.
inline auto mocs_violation(const MultipartiteInstance & inst, const MocsDecomposition & m) -> std::optional<std::string>
{
    if (static_cast<int>(m.cliques.size()) != inst.t())
        return "expected " + std::to_string(inst.t()) + " cliques";
    auto choices = detail::clique_choices(inst);
    for (std::size_t i = 0; i < m.cliques.size(); ++i) {
        const auto & h = m.cliques[i];
        std::set<int> parts;
        for (Vertex v : h) {
            if (v < 0 || v >= inst.n() || inst.weight(v) != static_cast<int>(i) + 1)
                return "H_" + std::to_string(i + 1) + " contains a vertex of the wrong weight";
            if (! parts.insert(inst.part_of(v)).second)
                return "H_" + std::to_string(i + 1) + " has two vertices in one part";
        }
        std::size_t available = 0;
        for (const auto & cand : choices[i])
            available += cand.empty() ? 0 : 1;
        if (h.empty() || h.size() != available)
            return "H_" + std::to_string(i + 1) + " is not maximum";
    }
    return std::nullopt;
}

/// Checks properties (i)-(iii) of an S-paths family against MOCs `m`.
inline auto spaths_violation(const MultipartiteInstance & inst, const MocsDecomposition & m, const SPaths & s) -> std::optional<std::string>
{
    const int t = static_cast<int>(m.cliques.size());
    std::vector<int> clique_of(static_cast<std::size_t>(inst.n()), 0);
    for (int i = 0; i < t; ++i)
        for (Vertex v : m.cliques[static_cast<std::size_t>(i)])
            clique_of[static_cast<std::size_t>(v)] = i + 1;

    std::set<Vertex> used;
    std::vector<std::pair<int, int>> ranges;
    std::vector<int> hits(static_cast<std::size_t>(t) + 1, 0);
    for (const auto & path : s.paths) {
        if (path.size() < 2)
            return std::string("a path has fewer than two vertices");
        for (std::size_t j = 0; j < path.size(); ++j) {
            Vertex v = path[j];
            if (v < 0 || v >= inst.n())
                return std::string("path vertex out of range");
            if (! clique_of[static_cast<std::size_t>(v)])
                return "path vertex " + inst.label(v) + " is outside the MOCs";
            if (! used.insert(v).second)
                return "paths are not vertex-disjoint at " + inst.label(v);
            if (inst.part_of(v) != inst.part_of(path.front()))
                return std::string("a path leaves its part");
            if (j > 0 && inst.weight(v) != inst.weight(path[j - 1]) + 1)
                return std::string("path weights do not increase by exactly one");
            if (j > 0 && j + 1 < path.size() && m.cliques[static_cast<std::size_t>(inst.weight(v) - 1)].size() != 1)
                return "interior vertex " + inst.label(v) + " is not alone in its clique";
            ++hits[static_cast<std::size_t>(inst.weight(v))];
        }
        ranges.emplace_back(inst.weight(path.front()), inst.weight(path.back()));
    }
    for (std::size_t a = 0; a < ranges.size(); ++a)
        for (std::size_t b = a + 1; b < ranges.size(); ++b) {
            int lo = std::max(ranges[a].first, ranges[b].first), hi = std::min(ranges[a].second, ranges[b].second);
            if (hi - lo + 1 > 1)
                return std::string("two paths meet more than one clique");
        }
    for (int i = 1; i <= t; ++i)
        if (hits[static_cast<std::size_t>(i)] > 2)
            return "H_" + std::to_string(i) + " meets the paths in more than two vertices";
    if (s.vertex_count() > std::max(0, 2 * t - 2))
        return std::string("more than 2t-2 path vertices");
    return std::nullopt;
}

namespace detail {

    struct CandidatePath
    {
        int lo, hi, part;
        std::vector<Vertex> vertices;
    };

    inline auto candidate_paths(const MultipartiteInstance & inst, const MocsDecomposition & m) -> std::vector<CandidatePath>
    {
        const int t = static_cast<int>(m.cliques.size());
        // member[i][p] = vertex of H_{i+1} in part p, or -1
        std::vector<std::vector<Vertex>> member(static_cast<std::size_t>(t), std::vector<Vertex>(static_cast<std::size_t>(inst.k()), -1));
        for (int i = 0; i < t; ++i)
            for (Vertex v : m.cliques[static_cast<std::size_t>(i)])
                member[static_cast<std::size_t>(i)][static_cast<std::size_t>(inst.part_of(v))] = v;

        std::vector<CandidatePath> out;
        for (int lo = 1; lo <= t; ++lo)
            for (int p = 0; p < inst.k(); ++p) {
                if (member[static_cast<std::size_t>(lo - 1)][static_cast<std::size_t>(p)] < 0)
                    continue;
                std::vector<Vertex> verts{member[static_cast<std::size_t>(lo - 1)][static_cast<std::size_t>(p)]};
                for (int hi = lo + 1; hi <= t; ++hi) {
                    Vertex v = member[static_cast<std::size_t>(hi - 1)][static_cast<std::size_t>(p)];
                    if (v < 0)
                        break;
                    // the previous vertex becomes interior once the path grows past it
                    if (hi - 1 > lo && m.cliques[static_cast<std::size_t>(hi - 2)].size() != 1)
                        break;
                    verts.push_back(v);
                    out.push_back({lo, hi, p, verts});
                }
            }
        return out;
    }

}

/// A maximum family of (H_1..H_t)-paths: largest |V(S)|, then fewest paths,
/// then lexicographically least path list.
inline auto find_max_spaths(const MultipartiteInstance & inst, const MocsDecomposition & m) -> SPaths
{
    const auto cands = detail::candidate_paths(inst, m);
    const int t = static_cast<int>(m.cliques.size());

    std::vector<std::size_t> chosen, best;
    int best_vertices = 0, best_q = 0;
    std::vector<int> hits(static_cast<std::size_t>(t) + 2, 0);
    std::set<Vertex> used;

    auto as_paths = [&](const std::vector<std::size_t> & idx) {
        std::vector<std::vector<Vertex>> p;
        for (auto i : idx)
            p.push_back(cands[i].vertices);
        return p;
    };

    auto compatible = [&](const detail::CandidatePath & c) {
        for (Vertex v : c.vertices)
            if (used.count(v))
                return false;
        for (int i = c.lo; i <= c.hi; ++i)
            if (hits[static_cast<std::size_t>(i)] >= 2)
                return false;
        for (auto j : chosen) {
            int lo = std::max(c.lo, cands[j].lo), hi = std::min(c.hi, cands[j].hi);
            if (hi - lo + 1 > 1)
                return false;
        }
        return true;
    };

    auto consider = [&](int vertices) {
        int q = static_cast<int>(chosen.size());
        bool better = vertices > best_vertices || (vertices == best_vertices && q < best_q);
        if (! better && vertices == best_vertices && q == best_q)
            better = as_paths(chosen) < as_paths(best);
        if (better) {
            best = chosen;
            best_vertices = vertices;
            best_q = q;
        }
    };

    // candidates are sorted by (lo, part, hi), so `chosen` stays sorted by lowest weight
    auto search = [&](auto & self, std::size_t from, int vertices) -> void {
        consider(vertices);
        for (std::size_t i = from; i < cands.size(); ++i) {
            const auto & c = cands[i];
            if (! compatible(c))
                continue;
            chosen.push_back(i);
            for (Vertex v : c.vertices)
                used.insert(v);
            for (int w = c.lo; w <= c.hi; ++w)
                ++hits[static_cast<std::size_t>(w)];
            self(self, i + 1, vertices + static_cast<int>(c.vertices.size()));
            for (int w = c.lo; w <= c.hi; ++w)
                --hits[static_cast<std::size_t>(w)];
            for (Vertex v : c.vertices)
                used.erase(v);
            chosen.pop_back();
        }
    };
    search(search, 0, 0);
    return {as_paths(best)};
}

/// The path-merging POC: consecutive color runs on H_1..H_t in turn, each
/// S-path monochromatic, vertices outside the MOCs copying their swap partner.
/// Uses exactly total(m) - |V(S)| + q(S) colors; the result is re-checked and
/// any failure is a hard error.
inline auto prop1_coloring(const MultipartiteInstance & inst, const MocsDecomposition & m, const SPaths & s) -> Coloring
{
    if (auto why = mocs_violation(inst, m))
        throw PreconditionError("inconsistent MOCs: " + *why);
    if (auto why = spaths_violation(inst, m, s))
        throw PreconditionError("inconsistent S-paths: " + *why);

    const int n = inst.n();
    const int t = static_cast<int>(m.cliques.size());
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> successor(static_cast<std::size_t>(n), -1);
    std::vector<bool> on_path(static_cast<std::size_t>(n), false);
    for (const auto & path : s.paths)
        for (std::size_t j = 0; j < path.size(); ++j) {
            on_path[static_cast<std::size_t>(path[j])] = true;
            if (j + 1 < path.size())
                successor[static_cast<std::size_t>(path[j])] = path[j + 1];
        }
    const Vertex first_start = s.paths.empty() ? -1 : s.paths.front().front();

    int top = 0, preceding = 0;
    for (int i = 0; i < t; ++i) {
        const auto & h = m.cliques[static_cast<std::size_t>(i)];
        Vertex carried = -1;
        std::vector<Vertex> plain, starts;
        for (Vertex v : h) {
            if (color[static_cast<std::size_t>(v)])
                carried = v;
            else if (on_path[static_cast<std::size_t>(v)])
                starts.push_back(v);
            else
                plain.push_back(v);
        }
        if (starts.size() > 1)
            throw PocError("H_" + std::to_string(i + 1) + " holds two uncolored path vertices");

        // run order: carried vertex first, plain vertices by id, path start last
        std::vector<Vertex> run = plain;
        run.insert(run.end(), starts.begin(), starts.end());
        int next = carried >= 0 ? color[static_cast<std::size_t>(carried)] + 1 : top + 1;
        if (carried < 0 && h.size() == 1 && h.front() == first_start)
            next = preceding + 1;
        for (Vertex v : run)
            color[static_cast<std::size_t>(v)] = next++;
        for (Vertex v : h) {
            top = std::max(top, color[static_cast<std::size_t>(v)]);
            if (auto succ = successor[static_cast<std::size_t>(v)]; succ >= 0)
                color[static_cast<std::size_t>(succ)] = color[static_cast<std::size_t>(v)];
        }
        preceding += static_cast<int>(h.size());
    }

    const auto g = inst.graph();
    for (Vertex v = 0; v < n; ++v) {
        if (color[static_cast<std::size_t>(v)])
            continue;
        const auto & h = m.cliques[static_cast<std::size_t>(inst.weight(v) - 1)];
        Vertex partner = -1;
        for (Vertex u : h) {
            bool clique = true;
            for (Vertex x : h)
                if (x != u && ! g.adjacent(x, v))
                    clique = false;
            if (clique) {
                partner = u;
                break;
            }
        }
        if (partner < 0)
            throw PocError("no swap partner for vertex " + inst.label(v));
        color[static_cast<std::size_t>(v)] = color[static_cast<std::size_t>(partner)];
    }

    Coloring c(std::move(color));
    const int expected = m.total() - s.vertex_count() + s.q();
    if (! is_valid_poc(inst.weighted_graph(), c))
        throw PocError("path-merging construction produced an invalid POC");
    if (c.palette() != expected || c.distinct_colors() != expected)
        throw PocError("path-merging construction used " + std::to_string(c.palette()) + " colors, expected " + std::to_string(expected));
    return c;
}

struct GResult
{
    int value = 0;
    MocsDecomposition mocs;  // the first maximizing decomposition
    SPaths spaths;
};

/// g(n_1..n_k, t; w): max over all MOCs of total - |V(S)| + q(S).
inline auto g_value(const MultipartiteInstance & input, const Caps & caps = {}) -> GResult
{
    const auto inst = input.normalized();
    GResult best{-1, {}, {}};
    for (auto & m : enumerate_mocs(inst, caps)) {
        auto s = find_max_spaths(inst, m);
        int v = m.total() - s.vertex_count() + s.q();
        if (v > best.value)
            best = {v, std::move(m), std::move(s)};
    }
    return best;
}

struct HResult
{
    int value = 0;
    std::vector<int> weights;  // a maximizing weighting, part by part
};

/// h(n_1..n_k, t): max of g over weightings V -> {1..t} (exactly t values
/// used when `surjective`). Vertices inside a part are interchangeable, so one
/// sorted weight sequence per part is enough.
inline auto h_value(const std::vector<int> & part_sizes, int t, const Caps & caps = {}, bool surjective = false) -> HResult
{
    if (t < 1)
        throw PreconditionError("h_value needs t >= 1");
    if (part_sizes.size() < 2)
        throw PreconditionError("multipartite instances need k >= 2 parts");

    std::vector<std::vector<std::vector<int>>> per_part;
    for (int size : part_sizes) {
        if (size < 1)
            throw PreconditionError("part sizes must be >= 1");
        std::vector<std::vector<int>> seqs;
        std::vector<int> cur;
        auto rec = [&](auto & self, int from) -> void {
            if (static_cast<int>(cur.size()) == size) {
                seqs.push_back(cur);
                return;
            }
            for (int w = from; w <= t; ++w) {
                cur.push_back(w);
                self(self, w);
                cur.pop_back();
            }
        };
        rec(rec, 1);
        per_part.push_back(std::move(seqs));
    }

    HResult best{-1, {}};
    std::set<std::vector<int>> seen;
    std::vector<std::size_t> pick(per_part.size(), 0);
    while (true) {
        std::vector<int> w;
        for (std::size_t p = 0; p < per_part.size(); ++p)
            w.insert(w.end(), per_part[p][pick[p]].begin(), per_part[p][pick[p]].end());
        MultipartiteInstance inst(part_sizes, w);
        auto norm = inst.normalized();
        if (seen.insert(norm.weights()).second && (! surjective || norm.t() == t)) {
            int v = g_value(norm, caps).value;
            if (v > best.value)
                best = {v, norm.weights()};
        }
        std::size_t p = per_part.size();
        bool done = true;
        while (p > 0) {
            --p;
            if (++pick[p] < per_part[p].size()) {
                done = false;
                break;
            }
            pick[p] = 0;
        }
        if (done)
            break;
    }
    if (best.value < 0)
        throw PreconditionError("no weighting in the requested family");
    return best;
}

/// chi_POC(K_{m,n}; t) = min(m+n, 2m+1) for 1 <= m <= n and t >= 2m+1.
inline auto bipartite_chi_poc_t(int m, int n, int t) -> int
{
    if (m < 1 || m > n)
        throw PreconditionError("bipartite formula needs 1 <= m <= n");
    if (t < 2 * m + 1)
        throw PreconditionError("bipartite formula needs t >= 2m+1");
    return std::min(m + n, 2 * m + 1);
}

/// POC of K_{m,n} (the m-side first in `weights`) with at most 2m+1 colors.
/// For n >= m+2 the m-side is split into singletons X_i sorted by weight and
/// every other vertex joins the first Y_j whose X_j is at least as heavy;
/// X_i gets 2i, Y_j gets 2j-1. Otherwise the greedy uses at most m+n colors.
inline auto bipartite_layered_coloring(int m, int n, const std::vector<int> & weights) -> Coloring
{
    if (m < 1 || m > n)
        throw PreconditionError("bipartite construction needs 1 <= m <= n");
    const std::vector<int> parts{m, n};
    WeightedGraph g(complete_multipartite_graph(parts), weights);
    if (n <= m + 1)
        return algorithm_f(g);

    std::vector<Vertex> xs(static_cast<std::size_t>(m));
    std::iota(xs.begin(), xs.end(), 0);
    std::stable_sort(xs.begin(), xs.end(), [&](Vertex a, Vertex b) { return weights[static_cast<std::size_t>(a)] < weights[static_cast<std::size_t>(b)]; });

    std::vector<int> color(static_cast<std::size_t>(m + n), 0);
    for (int i = 0; i < m; ++i)
        color[static_cast<std::size_t>(xs[static_cast<std::size_t>(i)])] = 2 * (i + 1);
    for (Vertex y = m; y < m + n; ++y) {
        int j = 0;
        while (j < m && weights[static_cast<std::size_t>(xs[static_cast<std::size_t>(j)])] < weights[static_cast<std::size_t>(y)])
            ++j;
        color[static_cast<std::size_t>(y)] = 2 * (j + 1) - 1;
    }
    return Coloring(std::move(color));
}

/// (k-1)t + 1.
inline auto multipartite_upper_bound(int k, int t) -> int
{
    if (k < 2)
        throw PreconditionError("multipartite bound needs k >= 2");
    if (t < 1)
        throw PreconditionError("multipartite bound needs t >= 1");
    return (k - 1) * t + 1;
}

/// Checks that `g` is a subgraph (or, with `exact`, equal to) K_{parts} under
/// part-by-part numbering and returns the weighted instance.
inline auto multipartite_instance(const WeightedGraph & g, const std::vector<int> & parts, bool exact) -> MultipartiteInstance
{
    MultipartiteInstance inst(parts, g.weights());
    for (auto [a, b] : g.graph().edges())
        if (inst.part_of(a) == inst.part_of(b))
            throw PreconditionError("edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1) + " lies inside a part");
    if (exact && g.graph().edge_count() != inst.graph().edge_count())
        throw PreconditionError("graph is not the complete multipartite graph on these parts");
    return inst;
}

struct Completion
{
    std::vector<int> part_sizes;    // color classes of an optimal proper coloring
    std::vector<Vertex> vertex_map; // vertex of g -> vertex of the multipartite graph

    auto skeleton() const -> MultipartiteInstance
    {
        int n = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
        return {part_sizes, std::vector<int>(static_cast<std::size_t>(n), 1)};
    }

    auto with_weights(const WeightedGraph & g) const -> MultipartiteInstance
    {
        std::vector<int> w(vertex_map.size(), 0);
        for (std::size_t v = 0; v < vertex_map.size(); ++v)
            w[static_cast<std::size_t>(vertex_map[v])] = g.weight(static_cast<Vertex>(v));
        return {part_sizes, std::move(w)};
    }
};

/// Adds every edge between distinct color classes of an optimal coloring.
inline auto complete_to_multipartite(const Graph & g) -> Completion
{
    if (g.size() < 1)
        throw PreconditionError("completion needs at least one vertex");
    auto chi = chromatic_coloring(g);
    if (chi.count < 2)
        throw PreconditionError("completion needs chromatic number >= 2 (graph is edgeless)");
    Completion c;
    c.part_sizes.assign(static_cast<std::size_t>(chi.count), 0);
    for (int col : chi.coloring.colors())
        ++c.part_sizes[static_cast<std::size_t>(col - 1)];
    std::vector<int> next(static_cast<std::size_t>(chi.count), 0);
    std::partial_sum(c.part_sizes.begin(), c.part_sizes.end() - 1, next.begin() + 1);
    for (Vertex v = 0; v < g.size(); ++v)
        c.vertex_map.push_back(next[static_cast<std::size_t>(chi.coloring.color(v) - 1)]++);
    return c;
}

struct MultipartiteColoring
{
    MocsDecomposition mocs;
    SPaths spaths;
    Coloring coloring;
};

/// Canonical MOCs, maximum S-paths and the path-merging coloring of `inst`.
inline auto multipartite_coloring(const MultipartiteInstance & input) -> MultipartiteColoring
{
    const auto inst = input.normalized();
    auto m = find_mocs(inst);
    auto s = find_max_spaths(inst, m);
    auto c = prop1_coloring(inst, m, s);
    return {std::move(m), std::move(s), std::move(c)};
}

/// POC of an arbitrary graph through its multipartite completion; at most
/// (chi(G)-1)|W|+1 colors.
inline auto coloring_via_completion(const WeightedGraph & g) -> Coloring
{
    if (g.size() < 1)
        throw PreconditionError("coloring needs at least one vertex");
    if (g.graph().edge_count() == 0)
        return Coloring(std::vector<int>(static_cast<std::size_t>(g.size()), 1), 1);
    const auto completion = complete_to_multipartite(g.graph());
    const auto mc = multipartite_coloring(completion.with_weights(g));
    std::vector<int> color;
    for (Vertex v = 0; v < g.size(); ++v)
        color.push_back(mc.coloring.color(completion.vertex_map[static_cast<std::size_t>(v)]));
    Coloring c(std::move(color), mc.coloring.palette());
    if (! is_valid_poc(g, c))
        throw PocError("completion coloring is not a POC of the original graph");
    return c;
}

}
