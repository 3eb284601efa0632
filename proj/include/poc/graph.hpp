#pragma once

// Core data model: simple undirected graphs, vertex weights, colorings and
// orientations. Vertices are 0-based indices in memory; the text formats in
// io.hpp use 1-based ids.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace poc {

class PocError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition.
class PreconditionError : public PocError
{
public:
    using PocError::PocError;
};

/// A configured search cap was exceeded. `cap()` names the cap.
class CapExceeded : public PocError
{
public:
    CapExceeded(std::string cap, long value, long limit) :
        PocError("cap exceeded: " + cap + " (" + std::to_string(value) + " > " + std::to_string(limit) + ")"),
        _cap(std::move(cap))
    {
    }

    auto cap() const -> const std::string & { return _cap; }

private:
    std::string _cap;
};

using Vertex = int;

struct Edge
{
    Vertex u, v;  // u < v

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Simple undirected graph on vertices 0..n-1.
class Graph
{
public:
    Graph() = default;

    explicit Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges = {}) :
        _adj(static_cast<std::size_t>(n))
    {
        if (n < 0)
            throw PreconditionError("negative vertex count");
        std::set<Edge> seen;
        for (auto [a, b] : edges)
            add_edge(a, b, seen);
        finish();
    }

    Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) :
        Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()))
    {
    }

    auto size() const -> int { return static_cast<int>(_adj.size()); }
    auto edge_count() const -> int { return static_cast<int>(_edges.size()); }
    auto edges() const -> const std::vector<Edge> & { return _edges; }
    auto neighbors(Vertex v) const -> const std::vector<Vertex> & { return _adj.at(static_cast<std::size_t>(v)); }
    auto degree(Vertex v) const -> int { return static_cast<int>(neighbors(v).size()); }

    auto adjacent(Vertex a, Vertex b) const -> bool
    {
        const auto & na = neighbors(a);
        return std::binary_search(na.begin(), na.end(), b);
    }

    /// Adjacency rows as bitmasks (requires n <= 64).
    auto adjacency_masks() const -> std::vector<std::uint64_t>
    {
        if (size() > 64)
            throw PreconditionError("bitmask adjacency needs n <= 64");
        std::vector<std::uint64_t> rows(_adj.size(), 0);
        for (auto [a, b] : _edges) {
            rows[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
            rows[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
        }
        return rows;
    }

    friend auto operator==(const Graph & x, const Graph & y) -> bool
    {
        return x.size() == y.size() && x._edges == y._edges;
    }

private:
    void add_edge(Vertex a, Vertex b, std::set<Edge> & seen)
    {
        const int n = size();
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw PreconditionError("edge endpoint out of range");
        if (a == b)
            throw PreconditionError("loop at vertex " + std::to_string(a + 1));
        Edge e{std::min(a, b), std::max(a, b)};
        if (! seen.insert(e).second)
            throw PreconditionError("duplicate edge " + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1));
        _edges.push_back(e);
        _adj[static_cast<std::size_t>(a)].push_back(b);
        _adj[static_cast<std::size_t>(b)].push_back(a);
    }

    void finish()
    {
        std::sort(_edges.begin(), _edges.end());
        for (auto & row : _adj)
            std::sort(row.begin(), row.end());
    }

    std::vector<std::vector<Vertex>> _adj;
    std::vector<Edge> _edges;
};

/// Graph plus a positive integer weight per vertex.
class WeightedGraph
{
public:
    WeightedGraph() = default;

    WeightedGraph(Graph graph, std::vector<int> weights) :
        _graph(std::move(graph)), _weights(std::move(weights))
    {
        if (static_cast<int>(_weights.size()) != _graph.size())
            throw PreconditionError("weight vector length does not match vertex count");
        for (int w : _weights)
            if (w < 1)
                throw PreconditionError("weights must be >= 1");
    }

    auto graph() const -> const Graph & { return _graph; }
    auto weights() const -> const std::vector<int> & { return _weights; }
    auto weight(Vertex v) const -> int { return _weights.at(static_cast<std::size_t>(v)); }
    auto size() const -> int { return _graph.size(); }

    /// Distinct weight values, ascending.
    auto weight_values() const -> std::vector<int>
    {
        std::set<int> s(_weights.begin(), _weights.end());
        return {s.begin(), s.end()};
    }

    auto weight_count() const -> int { return static_cast<int>(weight_values().size()); }

    friend auto operator==(const WeightedGraph &, const WeightedGraph &) -> bool = default;

private:
    Graph _graph;
    std::vector<int> _weights;
};

/// Color assignment with declared palette {1..palette}.
class Coloring
{
public:
    Coloring() = default;

    Coloring(std::vector<int> colors, int palette) :
        _colors(std::move(colors)), _palette(palette)
    {
        for (int c : _colors)
            if (c < 1 || c > _palette)
                throw PreconditionError("color " + std::to_string(c) + " outside palette 1.." + std::to_string(_palette));
    }

    /// Palette set to the largest color used.
    explicit Coloring(std::vector<int> colors) :
        Coloring(colors, colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()))
    {
    }

    auto colors() const -> const std::vector<int> & { return _colors; }
    auto color(Vertex v) const -> int { return _colors.at(static_cast<std::size_t>(v)); }
    auto palette() const -> int { return _palette; }
    auto size() const -> int { return static_cast<int>(_colors.size()); }

    auto distinct_colors() const -> int
    {
        return static_cast<int>(std::set<int>(_colors.begin(), _colors.end()).size());
    }

    friend auto operator==(const Coloring &, const Coloring &) -> bool = default;

private:
    std::vector<int> _colors;
    int _palette = 0;
};

struct Arc
{
    Vertex tail, head;

    friend auto operator<=>(const Arc &, const Arc &) = default;
};

/// One arc per edge of some graph on `size()` vertices.
class Orientation
{
public:
    Orientation() = default;

    Orientation(int n, std::vector<Arc> arcs) :
        _n(n), _arcs(std::move(arcs)), _out(static_cast<std::size_t>(n))
    {
        std::sort(_arcs.begin(), _arcs.end());
        for (auto [t, h] : _arcs) {
            if (t < 0 || h < 0 || t >= n || h >= n || t == h)
                throw PreconditionError("arc endpoint out of range");
            _out[static_cast<std::size_t>(t)].push_back(h);
        }
        for (auto & row : _out)
            std::sort(row.begin(), row.end());
    }

    auto size() const -> int { return _n; }
    auto arcs() const -> const std::vector<Arc> & { return _arcs; }
    auto out_neighbors(Vertex v) const -> const std::vector<Vertex> & { return _out.at(static_cast<std::size_t>(v)); }

    auto has_arc(Vertex t, Vertex h) const -> bool
    {
        const auto & o = out_neighbors(t);
        return std::binary_search(o.begin(), o.end(), h);
    }

    /// True iff exactly one direction of every edge of `g` is present and nothing else.
    auto orients(const Graph & g) const -> bool
    {
        if (g.size() != _n || g.edge_count() != static_cast<int>(_arcs.size()))
            return false;
        std::set<Edge> seen;
        for (auto [t, h] : _arcs) {
            Edge e{std::min(t, h), std::max(t, h)};
            if (! g.adjacent(t, h) || ! seen.insert(e).second)
                return false;
        }
        return true;
    }

    friend auto operator==(const Orientation & x, const Orientation & y) -> bool
    {
        return x._n == y._n && x._arcs == y._arcs;
    }

private:
    int _n = 0;
    std::vector<Arc> _arcs;
    std::vector<std::vector<Vertex>> _out;
};

/// Replace weights by their ranks among the distinct values (1..|W|).
inline auto normalize_weights(const WeightedGraph & g) -> WeightedGraph
{
    auto values = g.weight_values();
    std::vector<int> ranked;
    ranked.reserve(g.weights().size());
    for (int w : g.weights())
        ranked.push_back(static_cast<int>(std::lower_bound(values.begin(), values.end(), w) - values.begin()) + 1);
    return {g.graph(), std::move(ranked)};
}

inline auto is_normalized(const WeightedGraph & g) -> bool
{
    auto values = g.weight_values();
    return values.empty() || (values.front() == 1 && values.back() == static_cast<int>(values.size()));
}

inline auto complement(const Graph & g) -> Graph
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex a = 0; a < g.size(); ++a)
        for (Vertex b = a + 1; b < g.size(); ++b)
            if (! g.adjacent(a, b))
                edges.emplace_back(a, b);
    return Graph(g.size(), edges);
}

struct InducedSubgraph
{
    Graph graph;
    std::vector<Vertex> old_to_new;  // -1 when dropped
    std::vector<Vertex> new_to_old;
};

inline auto induced_subgraph(const Graph & g, std::span<const Vertex> keep) -> InducedSubgraph
{
    InducedSubgraph r;
    r.old_to_new.assign(static_cast<std::size_t>(g.size()), -1);
    std::vector<Vertex> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) {
        if (v < 0 || v >= g.size())
            throw PreconditionError("vertex id out of range: " + std::to_string(v + 1));
        r.old_to_new[static_cast<std::size_t>(v)] = static_cast<Vertex>(r.new_to_old.size());
        r.new_to_old.push_back(v);
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [a, b] : g.edges()) {
        auto na = r.old_to_new[static_cast<std::size_t>(a)], nb = r.old_to_new[static_cast<std::size_t>(b)];
        if (na >= 0 && nb >= 0)
            edges.emplace_back(na, nb);
    }
    r.graph = Graph(static_cast<int>(r.new_to_old.size()), edges);
    return r;
}

inline auto induced_subgraph(const Graph & g, std::initializer_list<Vertex> keep) -> InducedSubgraph
{
    return induced_subgraph(g, std::span<const Vertex>(keep.begin(), keep.size()));
}

// Elementary constructions.

inline auto path_graph(int n) -> Graph
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline auto cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw PreconditionError("cycle needs n >= 3");
    auto e = std::vector<std::pair<Vertex, Vertex>>{};
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline auto complete_graph(int n) -> Graph
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            e.emplace_back(a, b);
    return Graph(n, e);
}

/// Complete multipartite graph; vertices numbered part by part.
inline auto complete_multipartite_graph(std::span<const int> parts) -> Graph
{
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] < 1)
            throw PreconditionError("part sizes must be >= 1");
        part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
    }
    std::vector<std::pair<Vertex, Vertex>> e;
    const int n = static_cast<int>(part_of.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part_of[static_cast<std::size_t>(a)] != part_of[static_cast<std::size_t>(b)])
                e.emplace_back(a, b);
    return Graph(n, e);
}

inline auto complete_multipartite_graph(std::initializer_list<int> parts) -> Graph
{
    return complete_multipartite_graph(std::span<const int>(parts.begin(), parts.size()));
}

}
