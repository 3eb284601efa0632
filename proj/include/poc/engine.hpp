#pragma once

// Properly ordered colorings: validity, the greedy constructions, and the
// correspondence between POCs and good acyclic orientations.

#include <poc/chromatic.hpp>
#include <poc/graph.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

namespace poc {

struct PocCheck
{
    bool valid = true;
    std::optional<Edge> violation;  // first offending edge in sorted edge order

    explicit operator bool() const { return valid; }
};

/// Every edge uv must satisfy w(u) > w(v) => c(u) > c(v) and w(u) = w(v) => c(u) != c(v).
inline auto is_valid_poc(const WeightedGraph & g, const Coloring & c) -> PocCheck
{
    if (c.size() != g.size())
        throw PreconditionError("coloring has " + std::to_string(c.size()) + " entries, graph has " + std::to_string(g.size()) + " vertices");
    for (auto e : g.graph().edges()) {
        int wu = g.weight(e.u), wv = g.weight(e.v), cu = c.color(e.u), cv = c.color(e.v);
        bool ok = wu == wv ? cu != cv : (wu > wv) == (cu > cv) && cu != cv;
        if (! ok)
            return {false, e};
    }
    return {};
}

/// Vertices by non-decreasing weight, ties by ascending id.
inline auto weight_order(const WeightedGraph & g) -> std::vector<Vertex>
{
    std::vector<Vertex> order(static_cast<std::size_t>(g.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.weight(a) < g.weight(b); });
    return order;
}

/// Greedy POC: each vertex gets one more than the largest color among its
/// already-processed neighbours (1 if there are none).
inline auto algorithm_f(const WeightedGraph & g) -> Coloring
{
    if (g.size() < 1)
        throw PreconditionError("algorithm_f needs at least one vertex");
    const auto order = weight_order(g);
    std::vector<int> color(static_cast<std::size_t>(g.size()), 0);
    for (Vertex v : order) {
        int top = 0;
        for (Vertex u : g.graph().neighbors(v))
            top = std::max(top, color[static_cast<std::size_t>(u)]);
        color[static_cast<std::size_t>(v)] = top + 1;
    }
    return Coloring(std::move(color));
}

/// Per weight class an optimal proper coloring, classes stacked in disjoint
/// increasing color blocks.
inline auto layered_stack_coloring(const WeightedGraph & input) -> Coloring
{
    const auto g = normalize_weights(input);
    std::vector<int> color(static_cast<std::size_t>(g.size()), 0);
    int offset = 0;
    for (int w = 1; w <= g.weight_count(); ++w) {
        std::vector<Vertex> cls;
        for (Vertex v = 0; v < g.size(); ++v)
            if (g.weight(v) == w)
                cls.push_back(v);
        auto sub = induced_subgraph(g.graph(), cls);
        auto chi = chromatic_coloring(sub.graph);
        for (std::size_t i = 0; i < cls.size(); ++i)
            color[static_cast<std::size_t>(cls[i])] = offset + chi.coloring.color(static_cast<Vertex>(i));
        offset += chi.count;
    }
    return Coloring(std::move(color), offset);
}

/// Cross-weight edges point heavier to lighter; equal-weight edges lower id to higher id.
inline auto build_good_orientation(const WeightedGraph & g) -> Orientation
{
    std::vector<Arc> arcs;
    for (auto [a, b] : g.graph().edges()) {
        if (g.weight(a) > g.weight(b))
            arcs.push_back({a, b});
        else if (g.weight(a) < g.weight(b))
            arcs.push_back({b, a});
        else
            arcs.push_back({a, b});
    }
    return {g.size(), std::move(arcs)};
}

namespace detail {

    // Kahn order; empty optional on a directed cycle.
    inline auto topological_order(const Orientation & d) -> std::optional<std::vector<Vertex>>
    {
        std::vector<int> indeg(static_cast<std::size_t>(d.size()), 0);
        for (auto a : d.arcs())
            ++indeg[static_cast<std::size_t>(a.head)];
        std::vector<Vertex> order, ready;
        for (Vertex v = 0; v < d.size(); ++v)
            if (! indeg[static_cast<std::size_t>(v)])
                ready.push_back(v);
        while (! ready.empty()) {
            Vertex v = ready.back();
            ready.pop_back();
            order.push_back(v);
            for (Vertex h : d.out_neighbors(v))
                if (! --indeg[static_cast<std::size_t>(h)])
                    ready.push_back(h);
        }
        if (static_cast<int>(order.size()) != d.size())
            return std::nullopt;
        return order;
    }

}

inline auto is_acyclic(const Orientation & d) -> bool
{
    return detail::topological_order(d).has_value();
}

inline auto is_good_acyclic(const WeightedGraph & g, const Orientation & d) -> bool
{
    if (! d.orients(g.graph()))
        throw PreconditionError("arc set does not match the edge set of the graph");
    for (auto [t, h] : d.arcs())
        if (g.weight(t) < g.weight(h))
            return false;
    return is_acyclic(d);
}

/// Number of vertices on a longest directed path.
inline auto dag_longest_path(const Orientation & d) -> int
{
    auto order = detail::topological_order(d);
    if (! order)
        throw PreconditionError("orientation contains a directed cycle");
    std::vector<int> longest(static_cast<std::size_t>(d.size()), 1);
    int best = d.size() ? 1 : 0;
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
        auto & here = longest[static_cast<std::size_t>(*it)];
        for (Vertex h : d.out_neighbors(*it))
            here = std::max(here, longest[static_cast<std::size_t>(h)] + 1);
        best = std::max(best, here);
    }
    return best;
}

/// Processing order for the directed greedy: non-decreasing weight, and within
/// a weight class every arc's head before its tail (smallest id first among
/// the ready vertices).
inline auto orientation_order(const WeightedGraph & g, const Orientation & d) -> std::vector<Vertex>
{
    std::vector<int> pending(static_cast<std::size_t>(g.size()), 0);
    for (auto [t, h] : d.arcs())
        if (g.weight(t) == g.weight(h))
            ++pending[static_cast<std::size_t>(t)];

    std::vector<std::vector<Vertex>> in_class(static_cast<std::size_t>(g.size()));
    for (auto [t, h] : d.arcs())
        if (g.weight(t) == g.weight(h))
            in_class[static_cast<std::size_t>(h)].push_back(t);

    std::vector<Vertex> order;
    const auto by_weight = weight_order(g);
    for (std::size_t i = 0; i < by_weight.size();) {
        std::size_t j = i;
        while (j < by_weight.size() && g.weight(by_weight[j]) == g.weight(by_weight[i]))
            ++j;
        std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
        for (std::size_t k = i; k < j; ++k)
            if (! pending[static_cast<std::size_t>(by_weight[k])])
                ready.push(by_weight[k]);
        while (! ready.empty()) {
            Vertex v = ready.top();
            ready.pop();
            order.push_back(v);
            for (Vertex t : in_class[static_cast<std::size_t>(v)])
                if (! --pending[static_cast<std::size_t>(t)])
                    ready.push(t);
        }
        i = j;
    }
    if (static_cast<int>(order.size()) != g.size())
        throw PreconditionError("orientation has a directed cycle inside a weight class");
    return order;
}

/// Directed greedy: each vertex gets one more than the largest color among its
/// out-neighbours (all of which are processed earlier).
inline auto algorithm_f_prime(const WeightedGraph & g, const Orientation & d) -> Coloring
{
    if (! is_good_acyclic(g, d))
        throw PreconditionError("orientation is not a good acyclic orientation");
    std::vector<int> color(static_cast<std::size_t>(g.size()), 0);
    for (Vertex v : orientation_order(g, d)) {
        int top = 0;
        for (Vertex h : d.out_neighbors(v))
            top = std::max(top, color[static_cast<std::size_t>(h)]);
        color[static_cast<std::size_t>(v)] = top + 1;
    }
    return Coloring(std::move(color));
}

/// Orients every edge from the larger color to the smaller one.
inline auto orientation_from_coloring(const WeightedGraph & g, const Coloring & c) -> Orientation
{
    if (! is_valid_poc(g, c))
        throw PreconditionError("coloring is not a valid POC");
    std::vector<Arc> arcs;
    for (auto [a, b] : g.graph().edges())
        arcs.push_back(c.color(a) > c.color(b) ? Arc{a, b} : Arc{b, a});
    return {g.size(), std::move(arcs)};
}

}
