#pragma once

// Text formats. All ids in files are 1-based.
//
//   WPOC:         p wpoc <n> <m> / v <id> <weight> (n lines) / e <u> <v> (m lines)
//   coloring:     palette <theta> / c <id> <color> (one per vertex)
//   orientation:  a <tail> <head> (one per edge)
//
// '#' starts a comment that runs to end of line.

#include <poc/graph.hpp>

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace poc {

class ParseError : public PocError
{
public:
    ParseError(int line, const std::string & what) :
        PocError("line " + std::to_string(line) + ": " + what), _line(line)
    {
    }

    auto line() const -> int { return _line; }

private:
    int _line;
};

namespace detail {

    struct Line
    {
        int number;
        std::vector<std::string> tokens;
    };

    // Non-empty lines with comments stripped, split on whitespace.
    inline auto tokenize(std::istream & in) -> std::vector<Line>
    {
        std::vector<Line> out;
        std::string raw;
        int number = 0;
        while (std::getline(in, raw)) {
            ++number;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            std::istringstream ss(raw);
            Line line{number, {}};
            for (std::string tok; ss >> tok;)
                line.tokens.push_back(tok);
            if (! line.tokens.empty())
                out.push_back(std::move(line));
        }
        return out;
    }

    inline auto to_int(const Line & line, std::size_t i) -> long
    {
        if (i >= line.tokens.size())
            throw ParseError(line.number, "missing field");
        const auto & tok = line.tokens[i];
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(tok, &used);
        }
        catch (const std::exception &) {
            throw ParseError(line.number, "not an integer: '" + tok + "'");
        }
        if (used != tok.size())
            throw ParseError(line.number, "not an integer: '" + tok + "'");
        return value;
    }

    inline void expect_fields(const Line & line, std::size_t count)
    {
        if (line.tokens.size() != count)
            throw ParseError(line.number, "expected " + std::to_string(count) + " fields, got " + std::to_string(line.tokens.size()));
    }

    inline auto to_id(const Line & line, std::size_t i, long n) -> Vertex
    {
        auto id = to_int(line, i);
        if (id < 1 || id > n)
            throw ParseError(line.number, "vertex id " + std::to_string(id) + " out of range 1.." + std::to_string(n));
        return static_cast<Vertex>(id - 1);
    }

}

inline auto parse_wpoc(std::istream & in) -> WeightedGraph
{
    auto lines = detail::tokenize(in);
    if (lines.empty())
        throw ParseError(0, "empty input, expected 'p wpoc <n> <m>'");

    const auto & header = lines.front();
    if (header.tokens[0] != "p" || header.tokens.size() < 2 || header.tokens[1] != "wpoc")
        throw ParseError(header.number, "first line must be 'p wpoc <n> <m>'");
    detail::expect_fields(header, 4);
    const long n = detail::to_int(header, 2), m = detail::to_int(header, 3);
    if (n < 0 || m < 0)
        throw ParseError(header.number, "negative count in header");

    std::vector<std::optional<int>> weights(static_cast<std::size_t>(n));
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<Edge> seen;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto & line = lines[i];
        const auto & kind = line.tokens[0];
        if (kind == "v") {
            detail::expect_fields(line, 3);
            auto id = detail::to_id(line, 1, n);
            auto w = detail::to_int(line, 2);
            if (w < 1)
                throw ParseError(line.number, "weight must be >= 1");
            if (weights[static_cast<std::size_t>(id)])
                throw ParseError(line.number, "vertex " + std::to_string(id + 1) + " declared twice");
            weights[static_cast<std::size_t>(id)] = static_cast<int>(w);
        }
        else if (kind == "e") {
            detail::expect_fields(line, 3);
            auto a = detail::to_id(line, 1, n), b = detail::to_id(line, 2, n);
            if (a == b)
                throw ParseError(line.number, "loop at vertex " + std::to_string(a + 1));
            if (! seen.insert(Edge{std::min(a, b), std::max(a, b)}).second)
                throw ParseError(line.number, "duplicate edge " + std::to_string(a + 1) + " " + std::to_string(b + 1));
            edges.emplace_back(a, b);
        }
        else if (kind == "p")
            throw ParseError(line.number, "repeated header line");
        else
            throw ParseError(line.number, "unknown line type '" + kind + "'");
    }

    std::vector<int> w;
    for (long id = 0; id < n; ++id) {
        if (! weights[static_cast<std::size_t>(id)])
            throw ParseError(lines.back().number, "vertex " + std::to_string(id + 1) + " has no 'v' line");
        w.push_back(*weights[static_cast<std::size_t>(id)]);
    }
    if (static_cast<long>(edges.size()) != m)
        throw ParseError(header.number, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

    return {Graph(static_cast<int>(n), edges), std::move(w)};
}

inline auto parse_wpoc(const std::string & text) -> WeightedGraph
{
    std::istringstream in(text);
    return parse_wpoc(in);
}

inline void write_wpoc(std::ostream & out, const WeightedGraph & g)
{
    out << "p wpoc " << g.size() << ' ' << g.graph().edge_count() << '\n';
    for (Vertex v = 0; v < g.size(); ++v)
        out << "v " << v + 1 << ' ' << g.weight(v) << '\n';
    for (auto [a, b] : g.graph().edges())
        out << "e " << a + 1 << ' ' << b + 1 << '\n';
}

inline auto to_wpoc(const WeightedGraph & g) -> std::string
{
    std::ostringstream out;
    write_wpoc(out, g);
    return out.str();
}

/// Parses a coloring file for a graph on `n` vertices.
inline auto parse_coloring(std::istream & in, int n) -> Coloring
{
    auto lines = detail::tokenize(in);
    if (lines.empty() || lines.front().tokens[0] != "palette")
        throw ParseError(lines.empty() ? 0 : lines.front().number, "coloring must start with 'palette <theta>'");
    detail::expect_fields(lines.front(), 2);
    const long palette = detail::to_int(lines.front(), 1);
    if (palette < 0)
        throw ParseError(lines.front().number, "negative palette");

    std::vector<std::optional<int>> colors(static_cast<std::size_t>(n));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto & line = lines[i];
        if (line.tokens[0] != "c")
            throw ParseError(line.number, "expected 'c <id> <color>'");
        detail::expect_fields(line, 3);
        auto id = detail::to_id(line, 1, n);
        auto c = detail::to_int(line, 2);
        if (c < 1 || c > palette)
            throw ParseError(line.number, "color " + std::to_string(c) + " outside palette 1.." + std::to_string(palette));
        if (colors[static_cast<std::size_t>(id)])
            throw ParseError(line.number, "vertex " + std::to_string(id + 1) + " colored twice");
        colors[static_cast<std::size_t>(id)] = static_cast<int>(c);
    }

    std::vector<int> out;
    for (int id = 0; id < n; ++id) {
        if (! colors[static_cast<std::size_t>(id)])
            throw ParseError(lines.back().number, "vertex " + std::to_string(id + 1) + " has no color");
        out.push_back(*colors[static_cast<std::size_t>(id)]);
    }
    return {std::move(out), static_cast<int>(palette)};
}

inline auto parse_coloring(const std::string & text, int n) -> Coloring
{
    std::istringstream in(text);
    return parse_coloring(in, n);
}

inline void write_coloring(std::ostream & out, const Coloring & c)
{
    out << "palette " << c.palette() << '\n';
    for (Vertex v = 0; v < c.size(); ++v)
        out << "c " << v + 1 << ' ' << c.color(v) << '\n';
}

inline auto parse_orientation(std::istream & in, int n) -> Orientation
{
    std::vector<Arc> arcs;
    for (const auto & line : detail::tokenize(in)) {
        if (line.tokens[0] != "a")
            throw ParseError(line.number, "expected 'a <tail> <head>'");
        detail::expect_fields(line, 3);
        auto t = detail::to_id(line, 1, n), h = detail::to_id(line, 2, n);
        if (t == h)
            throw ParseError(line.number, "loop arc");
        arcs.push_back({t, h});
    }
    return {n, std::move(arcs)};
}

inline auto parse_orientation(const std::string & text, int n) -> Orientation
{
    std::istringstream in(text);
    return parse_orientation(in, n);
}

inline void write_orientation(std::ostream & out, const Orientation & d)
{
    for (auto [t, h] : d.arcs())
        out << "a " << t + 1 << ' ' << h + 1 << '\n';
}

inline void write_dot(std::ostream & out, const WeightedGraph & g, const Orientation & d)
{
    out << "digraph orientation {\n";
    for (Vertex v = 0; v < g.size(); ++v)
        out << "  " << v + 1 << " [label=\"" << v + 1 << " (w=" << g.weight(v) << ")\"];\n";
    for (auto [t, h] : d.arcs())
        out << "  " << t + 1 << " -> " << h + 1 << ";\n";
    out << "}\n";
}

}
