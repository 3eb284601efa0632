#include <poc/catalog.hpp>
#include <poc/io.hpp>

#include <gtest/gtest.h>

#include <fstream>

using namespace poc;

namespace {

auto load_fixture(const std::string & name) -> WeightedGraph
{
    std::ifstream in(std::string(POC_FIXTURE_DIR) + "/" + name);
    return parse_wpoc(in);
}

auto parse_error_line(const std::string & text) -> int
{
    try {
        parse_wpoc(text);
    }
    catch (const ParseError & e) {
        return e.line();
    }
    return -1;
}

}

TEST(ParseWpoc, SingleVertex)
{
    auto g = parse_wpoc("p wpoc 1 0\nv 1 7\n");
    EXPECT_EQ(g.size(), 1);
    EXPECT_EQ(g.graph().edge_count(), 0);
    EXPECT_EQ(g.weights(), std::vector<int>{7});
}

TEST(ParseWpoc, FourCycleFixture)
{
    auto g = load_fixture("C4W.wpoc");
    ASSERT_EQ(g.size(), 4);
    std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    EXPECT_EQ(g.graph().edges(), expected);
    EXPECT_EQ(g.weights(), (std::vector<int>{1, 1, 2, 3}));
}

TEST(ParseWpoc, CommentsAndBlankLines)
{
    auto g = parse_wpoc("# head\n\np wpoc 2 1  # trailing\n v 1 3\nv 2 1 # B\n\ne 2 1\n");
    EXPECT_EQ(g.weights(), (std::vector<int>{3, 1}));
    EXPECT_TRUE(g.graph().adjacent(0, 1));
}

TEST(ParseWpoc, ErrorsCarryLineNumbers)
{
    EXPECT_EQ(parse_error_line("p wpoc 2 1\nv 1 1\nv 2 1\ne 1 1\n"), 4);
    EXPECT_EQ(parse_error_line("p wpoc 2 2\nv 1 1\nv 2 1\ne 1 2\ne 2 1\n"), 5);
    EXPECT_EQ(parse_error_line("p wpoc 2 0\nv 1 0\nv 2 1\n"), 2);
    EXPECT_EQ(parse_error_line("p wpoc 2 1\nv 1 1\nv 2 1\ne 1 3\n"), 4);
    EXPECT_EQ(parse_error_line("p wpoc 2 0\nv 1 1\nv 3 1\n"), 3);
    EXPECT_EQ(parse_error_line("v 1 1\n"), 1);
    EXPECT_EQ(parse_error_line("# c\np wpoc 1 0\nv 1 x\n"), 3);
    EXPECT_EQ(parse_error_line("p wpoc 1 0\nv 1 1\nq 1\n"), 3);
    EXPECT_GT(parse_error_line("p wpoc 2 0\nv 1 1\n"), 0);
    EXPECT_GT(parse_error_line("p wpoc 2 1\nv 1 1\nv 2 1\n"), 0);
}

TEST(ParseWpoc, RoundTripOnRandomInstances)
{
    InstanceRng rng(11);
    for (int i = 0; i < 200; ++i) {
        auto g = random_weighted_graph(rng.uniform(0, 12), 0.4, rng.uniform(1, 20), rng);
        EXPECT_EQ(parse_wpoc(to_wpoc(g)), g);
    }
}

TEST(Coloring, ParseAndWrite)
{
    auto c = parse_coloring("palette 3\nc 2 2\nc 1 1\nc 3 3\n", 3);
    EXPECT_EQ(c.colors(), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(c.palette(), 3);
    std::ostringstream out;
    write_coloring(out, c);
    EXPECT_EQ(parse_coloring(out.str(), 3), c);
    EXPECT_THROW(parse_coloring("palette 2\nc 1 3\n", 1), ParseError);
    EXPECT_THROW(parse_coloring("c 1 1\n", 1), ParseError);
    EXPECT_THROW(parse_coloring("palette 2\nc 1 1\n", 2), ParseError);
}

TEST(OrientationFile, ParseAndWrite)
{
    auto d = parse_orientation("a 2 1\na 3 2\n", 3);
    EXPECT_TRUE(d.has_arc(1, 0));
    EXPECT_TRUE(d.has_arc(2, 1));
    std::ostringstream out;
    write_orientation(out, d);
    EXPECT_EQ(parse_orientation(out.str(), 3), d);
    EXPECT_THROW(parse_orientation("a 1 4\n", 3), ParseError);
}

TEST(NormalizeWeights, RankCompression)
{
    auto p = path_graph(3);
    EXPECT_EQ(normalize_weights({p, {1, 5, 9}}).weights(), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(normalize_weights({p, {2, 2, 7}}).weights(), (std::vector<int>{1, 1, 2}));
    EXPECT_EQ(normalize_weights({p, {1, 2, 3}}).weights(), (std::vector<int>{1, 2, 3}));
}

TEST(NormalizeWeights, IdempotentAndOrderPreserving)
{
    InstanceRng rng(5);
    for (int i = 0; i < 200; ++i) {
        auto g = random_weighted_graph(rng.uniform(1, 10), 0.3, rng.uniform(1, 50), rng);
        auto h = normalize_weights(g);
        EXPECT_EQ(normalize_weights(h), h);
        EXPECT_TRUE(is_normalized(h));
        for (Vertex a = 0; a < g.size(); ++a)
            for (Vertex b = 0; b < g.size(); ++b)
                EXPECT_EQ(g.weight(a) < g.weight(b), h.weight(a) < h.weight(b));
    }
}

TEST(Complement, SmallCases)
{
    EXPECT_EQ(complement(complete_graph(3)).edge_count(), 0);
    auto star = complement(Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
    EXPECT_EQ(star.degree(0), 0);
    EXPECT_EQ(star.edge_count(), 3);
    EXPECT_TRUE(star.adjacent(1, 2) && star.adjacent(1, 3) && star.adjacent(2, 3));
}

TEST(Complement, InvolutionOnAllSmallGraphs)
{
    for (int n = 0; n <= 5; ++n)
        for (const auto & g : graphs_up_to_isomorphism(n)) {
            auto c = complement(g);
            EXPECT_EQ(complement(c), g);
            EXPECT_EQ(g.edge_count() + c.edge_count(), n * (n - 1) / 2);
        }
}

TEST(InducedSubgraph, Cases)
{
    auto c4w = load_fixture("C4W.wpoc");
    auto top = induced_subgraph(c4w.graph(), {0, 1});
    EXPECT_EQ(top.graph.size(), 2);
    EXPECT_EQ(top.graph.edge_count(), 1);
    EXPECT_EQ(top.new_to_old, (std::vector<Vertex>{0, 1}));

    EXPECT_EQ(induced_subgraph(c4w.graph(), std::span<const Vertex>{}).graph.size(), 0);
    auto k3 = induced_subgraph(complete_graph(4), {0, 2, 3});
    EXPECT_EQ(k3.graph, complete_graph(3));
    EXPECT_EQ(k3.old_to_new, (std::vector<Vertex>{0, -1, 1, 2}));
    EXPECT_THROW(induced_subgraph(complete_graph(2), {5}), PreconditionError);
}

TEST(GraphModel, RejectsInvalidInput)
{
    EXPECT_THROW(Graph(2, {{0, 0}}), PreconditionError);
    EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), PreconditionError);
    EXPECT_THROW(Graph(2, {{0, 2}}), PreconditionError);
    EXPECT_THROW(WeightedGraph(path_graph(2), {1, 0}), PreconditionError);
    EXPECT_THROW(WeightedGraph(path_graph(2), {1}), PreconditionError);
    EXPECT_THROW(Coloring({1, 3}, 2), PreconditionError);
}

TEST(Catalog, IsomorphismClassCounts)
{
    const std::vector<std::size_t> known{1, 1, 2, 4, 11, 34, 156};
    for (int n = 0; n <= 6; ++n)
        EXPECT_EQ(graphs_up_to_isomorphism(n).size(), known[static_cast<std::size_t>(n)]) << "n=" << n;
}

TEST(Catalog, RandomGeneratorIsDeterministic)
{
    InstanceRng a(7), b(7);
    EXPECT_EQ(to_wpoc(random_weighted_graph(8, 0.5, 3, a)), to_wpoc(random_weighted_graph(8, 0.5, 3, b)));
}
