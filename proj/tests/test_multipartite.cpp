#include "brute.hpp"

#include <poc/catalog.hpp>
#include <poc/engine.hpp>
#include <poc/io.hpp>
#include <poc/multipartite.hpp>
#include <poc/oracles.hpp>

#include <gtest/gtest.h>

#include <fstream>

using namespace poc;

namespace {

auto load_fixture(const std::string & name) -> WeightedGraph
{
    std::ifstream in(std::string(POC_FIXTURE_DIR) + "/" + name);
    return parse_wpoc(in);
}

auto k135() -> MultipartiteInstance
{
    return multipartite_instance(load_fixture("K135.wpoc"), {1, 3, 5}, true);
}

// K135 ids, part by part
constexpr Vertex X1 = 0, Y1 = 1, Y2 = 2, Y3 = 3, Z1 = 4, Z2 = 5, Z3 = 6, Z4 = 7, Z5 = 8;

auto two_by_two() -> MultipartiteInstance
{
    return {{2, 2}, {1, 2, 1, 2}};
}

using Sets = std::vector<std::vector<Vertex>>;

// every weighting of K_{parts} with values in 1..t, one representative per
// per-part multiset
void each_instance(const std::vector<int> & parts, int t, const std::function<void(const MultipartiteInstance &)> & fn)
{
    std::vector<std::vector<std::vector<int>>> per_part;
    for (int size : parts) {
        std::vector<std::vector<int>> seqs;
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int from) {
            if (static_cast<int>(cur.size()) == size) {
                seqs.push_back(cur);
                return;
            }
            for (int w = from; w <= t; ++w) {
                cur.push_back(w);
                rec(w);
                cur.pop_back();
            }
        };
        rec(1);
        per_part.push_back(seqs);
    }
    std::vector<int> w;
    std::function<void(std::size_t)> rec = [&](std::size_t p) {
        if (p == per_part.size()) {
            fn(MultipartiteInstance(parts, w));
            return;
        }
        for (const auto & s : per_part[p]) {
            w.insert(w.end(), s.begin(), s.end());
            rec(p + 1);
            w.resize(w.size() - s.size());
        }
    };
    rec(0);
}

auto part_lists(int k_max, int size_max) -> std::vector<std::vector<int>>
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int from, int left) {
        if (cur.size() >= 2)
            out.push_back(cur);
        if (left == 0)
            return;
        for (int s = from; s <= size_max; ++s) {
            cur.push_back(s);
            rec(s, left - 1);
            cur.pop_back();
        }
    };
    rec(1, k_max);
    return out;
}

}

TEST(MultipartiteInstance, Basics)
{
    auto inst = k135();
    EXPECT_EQ(inst.k(), 3);
    EXPECT_EQ(inst.n(), 9);
    EXPECT_EQ(inst.t(), 4);
    EXPECT_EQ(inst.part_of(Z5), 2);
    EXPECT_EQ(inst.offset_of(Z5), 4);
    EXPECT_EQ(inst.label(Y2), "b2");
    EXPECT_THROW(MultipartiteInstance({3}, {1, 1, 1}), PreconditionError);
    EXPECT_THROW(multipartite_instance(load_fixture("C4W.wpoc"), {2, 2}, false), PreconditionError);
}

TEST(FindMocs, Examples)
{
    auto m = find_mocs(k135());
    EXPECT_EQ(m.total(), 8);
    EXPECT_EQ(m.cliques, (Sets{{X1, Y1, Z1}, {Z2}, {Y2, Z3}, {Y3, Z4}}));

    MultipartiteInstance k111({1, 1, 1}, {1, 2, 3});
    EXPECT_EQ(find_mocs(k111).cliques, (Sets{{0}, {1}, {2}}));

    MultipartiteInstance k23({2, 3}, {1, 1, 1, 1, 1});
    EXPECT_EQ(find_mocs(k23).cliques, (Sets{{0, 2}}));

    EXPECT_THROW(find_mocs(MultipartiteInstance({1, 1}, {1, 3})), PreconditionError);
}

TEST(EnumerateMocs, Examples)
{
    auto all = enumerate_mocs(k135());
    ASSERT_EQ(all.size(), 2u);
    EXPECT_EQ(all[0].cliques, find_mocs(k135()).cliques);
    EXPECT_EQ(all[1].cliques[1], (std::vector<Vertex>{Z5}));
    EXPECT_EQ(enumerate_mocs(MultipartiteInstance({1, 1, 1}, {1, 2, 3})).size(), 1u);
    EXPECT_EQ(enumerate_mocs(two_by_two()).size(), 1u);
    Caps tight;
    tight.mocs = 1;
    EXPECT_THROW(enumerate_mocs(k135(), tight), CapExceeded);
}

TEST(EnumerateMocs, MatchesSubsetSearch)
{
    for (const auto & parts : part_lists(3, 3))
        for (int t = 1; t <= 2; ++t)
            each_instance(parts, t, [&](const MultipartiteInstance & raw) {
                auto inst = raw.normalized();
                std::set<Sets> mine;
                for (const auto & m : enumerate_mocs(inst)) {
                    ASSERT_FALSE(mocs_violation(inst, m));
                    mine.insert(m.cliques);
                }
                ASSERT_EQ(mine, brute::all_mocs(inst));
            });
}

TEST(FindMaxSpaths, Examples)
{
    auto inst = k135();
    auto s = find_max_spaths(inst, find_mocs(inst));
    EXPECT_EQ(s.vertex_count(), 5);
    EXPECT_EQ(s.q(), 2);
    EXPECT_EQ(s.paths, (Sets{{Z1, Z2, Z3}, {Y2, Y3}}));

    MultipartiteInstance kt({1, 1, 1}, {1, 2, 3});
    EXPECT_EQ(find_max_spaths(kt, find_mocs(kt)).q(), 0);

    auto b = two_by_two();
    auto sb = find_max_spaths(b, find_mocs(b));
    EXPECT_EQ(sb.vertex_count(), 2);
    EXPECT_EQ(sb.q(), 1);
}

TEST(FindMaxSpaths, OptimalAndValidOnSmallFamilies)
{
    for (const auto & parts : part_lists(3, 3))
        for (int t = 1; t <= 3; ++t)
            each_instance(parts, t, [&](const MultipartiteInstance & raw) {
                auto inst = raw.normalized();
                for (const auto & m : enumerate_mocs(inst)) {
                    auto s = find_max_spaths(inst, m);
                    ASSERT_FALSE(spaths_violation(inst, m, s));
                    auto best = brute::spaths_optimum(inst, m);
                    ASSERT_EQ(s.vertex_count(), best.vertices);
                    ASSERT_EQ(s.q(), best.min_q);
                }
            });
}

TEST(SpathsViolation, Rejections)
{
    auto inst = k135();
    auto m = find_mocs(inst);
    EXPECT_FALSE(spaths_violation(inst, m, SPaths{}));
    // single vertex path
    EXPECT_TRUE(spaths_violation(inst, m, SPaths{{{Z1}}}));
    // weights jump by two
    EXPECT_TRUE(spaths_violation(inst, m, SPaths{{{Z1, Z3}}}));
    // crosses parts
    EXPECT_TRUE(spaths_violation(inst, m, SPaths{{{Y1, Z2}}}));
    // Z5 is outside the chosen cliques
    EXPECT_TRUE(spaths_violation(inst, m, SPaths{{{Z1, Z5}}}));
    // interior Y2 sits in a two-vertex clique
    EXPECT_TRUE(spaths_violation(inst, m, SPaths{{{Z2, Z3, Z4}}}));

    auto b = two_by_two();
    auto mb = find_mocs(b);
    // both paths share cliques H1 and H2
    EXPECT_TRUE(spaths_violation(b, mb, SPaths{{{0, 1}, {2, 3}}}));
}

TEST(Prop1Coloring, Examples)
{
    auto inst = k135();
    auto m = find_mocs(inst);
    auto c = prop1_coloring(inst, m, find_max_spaths(inst, m));
    EXPECT_EQ(c.colors(), (std::vector<int>{1, 2, 4, 4, 3, 3, 3, 5, 3}));
    EXPECT_EQ(c.palette(), 5);
    EXPECT_EQ(c.color(Z5), 3);
    EXPECT_TRUE(is_valid_poc(inst.weighted_graph(), c));
    // the value printed alongside the example would clash with Y1
    auto typo = c.colors();
    typo[Z5] = 2;
    EXPECT_FALSE(is_valid_poc(inst.weighted_graph(), Coloring(typo, 5)));

    MultipartiteInstance k11({1, 1}, {1, 2});
    auto mk = find_mocs(k11);
    EXPECT_EQ(prop1_coloring(k11, mk, find_max_spaths(k11, mk)).colors(), (std::vector<int>{1, 2}));

    auto b = two_by_two();
    auto mb = find_mocs(b);
    auto cb = prop1_coloring(b, mb, find_max_spaths(b, mb));
    EXPECT_EQ(cb.palette(), 3);
    EXPECT_TRUE(is_valid_poc(b.weighted_graph(), cb));
}

TEST(Prop1Coloring, ColorCountOnSmallFamilies)
{
    for (const auto & parts : part_lists(3, 3))
        for (int t = 1; t <= 3; ++t)
            each_instance(parts, t, [&](const MultipartiteInstance & raw) {
                auto inst = raw.normalized();
                for (const auto & m : enumerate_mocs(inst)) {
                    auto s = find_max_spaths(inst, m);
                    auto c = prop1_coloring(inst, m, s);
                    ASSERT_TRUE(is_valid_poc(inst.weighted_graph(), c));
                    ASSERT_EQ(c.palette(), m.total() - s.vertex_count() + s.q());
                    ASSERT_EQ(c.distinct_colors(), c.palette());
                    for (const auto & p : s.paths)
                        for (Vertex v : p)
                            ASSERT_EQ(c.color(v), c.color(p.front()));
                }
            });
}

TEST(GValue, Examples)
{
    auto r = g_value(k135());
    EXPECT_EQ(r.value, 5);
    EXPECT_EQ(g_value(MultipartiteInstance({1, 1}, {1, 2})).value, 2);
    EXPECT_EQ(g_value(two_by_two()).value, 3);
}

TEST(GValue, EqualsChiPocOnSmallFamilies)
{
    for (const auto & parts : part_lists(3, 3))
        for (int t = 1; t <= 3; ++t)
            each_instance(parts, t, [&](const MultipartiteInstance & raw) {
                auto inst = raw.normalized();
                const int g = g_value(inst).value;
                ASSERT_EQ(g, chi_poc_exact(inst.weighted_graph()).value);
                ASSERT_LE(g, multipartite_upper_bound(inst.k(), inst.t()));
            });
}

TEST(HValue, Examples)
{
    EXPECT_EQ(h_value({1, 3}, 3).value, 3);
    EXPECT_EQ(h_value({2, 3}, 5).value, 5);
    EXPECT_EQ(h_value({2, 2}, 2).value, 3);
    EXPECT_EQ(h_value({2, 2}, 2).value, multipartite_upper_bound(2, 2));
    EXPECT_THROW(h_value({3}, 2), PreconditionError);
}

TEST(HValue, MatchesChiPocTOnSmallFamilies)
{
    for (const auto & parts : part_lists(2, 3))
        for (int t = 1; t <= 3; ++t)
            ASSERT_EQ(h_value(parts, t).value, chi_poc_t(complete_multipartite_graph(parts), t).value);
}

TEST(BipartiteFormula, Examples)
{
    EXPECT_EQ(bipartite_chi_poc_t(1, 1, 3), 2);
    EXPECT_EQ(bipartite_chi_poc_t(2, 3, 5), 5);
    EXPECT_EQ(bipartite_chi_poc_t(2, 5, 6), 5);
    EXPECT_THROW(bipartite_chi_poc_t(2, 3, 4), PreconditionError);
    EXPECT_THROW(bipartite_chi_poc_t(3, 2, 9), PreconditionError);
}

TEST(BipartiteFormula, MatchesOracle)
{
    for (int m = 1; m <= 2; ++m)
        for (int n = m; n <= 3; ++n)
            EXPECT_EQ(chi_poc_t(complete_multipartite_graph({m, n}), 2 * m + 1).value, bipartite_chi_poc_t(m, n, 2 * m + 1));
}

TEST(BipartiteLayered, Examples)
{
    // a1 a2 | b1..b5
    auto c = bipartite_layered_coloring(2, 5, {2, 4, 1, 3, 3, 5, 5});
    EXPECT_EQ(c.colors(), (std::vector<int>{2, 4, 1, 3, 3, 5, 5}));
    EXPECT_EQ(c.palette(), 5);

    EXPECT_EQ(bipartite_layered_coloring(1, 1, {3, 7}).palette(), 2);
    EXPECT_EQ(bipartite_layered_coloring(1, 1, {4, 4}).palette(), 2);

    auto star = bipartite_layered_coloring(1, 5, {1, 1, 1, 1, 1, 1});
    EXPECT_EQ(star.colors(), (std::vector<int>{2, 1, 1, 1, 1, 1}));
    EXPECT_LE(star.palette(), 3);
}

TEST(BipartiteLayered, RandomWeightings)
{
    InstanceRng rng(47);
    for (int i = 0; i < 500; ++i) {
        int m = rng.uniform(1, 3), n = rng.uniform(m, 6);
        std::vector<int> w;
        for (int v = 0; v < m + n; ++v)
            w.push_back(rng.uniform(1, 8));
        auto c = bipartite_layered_coloring(m, n, w);
        ASSERT_TRUE(is_valid_poc({complete_multipartite_graph({m, n}), w}, c));
        ASSERT_LE(c.palette(), std::min(m + n, 2 * m + 1));
    }
}

TEST(UpperBound, Examples)
{
    EXPECT_EQ(multipartite_upper_bound(2, 3), 4);
    EXPECT_EQ(multipartite_upper_bound(3, 2), 5);
    EXPECT_EQ(multipartite_upper_bound(2, 1), 2);
    EXPECT_THROW(multipartite_upper_bound(1, 2), PreconditionError);
}

TEST(Completion, Examples)
{
    auto c5 = complete_to_multipartite(cycle_graph(5));
    auto sizes = c5.part_sizes;
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<int>{1, 2, 2}));

    EXPECT_EQ(complete_to_multipartite(complete_graph(4)).part_sizes, (std::vector<int>{1, 1, 1, 1}));

    auto k23 = complete_to_multipartite(complete_multipartite_graph({2, 3}));
    sizes = k23.part_sizes;
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<int>{2, 3}));

    EXPECT_THROW(complete_to_multipartite(Graph(3)), PreconditionError);
}

TEST(Completion, EdgesMapIntoMultipartiteGraph)
{
    for (int n = 2; n <= 6; ++n)
        for (const auto & g : graphs_up_to_isomorphism(n)) {
            if (g.edge_count() == 0)
                continue;
            auto c = complete_to_multipartite(g);
            ASSERT_EQ(static_cast<int>(c.part_sizes.size()), chromatic_number(g));
            auto big = c.skeleton().graph();
            for (auto [a, b] : g.edges())
                ASSERT_TRUE(big.adjacent(c.vertex_map[static_cast<std::size_t>(a)], c.vertex_map[static_cast<std::size_t>(b)]));
        }
}

TEST(Completion, ColoringThroughCompletionRespectsBound)
{
    for (int n = 1; n <= 5; ++n)
        for (const auto & g : graphs_up_to_isomorphism(n)) {
            const int chi = chromatic_number(g);
            for (const auto & w : all_weak_orderings(n, 3)) {
                WeightedGraph wg(g, w);
                auto c = coloring_via_completion(wg);
                ASSERT_TRUE(is_valid_poc(wg, c));
                const int t = wg.weight_count();
                ASSERT_LE(c.palette(), (chi - 1) * t + 1);
            }
        }
}

TEST(Sharpness, AllWeightsInEveryPart)
{
    for (int k = 2; k <= 3; ++k)
        for (int t = 2; t <= 3; ++t) {
            std::vector<int> parts(static_cast<std::size_t>(k), t), w;
            for (int p = 0; p < k; ++p)
                for (int i = 1; i <= t; ++i)
                    w.push_back(i);
            MultipartiteInstance inst(parts, w);
            auto s = find_max_spaths(inst, find_mocs(inst));
            EXPECT_EQ(s.vertex_count(), 2 * t - 2) << "k=" << k << " t=" << t;
            EXPECT_EQ(g_value(inst).value, multipartite_upper_bound(k, t));
        }
}
