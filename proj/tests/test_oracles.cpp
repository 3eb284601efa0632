#include "brute.hpp"

#include <poc/catalog.hpp>
#include <poc/engine.hpp>
#include <poc/io.hpp>
#include <poc/oracles.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

using namespace poc;

namespace {

auto load_fixture(const std::string & name) -> WeightedGraph
{
    std::ifstream in(std::string(POC_FIXTURE_DIR) + "/" + name);
    return parse_wpoc(in);
}

auto k(int m, int n) -> Graph
{
    return complete_multipartite_graph({m, n});
}

auto star3() -> Graph
{
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}});
}

}

TEST(ChromaticNumber, Examples)
{
    EXPECT_EQ(chromatic_number(k(2, 3)), 2);
    EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
    EXPECT_EQ(chromatic_number(complete_graph(4)), 4);
    EXPECT_EQ(chromatic_number(Graph(3)), 1);
}

TEST(ChromaticNumber, MatchesEnumerationAndColoringIsProper)
{
    for (int n = 1; n <= 6; ++n)
        for (const auto & g : graphs_up_to_isomorphism(n)) {
            auto r = chromatic_coloring(g);
            ASSERT_EQ(r.count, brute::chromatic(g));
            for (auto [a, b] : g.edges())
                ASSERT_NE(r.coloring.color(a), r.coloring.color(b));
        }
}

TEST(LongestPath, Examples)
{
    EXPECT_EQ(longest_path_exact(cycle_graph(4)), 4);
    EXPECT_EQ(longest_path_exact(star3()), 3);
    EXPECT_EQ(longest_path_exact(k(2, 3)), 5);
    EXPECT_EQ(longest_path_exact(Graph(0)), 0);
    EXPECT_EQ(longest_path_exact(Graph(4)), 1);
}

TEST(LongestPath, MatchesDfsOnRandomGraphs)
{
    InstanceRng rng(31);
    for (int i = 0; i < 200; ++i) {
        auto g = random_graph(rng.uniform(1, 10), 0.3, rng);
        ASSERT_EQ(longest_path_exact(g), brute::longest_path(g));
    }
}

TEST(LongestPath, CapIsEnforced)
{
    EXPECT_THROW(longest_path_exact(path_graph(21)), CapExceeded);
    Caps caps;
    caps.longest_path = 22;
    EXPECT_EQ(longest_path_exact(path_graph(21), caps), 21);
}

TEST(ChiPocExact, Examples)
{
    auto c4w = chi_poc_exact(load_fixture("C4W.wpoc"));
    EXPECT_EQ(c4w.value, 3);
    EXPECT_TRUE(is_valid_poc(load_fixture("C4W.wpoc"), c4w.witness));

    EXPECT_EQ(chi_poc_exact({complete_graph(3), {2, 2, 2}}).value, 3);

    auto chem = load_fixture("CHEM.wpoc");
    auto r = chi_poc_exact(chem);
    EXPECT_EQ(r.value, 4);
    EXPECT_TRUE(is_valid_poc(chem, r.witness));
    EXPECT_EQ(r.witness.palette(), 4);
    // the witness quoted alongside the example: A=1 B1=3 B2=2 C1=4 C2=3 T=4
    EXPECT_TRUE(is_valid_poc(chem, Coloring({1, 3, 2, 4, 3, 4})));
}

TEST(ChiPocExact, MatchesEnumeration)
{
    InstanceRng rng(37);
    for (int i = 0; i < 300; ++i) {
        auto g = random_weighted_graph(rng.uniform(1, 6), 0.5, rng.uniform(1, 4), rng);
        auto r = chi_poc_exact(g);
        ASSERT_EQ(r.value, brute::chi_poc(g)) << to_wpoc(g);
        ASSERT_TRUE(is_valid_poc(g, r.witness));
    }
}

TEST(ChiPocExact, CapIsEnforced)
{
    WeightedGraph big(Graph(13), std::vector<int>(13, 1));
    try {
        chi_poc_exact(big);
        FAIL() << "expected CapExceeded";
    }
    catch (const CapExceeded & e) {
        EXPECT_EQ(e.cap(), "chi_poc");
    }
}

TEST(EllPrime, Examples)
{
    auto c4w = load_fixture("C4W.wpoc");
    auto r = ell_prime_gw(c4w);
    EXPECT_EQ(r.value, 3);
    // the single equal-weight edge must point TR -> TL
    EXPECT_TRUE(r.witness.has_arc(1, 0));
    EXPECT_TRUE(is_good_acyclic(c4w, r.witness));
    EXPECT_EQ(dag_longest_path(r.witness), 3);

    EXPECT_EQ(ell_prime_gw({complete_graph(3), {1, 1, 1}}).value, 3);

    auto chem = load_fixture("CHEM.wpoc");
    auto rc = ell_prime_gw(chem);
    EXPECT_EQ(rc.value, 4);
    EXPECT_EQ(brute::ell_prime(chem), 4);
}

TEST(EllPrime, MatchesFullOrientationEnumeration)
{
    InstanceRng rng(41);
    for (int i = 0; i < 200; ++i) {
        auto g = random_weighted_graph(rng.uniform(1, 6), 0.5, rng.uniform(1, 3), rng);
        auto r = ell_prime_gw(g);
        ASSERT_EQ(r.value, brute::ell_prime(g)) << to_wpoc(g);
        ASSERT_TRUE(is_good_acyclic(g, r.witness));
        ASSERT_EQ(dag_longest_path(r.witness), r.value);
    }
}

TEST(EllPrime, CapCountsOnlyEqualWeightEdges)
{
    // K_8 with distinct weights has no free edge at all
    std::vector<int> w{1, 2, 3, 4, 5, 6, 7, 8};
    EXPECT_EQ(ell_prime_gw({complete_graph(8), w}).value, 8);
    EXPECT_THROW(ell_prime_gw({complete_graph(8), std::vector<int>(8, 1)}), CapExceeded);
}

TEST(FExact, Examples)
{
    EXPECT_EQ(f_exact(path_graph(3)).value, 3);
    EXPECT_EQ(f_exact(cycle_graph(4)).value, 4);
    EXPECT_EQ(f_exact(star3()).value, 3);
    EXPECT_THROW(f_exact(Graph(9)), CapExceeded);
}

TEST(FExact, StarNeedsNoMoreThanThreeOverAllWeakOrderings)
{
    int worst = 0, seen = 0;
    for (const auto & w : all_weak_orderings(4, 4)) {
        worst = std::max(worst, brute::chi_poc({star3(), w}));
        ++seen;
    }
    EXPECT_EQ(seen, 75);
    EXPECT_EQ(worst, 3);
}

TEST(FExact, WitnessAttainsValue)
{
    for (const auto & g : graphs_up_to_isomorphism(5)) {
        auto r = f_exact(g);
        ASSERT_EQ(chi_poc_exact({g, r.weights}).value, r.value);
    }
}

TEST(FExact, ParallelAgreesWithSequential)
{
    for (const auto & g : graphs_up_to_isomorphism(5)) {
        auto a = f_exact(g, {}, 1);
        auto b = f_exact(g, {}, 3);
        ASSERT_EQ(a.value, b.value);
        ASSERT_EQ(a.weights, b.weights);
    }
}

TEST(ChiPocT, Examples)
{
    for (const auto & g : graphs_up_to_isomorphism(4))
        EXPECT_EQ(chi_poc_t(g, 1).value, chromatic_number(g));
    EXPECT_EQ(chi_poc_t(k(2, 3), 5).value, 5);
    EXPECT_EQ(chi_poc_t(star3(), 3).value, 3);
    EXPECT_THROW(chi_poc_t(star3(), 0), PreconditionError);
    EXPECT_THROW(chi_poc_t(Graph(9), 2), CapExceeded);
}

TEST(ChiPocT, MonotoneInT)
{
    for (int n = 1; n <= 5; ++n)
        for (const auto & g : graphs_up_to_isomorphism(n)) {
            auto prof = chi_poc_t_profile(g, n + 1);
            for (std::size_t i = 1; i < prof.size(); ++i)
                ASSERT_LE(prof[i - 1], prof[i]);
            for (int t = 1; t <= n + 1; ++t)
                ASSERT_EQ(prof[static_cast<std::size_t>(t - 1)], chi_poc_t(g, t).value);
        }
}

TEST(ChiPocT, SurjectiveReading)
{
    // K_{1,3} with exactly one weight value is just its chromatic number
    EXPECT_EQ(chi_poc_t(star3(), 1, {}, true).value, 2);
    EXPECT_EQ(chi_poc_t(star3(), 3, {}, true).value, 3);
    EXPECT_THROW(chi_poc_t(star3(), 5, {}, true), PreconditionError);
    for (int n = 1; n <= 4; ++n)
        for (const auto & g : graphs_up_to_isomorphism(n))
            for (int t = 1; t <= n; ++t)
                ASSERT_LE(chi_poc_t(g, t, {}, true).value, chi_poc_t(g, t).value);
}

TEST(EnumeratePocs, Examples)
{
    auto c4w = load_fixture("C4W.wpoc");
    std::vector<Coloring> listed;
    EXPECT_EQ(enumerate_pocs(c4w, 3, {}, [&](const Coloring & c) { listed.push_back(c); }), 1u);
    ASSERT_EQ(listed.size(), 1u);
    EXPECT_EQ(listed[0].colors(), (std::vector<int>{1, 2, 2, 3}));
    EXPECT_EQ(enumerate_pocs(c4w, 2), 0u);
    EXPECT_EQ(enumerate_pocs({Graph(2), {1, 1}}, 1), 1u);
    EXPECT_EQ(enumerate_pocs(load_fixture("CHEM.wpoc"), 3), 0u);
    EXPECT_THROW(enumerate_pocs(c4w, 5), PreconditionError);
}

TEST(EnumeratePocs, MatchesEnumeration)
{
    InstanceRng rng(43);
    for (int i = 0; i < 200; ++i) {
        auto g = random_weighted_graph(rng.uniform(1, 6), 0.5, rng.uniform(1, 3), rng);
        for (int theta = 0; theta <= g.size(); ++theta)
            ASSERT_EQ(enumerate_pocs(g, theta), brute::count_pocs(g, theta)) << to_wpoc(g) << "theta=" << theta;
    }
}

TEST(Oracles, ChiPocEqualsEllPrimeOnAllSmallInstances)
{
    for (int n = 1; n <= 4; ++n)
        for (const auto & g : graphs_up_to_isomorphism(n))
            for (const auto & w : all_weak_orderings(n, n)) {
                WeightedGraph wg(g, w);
                const int chi = chi_poc_exact(wg).value;
                ASSERT_EQ(chi, ell_prime_gw(wg).value) << to_wpoc(wg);
                ASSERT_GE(chi, chromatic_number(g));
                ASSERT_LE(chi, n);
            }
}

TEST(Oracles, WorstWeightingEqualsLongestPathAndHamiltonicity)
{
    for (int n = 1; n <= 5; ++n)
        for (const auto & g : graphs_up_to_isomorphism(n)) {
            const int f = f_exact(g).value;
            ASSERT_EQ(f, longest_path_exact(g));
            ASSERT_EQ(f == n, has_hamiltonian_path(g));
        }
}

TEST(Oracles, ColorCountGrowsAtMostLinearlyInT)
{
    for (int n = 1; n <= 5; ++n)
        for (const auto & g : graphs_up_to_isomorphism(n)) {
            const int chi = chromatic_number(g);
            auto prof = chi_poc_t_profile(g, 3);
            for (int t = 1; t <= 3; ++t)
                ASSERT_LE(prof[static_cast<std::size_t>(t - 1)] - 1, t * (chi - 1));
        }
}

TEST(Oracles, EdgelessGraphsNeedOneColor)
{
    for (int n = 1; n <= 5; ++n)
        for (int t = 1; t <= 3; ++t)
            EXPECT_EQ(chi_poc_t(Graph(n), t).value, 1);
}

TEST(HamiltonianPath, Direct)
{
    EXPECT_TRUE(has_hamiltonian_path(cycle_graph(5)));
    EXPECT_FALSE(has_hamiltonian_path(star3()));
    EXPECT_TRUE(has_hamiltonian_path(Graph(1)));
    EXPECT_FALSE(has_hamiltonian_path(Graph(2)));
}

TEST(WeakOrderings, FubiniCounts)
{
    const std::vector<std::size_t> fubini{1, 3, 13, 75, 541, 4683};
    for (int n = 1; n <= 6; ++n)
        EXPECT_EQ(all_weak_orderings(n, n).size(), fubini[static_cast<std::size_t>(n - 1)]);
    EXPECT_EQ(all_weak_orderings(3, 2).size(), 1u + 6u);
    auto w = WeakOrdering({2, 1, 2});
    EXPECT_EQ(w.block_count(), 2);
    EXPECT_EQ(w.blocks(), (std::vector<std::vector<Vertex>>{{1}, {0, 2}}));
    EXPECT_THROW(WeakOrdering({1, 3}), PreconditionError);
}

TEST(Caps, Overrides)
{
    auto c = Caps{}.with_overrides("chi_poc=5,f=3");
    EXPECT_EQ(c.chi_poc, 5);
    EXPECT_EQ(c.f, 3);
    EXPECT_EQ(c.longest_path, 20);
    EXPECT_THROW(Caps{}.with_overrides("bogus=1"), PreconditionError);
    EXPECT_THROW(Caps{}.with_overrides("f"), PreconditionError);
    EXPECT_THROW(Caps{}.with_overrides("f=x"), PreconditionError);
}

TEST(Caps, FromEnvironment)
{
    ::setenv("POC_CAPS", "ell_prime=3,mocs=7", 1);
    auto c = Caps::from_env();
    ::unsetenv("POC_CAPS");
    EXPECT_EQ(c.ell_prime_edges, 3);
    EXPECT_EQ(c.mocs, 7);
    EXPECT_EQ(Caps::from_env().ell_prime_edges, 24);
}
