#pragma once

// Verification suites run by `poc selftest` and the acceptance binary. Each
// check reports what it observed next to what it expected, plus wall time.

#include <poc/catalog.hpp>
#include <poc/engine.hpp>
#include <poc/io.hpp>
#include <poc/multipartite.hpp>
#include <poc/oracles.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace poc {

struct CheckResult
{
    std::string name;
    int criterion = 0;  // acceptance criterion number, 0 for supplementary checks
    bool pass = false;
    std::string observed;
    std::string expected;
    double ms = 0;
    double limit_ms = 0;
};

struct RunReport
{
    std::string command;
    std::vector<CheckResult> checks;

    auto ok() const -> bool
    {
        for (const auto & c : checks)
            if (! c.pass)
                return false;
        return true;
    }

    auto failed() const -> int
    {
        int n = 0;
        for (const auto & c : checks)
            n += ! c.pass;
        return n;
    }

    void print(std::ostream & out) const
    {
        out << "command " << command << '\n';
        for (const auto & c : checks)
            out << "check " << c.name << ' ' << (c.pass ? "pass" : "fail") << " observed=" << c.observed
                << " expected=" << c.expected << " ms=" << static_cast<long>(c.ms) << '\n';
        out << "selftest " << (ok() ? "pass" : "fail") << " checks=" << checks.size() << " failed=" << failed() << '\n';
    }
};

struct SelftestOptions
{
    bool full = false;
    int jobs = 1;
    std::string fixture_dir;
    std::string inject_fault;  // "" or "chi_poc_ell_prime"
    std::string command = "selftest";
};

/// Compact one-line form of an instance, 1-based: n=4 w=1,1,2,3 e=1-2,1-3
inline auto describe(const WeightedGraph & g) -> std::string
{
    std::ostringstream s;
    s << "n=" << g.size() << " w=";
    for (int v = 0; v < g.size(); ++v)
        s << (v ? "," : "") << g.weight(v);
    s << " e=";
    bool first = true;
    for (auto [a, b] : g.graph().edges()) {
        s << (first ? "" : ",") << a + 1 << '-' << b + 1;
        first = false;
    }
    return s.str();
}

namespace detail {

    struct Outcome
    {
        bool pass = true;
        std::string observed;
        std::string expected;
    };

    inline auto join(const std::vector<int> & v) -> std::string
    {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    }

    // a family check passes when no instance failed; `first` names the first failure
    struct Tally
    {
        long instances = 0;
        std::string first;

        void fail(const std::string & what)
        {
            if (first.empty())
                first = what;
        }

        auto outcome(const std::string & noun) const -> Outcome
        {
            if (first.empty())
                return {true, std::to_string(instances) + "_" + noun + "_ok", "all_hold"};
            return {false, "counterexample[" + first + "]", "all_hold"};
        }
    };

    inline auto graphs_up_to(int n_max) -> std::vector<Graph>
    {
        std::vector<Graph> out;
        for (int n = 1; n <= n_max; ++n)
            for (auto & g : graphs_up_to_isomorphism(n))
                out.push_back(std::move(g));
        return out;
    }

    inline auto part_lists(int k_max, int size_max) -> std::vector<std::vector<int>>
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

    // weightings of K_{parts} with values in 1..t, one per multiset per part
    inline void each_multipartite(const std::vector<int> & parts, int t, const std::function<void(const MultipartiteInstance &)> & fn)
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
            per_part.push_back(std::move(seqs));
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

    inline auto parts_name(const std::vector<int> & parts) -> std::string
    {
        return "K" + join(parts);
    }

    // one bound instance for the ratio check: chi_POC value with t weight values on a graph of chromatic number chi
    struct RatioRecord
    {
        std::string label;
        int value;
        int t;
        int chi;
    };

    class Suites
    {
    public:
        explicit Suites(const SelftestOptions & opt) :
            _opt(opt)
        {
            _caps = Caps::from_env();
            // K_{3,3,3} has nine vertices
            _caps.chi_poc_t = std::max(_caps.chi_poc_t, 9);
            if (! _opt.inject_fault.empty() && _opt.inject_fault != "chi_poc_ell_prime")
                throw PreconditionError("unknown fault '" + _opt.inject_fault + "' (known: chi_poc_ell_prime)");
        }

        auto fixture(const std::string & name) const -> WeightedGraph
        {
            const auto path = _opt.fixture_dir + "/" + name;
            std::ifstream in(path);
            if (! in)
                throw PocError("cannot open fixture " + path);
            return parse_wpoc(in);
        }

        auto c4w() const -> Outcome
        {
            auto g = fixture("C4W.wpoc");
            int chi = chi_poc_exact(g, _caps).value;
            std::vector<std::vector<int>> listed;
            auto three = enumerate_pocs(g, 3, _caps, [&](const Coloring & c) { listed.push_back(c.colors()); });
            auto two = enumerate_pocs(g, 2, _caps);
            std::string unique = listed.size() == 1 ? join(listed[0]) : "none";
            return {chi == 3 && three == 1 && unique == "1,2,2,3" && two == 0,
                "chi_poc=" + std::to_string(chi) + ",pocs3=" + std::to_string(three) + ",only=(" + unique + "),pocs2=" + std::to_string(two),
                "chi_poc=3,pocs3=1,only=(1,2,2,3),pocs2=0"};
        }

        auto k135() const -> Outcome
        {
            auto inst = multipartite_instance(fixture("K135.wpoc"), {1, 3, 5}, true);
            auto m = find_mocs(inst);
            auto s = find_max_spaths(inst, m);
            int g = g_value(inst, _caps).value;
            auto c = prop1_coloring(inst, m, s);
            bool valid = bool(is_valid_poc(inst.weighted_graph(), c));
            int z5 = c.color(8);
            std::ostringstream o;
            o << "total=" << m.total() << ",VS=" << s.vertex_count() << ",q=" << s.q() << ",g=" << g
              << ",palette=" << c.palette() << ",valid=" << valid << ",c(z5)=" << z5;
            return {m.total() == 8 && s.vertex_count() == 5 && s.q() == 2 && g == 5 && c.palette() == 5 && valid && z5 == 3,
                o.str(), "total=8,VS=5,q=2,g=5,palette=5,valid=1,c(z5)=3"};
        }

        auto chem() const -> Outcome
        {
            auto g = fixture("CHEM.wpoc");
            bool published = bool(is_valid_poc(g, Coloring({1, 2, 3, 3, 4, 5})));
            auto chi = chi_poc_exact(g, _caps);
            int ell = ell_prime_gw(g, _caps).value;
            auto three = enumerate_pocs(g, 3, _caps);
            bool witness = bool(is_valid_poc(g, chi.witness));
            std::ostringstream o;
            o << "published_valid=" << published << ",chi_poc=" << chi.value << ",ell_prime=" << ell
              << ",pocs3=" << three << ",witness_valid=" << witness;
            return {published && chi.value == 4 && ell == 4 && three == 0 && witness, o.str(),
                "published_valid=1,chi_poc=4,ell_prime=4,pocs3=0,witness_valid=1"};
        }

        auto f_equals_longest_path() -> Outcome
        {
            Tally tally;
            for (const auto & g : graphs_up_to(_opt.full ? 6 : 5)) {
                int f = f_exact(g, _caps, _opt.jobs).value;
                int ell = longest_path_exact(g, _caps);
                ++tally.instances;
                _ratio.push_back({"graph", f, g.size(), chromatic_number(g)});
                if (f != ell)
                    tally.fail(describe({g, std::vector<int>(static_cast<std::size_t>(g.size()), 1)}) + " f=" + std::to_string(f) + " l=" + std::to_string(ell));
            }
            return tally.outcome("graphs");
        }

        auto chi_poc_equals_ell_prime() -> Outcome
        {
            Tally tally;
            long index = 0;
            auto check = [&](const WeightedGraph & wg) {
                int chi = chi_poc_exact(wg, _caps).value;
                int ell = ell_prime_gw(wg, _caps).value;
                if (_opt.inject_fault == "chi_poc_ell_prime" && index == 7)
                    ++ell;
                ++index;
                ++tally.instances;
                _ratio.push_back({"weighted", chi, wg.weight_count(), chromatic_number(wg.graph())});
                if (chi != ell)
                    tally.fail(describe(wg) + " chi_poc=" + std::to_string(chi) + " ell_prime=" + std::to_string(ell));
            };
            for (const auto & g : graphs_up_to(_opt.full ? 5 : 4))
                for (const auto & w : all_weak_orderings(g.size(), g.size()))
                    check({g, w});
            InstanceRng rng(2024);
            for (int i = 0; i < (_opt.full ? 500 : 100); ++i) {
                int n = rng.uniform(1, 8);
                check(random_weighted_graph(n, 0.5, rng.uniform(1, 4), rng));
            }
            return tally.outcome("instances");
        }

        // the same equality on every weighted graph with six vertices
        auto chi_poc_equals_ell_prime_six() const -> Outcome
        {
            Tally tally;
            for (const auto & g : graphs_up_to_isomorphism(6))
                for (const auto & w : all_weak_orderings(6, 6)) {
                    WeightedGraph wg(g, w);
                    int chi = chi_poc_exact(wg, _caps).value;
                    int ell = ell_prime_gw(wg, _caps).value;
                    ++tally.instances;
                    if (chi != ell)
                        tally.fail(describe(wg) + " chi_poc=" + std::to_string(chi) + " ell_prime=" + std::to_string(ell));
                }
            return tally.outcome("instances");
        }

        auto bipartite_formula() -> Outcome
        {
            Tally tally;
            for (int m = 1; m <= 3; ++m)
                for (int n = m; n <= 3; ++n) {
                    const int t = 2 * m + 1;
                    int oracle = chi_poc_t(complete_multipartite_graph({m, n}), t, _caps, false, _opt.jobs).value;
                    int formula = bipartite_chi_poc_t(m, n, t);
                    ++tally.instances;
                    _ratio.push_back({"K" + std::to_string(m) + "," + std::to_string(n), oracle, t, 2});
                    if (oracle != formula || formula != std::min(m + n, 2 * m + 1))
                        tally.fail("K" + std::to_string(m) + "," + std::to_string(n) + " t=" + std::to_string(t) + " oracle=" + std::to_string(oracle) + " formula=" + std::to_string(formula));
                }
            return tally.outcome("pairs");
        }

        auto bipartite_layered() const -> Outcome
        {
            Tally tally;
            InstanceRng rng(77);
            for (int i = 0; i < (_opt.full ? 1000 : 200); ++i) {
                int m = rng.uniform(1, 3), n = rng.uniform(m, 6);
                std::vector<int> w;
                for (int v = 0; v < m + n; ++v)
                    w.push_back(rng.uniform(1, 2 * m + 3));
                WeightedGraph g(complete_multipartite_graph({m, n}), w);
                auto c = bipartite_layered_coloring(m, n, w);
                ++tally.instances;
                if (! is_valid_poc(g, c) || c.palette() > 2 * m + 1)
                    tally.fail(describe(g) + " palette=" + std::to_string(c.palette()));
            }
            return tally.outcome("weightings");
        }

        auto h_equals_chi_poc_t() -> Outcome
        {
            Tally tally;
            for (const auto & parts : part_lists(3, _opt.full ? 3 : 2))
                for (int t = 1; t <= 3; ++t) {
                    const auto g = complete_multipartite_graph(parts);
                    int h = h_value(parts, t, _caps).value;
                    int oracle = chi_poc_t(g, t, _caps, false, _opt.jobs).value;
                    ++tally.instances;
                    _ratio.push_back({parts_name(parts), oracle, t, static_cast<int>(parts.size())});
                    if (h != oracle)
                        tally.fail(parts_name(parts) + " t=" + std::to_string(t) + " h=" + std::to_string(h) + " chi_poc_t=" + std::to_string(oracle));
                }
            return tally.outcome("instances");
        }

        auto ratio_bound() -> Outcome
        {
            Tally tally;
            // every graph of the exhaustive suite, for each t up to 3
            for (const auto & g : graphs_up_to(_opt.full ? 6 : 5)) {
                auto prof = chi_poc_t_profile(g, 3, _caps);
                for (int t = 1; t <= 3; ++t)
                    _ratio.push_back({"graph", prof[static_cast<std::size_t>(t - 1)], t, chromatic_number(g)});
            }
            for (const auto & r : _ratio) {
                ++tally.instances;
                if (r.value - 1 > r.t * (r.chi - 1))
                    tally.fail(r.label + " value=" + std::to_string(r.value) + " t=" + std::to_string(r.t) + " chi=" + std::to_string(r.chi));
            }
            return tally.outcome("bounds");
        }

        auto sharpness() const -> Outcome
        {
            Tally tally;
            for (int k = 2; k <= 3; ++k)
                for (int t = 2; t <= 3; ++t) {
                    if (! _opt.full && k * t > 6)
                        continue;
                    const std::vector<int> parts(static_cast<std::size_t>(k), t);
                    std::vector<int> w;
                    for (int p = 0; p < k; ++p)
                        for (int i = 1; i <= t; ++i)
                            w.push_back(i);
                    MultipartiteInstance inst(parts, w);
                    auto s = find_max_spaths(inst, find_mocs(inst));
                    int oracle = chi_poc_t(inst.graph(), t, _caps, false, _opt.jobs).value;
                    int g = g_value(inst, _caps).value;
                    const int bound = multipartite_upper_bound(k, t);
                    ++tally.instances;
                    if (oracle != bound || g != bound || s.vertex_count() != 2 * t - 2)
                        tally.fail(parts_name(parts) + " t=" + std::to_string(t) + " chi_poc_t=" + std::to_string(oracle)
                            + " g=" + std::to_string(g) + " VS=" + std::to_string(s.vertex_count()));
                }
            return tally.outcome("instances");
        }

        auto algorithm_bounds() const -> Outcome
        {
            Tally tally;
            InstanceRng rng(808);
            for (int i = 0; i < (_opt.full ? 1000 : 200); ++i) {
                int n = rng.uniform(1, 10);
                double p = 0.1 * rng.uniform(2, 7);
                auto wg = random_weighted_graph(n, p, rng.uniform(1, 5), rng);
                ++tally.instances;
                const int ell = longest_path_exact(wg.graph(), _caps);
                auto cf = algorithm_f(wg);
                if (! is_valid_poc(wg, cf) || cf.palette() > ell) {
                    tally.fail(describe(wg) + " algorithm_f palette=" + std::to_string(cf.palette()) + " l=" + std::to_string(ell));
                    continue;
                }
                auto d = build_good_orientation(wg);
                auto cp = algorithm_f_prime(wg, d);
                if (! is_valid_poc(wg, cp) || cp.palette() > dag_longest_path(d)) {
                    tally.fail(describe(wg) + " algorithm_f_prime palette=" + std::to_string(cp.palette()));
                    continue;
                }
                for (const auto & c : {cf, cp, layered_stack_coloring(wg)}) {
                    auto back = orientation_from_coloring(wg, c);
                    if (! is_good_acyclic(wg, back) || dag_longest_path(back) > c.palette())
                        tally.fail(describe(wg) + " orientation_from_coloring l'=" + std::to_string(dag_longest_path(back)) + " theta=" + std::to_string(c.palette()));
                }
            }
            return tally.outcome("instances");
        }

        auto hamiltonian_iff_f_equals_n() const -> Outcome
        {
            Tally tally;
            for (const auto & g : graphs_up_to(_opt.full ? 6 : 5)) {
                int f = f_exact(g, _caps, _opt.jobs).value;
                bool ham = has_hamiltonian_path(g);
                ++tally.instances;
                if ((f == g.size()) != ham)
                    tally.fail(describe({g, std::vector<int>(static_cast<std::size_t>(g.size()), 1)}) + " f=" + std::to_string(f) + " hamiltonian=" + std::to_string(ham));
            }
            return tally.outcome("graphs");
        }

        // supplementary invariants

        auto graph_core_invariants() const -> Outcome
        {
            Tally tally;
            InstanceRng rng(5150);
            for (int i = 0; i < 200; ++i) {
                auto g = random_weighted_graph(rng.uniform(0, 10), 0.4, rng.uniform(1, 20), rng);
                ++tally.instances;
                if (! (parse_wpoc(to_wpoc(g)) == g))
                    tally.fail(describe(g) + " round_trip");
                auto norm = normalize_weights(g);
                if (! (normalize_weights(norm) == norm) || ! is_normalized(norm))
                    tally.fail(describe(g) + " normalize_idempotent");
                for (Vertex a = 0; a < g.size(); ++a)
                    for (Vertex b = 0; b < g.size(); ++b)
                        if ((g.weight(a) < g.weight(b)) != (norm.weight(a) < norm.weight(b)))
                            tally.fail(describe(g) + " normalize_order");
                auto comp = complement(g.graph());
                if (! (complement(comp) == g.graph()) || comp.edge_count() + g.graph().edge_count() != g.size() * (g.size() - 1) / 2)
                    tally.fail(describe(g) + " complement");
                std::vector<int> c;
                for (int v = 0; v < g.size(); ++v)
                    c.push_back(rng.uniform(1, 4));
                Coloring col(c, 4);
                if (bool(is_valid_poc(g, col)) != bool(is_valid_poc(norm, col)))
                    tally.fail(describe(g) + " validity_under_normalization");
            }
            return tally.outcome("instances");
        }

        auto orientation_invariants() const -> Outcome
        {
            Tally tally;
            InstanceRng rng(6061);
            for (int i = 0; i < 500; ++i) {
                auto wg = random_weighted_graph(rng.uniform(1, 10), 0.5, rng.uniform(1, 4), rng);
                ++tally.instances;
                if (! is_good_acyclic(wg, build_good_orientation(wg)))
                    tally.fail(describe(wg) + " build_good_orientation");
                // a random good acyclic orientation from random priorities
                std::vector<int> prio;
                for (int v = 0; v < wg.size(); ++v)
                    prio.push_back(rng.uniform(0, 1000) * 16 + v);
                std::vector<Arc> arcs;
                for (auto [a, b] : wg.graph().edges()) {
                    bool a_tail = wg.weight(a) != wg.weight(b) ? wg.weight(a) > wg.weight(b) : prio[static_cast<std::size_t>(a)] < prio[static_cast<std::size_t>(b)];
                    arcs.push_back(a_tail ? Arc{a, b} : Arc{b, a});
                }
                Orientation d(wg.size(), arcs);
                auto c = algorithm_f_prime(wg, d);
                if (! is_valid_poc(wg, c) || c.palette() > dag_longest_path(d))
                    tally.fail(describe(wg) + " algorithm_f_prime_random_orientation");
            }
            return tally.outcome("instances");
        }

        auto chi_poc_sandwich() const -> Outcome
        {
            Tally tally;
            for (const auto & g : graphs_up_to(_opt.full ? 5 : 4)) {
                const int chi = chromatic_number(g);
                for (const auto & w : all_weak_orderings(g.size(), g.size())) {
                    int v = chi_poc_exact({g, w}, _caps).value;
                    ++tally.instances;
                    if (v < chi || v > g.size())
                        tally.fail(describe({g, w}) + " chi_poc=" + std::to_string(v) + " chi=" + std::to_string(chi));
                }
            }
            return tally.outcome("instances");
        }

        auto chi_poc_t_monotone() const -> Outcome
        {
            Tally tally;
            for (const auto & g : graphs_up_to(_opt.full ? 5 : 4)) {
                auto prof = chi_poc_t_profile(g, g.size() + 1, _caps);
                ++tally.instances;
                for (std::size_t i = 1; i < prof.size(); ++i)
                    if (prof[i - 1] > prof[i])
                        tally.fail(describe({g, std::vector<int>(static_cast<std::size_t>(g.size()), 1)}) + " profile=" + join(prof));
                if (prof[0] != chromatic_number(g))
                    tally.fail(describe({g, std::vector<int>(static_cast<std::size_t>(g.size()), 1)}) + " t=1 differs from chi");
                if (g.edge_count() == 0 && prof.back() != 1)
                    tally.fail("edgeless n=" + std::to_string(g.size()) + " profile=" + join(prof));
            }
            return tally.outcome("graphs");
        }

        auto multipartite_invariants() const -> Outcome
        {
            Tally tally;
            for (const auto & parts : part_lists(3, _opt.full ? 3 : 2))
                for (int t = 1; t <= 3; ++t)
                    each_multipartite(parts, t, [&](const MultipartiteInstance & raw) {
                        auto inst = raw.normalized();
                        const auto wg = inst.weighted_graph();
                        for (const auto & m : enumerate_mocs(inst, _caps)) {
                            ++tally.instances;
                            if (auto why = mocs_violation(inst, m))
                                tally.fail(describe(wg) + " mocs " + *why);
                            auto s = find_max_spaths(inst, m);
                            if (auto why = spaths_violation(inst, m, s))
                                tally.fail(describe(wg) + " spaths " + *why);
                            auto c = prop1_coloring(inst, m, s);
                            if (! is_valid_poc(wg, c) || c.palette() != m.total() - s.vertex_count() + s.q())
                                tally.fail(describe(wg) + " coloring palette=" + std::to_string(c.palette()));
                            for (const auto & p : s.paths)
                                for (Vertex v : p)
                                    if (c.color(v) != c.color(p.front()))
                                        tally.fail(describe(wg) + " path not monochromatic");
                        }
                        if (g_value(inst, _caps).value > multipartite_upper_bound(inst.k(), inst.t()))
                            tally.fail(describe(wg) + " g above (k-1)t+1");
                    });
            return tally.outcome("decompositions");
        }

        auto completion_bound() const -> Outcome
        {
            Tally tally;
            for (const auto & g : graphs_up_to(_opt.full ? 5 : 4)) {
                if (g.edge_count() == 0)
                    continue;
                const int chi = chromatic_number(g);
                auto comp = complete_to_multipartite(g);
                auto big = comp.skeleton().graph();
                for (auto [a, b] : g.edges())
                    if (! big.adjacent(comp.vertex_map[static_cast<std::size_t>(a)], comp.vertex_map[static_cast<std::size_t>(b)]))
                        tally.fail(describe({g, std::vector<int>(static_cast<std::size_t>(g.size()), 1)}) + " edge lost in completion");
                for (const auto & w : all_weak_orderings(g.size(), 3)) {
                    WeightedGraph wg(g, w);
                    auto c = coloring_via_completion(wg);
                    ++tally.instances;
                    if (! is_valid_poc(wg, c) || c.palette() > (chi - 1) * wg.weight_count() + 1)
                        tally.fail(describe(wg) + " palette=" + std::to_string(c.palette()));
                }
            }
            return tally.outcome("instances");
        }

    private:
        SelftestOptions _opt;
        Caps _caps;
        std::vector<RatioRecord> _ratio;
    };

}

/// Runs every suite at the requested scale. `progress`, if given, receives a
/// human-readable line per check as it finishes.
inline auto run_selftest(const SelftestOptions & opt, std::ostream * progress = nullptr) -> RunReport
{
    detail::Suites suites(opt);
    RunReport report;
    report.command = opt.command;

    auto run = [&](const std::string & name, int criterion, double limit_s, auto && body) {
        CheckResult r;
        r.name = name;
        r.criterion = criterion;
        r.limit_ms = limit_s * 1000;
        auto start = std::chrono::steady_clock::now();
        try {
            detail::Outcome o = body();
            r.pass = o.pass;
            r.observed = o.observed;
            r.expected = o.expected;
        }
        catch (const std::exception & e) {
            r.pass = false;
            r.observed = std::string("error[") + e.what() + "]";
            r.expected = "no_error";
        }
        r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (r.pass && r.ms > r.limit_ms) {
            r.pass = false;
            r.observed += ",over_time_limit";
        }
        for (auto & ch : r.observed)
            if (ch == ' ')
                ch = '_';
        if (progress)
            *progress << (r.pass ? "  ok    " : "  FAIL  ") << name << "  (" << static_cast<long>(r.ms) << " ms)\n";
        report.checks.push_back(std::move(r));
    };

    const bool full = opt.full;
    run("c4_fixture", 1, 1, [&] { return suites.c4w(); });
    run("k135_fixture", 2, 1, [&] { return suites.k135(); });
    run("f_equals_longest_path", 3, full ? 600 : 30, [&] { return suites.f_equals_longest_path(); });
    run("chi_poc_equals_ell_prime", 4, 300, [&] { return suites.chi_poc_equals_ell_prime(); });
    run("bipartite_formula", 5, 150, [&] { return suites.bipartite_formula(); });
    run("bipartite_layered_coloring", 5, 150, [&] { return suites.bipartite_layered(); });
    run("h_equals_chi_poc_t", 6, 600, [&] { return suites.h_equals_chi_poc_t(); });
    run("ratio_bound", 7, 60, [&] { return suites.ratio_bound(); });
    run("sharpness", 7, 60, [&] { return suites.sharpness(); });
    run("algorithm_bounds", 8, 120, [&] { return suites.algorithm_bounds(); });
    run("chem_fixture", 9, 1, [&] { return suites.chem(); });
    run("hamiltonian_iff_f_equals_n", 10, full ? 600 : 30, [&] { return suites.hamiltonian_iff_f_equals_n(); });
    run("graph_core_invariants", 0, 60, [&] { return suites.graph_core_invariants(); });
    run("orientation_invariants", 0, 60, [&] { return suites.orientation_invariants(); });
    run("chi_poc_sandwich", 0, 120, [&] { return suites.chi_poc_sandwich(); });
    run("chi_poc_t_monotone", 0, 120, [&] { return suites.chi_poc_t_monotone(); });
    run("multipartite_invariants", 0, 300, [&] { return suites.multipartite_invariants(); });
    run("completion_bound", 0, 120, [&] { return suites.completion_bound(); });
    if (full)
        run("chi_poc_equals_ell_prime_n6", 0, 900, [&] { return suites.chi_poc_equals_ell_prime_six(); });
    return report;
}

}
