#pragma once

// The `poc` command line. Everything goes through run_cli so tests can drive
// it in-process with string streams.
//
// Exit codes: 0 ok, 1 semantic failure, 2 parse or I/O error, 3 cap exceeded.

#include <poc/catalog.hpp>
#include <poc/engine.hpp>
#include <poc/io.hpp>
#include <poc/multipartite.hpp>
#include <poc/oracles.hpp>
#include <poc/selftest.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef POC_FIXTURE_DIR
#define POC_FIXTURE_DIR "fixtures"
#endif

namespace poc::cli {

constexpr int exit_ok = 0;
constexpr int exit_semantic = 1;
constexpr int exit_input = 2;
constexpr int exit_cap = 3;

// raised for unreadable files so they map to the I/O exit code
class IoError : public PocError
{
public:
    using PocError::PocError;
};

struct Streams
{
    std::ostream & out;
    std::ostream & err;
};

inline auto read_graph(const std::string & path) -> WeightedGraph
{
    std::ifstream in(path);
    if (! in)
        throw IoError("cannot open " + path);
    return parse_wpoc(in);
}

inline auto open_output(const std::string & path) -> std::ofstream
{
    std::ofstream f(path);
    if (! f)
        throw IoError("cannot write " + path);
    return f;
}

inline auto parse_int_list(const std::string & text, const std::string & what) -> std::vector<int>
{
    std::vector<int> out;
    std::istringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            out.push_back(v);
        }
        catch (const std::exception &) {
            throw PreconditionError(what + ": '" + item + "' is not an integer");
        }
    }
    if (out.empty())
        throw PreconditionError(what + " is empty");
    return out;
}

inline auto join_ints(const std::vector<int> & v) -> std::string
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

inline auto vertex_list(const MultipartiteInstance & inst, const std::vector<Vertex> & vs) -> std::string
{
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i)
        s += (i ? "," : "") + inst.label(vs[i]);
    return s;
}

inline void print_multipartite(std::ostream & out, const MultipartiteInstance & inst, const MocsDecomposition & m, const SPaths & s)
{
    out << "total " << m.total() << '\n';
    for (std::size_t i = 0; i < m.cliques.size(); ++i)
        out << "H" << i + 1 << ' ' << vertex_list(inst, m.cliques[i]) << '\n';
    out << "spaths_vertices " << s.vertex_count() << '\n';
    out << "q " << s.q() << '\n';
    for (std::size_t i = 0; i < s.paths.size(); ++i)
        out << "P" << i + 1 << ' ' << vertex_list(inst, s.paths[i]) << '\n';
}

inline auto cmd_color(Streams io, const std::string & input, const std::string & algo, const std::string & parts,
    const std::string & orientation, const std::string & output) -> int
{
    const auto g = read_graph(input);
    const auto caps = Caps::from_env();
    std::optional<Coloring> c;
    if (algo == "f")
        c = algorithm_f(g);
    else if (algo == "stack")
        c = layered_stack_coloring(g);
    else if (algo == "exact")
        c = chi_poc_exact(g, caps).witness;
    else if (algo == "fprime") {
        Orientation d = build_good_orientation(g);
        if (! orientation.empty()) {
            std::ifstream in(orientation);
            if (! in)
                throw IoError("cannot open " + orientation);
            d = parse_orientation(in, g.size());
        }
        c = algorithm_f_prime(g, d);
    }
    else if (algo == "multipartite") {
        if (parts.empty())
            throw PreconditionError("--algo multipartite needs --parts");
        auto inst = multipartite_instance(g, parse_int_list(parts, "--parts"), true);
        c = multipartite_coloring(inst).coloring;
    }
    else
        throw PreconditionError("unknown algorithm '" + algo + "'");

    auto check = is_valid_poc(g, *c);
    if (! check) {
        io.err << "internal error: " << algo << " produced an invalid POC at edge " << check.violation->u + 1 << ' ' << check.violation->v + 1 << '\n';
        return exit_semantic;
    }
    io.err << "algo " << algo << "  palette " << c->palette() << "  colors " << join_ints(c->colors()) << '\n';
    if (output.empty())
        write_coloring(io.out, *c);
    else {
        auto f = open_output(output);
        write_coloring(f, *c);
        io.out << "palette " << c->palette() << '\n' << "valid yes" << '\n' << "output " << output << '\n';
    }
    return exit_ok;
}

inline auto cmd_verify(Streams io, const std::string & graph, const std::string & coloring) -> int
{
    const auto g = read_graph(graph);
    std::ifstream in(coloring);
    if (! in)
        throw IoError("cannot open " + coloring);
    const auto c = parse_coloring(in, g.size());
    auto check = is_valid_poc(g, c);
    if (check) {
        io.out << "VALID" << '\n';
        return exit_ok;
    }
    io.out << "INVALID edge " << check.violation->u + 1 << ' ' << check.violation->v + 1 << '\n';
    return exit_semantic;
}

inline auto cmd_orient(Streams io, const std::string & input, bool dot, const std::string & output) -> int
{
    const auto g = read_graph(input);
    const auto d = build_good_orientation(g);
    const int len = dag_longest_path(d);
    if (dot) {
        io.err << "longest_directed_path " << len << '\n';
        if (output.empty())
            write_dot(io.out, g, d);
        else {
            auto f = open_output(output);
            write_dot(f, g, d);
        }
        return exit_ok;
    }
    io.out << "longest_directed_path " << len << '\n';
    if (output.empty())
        write_orientation(io.out, d);
    else {
        auto f = open_output(output);
        write_orientation(f, d);
    }
    return exit_ok;
}

inline auto cmd_oracle(Streams io, const std::string & input, const std::string & quantity, std::optional<int> t,
    bool witness, bool surjective, int jobs) -> int
{
    const auto g = read_graph(input);
    const auto caps = Caps::from_env();
    if (quantity == "chi") {
        auto r = chromatic_coloring(g.graph());
        io.out << "chi " << r.count << '\n';
        if (witness)
            write_coloring(io.out, r.coloring);
    }
    else if (quantity == "chipoc") {
        auto r = chi_poc_exact(g, caps);
        io.out << "chipoc " << r.value << '\n';
        if (witness)
            write_coloring(io.out, r.witness);
    }
    else if (quantity == "ell")
        io.out << "ell " << longest_path_exact(g.graph(), caps) << '\n';
    else if (quantity == "ellprime") {
        auto r = ell_prime_gw(g, caps);
        io.out << "ellprime " << r.value << '\n';
        if (witness)
            write_orientation(io.out, r.witness);
    }
    else if (quantity == "f") {
        auto r = f_exact(g.graph(), caps, jobs);
        io.out << "f " << r.value << '\n';
        if (witness)
            io.out << "weights " << join_ints(r.weights) << '\n';
    }
    else if (quantity == "chipoct") {
        if (! t)
            throw PreconditionError("chipoct needs --t");
        auto r = chi_poc_t(g.graph(), *t, caps, surjective, jobs);
        io.out << "chipoct " << r.value << '\n';
        if (witness)
            io.out << "weights " << join_ints(r.weights) << '\n';
    }
    else
        throw PreconditionError("unknown quantity '" + quantity + "' (chi, chipoc, ell, ellprime, f, chipoct)");
    return exit_ok;
}

inline auto cmd_multipartite(Streams io, const std::string & parts_text, const std::string & weights_text,
    std::optional<int> t, bool surjective, const std::string & output) -> int
{
    const auto parts = parse_int_list(parts_text, "--parts");
    const auto caps = Caps::from_env();
    if (weights_text.empty() == ! t.has_value())
        throw PreconditionError("multipartite needs exactly one of --weights or --t");

    std::vector<int> weights;
    if (t) {
        auto h = h_value(parts, *t, caps, surjective);
        io.out << "h " << h.value << '\n';
        io.out << "weights " << join_ints(h.weights) << '\n';
        weights = h.weights;
    }
    else
        weights = parse_int_list(weights_text, "--weights");

    const auto inst = MultipartiteInstance(parts, weights).normalized();
    const auto gv = g_value(inst, caps);
    io.out << "mocs_count " << enumerate_mocs(inst, caps).size() << '\n';
    io.out << "g " << gv.value << '\n';
    auto mc = multipartite_coloring(inst);
    print_multipartite(io.out, inst, mc.mocs, mc.spaths);
    if (! is_valid_poc(inst.weighted_graph(), mc.coloring)) {
        io.err << "internal error: multipartite coloring is not a POC\n";
        return exit_semantic;
    }
    for (Vertex v = 0; v < inst.n(); ++v)
        io.err << inst.label(v) << " w=" << inst.weight(v) << " c=" << mc.coloring.color(v) << '\n';
    if (output.empty())
        write_coloring(io.out, mc.coloring);
    else {
        auto f = open_output(output);
        write_coloring(f, mc.coloring);
        io.out << "output " << output << '\n';
    }
    return exit_ok;
}

struct GenerateArgs
{
    std::string kind;
    int n = -1;
    std::string weights;
    std::string parts;
    double p = 0.5;
    int t = 0;
    std::uint64_t seed = 1;
    std::string output;
};

inline auto cmd_generate(Streams io, const GenerateArgs & a) -> int
{
    InstanceRng rng(a.seed);
    std::optional<Graph> g;
    if (a.kind == "path" || a.kind == "cycle" || a.kind == "complete" || a.kind == "random") {
        if (a.n < 0)
            throw PreconditionError(a.kind + " needs --n");
        if (a.kind == "path")
            g = path_graph(a.n);
        else if (a.kind == "cycle")
            g = cycle_graph(a.n);
        else if (a.kind == "complete")
            g = complete_graph(a.n);
        else
            g = random_graph(a.n, a.p, rng);
    }
    else if (a.kind == "multipartite") {
        if (a.parts.empty())
            throw PreconditionError("multipartite needs --parts");
        g = complete_multipartite_graph(parse_int_list(a.parts, "--parts"));
    }
    else
        throw PreconditionError("unknown kind '" + a.kind + "' (path, cycle, complete, multipartite, random)");

    std::vector<int> w;
    if (! a.weights.empty()) {
        w = parse_int_list(a.weights, "--weights");
        if (static_cast<int>(w.size()) != g->size())
            throw PreconditionError("--weights has " + std::to_string(w.size()) + " entries for " + std::to_string(g->size()) + " vertices");
    }
    else if (a.t > 0)
        for (int v = 0; v < g->size(); ++v)
            w.push_back(rng.uniform(1, a.t));
    else
        w.assign(static_cast<std::size_t>(g->size()), 1);

    WeightedGraph wg(std::move(*g), std::move(w));
    if (a.output.empty())
        write_wpoc(io.out, wg);
    else {
        auto f = open_output(a.output);
        write_wpoc(f, wg);
        io.out << "output " << a.output << '\n';
    }
    return exit_ok;
}

inline auto cmd_selftest(Streams io, const std::string & scale, int jobs, const std::string & fixtures, const std::string & fault) -> int
{
    if (scale != "quick" && scale != "full")
        throw PreconditionError("selftest scale must be quick or full");
    SelftestOptions opt;
    opt.full = scale == "full";
    opt.jobs = jobs;
    opt.fixture_dir = fixtures;
    opt.inject_fault = fault;
    opt.command = "selftest " + scale + (fault.empty() ? "" : " --inject-fault " + fault);
    auto report = run_selftest(opt, &io.err);
    report.print(io.out);
    return report.ok() ? exit_ok : exit_semantic;
}

inline auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    Streams io{out, err};
    CLI::App app{"properly ordered colorings of vertex-weighted graphs", "poc"};
    app.require_subcommand(1);

    std::string input, second, algo = "f", parts, orientation, output, quantity, weights, scale, fixtures = POC_FIXTURE_DIR, fault;
    std::optional<int> t;
    bool dot = false, witness = false, surjective = false;
    int jobs = 1;
    GenerateArgs gen;

    auto * color = app.add_subcommand("color", "color a WPOC graph and re-validate the result");
    color->add_option("input", input, "WPOC file")->required();
    color->add_option("--algo", algo, "f, fprime, stack, multipartite or exact")->check(CLI::IsMember({"f", "fprime", "stack", "multipartite", "exact"}));
    color->add_option("--parts", parts, "part sizes for --algo multipartite, e.g. 1,3,5");
    color->add_option("--orientation", orientation, "orientation file for --algo fprime");
    color->add_option("-o,--output", output, "coloring file to write");

    auto * verify = app.add_subcommand("verify", "check a coloring file against a graph");
    verify->add_option("graph", input, "WPOC file")->required();
    verify->add_option("coloring", second, "coloring file")->required();

    auto * orient = app.add_subcommand("orient", "emit the canonical good acyclic orientation");
    orient->add_option("input", input, "WPOC file")->required();
    orient->add_flag("--dot", dot, "emit Graphviz DOT");
    orient->add_option("-o,--output", output, "file to write");

    auto * oracle = app.add_subcommand("oracle", "exact invariants");
    oracle->add_option("input", input, "WPOC file")->required();
    oracle->add_option("quantity", quantity, "chi, chipoc, ell, ellprime, f or chipoct")->required();
    oracle->add_option("--t", t, "number of weight values for chipoct");
    oracle->add_flag("--witness", witness, "also print a witness");
    oracle->add_flag("--surjective", surjective, "chipoct over weightings using exactly t values");
    oracle->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto * multi = app.add_subcommand("multipartite", "MOCs, S-paths, g/h and the merged coloring");
    multi->add_option("--parts", parts, "part sizes, e.g. 1,3,5")->required();
    multi->add_option("--weights", weights, "weights part by part");
    multi->add_option("--t", t, "compute h over weightings into 1..t");
    multi->add_flag("--surjective", surjective, "h over weightings using exactly t values");
    multi->add_option("-o,--output", output, "coloring file to write");

    auto * generate = app.add_subcommand("generate", "write a WPOC instance");
    generate->add_option("kind", gen.kind, "path, cycle, complete, multipartite or random")->required();
    generate->add_option("--n", gen.n, "vertex count");
    generate->add_option("--weights", gen.weights, "explicit weights");
    generate->add_option("--parts", gen.parts, "part sizes for multipartite");
    generate->add_option("--p", gen.p, "edge probability for random")->check(CLI::Range(0.0, 1.0));
    generate->add_option("--t", gen.t, "uniform random weights in 1..t");
    generate->add_option("--seed", gen.seed, "random seed");
    generate->add_option("-o,--output", gen.output, "file to write");

    auto * selftest = app.add_subcommand("selftest", "run the verification suites");
    selftest->add_option("scale", scale, "quick or full")->required();
    selftest->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    selftest->add_option("--fixtures", fixtures, "fixture directory");
    selftest->add_option("--inject-fault", fault, "deliberately break a check (chi_poc_ell_prime)");

    std::vector<const char *> argv{"poc"};
    for (const auto & a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }

    try {
        if (*color)
            return cmd_color(io, input, algo, parts, orientation, output);
        if (*verify)
            return cmd_verify(io, input, second);
        if (*orient)
            return cmd_orient(io, input, dot, output);
        if (*oracle)
            return cmd_oracle(io, input, quantity, t, witness, surjective, jobs);
        if (*multi)
            return cmd_multipartite(io, parts, weights, t, surjective, output);
        if (*generate)
            return cmd_generate(io, gen);
        if (*selftest)
            return cmd_selftest(io, scale, jobs, fixtures, fault);
    }
    catch (const CapExceeded & e) {
        err << "error: " << e.what() << '\n';
        out << "cap_exceeded " << e.cap() << '\n';
        return exit_cap;
    }
    catch (const ParseError & e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
    catch (const IoError & e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
    catch (const PreconditionError & e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return exit_semantic;
    }
    return exit_input;
}

}
