// graphcat: batch front end. Every command reads JSON files and writes one JSON
// document to stdout. Exit codes: 0 ok, 1 verification failed, 2 bad input,
// 3 capacity exceeded, 4 undecided membership.

#include "graphcat/graphcat.hpp"
#include "graphcat/io.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

using namespace graphcat;

namespace {

constexpr int exit_verify = 1, exit_parse = 2, exit_capacity = 3, exit_indeterminate = 4;

struct Options {
    std::string config_file;
    unsigned seed = 20240611;
    std::size_t threads = 1;
    bool bigint = false;
    io::Config config;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Json read_json(const std::string& path)
{
    try {
        return Json::parse(slurp(path));
    } catch (const Json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

// A graph file holds graph JSON or a bare graph6 line.
Graph read_graph(const std::string& path)
{
    std::string text = slurp(path);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    if (!text.empty() && text.front() != '{' && text.front() != '"') return io::graph_from_graph6(text);
    return io::graph_from_json(read_json(path));
}

Json dump_key(const Graph& g)
{
    Json j = io::to_json(g);
    bool loops = false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) loops = loops || g.has_loop(v);
    if (!loops) j["graph6"] = io::graph_to_graph6(g);
    return j;
}

// --- tensor -------------------------------------------------------------------

struct TensorArgs {
    std::string graph, diagram, mode = "hom";
    bool csv = false;
};

template <class S>
std::string tensor_output(const TensorArgs& a, const Graph& g, const BilabelledGraph& d, const Limits& limits)
{
    const auto t = a.mode == "inj" ? build_That<S>(g, d, limits) : build_T<S>(g, d, limits);
    return a.csv ? io::to_csv(t) : io::to_json(t).dump() + "\n";
}

std::string cmd_tensor(const TensorArgs& a, const Options& o)
{
    const Graph g = read_graph(a.graph);
    const BilabelledGraph d = io::diagram_from_json(read_json(a.diagram));
    if (o.config.bigint) return tensor_output<BigInt>(a, g, d, o.config.limits);
    return tensor_output<std::int64_t>(a, g, d, o.config.limits);
}

// --- verify -------------------------------------------------------------------

struct VerifyArgs {
    std::string law, fixtures;
};

struct Case {
    std::string label;
    std::function<CheckReport()> run;
};

template <class T>
std::vector<T> read_list(const Json& j, const char* name, T (*parse)(const Json&))
{
    std::vector<T> out;
    if (!j.contains(name)) return out;
    if (!j.at(name).is_array()) throw ParseError(std::string(name) + " must be an array");
    for (const auto& x : j.at(name)) out.push_back(parse(x));
    return out;
}

BilabelledGraph random_diagram(std::mt19937& rng, std::size_t max_vertices)
{
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
    std::uniform_int_distribution<std::size_t> arity(0, 2);
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    std::bernoulli_distribution coin(0.5);
    BilabelledGraph d{Graph(n), {}, {}};
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) d.graph.add_edge(u, v);
    for (std::size_t x = arity(rng); x > 0; --x) d.inputs.push_back(pick(rng));
    for (std::size_t x = arity(rng); x > 0; --x) d.outputs.push_back(pick(rng));
    return d;
}

template <class S>
std::vector<std::pair<std::string, CheckReport>> verify_cases(const std::string& law, const Json& fx, const Options& o)
{
    const auto graphs = read_list<Graph>(fx, "graphs", io::graph_from_json);
    auto diagrams = read_list<BilabelledGraph>(fx, "diagrams", io::diagram_from_json);
    const auto groups = read_list<PermutationGroup>(fx, "groups", io::group_from_json);
    const auto partitions = read_list<SetPartition>(fx, "partitions", io::partition_from_json);
    // "random_diagrams": extra seeded diagrams on at most 3 vertices
    if (fx.contains("random_diagrams")) {
        std::mt19937 rng(o.seed);
        for (std::size_t x = io::detail::count(fx.at("random_diagrams"), "random_diagrams"); x > 0; --x)
            diagrams.push_back(random_diagram(rng, 3));
    }
    const Limits limits = o.config.limits;
    std::vector<Case> cases;
    auto name = [](const char* what, std::size_t i) { return std::string(what) + " " + std::to_string(i); };
    // "golden": [{"graph", "diagram", "mode", "tensor"}] recorded tensors, checked under every law
    std::vector<std::tuple<Graph, BilabelledGraph, bool, IntTensor>> golden;
    if (fx.contains("golden")) {
        if (!fx.at("golden").is_array()) throw ParseError("golden must be an array");
        for (const auto& g : fx.at("golden")) {
            const std::string mode = g.contains("mode") ? io::detail::text(g.at("mode"), "mode") : "hom";
            if (mode != "hom" && mode != "inj") throw ParseError("mode must be hom or inj");
            golden.emplace_back(io::graph_from_json(io::detail::field(g, "graph")),
                                io::diagram_from_json(io::detail::field(g, "diagram")), mode == "inj",
                                io::tensor_from_json(io::detail::field(g, "tensor")));
        }
    }
    for (std::size_t x = 0; x < golden.size(); ++x)
        cases.push_back({name("golden", x), [&, x] {
                             const auto& [g, d, inj, want] = golden[x];
                             const IntTensor got = inj ? build_That(g, d, limits) : build_T(g, d, limits);
                             CheckReport r;
                             r.expect_equal("recorded tensor", got, want);
                             return r;
                         }});
    if (law == "functor" || law == "that") {
        for (std::size_t gi = 0; gi < graphs.size(); ++gi)
            for (std::size_t x = 0; x < diagrams.size(); ++x)
                for (std::size_t y = 0; y < diagrams.size(); ++y)
                    cases.push_back({name("graph", gi) + ", " + name("diagram", x) + ", " + name("diagram", y),
                                     [&, gi, x, y, law] {
                                         return law == "functor"
                                             ? verify_functor<S>(graphs[gi], diagrams[x], diagrams[y], limits)
                                             : verify_that_sums<S>(graphs[gi], diagrams[x], diagrams[y], limits);
                                     }});
    } else if (law == "moebius") {
        for (std::size_t gi = 0; gi < graphs.size(); ++gi)
            for (std::size_t x = 0; x < diagrams.size(); ++x)
                cases.push_back({name("graph", gi) + ", " + name("diagram", x),
                                 [&, gi, x] { return moebius_expand<S>(graphs[gi], diagrams[x], limits); }});
    } else {
        for (std::size_t h = 0; h < groups.size(); ++h)
            for (std::size_t p = 0; p < partitions.size(); ++p)
                cases.push_back({name("group", h) + ", " + name("partition", p),
                                 [&, h, p] { return verify_THpart<S>(groups[h], partitions[p], limits); }});
    }
    // The closures capture the parsed lists by reference, so run them here.
    // Reports land in case order whatever the thread count.
    std::vector<CheckReport> reports(cases.size());
    std::vector<std::exception_ptr> errors(cases.size());
    const std::size_t workers = std::max<std::size_t>(1, std::min(o.threads, cases.size()));
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t c = w; c < cases.size(); c += workers) {
                try {
                    reports[c] = cases[c].run();
                } catch (...) {
                    errors[c] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    std::vector<std::pair<std::string, CheckReport>> done;
    for (std::size_t c = 0; c < cases.size(); ++c) {
        if (errors[c]) std::rethrow_exception(errors[c]);
        done.emplace_back(cases[c].label, std::move(reports[c]));
    }
    return done;
}

int cmd_verify(const VerifyArgs& a, const Options& o, std::string& out)
{
    const Json fx = read_json(a.fixtures);
    if (!fx.is_object()) throw ParseError("fixtures must be an object");
    const auto cases = o.config.bigint ? verify_cases<BigInt>(a.law, fx, o) : verify_cases<std::int64_t>(a.law, fx, o);
    std::size_t checks = 0, failures = 0;
    Json first = nullptr;
    for (const auto& [label, r] : cases) {
        checks += r.checks;
        failures += r.failures;
        if (!r.ok() && first.is_null()) first = {{"case", label}, {"detail", r.failure}};
    }
    Json report = {{"law", a.law}, {"cases", cases.size()}, {"checks", checks}, {"failures", failures},
                   {"pass", failures == 0}};
    if (!first.is_null()) report["first_failure"] = first;
    out = report.dump(2) + "\n";
    return failures == 0 ? 0 : exit_verify;
}

// --- dim, orbits ----------------------------------------------------------------

struct DimArgs {
    std::string group, closure;
    std::size_t k = 0, l = 0;
};

int cmd_dim(const DimArgs& a, const Options& o, std::string& out)
{
    const auto h = io::group_from_json(read_json(a.group));
    const auto spec = io::closure_spec_from_json(read_json(a.closure), o.config.strategy);
    const auto r = dimension_report(h, spec, a.k, a.l, o.config.limits);
    Json j = io::to_json(r);
    const std::size_t burnside = burnside_dim(h, a.k, a.l);
    j["oracle"] = {{"orbits", r.orbits.size()}, {"burnside", burnside}, {"agree", burnside == r.orbits.size()},
                   {"independent", r.rank == r.dim}};
    Json unknown = Json::array();
    for (const auto& v : r.orbits)
        if (v.verdict == Membership::Unknown)
            unknown.push_back({{"a", v.orbit.a}, {"b", v.orbit.b}, {"word", v.word.to_string(h.degree())}});
    int code = 0;
    if (!unknown.empty()) {
        j["unknown"] = unknown;
        code = exit_indeterminate;
    } else if (burnside != r.orbits.size()) {
        code = exit_verify;
    }
    out = j.dump(2) + "\n";
    return code;
}

struct OrbitArgs {
    std::string group;
    std::size_t k = 0, l = 0;
};

std::string cmd_orbits(const OrbitArgs& a, const Options& o)
{
    const auto h = io::group_from_json(read_json(a.group));
    Json list = Json::array();
    for (const auto& w : orbits(h, a.k, a.l, o.config.limits))
        list.push_back({{"a", w.a}, {"b", w.b}, {"size", w.size}});
    const Json j = {{"k", a.k}, {"l", a.l}, {"count", list.size()}, {"burnside", burnside_dim(h, a.k, a.l)},
                    {"orbits", list}};
    return j.dump(2) + "\n";
}

// --- closure ------------------------------------------------------------------

std::string cmd_closure(const std::string& file, const Options& o)
{
    const Json j = read_json(file);
    GraphFibration spec = io::fibration_from_json(j, o.config.strategy);
    if (!j.contains("max_vertices")) spec.max_vertices = o.config.max_vertices;
    const Fibration f(spec, o.config.limits);
    Json list = Json::array();
    for (const auto& e : f.closure()) {
        Json item = dump_key(e.graph);
        Json gens = Json::array();
        for (const Word& w : f.fiber_generators(e.graph)) gens.push_back(w.to_string(e.graph.num_vertices()));
        item["generators"] = gens;
        list.push_back(item);
    }
    const Json out = {{"easy", spec.easy}, {"max_vertices", spec.max_vertices}, {"count", list.size()}, {"graphs", list}};
    return out.dump(2) + "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"graphcat: homomorphism tensors, graph fibrations and intertwiner spaces"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--config", o.config_file, "JSON file with bounds and defaults")->check(CLI::ExistingFile);
    app.add_option("--seed", o.seed, "seed for generated fixtures");
    app.add_option("--threads", o.threads, "worker threads for verify")->check(CLI::PositiveNumber);
    app.add_flag("--bigint", o.bigint, "arbitrary-precision tensor entries");

    TensorArgs ta;
    auto* tensor = app.add_subcommand("tensor", "tensor of a bilabelled graph over a graph");
    tensor->add_option("graph", ta.graph, "graph JSON or graph6 file")->required();
    tensor->add_option("diagram", ta.diagram, "bilabelled graph JSON file")->required();
    tensor->add_option("--mode", ta.mode, "hom counts all maps, inj only injective ones")
        ->check(CLI::IsMember({"hom", "inj"}));
    tensor->add_flag("--csv", ta.csv, "write the matrix as CSV");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check an identity on every fixture");
    verify->add_option("law", va.law)->required()->check(CLI::IsMember({"functor", "that", "moebius", "thpart"}));
    verify->add_option("fixtures", va.fixtures)->required();

    DimArgs da;
    auto* dim = app.add_subcommand("dim", "dimension of an intertwiner space");
    dim->add_option("group", da.group)->required();
    dim->add_option("closure", da.closure)->required();
    dim->add_option("k", da.k)->required();
    dim->add_option("l", da.l)->required();

    std::string fib_file;
    auto* closure = app.add_subcommand("closure", "graphs of a fibration and their fibre generators");
    closure->add_option("fibration", fib_file)->required();

    OrbitArgs oa;
    auto* orb = app.add_subcommand("orbits", "orbits of a permutation group on index pairs");
    orb->add_option("group", oa.group)->required();
    orb->add_option("k", oa.k)->required();
    orb->add_option("l", oa.l)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_parse;
    }

    std::string out;
    int code = 0;
    try {
        if (!o.config_file.empty()) o.config = io::config_from_json(read_json(o.config_file));
        if (o.bigint) o.config.bigint = true;
        if (*tensor) out = cmd_tensor(ta, o);
        else if (*verify) code = cmd_verify(va, o, out);
        else if (*dim) code = cmd_dim(da, o, out);
        else if (*closure) out = cmd_closure(fib_file, o);
        else out = cmd_orbits(oa, o);
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return exit_capacity;
    } catch (const IndeterminateError& e) {
        std::cerr << "indeterminate: " << e.what() << "\n";
        return exit_indeterminate;
    } catch (const Json::exception& e) {
        std::cerr << "parse: " << e.what() << "\n";
        return exit_parse;
    } catch (const Error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_parse;
    }
    std::cout << out;
    return code;
}
