#ifndef GRAPHCAT_IO_HPP
#define GRAPHCAT_IO_HPP

// JSON conversions. Needs nlohmann/json (vendor/json.hpp) on the include path.

#include "graphcat/diagram.hpp"
#include "graphcat/fibration.hpp"
#include "graphcat/normal_closure.hpp"
#include "graphcat/perm_group.hpp"
#include "graphcat/rep_spaces.hpp"
#include "graphcat/tensor.hpp"

#include <json.hpp>

#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace graphcat {

using Json = nlohmann::json;

/// Raised for malformed input documents.
class ParseError : public Error {
public:
    using Error::Error;
};

namespace io {

namespace detail {

inline const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

inline std::size_t count(const Json& j, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

inline std::vector<std::size_t> counts(const Json& j, const char* what)
{
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<std::size_t> out;
    for (const auto& x : j) out.push_back(count(x, what));
    return out;
}

inline bool flag(const Json& j, const char* what)
{
    if (!j.is_boolean()) throw ParseError(std::string(what) + " must be true or false");
    return j.get<bool>();
}

inline std::string text(const Json& j, const char* what)
{
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

} // namespace detail

// graph6 for graphs on at most 62 vertices.
inline Graph graph_from_graph6(const std::string& s)
{
    if (s.empty() || s[0] < 63 || s[0] > 125) throw ParseError("graph6 string has no valid order byte");
    const std::size_t n = static_cast<std::size_t>(s[0] - 63);
    Graph g(n);
    std::size_t bit = 0;
    auto next_bit = [&]() {
        const std::size_t byte = 1 + bit / 6;
        if (byte >= s.size()) throw ParseError("graph6 string is truncated");
        const int value = s[byte] - 63;
        if (value < 0 || value > 63) throw ParseError("graph6 string has an invalid byte");
        const bool b = (value >> (5 - bit % 6)) & 1;
        ++bit;
        return b;
    };
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
            if (next_bit()) g.add_edge(i, j);
    return g;
}

inline std::string graph_to_graph6(const Graph& g)
{
    const std::size_t n = g.num_vertices();
    if (n > 62) throw CapacityError("graph6 writer handles at most 62 vertices");
    std::string s(1, static_cast<char>(63 + n));
    int value = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                s.push_back(static_cast<char>(63 + value));
                value = filled = 0;
            }
        }
    if (filled) s.push_back(static_cast<char>(63 + (value << (6 - filled))));
    return s;
}

/// {"n": 3, "edges": [[0,1],[1,1]]} or {"graph6": "Bw", "loops": [0]}.
inline Graph graph_from_json(const Json& j)
{
    if (j.is_string()) return graph_from_graph6(j.get<std::string>());
    if (!j.is_object()) throw ParseError("graph must be an object or a graph6 string");
    Graph g;
    if (j.contains("graph6")) {
        g = graph_from_graph6(detail::text(j.at("graph6"), "graph6"));
        if (j.contains("loops"))
            for (std::size_t v : detail::counts(j.at("loops"), "loop vertex")) {
                if (v >= g.num_vertices()) throw ParseError("loop vertex out of range");
                g.add_edge(v, v);
            }
        return g;
    }
    const std::size_t n = detail::count(detail::field(j, "n"), "n");
    g = Graph(n);
    if (j.contains("edges")) {
        if (!j.at("edges").is_array()) throw ParseError("edges must be an array");
        for (const auto& e : j.at("edges")) {
            auto ends = detail::counts(e, "edge endpoint");
            if (ends.size() != 2) throw ParseError("edge must have two endpoints");
            if (ends[0] >= n || ends[1] >= n) throw ParseError("edge endpoint out of range");
            g.add_edge(ends[0], ends[1]);
        }
    }
    return g;
}

inline Json to_json(const Graph& g)
{
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
    return {{"n", g.num_vertices()}, {"edges", edges}};
}

/// {"graph": <graph>, "inputs": [...], "outputs": [...]}; the graph fields may
/// also sit directly in the object.
inline BilabelledGraph diagram_from_json(const Json& j)
{
    if (!j.is_object()) throw ParseError("bilabelled graph must be an object");
    BilabelledGraph d;
    d.graph = j.contains("graph") ? graph_from_json(j.at("graph")) : graph_from_json(j);
    if (j.contains("inputs")) d.inputs = detail::counts(j.at("inputs"), "input label");
    if (j.contains("outputs")) d.outputs = detail::counts(j.at("outputs"), "output label");
    try {
        d.validate();
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
    return d;
}

inline Json to_json(const BilabelledGraph& d)
{
    return {{"graph", to_json(d.graph)}, {"inputs", d.inputs}, {"outputs", d.outputs}};
}

/// {"k": 1, "l": 2, "blocks": [[0, 1], [2]]}; upper points first.
inline SetPartition partition_from_json(const Json& j)
{
    const std::size_t k = detail::count(detail::field(j, "k"), "k");
    const std::size_t l = detail::count(detail::field(j, "l"), "l");
    std::vector<std::vector<std::size_t>> blocks;
    const auto& bs = detail::field(j, "blocks");
    if (!bs.is_array()) throw ParseError("blocks must be an array");
    for (const auto& b : bs) blocks.push_back(detail::counts(b, "partition point"));
    try {
        return SetPartition::from_blocks(k, l, blocks);
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
}

inline Json to_json(const SetPartition& p)
{
    return {{"k", p.upper()}, {"l", p.lower()}, {"blocks", p.blocks()}};
}

/// A letter is an index, a name "a".."z", or "v<index>".
inline Letter letter_from_json(const Json& j)
{
    if (j.is_number_integer()) return detail::count(j, "letter");
    if (!j.is_string()) throw ParseError("letter must be an integer or a string");
    const auto s = j.get<std::string>();
    if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'z') return static_cast<Letter>(s[0] - 'a');
    if (s.size() >= 2 && s[0] == 'v' && s.find_first_not_of("0123456789", 1) == std::string::npos)
        return std::stoul(s.substr(1));
    throw ParseError("unrecognised letter \"" + s + "\"");
}

/// Either an array of letters or a string such as "abab".
inline Word word_from_json(const Json& j)
{
    if (j.is_string()) {
        try {
            return word_from_string(j.get<std::string>());
        } catch (const ValidationError& e) {
            throw ParseError(e.what());
        }
    }
    if (!j.is_array()) throw ParseError("word must be an array or a string");
    Word w;
    for (const auto& x : j) w.letters.push_back(letter_from_json(x));
    return w;
}

inline Json to_json(const Word& w) { return w.letters; }

inline Strategy strategy_from_json(const Json& j)
{
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "racg") return Strategy::racg();
        if (s == "finite-model") return Strategy::finite_model();
        if (s == "auto") return Strategy::automatic();
        if (s == "bounded-bfs") return Strategy::bounded_bfs();
        throw ParseError("unknown strategy \"" + s + "\"");
    }
    if (j.is_object() && j.contains("bounded-bfs")) {
        const auto& b = j.at("bounded-bfs");
        if (!b.is_object()) throw ParseError("bounded-bfs settings must be an object");
        Strategy s = Strategy::bounded_bfs();
        if (b.contains("depth")) s.depth = detail::count(b.at("depth"), "depth");
        if (b.contains("max_len")) s.max_len = detail::count(b.at("max_len"), "max_len");
        return s;
    }
    throw ParseError("strategy must be \"racg\", \"finite-model\", \"auto\" or {\"bounded-bfs\": {...}}");
}

inline Json to_json(const Strategy& s)
{
    switch (s.kind) {
    case Strategy::Kind::Racg: return "racg";
    case Strategy::Kind::FiniteModel: return "finite-model";
    case Strategy::Kind::Auto: return "auto";
    default: return {{"bounded-bfs", {{"depth", s.depth}, {"max_len", s.max_len}}}};
    }
}

/// {"alphabet": n, "generators": [["a","b","a","b"]], "strategy": "racg"}.
inline NormalClosureSpec closure_spec_from_json(const Json& j, const Strategy& fallback = {})
{
    NormalClosureSpec spec;
    spec.alphabet_size = detail::count(detail::field(j, "alphabet"), "alphabet");
    if (j.contains("generators")) {
        if (!j.at("generators").is_array()) throw ParseError("generators must be an array");
        for (const auto& w : j.at("generators")) spec.generators.push_back(word_from_json(w));
    }
    spec.strategy = j.contains("strategy") ? strategy_from_json(j.at("strategy")) : fallback;
    try {
        spec.validate();
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
    return spec;
}

inline Json to_json(const NormalClosureSpec& spec)
{
    Json gens = Json::array();
    for (const auto& w : spec.generators) gens.push_back(to_json(w));
    return {{"alphabet", spec.alphabet_size}, {"generators", gens}, {"strategy", to_json(spec.strategy)}};
}

/// {"generators": [...], "easy": false, "max_vertices": 4, "strategy": ...}.
inline GraphFibration fibration_from_json(const Json& j, const Strategy& fallback = {})
{
    if (!j.is_object()) throw ParseError("fibration must be an object");
    GraphFibration f;
    if (j.contains("generators")) {
        if (!j.at("generators").is_array()) throw ParseError("generators must be an array");
        for (const auto& d : j.at("generators")) f.generators.push_back(diagram_from_json(d));
    }
    if (j.contains("easy")) f.easy = detail::flag(j.at("easy"), "easy");
    if (j.contains("max_vertices")) f.max_vertices = detail::count(j.at("max_vertices"), "max_vertices");
    f.strategy = j.contains("strategy") ? strategy_from_json(j.at("strategy")) : fallback;
    return f;
}

/// {"symmetric": n}, {"trivial": n}, {"automorphisms_of": <graph>},
/// {"degree": n, "elements": [[...]]} or {"degree": n, "generators": [[...]]}.
inline PermutationGroup group_from_json(const Json& j)
{
    if (!j.is_object()) throw ParseError("group must be an object");
    try {
        if (j.contains("symmetric")) return PermutationGroup::symmetric(detail::count(j.at("symmetric"), "degree"));
        if (j.contains("trivial")) return PermutationGroup::trivial(detail::count(j.at("trivial"), "degree"));
        if (j.contains("automorphisms_of")) return PermutationGroup::automorphisms_of(graph_from_json(j.at("automorphisms_of")));
        const std::size_t n = detail::count(detail::field(j, "degree"), "degree");
        auto perms = [&](const char* name) {
            std::vector<Permutation> out;
            const auto& list = detail::field(j, name);
            if (!list.is_array()) throw ParseError(std::string(name) + " must be an array");
            for (const auto& p : list) out.push_back(Permutation{detail::counts(p, "image")});
            return out;
        };
        if (j.contains("elements")) return PermutationGroup::from_elements(n, perms("elements"));
        return PermutationGroup::generated_by(n, perms("generators"));
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
}

inline Json entry_to_json(std::int64_t x) { return x; }

inline Json entry_to_json(const BigInt& x)
{
    if (x <= std::numeric_limits<std::int64_t>::max() && x >= std::numeric_limits<std::int64_t>::min())
        return static_cast<std::int64_t>(x);
    return x.str();
}

/// {"n": .., "k": .., "l": .., "entries": [...]}, row-major over (j, i).
template <class S>
Json to_json(const BasicTensor<S>& t)
{
    Json entries = Json::array();
    for (const auto& e : t.entries()) entries.push_back(entry_to_json(e));
    return {{"n", t.n()}, {"k", t.k()}, {"l", t.l()}, {"entries", entries}};
}

inline IntTensor tensor_from_json(const Json& j)
{
    IntTensor t(detail::count(detail::field(j, "n"), "n"), detail::count(detail::field(j, "k"), "k"),
                detail::count(detail::field(j, "l"), "l"));
    const auto& es = detail::field(j, "entries");
    if (!es.is_array() || es.size() != t.size()) throw ParseError("entries must list n^(k+l) integers");
    for (std::size_t x = 0; x < t.size(); ++x) {
        if (!es[x].is_number_integer()) throw ParseError("tensor entries must be integers");
        t.entries()[x] = es[x].get<std::int64_t>();
    }
    return t;
}

/// One line per row, comma separated.
template <class S>
std::string to_csv(const BasicTensor<S>& t)
{
    std::ostringstream os;
    for (std::size_t r = 0; r < t.rows(); ++r) {
        for (std::size_t c = 0; c < t.cols(); ++c) os << (c ? "," : "") << t.at(r, c);
        os << "\n";
    }
    return os.str();
}

inline Json to_json(const DimensionReport& r)
{
    Json orbits = Json::array();
    for (const auto& o : r.orbits)
        orbits.push_back({{"a", o.orbit.a},
                          {"b", o.orbit.b},
                          {"size", o.orbit.size},
                          {"accepted", o.verdict == Membership::Yes},
                          {"verdict", to_string(o.verdict)}});
    return {{"k", r.k}, {"l", r.l}, {"dim", r.dim}, {"rank", r.rank}, {"orbits", orbits}};
}

/// Batch settings shared by the command-line tool.
struct Config {
    std::size_t max_vertices = 4;
    Limits limits;
    Strategy strategy;
    bool bigint = false;
};

/// {"max_vertices", "partition_bound", "tuple_bound", "coset_cap",
///  "canonical_bound", "strategy", "bigint"}; absent keys keep defaults.
inline Config config_from_json(const Json& j)
{
    if (!j.is_object()) throw ParseError("config must be an object");
    Config c;
    auto positive = [&](const char* name, std::size_t& slot) {
        if (!j.contains(name)) return;
        slot = detail::count(j.at(name), name);
        if (slot == 0) throw ParseError(std::string(name) + " must be positive");
    };
    positive("max_vertices", c.max_vertices);
    positive("partition_bound", c.limits.partition_points);
    positive("tuple_bound", c.limits.tuple_count);
    positive("coset_cap", c.limits.coset_cap);
    positive("canonical_bound", c.limits.canonical_vertices);
    positive("bfs_state_cap", c.limits.bfs_state_cap);
    if (j.contains("strategy")) c.strategy = strategy_from_json(j.at("strategy"));
    if (j.contains("bigint")) c.bigint = detail::flag(j.at("bigint"), "bigint");
    return c;
}

} // namespace io
} // namespace graphcat

#endif
