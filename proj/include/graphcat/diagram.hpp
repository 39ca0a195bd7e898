#ifndef GRAPHCAT_DIAGRAM_HPP
#define GRAPHCAT_DIAGRAM_HPP

#include "graphcat/canonical.hpp"
#include "graphcat/graph.hpp"
#include "graphcat/partition.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace graphcat {

/// (K, a, b): a graph with an input tuple a (k labels) and an output tuple b
/// (l labels). Labels may repeat; unlabelled vertices are allowed.
struct BilabelledGraph {
    Graph graph;
    std::vector<Vertex> inputs;
    std::vector<Vertex> outputs;

    std::size_t num_inputs() const { return inputs.size(); }
    std::size_t num_outputs() const { return outputs.size(); }

    void validate() const
    {
        for (Vertex v : inputs)
            if (v >= graph.num_vertices()) throw ValidationError("input label " + std::to_string(v) + " out of range");
        for (Vertex v : outputs)
            if (v >= graph.num_vertices()) throw ValidationError("output label " + std::to_string(v) + " out of range");
    }

    /// Equality as labelled data (no isomorphism); see same_diagram for the
    /// up-to-isomorphism comparison.
    bool operator==(const BilabelledGraph&) const = default;
};

namespace diagrams {

/// The empty diagram 0 in C(0,0).
inline BilabelledGraph empty() { return {Graph(0), {}, {}}; }

/// M^{k,l}: one vertex carrying every label.
inline BilabelledGraph single_vertex(std::size_t k, std::size_t l)
{
    return {Graph(1), std::vector<Vertex>(k, 0), std::vector<Vertex>(l, 0)};
}

inline BilabelledGraph identity() { return single_vertex(1, 1); }
inline BilabelledGraph pair() { return single_vertex(0, 2); }
inline BilabelledGraph cap() { return single_vertex(2, 0); }

/// (G, (), (0, 1, ..., n-1)).
inline BilabelledGraph all_outputs(const Graph& g)
{
    BilabelledGraph d{g, {}, std::vector<Vertex>(g.num_vertices())};
    std::iota(d.outputs.begin(), d.outputs.end(), Vertex{0});
    return d;
}

} // namespace diagrams

/// K (x) H = (K disjoint-union H, ac, bd).
inline BilabelledGraph tensor(const BilabelledGraph& k, const BilabelledGraph& h)
{
    auto u = f_union(k.graph, h.graph, {});
    BilabelledGraph out{std::move(u.graph), k.inputs, k.outputs};
    for (Vertex v : h.inputs) out.inputs.push_back(u.from_second(v));
    for (Vertex v : h.outputs) out.outputs.push_back(u.from_second(v));
    return out;
}

namespace detail {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    VertexPartition partition()
    {
        std::vector<std::size_t> assignment(parent.size());
        for (std::size_t v = 0; v < parent.size(); ++v) assignment[v] = find(v);
        return VertexPartition::from_assignment(assignment);
    }
};

} // namespace detail

/// H . K: K below H with each output b_i of K contracted onto input c_i of H.
/// Repeated labels chain identifications together; resulting edge
/// multiplicities collapse.
inline BilabelledGraph compose(const BilabelledGraph& h, const BilabelledGraph& k)
{
    if (k.outputs.size() != h.inputs.size()) {
        throw CompositionError("cannot compose: " + std::to_string(k.outputs.size()) + " outputs against "
                               + std::to_string(h.inputs.size()) + " inputs");
    }
    const std::size_t nk = k.graph.num_vertices();
    Graph both = disjoint_union(k.graph, h.graph);
    detail::DisjointSets sets(both.num_vertices());
    for (std::size_t i = 0; i < k.outputs.size(); ++i) sets.unite(k.outputs[i], nk + h.inputs[i]);
    auto q = quotient(both, sets.partition());
    BilabelledGraph out{std::move(q.graph), {}, {}};
    for (Vertex v : k.inputs) out.inputs.push_back(q.projection(v));
    for (Vertex v : h.outputs) out.outputs.push_back(q.projection(nk + v));
    return out;
}

inline BilabelledGraph involution(const BilabelledGraph& k) { return {k.graph, k.outputs, k.inputs}; }

/// (K, (a2..ak), (a1, b1..bl)).
inline BilabelledGraph rotate_left(const BilabelledGraph& k)
{
    if (k.inputs.empty()) throw ArityError("left rotation needs at least one input");
    BilabelledGraph out{k.graph, std::vector<Vertex>(k.inputs.begin() + 1, k.inputs.end()), {k.inputs.front()}};
    out.outputs.insert(out.outputs.end(), k.outputs.begin(), k.outputs.end());
    return out;
}

/// (K, (a1..ak, bl), (b1..b(l-1))).
inline BilabelledGraph rotate_right(const BilabelledGraph& k)
{
    if (k.outputs.empty()) throw ArityError("right rotation needs at least one output");
    BilabelledGraph out{k.graph, k.inputs, std::vector<Vertex>(k.outputs.begin(), k.outputs.end() - 1)};
    out.inputs.push_back(k.outputs.back());
    return out;
}

/// K u_f H = (K u_f H, ac, bd).
inline BilabelledGraph bl_f_union(const BilabelledGraph& k, const BilabelledGraph& h, const VertexOverlap& f)
{
    auto u = f_union(k.graph, h.graph, f);
    BilabelledGraph out{std::move(u.graph), u.from_first.apply(k.inputs), u.from_first.apply(k.outputs)};
    for (Vertex v : h.inputs) out.inputs.push_back(u.from_second(v));
    for (Vertex v : h.outputs) out.outputs.push_back(u.from_second(v));
    return out;
}

/// H ._f K = (K u_f H, a, d). The overlap must pair every output b_i of K
/// with the matching input c_i of H.
inline BilabelledGraph bl_f_compose(const BilabelledGraph& h, const BilabelledGraph& k, const VertexOverlap& f)
{
    if (k.outputs.size() != h.inputs.size()) {
        throw CompositionError("cannot f-compose: " + std::to_string(k.outputs.size()) + " outputs against "
                               + std::to_string(h.inputs.size()) + " inputs");
    }
    for (std::size_t i = 0; i < k.outputs.size(); ++i) {
        if (!f.contains(k.outputs[i], h.inputs[i])) {
            throw PreconditionError("overlap misses the pair (" + std::to_string(k.outputs[i]) + ","
                                    + std::to_string(h.inputs[i]) + ") required by label " + std::to_string(i));
        }
    }
    auto u = f_union(k.graph, h.graph, f);
    return {std::move(u.graph), u.from_first.apply(k.inputs), u.from_second.apply(h.outputs)};
}

/// (K/pi, q(a), q(b)).
inline BilabelledGraph quotient(const BilabelledGraph& k, const VertexPartition& pi)
{
    auto q = quotient(k.graph, pi);
    return {std::move(q.graph), q.projection.apply(k.inputs), q.projection.apply(k.outputs)};
}

/// Edgeless graph with one vertex per block (empty blocks become isolated
/// vertices); upper points label inputs, lower points label outputs.
inline BilabelledGraph partition_to_bilabelled(const SetPartition& p)
{
    BilabelledGraph out{Graph(p.num_blocks()), {}, {}};
    for (std::size_t i = 0; i < p.upper(); ++i) out.inputs.push_back(p.block_of(i));
    for (std::size_t j = 0; j < p.lower(); ++j) out.outputs.push_back(p.block_of(p.upper() + j));
    return out;
}

/// ker(a, b) of a diagram's label tuples.
inline SetPartition label_kernel(const BilabelledGraph& d) { return ker(d.inputs, d.outputs); }

inline CanonicalKey diagram_key(const BilabelledGraph& d, const Limits& limits = {})
{
    return labelled_canonical_form(d.graph, d.inputs, d.outputs, limits).key;
}

/// Equality up to isomorphism of the underlying graph respecting both label tuples.
inline bool same_diagram(const BilabelledGraph& a, const BilabelledGraph& b, const Limits& limits = {})
{
    if (a.graph.num_vertices() != b.graph.num_vertices() || a.graph.num_edges() != b.graph.num_edges()
        || a.inputs.size() != b.inputs.size() || a.outputs.size() != b.outputs.size())
        return false;
    return diagram_key(a, limits) == diagram_key(b, limits);
}

/// Every vertex overlap between graphs on nk and nh vertices: by size, then
/// lexicographically by chosen K-subset, H-subset and bijection.
inline std::vector<VertexOverlap> enumerate_overlaps(std::size_t nk, std::size_t nh)
{
    std::vector<VertexOverlap> out;
    const std::size_t max_size = std::min(nk, nh);
    for (std::size_t m = 0; m <= max_size; ++m) {
        std::vector<char> pick_k(nk, 0), pick_h(nh, 0);
        std::fill(pick_k.begin(), pick_k.begin() + m, 1);
        do {
            std::vector<Vertex> ks;
            for (Vertex v = 0; v < nk; ++v)
                if (pick_k[v]) ks.push_back(v);
            std::fill(pick_h.begin(), pick_h.end(), 0);
            std::fill(pick_h.begin(), pick_h.begin() + m, 1);
            do {
                std::vector<Vertex> hs;
                for (Vertex v = 0; v < nh; ++v)
                    if (pick_h[v]) hs.push_back(v);
                do {
                    VertexOverlap f;
                    for (std::size_t i = 0; i < m; ++i) f.pairs.emplace_back(ks[i], hs[i]);
                    out.push_back(std::move(f));
                } while (std::next_permutation(hs.begin(), hs.end()));
            } while (std::prev_permutation(pick_h.begin(), pick_h.end()));
        } while (std::prev_permutation(pick_k.begin(), pick_k.end()));
    }
    return out;
}

/// Overlaps that contain every pair in `required` (same order as enumerate_overlaps).
inline std::vector<VertexOverlap> enumerate_overlaps_extending(std::size_t nk, std::size_t nh,
                                                               const std::vector<std::pair<Vertex, Vertex>>& required)
{
    std::vector<VertexOverlap> out;
    for (auto& f : enumerate_overlaps(nk, nh)) {
        bool ok = true;
        for (auto [a, b] : required)
            if (!f.contains(a, b)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(std::move(f));
    }
    return out;
}

/// The pairs (b_i, c_i) an f-composition H ._f K must contain.
inline std::vector<std::pair<Vertex, Vertex>> composition_pairs(const BilabelledGraph& h, const BilabelledGraph& k)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < k.outputs.size() && i < h.inputs.size(); ++i)
        pairs.emplace_back(k.outputs[i], h.inputs[i]);
    return pairs;
}

/// Graphviz rendering; inputs drawn as "in<i>" boxes, outputs as "out<j>".
inline std::string to_dot(const BilabelledGraph& d)
{
    std::string s = "graph bilabelled {\n";
    for (Vertex v = 0; v < d.graph.num_vertices(); ++v) s += "  v" + std::to_string(v) + ";\n";
    for (const Edge& e : d.graph.edges())
        s += "  v" + std::to_string(e.first) + " -- v" + std::to_string(e.second) + ";\n";
    for (std::size_t i = 0; i < d.inputs.size(); ++i)
        s += "  in" + std::to_string(i) + " [shape=box]; in" + std::to_string(i) + " -- v"
             + std::to_string(d.inputs[i]) + " [style=dashed];\n";
    for (std::size_t j = 0; j < d.outputs.size(); ++j)
        s += "  out" + std::to_string(j) + " [shape=box]; out" + std::to_string(j) + " -- v"
             + std::to_string(d.outputs[j]) + " [style=dashed];\n";
    return s + "}\n";
}

} // namespace graphcat

#endif
