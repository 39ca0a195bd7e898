#ifndef GRAPHCAT_FIBRATION_HPP
#define GRAPHCAT_FIBRATION_HPP

#include "graphcat/canonical.hpp"
#include "graphcat/diagram.hpp"
#include "graphcat/homomorphism.hpp"
#include "graphcat/normal_closure.hpp"
#include "graphcat/partition.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace graphcat {

/// A graph fibration presented by generating bilabelled graphs S. N0 and N1
/// are always fibres. With `easy` the fibration is also closed under quotients
/// and fibres are generated along homomorphisms instead of embeddings.
struct GraphFibration {
    std::vector<BilabelledGraph> generators;
    bool easy = false;
    std::size_t max_vertices = 4;
    Strategy strategy;
};

struct ClosureEntry {
    CanonicalKey key;
    Graph graph;  // canonical representative
};

struct GreatestSubgraph {
    Graph graph;            // spanning subgraph of G with the same vertex labels
    VertexMap embedding;    // identity into G
    bool unique = false;    // every embedding of it into G has the same image
};

class Fibration {
public:
    explicit Fibration(GraphFibration spec, const Limits& limits = {}) : spec_(std::move(spec)), limits_(limits)
    {
        for (const auto& d : spec_.generators) d.validate();
    }

    const GraphFibration& spec() const { return spec_; }
    bool easy() const { return spec_.easy; }

    /// Graphs assembled by f-unions from N1 and the pieces: the generator
    /// graphs, or in the easy case all their quotients. Deduplicated.
    const std::vector<Graph>& pieces() const
    {
        if (!pieces_) {
            std::vector<Graph> out;
            std::set<CanonicalKey> seen;
            auto add = [&](const Graph& g) {
                if (g.num_vertices() > spec_.max_vertices) return;
                auto form = canonical_form(g, limits_);
                if (seen.insert(form.key).second) out.push_back(form.graph);
            };
            add(Graph(1));
            for (const auto& d : spec_.generators) {
                if (spec_.easy) {
                    for (const auto& pi : enumerate_vertex_partitions(d.graph.num_vertices(), limits_))
                        add(quotient(d.graph, pi).graph);
                } else {
                    add(d.graph);
                }
            }
            pieces_ = std::move(out);
        }
        return *pieces_;
    }

    /// Every fibre with at most max_vertices vertices, sorted by vertex count
    /// then canonical key.
    const std::vector<ClosureEntry>& closure() const
    {
        if (!closure_) build_closure();
        return *closure_;
    }

    std::vector<Graph> closure_graphs() const
    {
        std::vector<Graph> out;
        for (const auto& e : closure()) out.push_back(e.graph);
        return out;
    }

    /// Fibre test by decomposition: K is a fibre iff the piece images inside
    /// K cover every edge. Works beyond max_vertices.
    bool is_fibre(const Graph& k) const { return covered_edges(k).size() == k.num_edges(); }

    /// Generators of F(K): psi(g_{a*b}) for every generator (H, a, b) and every
    /// embedding (easy: homomorphism) psi: H -> K. Trivial words are dropped, as
    /// are words conjugate to an earlier one (up to inversion) and words
    /// already decided members of the closure of earlier ones.
    std::vector<Word> fiber_generators(const Graph& k) const
    {
        if (!is_fibre(k)) throw AbsentFibreError("graph is not a fibre of this fibration");
        std::vector<Word> out;
        std::set<Word> seen;
        for (const auto& d : spec_.generators) {
            const Word base = label_word(d.inputs, d.outputs);
            if (base.empty()) continue;
            for (const auto& psi : enumerate_homomorphisms(d.graph, k, {}, !spec_.easy)) {
                Word w = apply_map(psi, base);
                if (w.empty()) continue;
                if (!seen.insert(conjugacy_representative(w)).second) continue;
                if (!out.empty()) {
                    NormalClosureSpec earlier{k.num_vertices(), out, Strategy::racg()};
                    if (racg_commutation(earlier) && NormalClosure(earlier, limits_).member(w) == Membership::Yes)
                        continue;
                }
                out.push_back(std::move(w));
            }
        }
        return out;
    }

    NormalClosureSpec fibre_spec(const Graph& k) const
    {
        return {k.num_vertices(), fiber_generators(k), spec_.strategy};
    }

    /// Prepared membership oracle for F(K).
    NormalClosure fibre(const Graph& k) const { return NormalClosure(fibre_spec(k), limits_); }

    Membership fiber_member(const Graph& k, const Word& w) const { return fibre(k).member(w); }

    /// (K, a, b) belongs to the associated skew category iff K is a fibre and
    /// g_{a*b} lies in F(K).
    Membership diagram_member(const BilabelledGraph& d) const
    {
        d.validate();
        if (!is_fibre(d.graph)) return Membership::No;
        const Word w = label_word(d.inputs, d.outputs);
        if (w.empty()) return Membership::Yes;
        return fibre(d.graph).member(w);
    }

    /// The largest subgraph of G that is a fibre: the union of all piece
    /// images in G. Spanning since N1 is a fibre.
    GreatestSubgraph greatest_subgraph(const Graph& g) const
    {
        GreatestSubgraph out;
        out.graph = spanning_subgraph(g.num_vertices(), covered_edges(g));
        out.embedding = VertexMap::identity(g.num_vertices());
        if (!is_fibre(out.graph)) throw InternalError("union of fibre images in G is not a fibre");
        out.unique = true;
        for (const auto& phi : embeddings(out.graph, g)) {
            if (!(image_graph(out.graph, phi, g.num_vertices()) == out.graph)) {
                out.unique = false;
                break;
            }
        }
        return out;
    }

private:
    // Edges of K hit by some piece image.
    std::vector<Edge> covered_edges(const Graph& k) const
    {
        std::set<Edge> covered;
        auto absorb = [&](const Graph& h, bool injective) {
            if (h.num_edges() == 0) return;
            for_each_homomorphism(h, k, {}, injective, [&](const std::vector<Vertex>& phi) {
                for (const Edge& e : h.edges()) covered.insert(Edge(phi[e.first], phi[e.second]));
            });
        };
        for (const auto& d : spec_.generators) absorb(d.graph, !spec_.easy);
        return {covered.begin(), covered.end()};
    }

    void build_closure() const
    {
        const auto& ps = pieces();
        std::map<CanonicalKey, Graph> found;
        std::vector<Graph> queue;
        auto visit = [&](const Graph& g) {
            auto form = canonical_form(g, limits_);
            if (found.emplace(form.key, form.graph).second) queue.push_back(form.graph);
        };
        visit(Graph(0));
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const Graph x = queue[qi];
            for (const Graph& p : ps) {
                const std::size_t nx = x.num_vertices(), np = p.num_vertices();
                for (const auto& f : enumerate_overlaps(nx, np)) {
                    if (nx + np - f.pairs.size() > spec_.max_vertices) continue;
                    visit(f_union(x, p, f).graph);
                }
            }
        }
        std::vector<ClosureEntry> out;
        for (auto& [key, g] : found) out.push_back({key, g});
        std::stable_sort(out.begin(), out.end(),
                         [](const ClosureEntry& a, const ClosureEntry& b) { return a.key.n < b.key.n; });
        closure_ = std::move(out);
    }

    GraphFibration spec_;
    Limits limits_;
    mutable std::optional<std::vector<Graph>> pieces_;
    mutable std::optional<std::vector<ClosureEntry>> closure_;
};

/// The fibration generated by (G, (), a) for each generator a of A, so that
/// F(G) = A. A must be invariant under End G (easy) or Aut G.
inline GraphFibration fibration_from_group(const Graph& g, const NormalClosureSpec& a, bool easy,
                                           std::size_t max_vertices = 0, const Limits& limits = {})
{
    if (a.alphabet_size != g.num_vertices())
        throw ValidationError("alphabet size " + std::to_string(a.alphabet_size) + " differs from |V(G)| = "
                              + std::to_string(g.num_vertices()));
    a.validate();
    NormalClosure oracle(a, limits);
    const auto maps = easy ? endomorphisms(g) : automorphisms(g);
    for (const auto& phi : maps) {
        for (const Word& w : a.generators) {
            const Membership m = oracle.member(apply_map(phi, w));
            if (m == Membership::No)
                throw InvarianceError("generator " + w.to_string(a.alphabet_size) + " leaves A under "
                                      + (easy ? std::string("an endomorphism") : std::string("an automorphism")));
            if (m == Membership::Unknown)
                throw IndeterminateError("cannot decide invariance of " + w.to_string(a.alphabet_size));
        }
    }
    GraphFibration out;
    out.easy = easy;
    out.max_vertices = std::max(max_vertices, g.num_vertices());
    out.strategy = a.strategy;
    for (const Word& w : a.generators) out.generators.push_back({g, {}, w.letters});
    return out;
}

} // namespace graphcat

#endif
