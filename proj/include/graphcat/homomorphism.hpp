#ifndef GRAPHCAT_HOMOMORPHISM_HPP
#define GRAPHCAT_HOMOMORPHISM_HPP

#include "graphcat/graph.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace graphcat {

/// Optional forced image per source vertex; an empty vector means no pins.
using Pins = std::vector<std::optional<Vertex>>;

namespace detail {

/// Backtracking search plan: pinned vertices first, then by decreasing degree.
struct HomPlan {
    std::vector<Vertex> order;
    // For each position, the earlier-placed neighbours that constrain it.
    std::vector<std::vector<Vertex>> back_neighbours;
    std::vector<char> needs_loop;

    HomPlan(const Graph& k, const Pins& pins)
    {
        const std::size_t n = k.num_vertices();
        order.resize(n);
        std::iota(order.begin(), order.end(), Vertex{0});
        auto pinned = [&](Vertex v) { return !pins.empty() && pins[v].has_value(); };
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
            if (pinned(a) != pinned(b)) return pinned(a);
            return k.degree(a) > k.degree(b);
        });
        std::vector<std::size_t> position(n);
        for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;
        back_neighbours.resize(n);
        needs_loop.resize(n);
        for (std::size_t p = 0; p < n; ++p) {
            Vertex u = order[p];
            needs_loop[p] = k.has_loop(u);
            for (Vertex w : k.neighbours(u))
                if (w != u && position[w] < p) back_neighbours[p].push_back(w);
        }
    }
};

template <class Fn>
void hom_search(const Graph& k, const Graph& g, const Pins& pins, bool injective, const HomPlan& plan,
                std::size_t pos, std::vector<Vertex>& phi, std::vector<char>& used, Fn& fn)
{
    if (pos == plan.order.size()) {
        fn(static_cast<const std::vector<Vertex>&>(phi));
        return;
    }
    const Vertex u = plan.order[pos];
    Vertex lo = 0, hi = g.num_vertices();
    if (!pins.empty() && pins[u]) {
        lo = *pins[u];
        hi = lo + 1;
    }
    for (Vertex c = lo; c < hi; ++c) {
        if (injective && used[c]) continue;
        if (plan.needs_loop[pos] && !g.has_loop(c)) continue;
        bool ok = true;
        for (Vertex w : plan.back_neighbours[pos]) {
            if (!g.adjacent(c, phi[w])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        phi[u] = c;
        if (injective) used[c] = 1;
        hom_search(k, g, pins, injective, plan, pos + 1, phi, used, fn);
        if (injective) used[c] = 0;
    }
}

} // namespace detail

/// Calls fn(images) for every homomorphism K -> G extending the pins, in
/// search order (not sorted). `images[v]` is the image of vertex v.
template <class Fn>
void for_each_homomorphism(const Graph& k, const Graph& g, const Pins& pins, bool injective, Fn&& fn)
{
    if (!pins.empty()) {
        if (pins.size() != k.num_vertices()) throw ValidationError("pin vector size differs from |V(K)|");
        for (const auto& p : pins)
            if (p && *p >= g.num_vertices()) throw ValidationError("pin targets a vertex outside the target graph");
    }
    if (injective && k.num_vertices() > g.num_vertices()) return;
    detail::HomPlan plan(k, pins);
    std::vector<Vertex> phi(k.num_vertices(), 0);
    std::vector<char> used(g.num_vertices(), 0);
    detail::hom_search(k, g, pins, injective, plan, 0, phi, used, fn);
}

/// All homomorphisms (embeddings when `injective`) K -> G extending the pins,
/// sorted lexicographically by image tuple.
inline std::vector<VertexMap> enumerate_homomorphisms(const Graph& k, const Graph& g, const Pins& pins = {},
                                                      bool injective = false)
{
    std::vector<VertexMap> out;
    for_each_homomorphism(k, g, pins, injective, [&](const std::vector<Vertex>& phi) { out.push_back({phi}); });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t count_homomorphisms(const Graph& k, const Graph& g, bool injective = false)
{
    std::size_t count = 0;
    for_each_homomorphism(k, g, {}, injective, [&](const std::vector<Vertex>&) { ++count; });
    return count;
}

inline std::vector<VertexMap> embeddings(const Graph& k, const Graph& g)
{
    return enumerate_homomorphisms(k, g, {}, true);
}

inline std::vector<VertexMap> endomorphisms(const Graph& g) { return enumerate_homomorphisms(g, g); }

/// Aut G. An injective endomorphism of a finite graph permutes both vertices
/// and edges, so its inverse is a homomorphism as well.
inline std::vector<VertexMap> automorphisms(const Graph& g) { return enumerate_homomorphisms(g, g, {}, true); }

inline bool is_homomorphism(const Graph& k, const Graph& g, const VertexMap& phi)
{
    if (phi.size() != k.num_vertices()) return false;
    for (Vertex v : phi.images)
        if (v >= g.num_vertices()) return false;
    for (const Edge& e : k.edges())
        if (!g.adjacent(phi(e.first), phi(e.second))) return false;
    return true;
}

} // namespace graphcat

#endif
