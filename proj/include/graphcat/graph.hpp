#ifndef GRAPHCAT_GRAPH_HPP
#define GRAPHCAT_GRAPH_HPP

#include "graphcat/error.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace graphcat {

using Vertex = std::size_t;

/// Undirected edge stored with first <= second; first == second is a loop.
struct Edge {
    Vertex first = 0;
    Vertex second = 0;

    Edge() = default;
    Edge(Vertex u, Vertex v) : first(std::min(u, v)), second(std::max(u, v)) {}

    bool is_loop() const { return first == second; }
    auto operator<=>(const Edge&) const = default;
};

/// Finite undirected graph on vertices 0..n-1 with optional loops and no
/// multi-edges. Adding an edge twice is a no-op.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}
    Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n)
    {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }
    bool has_loop(Vertex v) const { return adjacent(v, v); }

    /// Number of distinct neighbours, a loop counting once.
    std::size_t degree(Vertex v) const
    {
        std::size_t d = 0;
        for (Vertex w = 0; w < n_; ++w) d += adj_[v * n_ + w];
        return d;
    }

    std::vector<Vertex> neighbours(Vertex v) const
    {
        std::vector<Vertex> out;
        for (Vertex w = 0; w < n_; ++w)
            if (adjacent(v, w)) out.push_back(w);
        return out;
    }

    void add_edge(Vertex u, Vertex v)
    {
        if (u >= n_ || v >= n_) {
            throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v)
                                  + "} references a vertex outside 0.." + std::to_string(n_));
        }
        if (adjacent(u, v)) return;
        adj_[u * n_ + v] = 1;
        adj_[v * n_ + u] = 1;
        Edge e(u, v);
        edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
    }

    /// Graph equality as labelled graphs (same n, same edge set).
    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<Edge> edges_;
};

/// A total function on vertices 0..size()-1.
struct VertexMap {
    std::vector<Vertex> images;

    std::size_t size() const { return images.size(); }
    Vertex operator()(Vertex v) const { return images[v]; }
    bool operator==(const VertexMap&) const = default;
    auto operator<=>(const VertexMap&) const = default;

    static VertexMap identity(std::size_t n)
    {
        VertexMap m;
        m.images.resize(n);
        std::iota(m.images.begin(), m.images.end(), Vertex{0});
        return m;
    }

    std::vector<Vertex> apply(const std::vector<Vertex>& tuple) const
    {
        std::vector<Vertex> out;
        out.reserve(tuple.size());
        for (Vertex v : tuple) out.push_back(images[v]);
        return out;
    }
};

/// Partition of 0..n-1 into disjoint nonempty blocks. Block i becomes vertex i
/// of a quotient graph.
struct VertexPartition {
    std::vector<std::vector<Vertex>> blocks;

    std::size_t num_vertices() const
    {
        std::size_t n = 0;
        for (const auto& b : blocks) n += b.size();
        return n;
    }

    /// Throws ValidationError unless the blocks are nonempty, disjoint and cover 0..n-1.
    void validate(std::size_t n) const
    {
        std::vector<char> seen(n, 0);
        std::size_t covered = 0;
        for (const auto& block : blocks) {
            if (block.empty()) throw ValidationError("vertex partition has an empty block");
            for (Vertex v : block) {
                if (v >= n) throw ValidationError("vertex partition references vertex " + std::to_string(v));
                if (seen[v]) throw ValidationError("vertex " + std::to_string(v) + " appears in two blocks");
                seen[v] = 1;
                ++covered;
            }
        }
        if (covered != n) throw ValidationError("vertex partition does not cover every vertex");
    }

    /// Blocks from a block-id assignment; ids need not be contiguous.
    static VertexPartition from_assignment(const std::vector<std::size_t>& block_of)
    {
        VertexPartition p;
        std::vector<std::size_t> remap;
        for (Vertex v = 0; v < block_of.size(); ++v) {
            std::size_t id = block_of[v];
            if (id >= remap.size()) remap.resize(id + 1, SIZE_MAX);
            if (remap[id] == SIZE_MAX) {
                remap[id] = p.blocks.size();
                p.blocks.emplace_back();
            }
            p.blocks[remap[id]].push_back(v);
        }
        return p;
    }

    static VertexPartition singletons(std::size_t n)
    {
        VertexPartition p;
        for (Vertex v = 0; v < n; ++v) p.blocks.push_back({v});
        return p;
    }
};

/// Injective partial function V(K) -> V(H), stored as (vertex of K, vertex of H) pairs.
struct VertexOverlap {
    std::vector<std::pair<Vertex, Vertex>> pairs;

    std::size_t size() const { return pairs.size(); }
    bool operator==(const VertexOverlap&) const = default;

    bool contains(Vertex k, Vertex h) const
    {
        return std::find(pairs.begin(), pairs.end(), std::pair{k, h}) != pairs.end();
    }

    void validate(std::size_t nk, std::size_t nh) const
    {
        std::vector<char> used_k(nk, 0), used_h(nh, 0);
        for (auto [k, h] : pairs) {
            if (k >= nk || h >= nh) {
                throw ValidationError("overlap pair (" + std::to_string(k) + "," + std::to_string(h)
                                      + ") is out of range");
            }
            if (used_k[k] || used_h[h]) throw ValidationError("vertex overlap is not injective");
            used_k[k] = used_h[h] = 1;
        }
    }

    VertexOverlap inverse() const
    {
        VertexOverlap inv;
        for (auto [k, h] : pairs) inv.pairs.emplace_back(h, k);
        return inv;
    }
};

struct QuotientResult {
    Graph graph;
    VertexMap projection;  // q_pi
};

/// K/pi: one vertex per block, an edge between blocks whenever some member
/// edge joins them (a loop when both ends land in the same block).
inline QuotientResult quotient(const Graph& k, const VertexPartition& pi)
{
    pi.validate(k.num_vertices());
    QuotientResult r{Graph(pi.blocks.size()), VertexMap{std::vector<Vertex>(k.num_vertices())}};
    for (std::size_t b = 0; b < pi.blocks.size(); ++b)
        for (Vertex v : pi.blocks[b]) r.projection.images[v] = b;
    for (const Edge& e : k.edges()) r.graph.add_edge(r.projection(e.first), r.projection(e.second));
    return r;
}

/// Image of a graph under a vertex map into a graph on `target_size` vertices.
inline Graph image_graph(const Graph& k, const VertexMap& phi, std::size_t target_size)
{
    Graph out(target_size);
    for (const Edge& e : k.edges()) out.add_edge(phi(e.first), phi(e.second));
    return out;
}

struct UnionResult {
    Graph graph;
    VertexMap from_first;   // f_K
    VertexMap from_second;  // f_H
};

/// K with H glued along f. Vertices of K keep their indices; unmatched vertices
/// of H follow in increasing order. |V| = |V(K)| + |V(H)| - |f|.
inline UnionResult f_union(const Graph& k, const Graph& h, const VertexOverlap& f)
{
    const std::size_t nk = k.num_vertices();
    const std::size_t nh = h.num_vertices();
    f.validate(nk, nh);
    std::vector<Vertex> into(nh, SIZE_MAX);
    for (auto [a, b] : f.pairs) into[b] = a;
    Vertex next = nk;
    for (Vertex v = 0; v < nh; ++v)
        if (into[v] == SIZE_MAX) into[v] = next++;
    UnionResult r{Graph(next), VertexMap::identity(nk), VertexMap{std::move(into)}};
    for (const Edge& e : k.edges()) r.graph.add_edge(e.first, e.second);
    for (const Edge& e : h.edges()) r.graph.add_edge(r.from_second(e.first), r.from_second(e.second));
    return r;
}

inline Graph disjoint_union(const Graph& k, const Graph& h) { return f_union(k, h, {}).graph; }

/// Preprocessing helper for the loops-everywhere convention.
inline Graph add_loops_everywhere(const Graph& g)
{
    Graph out = g;
    for (Vertex v = 0; v < g.num_vertices(); ++v) out.add_edge(v, v);
    return out;
}

/// Graph on n vertices with exactly the listed edges.
inline Graph spanning_subgraph(std::size_t n, const std::vector<Edge>& edges)
{
    Graph out(n);
    for (const Edge& e : edges) out.add_edge(e.first, e.second);
    return out;
}

namespace graphs {

inline Graph edgeless(std::size_t n) { return Graph(n); }

inline Graph complete(std::size_t n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path(std::size_t n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(std::size_t n)
{
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline Graph looped_vertex()
{
    Graph g(1);
    g.add_edge(0, 0);
    return g;
}

} // namespace graphs

} // namespace graphcat

#endif
