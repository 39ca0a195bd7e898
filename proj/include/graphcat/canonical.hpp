#ifndef GRAPHCAT_CANONICAL_HPP
#define GRAPHCAT_CANONICAL_HPP

#include "graphcat/graph.hpp"
#include "graphcat/limits.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace graphcat {

/// Lexicographically minimal adjacency bit string over all vertex orders.
/// Bits are listed column by column over the upper triangle including the
/// diagonal, so the key prefix is fixed once the first m positions are chosen.
/// Optional label tuples, rewritten through the same order, break ties.
struct CanonicalKey {
    std::size_t n = 0;
    std::vector<std::uint8_t> bits;
    std::vector<Vertex> inputs;
    std::vector<Vertex> outputs;

    auto operator<=>(const CanonicalKey&) const = default;
    bool operator==(const CanonicalKey&) const = default;

    std::string to_string() const
    {
        std::string s = std::to_string(n) + ":";
        for (auto b : bits) s.push_back(b ? '1' : '0');
        return s;
    }
};

struct CanonicalForm {
    CanonicalKey key;
    VertexMap relabeling;  // original vertex -> canonical position
    Graph graph;           // the graph rewritten through `relabeling`
};

namespace detail {

class CanonicalSearch {
public:
    CanonicalSearch(const Graph& g, const std::vector<Vertex>* inputs, const std::vector<Vertex>* outputs)
        : g_(g), inputs_(inputs), outputs_(outputs), n_(g.num_vertices()), used_(n_, 0)
    {
    }

    void run()
    {
        order_.clear();
        bits_.clear();
        descend();
    }

    const std::vector<Vertex>& best_order() const { return best_order_; }
    const CanonicalKey& best_key() const { return best_; }

private:
    // Prefix of the current bits against the same-length prefix of the best
    // key. The best key can change inside a subtree, so this is recomputed.
    int compare_prefix() const
    {
        if (!have_best_) return -1;
        for (std::size_t x = 0; x < bits_.size(); ++x)
            if (bits_[x] != best_.bits[x]) return bits_[x] < best_.bits[x] ? -1 : 1;
        return 0;
    }

    void descend()
    {
        const std::size_t m = order_.size();
        if (m == n_) {
            leaf();
            return;
        }
        for (Vertex v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            const std::size_t start = bits_.size();
            for (std::size_t i = 0; i <= m; ++i) {
                Vertex w = i < m ? order_[i] : v;
                bits_.push_back(g_.adjacent(w, v) ? 1 : 0);
            }
            if (compare_prefix() <= 0) {
                used_[v] = 1;
                order_.push_back(v);
                descend();
                order_.pop_back();
                used_[v] = 0;
            }
            bits_.resize(start);
        }
    }

    void leaf()
    {
        CanonicalKey candidate;
        candidate.n = n_;
        candidate.bits = bits_;
        std::vector<Vertex> pos(n_);
        for (std::size_t p = 0; p < n_; ++p) pos[order_[p]] = p;
        if (inputs_)
            for (Vertex v : *inputs_) candidate.inputs.push_back(pos[v]);
        if (outputs_)
            for (Vertex v : *outputs_) candidate.outputs.push_back(pos[v]);
        if (!have_best_ || candidate < best_) {
            best_ = std::move(candidate);
            best_order_ = order_;
            have_best_ = true;
        }
    }

    const Graph& g_;
    const std::vector<Vertex>* inputs_;
    const std::vector<Vertex>* outputs_;
    std::size_t n_;
    std::vector<char> used_;
    std::vector<Vertex> order_;
    std::vector<std::uint8_t> bits_;
    CanonicalKey best_;
    std::vector<Vertex> best_order_;
    bool have_best_ = false;
};

inline CanonicalForm finish_form(const Graph& g, detail::CanonicalSearch& search)
{
    CanonicalForm form;
    form.key = search.best_key();
    form.relabeling.images.resize(g.num_vertices());
    const auto& order = search.best_order();
    for (std::size_t p = 0; p < order.size(); ++p) form.relabeling.images[order[p]] = p;
    form.graph = image_graph(g, form.relabeling, g.num_vertices());
    return form;
}

} // namespace detail

/// Canonical form of an unlabelled graph. Throws CapacityError above the
/// configured vertex bound.
inline CanonicalForm canonical_form(const Graph& g, const Limits& limits = {})
{
    detail::require_capacity(g.num_vertices(), limits.canonical_vertices, "canonical form vertex count");
    detail::CanonicalSearch search(g, nullptr, nullptr);
    search.run();
    return detail::finish_form(g, search);
}

/// Canonical form of a graph carrying ordered input and output label tuples.
/// Equal keys iff an isomorphism maps the labels pointwise onto each other.
inline CanonicalForm labelled_canonical_form(const Graph& g, const std::vector<Vertex>& inputs,
                                             const std::vector<Vertex>& outputs, const Limits& limits = {})
{
    detail::require_capacity(g.num_vertices(), limits.canonical_vertices, "canonical form vertex count");
    detail::CanonicalSearch search(g, &inputs, &outputs);
    search.run();
    return detail::finish_form(g, search);
}

inline bool isomorphic(const Graph& a, const Graph& b, const Limits& limits = {})
{
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    return canonical_form(a, limits).key == canonical_form(b, limits).key;
}

} // namespace graphcat

#endif
