#ifndef GRAPHCAT_PERM_GROUP_HPP
#define GRAPHCAT_PERM_GROUP_HPP

#include "graphcat/error.hpp"
#include "graphcat/graph.hpp"
#include "graphcat/homomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace graphcat {

using Permutation = VertexMap;

inline Permutation compose_perm(const Permutation& outer, const Permutation& inner)
{
    Permutation out;
    out.images.resize(inner.size());
    for (std::size_t x = 0; x < inner.size(); ++x) out.images[x] = outer(inner(x));
    return out;
}

inline Permutation inverse_perm(const Permutation& p)
{
    Permutation out;
    out.images.resize(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) out.images[p(x)] = x;
    return out;
}

inline bool is_permutation(const Permutation& p, std::size_t n)
{
    if (p.size() != n) return false;
    std::vector<char> hit(n, 0);
    for (Vertex v : p.images) {
        if (v >= n || hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

/// A permutation group on 0..n-1 stored as its sorted element list.
class PermutationGroup {
public:
    PermutationGroup() : PermutationGroup(trivial(0)) {}

    /// Checks the group axioms; throws ValidationError when they fail.
    static PermutationGroup from_elements(std::size_t degree, std::vector<Permutation> elements)
    {
        for (const auto& p : elements)
            if (!is_permutation(p, degree)) throw ValidationError("element is not a permutation of the degree");
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        if (!std::binary_search(elements.begin(), elements.end(), Permutation::identity(degree)))
            throw ValidationError("group lacks the identity");
        for (const auto& p : elements)
            for (const auto& q : elements)
                if (!std::binary_search(elements.begin(), elements.end(), compose_perm(p, q)))
                    throw ValidationError("element list is not closed under composition");
        return PermutationGroup(degree, std::move(elements));
    }

    /// Closure of the generators under composition.
    static PermutationGroup generated_by(std::size_t degree, const std::vector<Permutation>& generators)
    {
        for (const auto& g : generators)
            if (!is_permutation(g, degree)) throw ValidationError("generator is not a permutation of the degree");
        std::set<Permutation> seen{Permutation::identity(degree)};
        std::vector<Permutation> queue(seen.begin(), seen.end());
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            for (const auto& g : generators) {
                Permutation next = compose_perm(g, queue[qi]);
                if (seen.insert(next).second) queue.push_back(std::move(next));
            }
        }
        return PermutationGroup(degree, {seen.begin(), seen.end()});
    }

    static PermutationGroup trivial(std::size_t degree) { return PermutationGroup(degree, {Permutation::identity(degree)}); }

    static PermutationGroup symmetric(std::size_t degree)
    {
        std::vector<Permutation> all;
        Permutation p = Permutation::identity(degree);
        do {
            all.push_back(p);
        } while (std::next_permutation(p.images.begin(), p.images.end()));
        return PermutationGroup(degree, std::move(all));
    }

    static PermutationGroup automorphisms_of(const Graph& g)
    {
        return PermutationGroup(g.num_vertices(), automorphisms(g));
    }

    std::size_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }

    bool contains(const Permutation& p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }

private:
    PermutationGroup(std::size_t degree, std::vector<Permutation> sorted) : degree_(degree), elements_(std::move(sorted))
    {
    }

    std::size_t degree_ = 0;
    std::vector<Permutation> elements_;
};

} // namespace graphcat

#endif
