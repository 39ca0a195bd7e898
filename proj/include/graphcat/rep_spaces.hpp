#ifndef GRAPHCAT_REP_SPACES_HPP
#define GRAPHCAT_REP_SPACES_HPP

#include "graphcat/exact_rank.hpp"
#include "graphcat/fibration.hpp"
#include "graphcat/normal_closure.hpp"
#include "graphcat/perm_group.hpp"
#include "graphcat/tensor_build.hpp"

#include <optional>
#include <string>
#include <vector>

namespace graphcat {

/// Orbit of the diagonal action on pairs (a, b) of index tuples, represented
/// by its lexicographically least member.
struct OrbitClass {
    std::vector<std::size_t> a;
    std::vector<std::size_t> b;
    std::size_t size = 0;

    bool operator==(const OrbitClass&) const = default;
};

/// Orbits of H on [n]^k x [n]^l, sorted by representative.
inline std::vector<OrbitClass> orbits(const PermutationGroup& h, std::size_t k, std::size_t l, const Limits& limits = {})
{
    const std::size_t n = h.degree();
    const std::size_t total = detail::bounded_power(n, k + l, limits.tuple_count, "tuple count");
    std::vector<char> seen(total, 0);
    std::vector<OrbitClass> out;
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (seen[idx]) continue;
        const auto t = multi_index_tuple(idx, n, k + l);
        OrbitClass o;
        o.a.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k));
        o.b.assign(t.begin() + static_cast<std::ptrdiff_t>(k), t.end());
        for (const auto& sigma : h.elements()) {
            const std::size_t image = multi_index(sigma.apply(t), n);
            if (!seen[image]) {
                seen[image] = 1;
                ++o.size;
            }
        }
        out.push_back(std::move(o));
    }
    return out;
}

/// [T^_H^{ab}]_{j,i} = #{sigma in H : sigma(a) = i, sigma(b) = j}.
template <class S = std::int64_t>
BasicTensor<S> build_That_H(const PermutationGroup& h, const std::vector<std::size_t>& a,
                            const std::vector<std::size_t>& b, const Limits& limits = {})
{
    const std::size_t n = h.degree();
    for (std::size_t x : a)
        if (x >= n) throw ValidationError("index " + std::to_string(x) + " outside the group's degree");
    for (std::size_t x : b)
        if (x >= n) throw ValidationError("index " + std::to_string(x) + " outside the group's degree");
    BasicTensor<S> t(n, a.size(), b.size(), limits);
    for (const auto& sigma : h.elements()) t.increment(multi_index(sigma.apply(b), n), multi_index(sigma.apply(a), n));
    return t;
}

/// Orbit count by the Burnside average of fixed-point powers.
inline std::size_t burnside_dim(const PermutationGroup& h, std::size_t k, std::size_t l)
{
    BigInt total = 0;
    for (const auto& sigma : h.elements()) {
        std::size_t fixed = 0;
        for (std::size_t x = 0; x < h.degree(); ++x)
            if (sigma(x) == x) ++fixed;
        total += boost::multiprecision::pow(BigInt(fixed), static_cast<unsigned>(k + l));
    }
    if (total % h.order() != 0) throw InternalError("Burnside sum not divisible by the group order");
    return static_cast<std::size_t>(total / h.order());
}

struct BasisElement {
    OrbitClass orbit;
    IntTensor tensor;
};

struct Basis {
    std::vector<BasisElement> elements;
    std::size_t rank = 0;
};

namespace detail {

inline void certify_rank(Basis& basis)
{
    std::vector<IntTensor> ts;
    for (const auto& e : basis.elements) ts.push_back(e.tensor);
    basis.rank = stacked_rank(ts);
    if (basis.rank != basis.elements.size())
        throw InternalError("basis tensors are linearly dependent: rank " + std::to_string(basis.rank) + " of "
                            + std::to_string(basis.elements.size()));
}

} // namespace detail

/// {T^_H^{ab}} over the orbits of H; rank verified exactly.
inline Basis basis_group(const PermutationGroup& h, std::size_t k, std::size_t l, const Limits& limits = {})
{
    Basis basis;
    for (auto& o : orbits(h, k, l, limits)) {
        auto t = build_That_H(h, o.a, o.b, limits);
        basis.elements.push_back({std::move(o), std::move(t)});
    }
    detail::certify_rank(basis);
    return basis;
}

/// {T^G_{(G, a, b)}} over the orbits of Aut G; rank verified exactly.
inline Basis basis_full(const Graph& g, std::size_t k, std::size_t l, const Limits& limits = {})
{
    Basis basis;
    for (auto& o : orbits(PermutationGroup::automorphisms_of(g), k, l, limits)) {
        auto t = build_That(g, BilabelledGraph{g, o.a, o.b}, limits);
        basis.elements.push_back({std::move(o), std::move(t)});
    }
    detail::certify_rank(basis);
    return basis;
}

struct OrbitVerdict {
    OrbitClass orbit;
    Word word;  // g_{a b*}
    Membership verdict = Membership::Unknown;
};

struct DimensionReport {
    std::size_t k = 0;
    std::size_t l = 0;
    std::size_t dim = 0;
    std::size_t rank = 0;
    std::vector<OrbitVerdict> orbits;
    std::vector<IntTensor> basis;

    bool complete() const
    {
        for (const auto& o : orbits)
            if (o.verdict == Membership::Unknown) return false;
        return true;
    }
};

/// Throws InvarianceError when some element of H maps a generator of A
/// outside A, IndeterminateError when that cannot be decided.
inline void require_invariant(const PermutationGroup& h, const NormalClosure& a)
{
    for (const auto& sigma : h.elements()) {
        for (const Word& w : a.spec().generators) {
            const auto m = a.member(apply_map(sigma, w));
            if (m == Membership::No)
                throw InvarianceError("the group maps generator " + w.to_string(a.spec().alphabet_size)
                                      + " outside the normal closure");
            if (m == Membership::Unknown)
                throw IndeterminateError("cannot decide invariance of generator " + w.to_string(a.spec().alphabet_size));
        }
    }
}

/// Orbits of H on (k, l) tuple pairs classified by g_{ab*} in A. The basis
/// and rank cover the accepted orbits; Unknown verdicts are reported, not
/// thrown.
inline DimensionReport dimension_report(const PermutationGroup& h, const NormalClosureSpec& spec, std::size_t k,
                                        std::size_t l, const Limits& limits = {})
{
    if (spec.alphabet_size != h.degree())
        throw ValidationError("alphabet size " + std::to_string(spec.alphabet_size) + " differs from the degree "
                              + std::to_string(h.degree()));
    NormalClosure a(spec, limits);
    require_invariant(h, a);
    DimensionReport report;
    report.k = k;
    report.l = l;
    for (auto& o : orbits(h, k, l, limits)) {
        OrbitVerdict v{std::move(o), {}, Membership::Unknown};
        v.word = label_word_ab_star(v.orbit.a, v.orbit.b);
        v.verdict = a.member(v.word);
        if (v.verdict == Membership::Yes) report.basis.push_back(build_That_H(h, v.orbit.a, v.orbit.b, limits));
        report.orbits.push_back(std::move(v));
    }
    report.dim = report.basis.size();
    report.rank = stacked_rank(report.basis);
    if (report.rank != report.dim)
        throw InternalError("accepted basis tensors are linearly dependent: rank " + std::to_string(report.rank)
                            + " of " + std::to_string(report.dim));
    return report;
}

/// Basis of the morphism space of the semidirect product of the dual of
/// Z2^{*n}/A with H: the T^_H^{ab} with g_{ab*} in A.
inline DimensionReport basis_semidirect(const PermutationGroup& h, const NormalClosureSpec& spec, std::size_t k,
                                        std::size_t l, const Limits& limits = {})
{
    auto report = dimension_report(h, spec, k, l, limits);
    for (const auto& o : report.orbits)
        if (o.verdict == Membership::Unknown)
            throw IndeterminateError("membership of " + o.word.to_string(h.degree()) + " for orbit a="
                                     + tuple_to_string(o.orbit.a) + " b=" + tuple_to_string(o.orbit.b)
                                     + " is undecided");
    return report;
}

/// Same space for G inside a fibration: K is the greatest fibre subgraph of G,
/// H = Aut K and A = F(K). Each accepted T^_H^{ab} is cross-checked against
/// T^G_{(K, a, b)}.
inline DimensionReport basis_greatest_subgraph(const Fibration& f, const Graph& g, std::size_t k, std::size_t l,
                                               const Limits& limits = {})
{
    const auto gs = f.greatest_subgraph(g);
    if (!gs.unique) throw InternalError("greatest fibre subgraph is not preserved by its embeddings");
    const auto h = PermutationGroup::automorphisms_of(gs.graph);
    auto report = basis_semidirect(h, f.fibre_spec(gs.graph), k, l, limits);
    std::size_t idx = 0;
    for (const auto& o : report.orbits) {
        if (o.verdict != Membership::Yes) continue;
        const auto direct = build_That(g, BilabelledGraph{gs.graph, o.orbit.a, o.orbit.b}, limits);
        if (!(direct == report.basis[idx]))
            throw InternalError("group tensor differs from the graph tensor for orbit a=" + tuple_to_string(o.orbit.a)
                                + " b=" + tuple_to_string(o.orbit.b));
        ++idx;
    }
    return report;
}

/// |H| hat-delta_P equals the sum of T^_H^{ab} over all (a, b) with ker(a, b) = P.
template <class S = std::int64_t>
CheckReport verify_THpart(const PermutationGroup& h, const SetPartition& p, const Limits& limits = {})
{
    for (std::size_t b = 0; b < p.num_blocks(); ++b) {
        bool used = false;
        for (std::size_t x : p.assignment()) used = used || x == b;
        if (!used) throw PreconditionError("partition with empty blocks has no kernel-matching tuples");
    }
    const std::size_t n = h.degree();
    BasicTensor<S> sum(n, p.upper(), p.lower(), limits);
    const std::size_t total = detail::bounded_power(n, p.num_points(), limits.tuple_count, "tuple count");
    for (std::size_t idx = 0; idx < total; ++idx) {
        const auto t = multi_index_tuple(idx, n, p.num_points());
        std::vector<std::size_t> a(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(p.upper()));
        std::vector<std::size_t> b(t.begin() + static_cast<std::ptrdiff_t>(p.upper()), t.end());
        if (ker(a, b).assignment() != p.assignment()) continue;
        sum += build_That_H<S>(h, a, b, limits);
    }
    CheckReport r;
    r.expect_equal("group-averaged partition tensor", build_partition_That<S>(n, p, limits) * S(h.order()), sum);
    return r;
}

} // namespace graphcat

#endif
