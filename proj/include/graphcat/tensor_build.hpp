#ifndef GRAPHCAT_TENSOR_BUILD_HPP
#define GRAPHCAT_TENSOR_BUILD_HPP

#include "graphcat/diagram.hpp"
#include "graphcat/homomorphism.hpp"
#include "graphcat/partition.hpp"
#include "graphcat/tensor.hpp"

#include <string>
#include <vector>

namespace graphcat {

namespace detail {

template <class S>
BasicTensor<S> count_maps(const Graph& g, const BilabelledGraph& d, bool injective, const Limits& limits)
{
    d.validate();
    const std::size_t n = g.num_vertices();
    BasicTensor<S> t(n, d.num_inputs(), d.num_outputs(), limits);
    for_each_homomorphism(d.graph, g, {}, injective, [&](const std::vector<Vertex>& phi) {
        std::size_t row = 0, col = 0;
        for (Vertex v : d.outputs) row = row * n + phi[v];
        for (Vertex v : d.inputs) col = col * n + phi[v];
        t.increment(row, col);
    });
    return t;
}

} // namespace detail

/// [T^G_D]_{j,i} = #{homomorphisms phi: K -> G with phi(a) = i, phi(b) = j}.
template <class S = std::int64_t>
BasicTensor<S> build_T(const Graph& g, const BilabelledGraph& d, const Limits& limits = {})
{
    return detail::count_maps<S>(g, d, false, limits);
}

/// Same count restricted to injective homomorphisms. Zero when K has more
/// vertices than G.
template <class S = std::int64_t>
BasicTensor<S> build_That(const Graph& g, const BilabelledGraph& d, const Limits& limits = {})
{
    return detail::count_maps<S>(g, d, true, limits);
}

/// delta_P: 1 where points in a common block carry equal indices.
template <class S = std::int64_t>
BasicTensor<S> build_partition_T(std::size_t n, const SetPartition& p, const Limits& limits = {})
{
    BasicTensor<S> t(n, p.upper(), p.lower(), limits);
    std::vector<std::size_t> value(p.num_blocks());
    for (std::size_t r = 0; r < t.rows(); ++r) {
        const auto j = multi_index_tuple(r, n, p.lower());
        for (std::size_t c = 0; c < t.cols(); ++c) {
            const auto i = multi_index_tuple(c, n, p.upper());
            std::fill(value.begin(), value.end(), SIZE_MAX);
            bool ok = true;
            for (std::size_t pt = 0; pt < p.num_points() && ok; ++pt) {
                const std::size_t x = pt < p.upper() ? i[pt] : j[pt - p.upper()];
                std::size_t& v = value[p.block_of(pt)];
                if (v == SIZE_MAX)
                    v = x;
                else
                    ok = v == x;
            }
            if (ok) t.at(r, c) = 1;
        }
    }
    return t;
}

/// hat-delta_P: nonzero exactly where ker(i, j) = P. Each empty block of P
/// contributes the number of ways to pick a fresh distinct index for it.
template <class S = std::int64_t>
BasicTensor<S> build_partition_That(std::size_t n, const SetPartition& p, const Limits& limits = {})
{
    BasicTensor<S> t(n, p.upper(), p.lower(), limits);
    std::size_t used_blocks = 0;
    for (std::size_t b : p.assignment()) used_blocks = std::max(used_blocks, b + 1);
    const std::size_t empty = p.num_blocks() - used_blocks;
    S fresh = 1;
    for (std::size_t e = 0; e < empty; ++e) {
        if (used_blocks + e >= n) {
            fresh = 0;
            break;
        }
        fresh = detail::checked_mul(fresh, S(n - used_blocks - e));
    }
    if (fresh == 0) return t;
    for (std::size_t r = 0; r < t.rows(); ++r) {
        const auto j = multi_index_tuple(r, n, p.lower());
        for (std::size_t c = 0; c < t.cols(); ++c) {
            const auto i = multi_index_tuple(c, n, p.upper());
            if (ker(i, j).assignment() == p.assignment()) t.at(r, c) = fresh;
        }
    }
    return t;
}

/// Outcome of a batch of exact equality checks. `failure` names the first
/// failing check and the differing entry.
struct CheckReport {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string failure;

    bool ok() const { return failures == 0; }

    void merge(const CheckReport& o)
    {
        checks += o.checks;
        failures += o.failures;
        if (failure.empty()) failure = o.failure;
    }

    template <class S>
    void expect_equal(const std::string& what, const BasicTensor<S>& lhs, const BasicTensor<S>& rhs)
    {
        ++checks;
        if (!lhs.same_shape(rhs)) {
            fail(what + ": shape " + lhs.shape_string() + " vs " + rhs.shape_string());
            return;
        }
        if (auto d = first_difference(lhs, rhs)) fail(what + ": " + d->to_string());
    }

    void fail(const std::string& message)
    {
        ++failures;
        if (failure.empty()) failure = message;
    }
};

/// T^G is a monoidal functor compatible with the involution:
/// T(K (x) H) = T(K) (x) T(H), T(H.K) = T(H) T(K), T(K*) = T(K)*.
/// Compositions are checked in every direction whose arities match.
template <class S = std::int64_t>
CheckReport verify_functor(const Graph& g, const BilabelledGraph& d1, const BilabelledGraph& d2,
                           const Limits& limits = {})
{
    CheckReport r;
    const auto t1 = build_T<S>(g, d1, limits);
    const auto t2 = build_T<S>(g, d2, limits);
    r.expect_equal("tensor law", build_T<S>(g, tensor(d1, d2), limits), tensor_product(t1, t2, limits));
    r.expect_equal("involution law (first)", build_T<S>(g, involution(d1), limits), adjoint(t1, limits));
    r.expect_equal("involution law (second)", build_T<S>(g, involution(d2), limits), adjoint(t2, limits));
    if (d1.num_outputs() == d2.num_inputs())
        r.expect_equal("composition law (second after first)", build_T<S>(g, compose(d2, d1), limits),
                       compose(t2, t1, limits));
    if (d2.num_outputs() == d1.num_inputs())
        r.expect_equal("composition law (first after second)", build_T<S>(g, compose(d1, d2), limits),
                       compose(t1, t2, limits));
    return r;
}

/// Overlap sums for injective counts:
/// T^(K) (x) T^(H) = sum over all overlaps f of T^(K u_f H),
/// T^(H) T^(K) = sum over overlaps containing the label pairs of T^(H ._f K),
/// which is zero when the kernels of the glued label tuples differ, and
/// T^(K*) = T^(K)*.
template <class S = std::int64_t>
CheckReport verify_that_sums(const Graph& g, const BilabelledGraph& d1, const BilabelledGraph& d2,
                             const Limits& limits = {})
{
    CheckReport r;
    const auto t1 = build_That<S>(g, d1, limits);
    const auto t2 = build_That<S>(g, d2, limits);
    const std::size_t n1 = d1.graph.num_vertices(), n2 = d2.graph.num_vertices();

    BasicTensor<S> sum(g.num_vertices(), d1.num_inputs() + d2.num_inputs(), d1.num_outputs() + d2.num_outputs(),
                       limits);
    for (const auto& f : enumerate_overlaps(n1, n2)) sum += build_That<S>(g, bl_f_union(d1, d2, f), limits);
    r.expect_equal("overlap sum for the tensor product", tensor_product(t1, t2, limits), sum);

    r.expect_equal("involution (first)", build_That<S>(g, involution(d1), limits), adjoint(t1, limits));
    r.expect_equal("involution (second)", build_That<S>(g, involution(d2), limits), adjoint(t2, limits));

    auto composition = [&](const BilabelledGraph& outer, const BilabelledGraph& inner, const BasicTensor<S>& to,
                           const BasicTensor<S>& ti, const std::string& label) {
        const auto product = compose(to, ti, limits);
        if (ker(inner.outputs, {}) != ker(outer.inputs, {})) {
            ++r.checks;
            if (!product.is_zero()) {
                BasicTensor<S> zero(product.n(), product.k(), product.l(), limits);
                r.fail(label + " with mismatched kernels is not zero: " + first_difference(product, zero)->to_string());
            }
            return;
        }
        BasicTensor<S> total(g.num_vertices(), inner.num_inputs(), outer.num_outputs(), limits);
        const auto required = composition_pairs(outer, inner);
        for (const auto& f : enumerate_overlaps_extending(inner.graph.num_vertices(), outer.graph.num_vertices(), required))
            total += build_That<S>(g, bl_f_compose(outer, inner, f), limits);
        r.expect_equal(label, product, total);
    };
    if (d1.num_outputs() == d2.num_inputs()) composition(d2, d1, t2, t1, "overlap sum for second after first");
    if (d2.num_outputs() == d1.num_inputs()) composition(d1, d2, t1, t2, "overlap sum for first after second");
    return r;
}

/// T^G_K = sum over vertex partitions pi of K of T^G_{K/pi}.
template <class S = std::int64_t>
CheckReport moebius_expand(const Graph& g, const BilabelledGraph& d, const Limits& limits = {})
{
    CheckReport r;
    BasicTensor<S> sum(g.num_vertices(), d.num_inputs(), d.num_outputs(), limits);
    for (const auto& pi : enumerate_vertex_partitions(d.graph.num_vertices(), limits))
        sum += build_That<S>(g, quotient(d, pi), limits);
    r.expect_equal("quotient expansion", build_T<S>(g, d, limits), sum);
    return r;
}

} // namespace graphcat

#endif
