#include "graphcat/exact_rank.hpp"
#include "graphcat/tensor_build.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <catch_amalgamated.hpp>

#include <limits>
#include <random>

using namespace graphcat;

namespace {

Graph random_graph(std::mt19937& rng, std::size_t n, double p, bool loops)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = loops ? u : u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

BilabelledGraph random_diagram(std::mt19937& rng, std::size_t max_vertices, std::size_t k, std::size_t l)
{
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
    BilabelledGraph d{random_graph(rng, n, 0.5, false), {}, {}};
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    for (std::size_t x = 0; x < k; ++x) d.inputs.push_back(pick(rng));
    for (std::size_t x = 0; x < l; ++x) d.outputs.push_back(pick(rng));
    return d;
}

// Every map V(K) -> V(G), filtered by the homomorphism test.
IntTensor brute_T(const Graph& g, const BilabelledGraph& d, bool injective)
{
    const std::size_t n = g.num_vertices(), m = d.graph.num_vertices();
    IntTensor t(n, d.num_inputs(), d.num_outputs());
    std::size_t total = 1;
    for (std::size_t x = 0; x < m; ++x) total *= n;
    for (std::size_t code = 0; code < total; ++code) {
        const auto phi = multi_index_tuple(code, n, m);
        bool ok = true;
        for (const Edge& e : d.graph.edges()) ok = ok && g.adjacent(phi[e.first], phi[e.second]);
        if (injective)
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = a + 1; b < m; ++b) ok = ok && phi[a] != phi[b];
        if (!ok) continue;
        std::vector<std::size_t> i, j;
        for (Vertex v : d.inputs) i.push_back(phi[v]);
        for (Vertex v : d.outputs) j.push_back(phi[v]);
        t.increment(multi_index(j, n), multi_index(i, n));
    }
    return t;
}

std::size_t brute_automorphisms(const Graph& g)
{
    std::vector<Vertex> p(g.num_vertices());
    std::iota(p.begin(), p.end(), Vertex{0});
    std::size_t count = 0;
    do {
        bool ok = true;
        for (Vertex u = 0; u < p.size() && ok; ++u)
            for (Vertex v = 0; v < p.size() && ok; ++v) ok = g.adjacent(u, v) == g.adjacent(p[u], p[v]);
        count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

// Rank by rational Gaussian elimination.
std::size_t rational_rank(const std::vector<IntTensor>& rows)
{
    using Q = boost::multiprecision::cpp_rational;
    std::vector<std::vector<Q>> m;
    for (const auto& t : rows) m.emplace_back(t.entries().begin(), t.entries().end());
    if (m.empty()) return 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m[0].size() && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const Q factor = m[r][c] / m[rank][c];
            for (std::size_t x = c; x < m[r].size(); ++x) m[r][x] -= factor * m[rank][x];
        }
        ++rank;
    }
    return rank;
}

IntTensor column(std::size_t n, std::size_t l, std::vector<std::int64_t> values)
{
    IntTensor t(n, 0, l);
    t.entries() = std::move(values);
    return t;
}

} // namespace

TEST_CASE("T of the identity diagram is the identity matrix")
{
    for (std::size_t n = 1; n <= 4; ++n) CHECK(build_T(graphs::complete(n), diagrams::identity()) == identity_tensor(n));
}

TEST_CASE("T of the pair diagram is the sum of e_k (x) e_k")
{
    CHECK(build_T(graphs::complete(2), diagrams::pair()) == column(2, 2, {1, 0, 0, 1}));
}

TEST_CASE("T of a labelled edge over the triangle")
{
    const auto t = build_T(graphs::complete(3), {graphs::complete(2), {}, {0, 1}});
    CHECK(t == column(3, 2, {0, 1, 1, 1, 0, 1, 1, 1, 0}));
}

TEST_CASE("That examples")
{
    const BilabelledGraph edge{graphs::complete(2), {}, {0, 1}};
    CHECK(build_That(graphs::complete(2), edge) == column(2, 2, {0, 1, 1, 0}));
    CHECK(build_That(graphs::complete(3), {graphs::complete(4), {0}, {1}}).is_zero());
    CHECK(build_That(graphs::complete(3), {Graph(4), {}, {}}).is_zero());

    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(rng, 1 + trial % 5, 0.5, trial % 2 == 0);
        const auto t = build_That(g, {g, {}, {}});
        REQUIRE(t.size() == 1);
        REQUIRE(t.at(0, 0) == static_cast<std::int64_t>(brute_automorphisms(g)));
    }
}

TEST_CASE("builders agree with a brute-force count over all maps")
{
    std::mt19937 rng(43);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = random_graph(rng, 1 + trial % 4, 0.6, trial % 3 == 0);
        const auto d = random_diagram(rng, 4, trial % 3, (trial / 3) % 3);
        REQUIRE(build_T(g, d) == brute_T(g, d, false));
        REQUIRE(build_That(g, d) == brute_T(g, d, true));
    }
}

TEST_CASE("partition tensors")
{
    CHECK(build_partition_T(3, ker("a", "a")) == identity_tensor(3));
    CHECK(build_partition_That(3, ker("a", "a")) == identity_tensor(3));
    CHECK(build_partition_T(2, ker("", "aa")) == column(2, 2, {1, 0, 0, 1}));
    CHECK(build_partition_That(2, ker("", "ab")) == column(2, 2, {0, 1, 1, 0}));
    CHECK(build_partition_That(1, ker("", "aa")) == column(1, 2, {1}));
    CHECK(build_partition_That(1, ker("", "ab")).is_zero());

    // Partitions embed as edgeless graphs, for which every map is a homomorphism.
    for (std::size_t n = 1; n <= 3; ++n) {
        const Graph g = graphs::path(n);
        for (std::size_t k = 0; k <= 2; ++k)
            for (std::size_t l = 0; l + k <= 4; ++l)
                for (const auto& p : enumerate_partitions(k, l)) {
                    REQUIRE(build_partition_T(n, p) == build_T(g, partition_to_bilabelled(p)));
                    REQUIRE(build_partition_That(n, p) == build_That(g, partition_to_bilabelled(p)));
                }
    }
    // Empty blocks count the fresh indices left for them.
    const auto with_empty = SetPartition::from_blocks(1, 1, {{0, 1}, {}});
    CHECK(build_partition_That(3, with_empty) == identity_tensor(3) * std::int64_t{2});
    CHECK(build_partition_That(3, with_empty) == build_That(graphs::edgeless(3), partition_to_bilabelled(with_empty)));
    CHECK(build_partition_That(1, with_empty).is_zero());
}

TEST_CASE("tensor algebra")
{
    std::mt19937 rng(45);
    const Graph g = graphs::cycle(4);
    const auto a = build_T(g, random_diagram(rng, 3, 1, 2));
    CHECK(compose(identity_tensor(4), build_T(g, {graphs::complete(2), {0}, {1}})) == build_T(g, {graphs::complete(2), {0}, {1}}));
    CHECK(compose(tensor_product(identity_tensor(4), identity_tensor(4)), a) == a);
    CHECK(adjoint(adjoint(a)) == a);
    CHECK(tensor_product(identity_tensor(2), identity_tensor(2)) == build_partition_T(2, ker("ab", "ab")));
    CHECK((a + a) == a * std::int64_t{2});
    CHECK((a - a).is_zero());

    IntTensor scalar;
    CHECK(scalar.rows() == 1);
    CHECK(scalar.cols() == 1);
    CHECK(scalar.k() == 0);
    CHECK(scalar.l() == 0);
    CHECK(tensor_product(IntTensor(4, 0, 0), a).is_zero());
}

TEST_CASE("shape errors")
{
    const auto a = identity_tensor(2);
    const auto b = identity_tensor(3);
    CHECK_THROWS_AS(compose(a, b), ShapeError);
    CHECK_THROWS_AS(tensor_product(a, b), ShapeError);
    CHECK_THROWS_AS(a + b, ShapeError);
    CHECK_THROWS_AS(compose(a, IntTensor(2, 1, 2)), ShapeError);
    CHECK_THROWS_AS(first_difference(a, IntTensor(2, 0, 2)), ShapeError);
}

TEST_CASE("capacity and overflow")
{
    CHECK_THROWS_AS(IntTensor(10, 4, 4), CapacityError);
    Limits tight;
    tight.tuple_count = 8;
    CHECK_THROWS_AS(build_T(graphs::complete(3), diagrams::identity(), tight), CapacityError);

    IntTensor big(1, 0, 0);
    big.at(0, 0) = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(big + big, CapacityError);
    CHECK_THROWS_AS(big * std::int64_t{2}, CapacityError);
    CHECK_THROWS_AS(compose(big, big), CapacityError);

    BigTensor wide = to_big(big);
    wide *= BigInt(4);
    CHECK(wide.at(0, 0) == BigInt(std::numeric_limits<std::int64_t>::max()) * 4);
}

TEST_CASE("arbitrary precision builds match the int64 builds")
{
    std::mt19937 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(rng, 3, 0.6, true);
        const auto d = random_diagram(rng, 3, trial % 2, 2);
        REQUIRE(build_T<BigInt>(g, d) == to_big(build_T(g, d)));
        REQUIRE(build_That<BigInt>(g, d) == to_big(build_That(g, d)));
    }
}

TEST_CASE("first difference names the entry")
{
    auto a = identity_tensor(3);
    auto b = a;
    b.at(2, 1) = 5;
    const auto d = first_difference(a, b);
    REQUIRE(d);
    CHECK(d->output == std::vector<std::size_t>{2});
    CHECK(d->input == std::vector<std::size_t>{1});
    CHECK(d->lhs == 0);
    CHECK(d->rhs == 5);
    CHECK(d->to_string() == "entry j=(2) i=(1): 0 != 5");
    CHECK_FALSE(first_difference(a, a));
}

TEST_CASE("functor laws")
{
    CHECK(verify_functor(graphs::complete(3), diagrams::identity(), diagrams::identity()).ok());
    std::mt19937 rng(49);
    std::size_t checks = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const Graph g = random_graph(rng, 2 + trial % 3, 0.6, trial % 4 == 0);
        const std::size_t k1 = trial % 3, l1 = (trial / 3) % 3;
        const auto d1 = random_diagram(rng, 3, k1, l1);
        const auto d2 = random_diagram(rng, 3, l1, (trial / 9) % 3);
        const auto report = verify_functor(g, d1, d2);
        INFO(report.failure);
        REQUIRE(report.ok());
        checks += report.checks;
    }
    CHECK(checks >= 80 * 4);
    // Partition diagrams reproduce the partition calculus.
    for (const auto& p : enumerate_partitions(1, 1))
        for (const auto& q : enumerate_partitions(1, 2)) {
            const auto dp = partition_to_bilabelled(p), dq = partition_to_bilabelled(q);
            REQUIRE(verify_functor(graphs::complete(3), dp, dq).ok());
            REQUIRE(build_T(graphs::complete(3), compose(dq, dp))
                    == compose(build_partition_T(3, q), build_partition_T(3, p)));
        }
}

TEST_CASE("overlap sums")
{
    const BilabelledGraph edge{graphs::complete(2), {}, {0, 1}};
    CHECK(enumerate_overlaps(2, 2).size() == 7);
    CHECK(verify_that_sums(graphs::complete(3), edge, edge).ok());
    CHECK(verify_that_sums(graphs::complete(3), diagrams::empty(), edge).ok());

    // Glued label kernels differ: two equal outputs against two distinct inputs.
    const BilabelledGraph merge{Graph(1), {}, {0, 0}};
    const BilabelledGraph split{Graph(2), {0, 1}, {}};
    const auto r = verify_that_sums(graphs::complete(3), merge, split);
    CHECK(r.ok());
    CHECK(compose(build_That(graphs::complete(3), split), build_That(graphs::complete(3), merge)).is_zero());

    std::mt19937 rng(51);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_graph(rng, 2 + trial % 3, 0.6, trial % 5 == 0);
        const std::size_t k1 = trial % 3, l1 = (trial / 3) % 3;
        const auto d1 = random_diagram(rng, 3, k1, l1);
        const auto d2 = random_diagram(rng, 3, l1, (trial / 9) % 2);
        const auto report = verify_that_sums(g, d1, d2);
        INFO(report.failure);
        REQUIRE(report.ok());
    }
}

TEST_CASE("quotient expansion")
{
    CHECK(moebius_expand(graphs::complete(3), diagrams::identity()).ok());
    CHECK(moebius_expand(graphs::complete(2), {Graph(2), {0}, {1}}).ok());
    CHECK(moebius_expand(graphs::complete(3), {graphs::complete(2), {}, {0, 1}}).ok());
    std::mt19937 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(rng, 2 + trial % 3, 0.6, trial % 2 == 0);
        const auto d = random_diagram(rng, 5, trial % 2, 1 + trial % 2);
        const auto report = moebius_expand(g, d);
        INFO(report.failure);
        REQUIRE(report.ok());
    }
    Limits tight;
    tight.partition_points = 3;
    CHECK_THROWS_AS(moebius_expand(graphs::complete(3), {Graph(4), {}, {}}, tight), CapacityError);
}

TEST_CASE("rotation relocates indices")
{
    std::mt19937 rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(rng, 3, 0.6, trial % 2 == 0);
        const auto d = random_diagram(rng, 3, 1 + trial % 2, trial % 3);
        const auto t = build_T(g, d);
        const auto rotated = build_T(g, rotate_left(d));
        const std::size_t n = g.num_vertices();
        for (std::size_t r = 0; r < t.rows(); ++r)
            for (std::size_t c = 0; c < t.cols(); ++c) {
                const auto j = multi_index_tuple(r, n, d.num_outputs());
                const auto i = multi_index_tuple(c, n, d.num_inputs());
                std::vector<std::size_t> out{i.front()};
                out.insert(out.end(), j.begin(), j.end());
                const std::vector<std::size_t> in(i.begin() + 1, i.end());
                REQUIRE(rotated.entry(out, in) == t.entry(j, i));
            }
    }
}

TEST_CASE("T and That span the same space on quotient-closed sets")
{
    std::mt19937 rng(57);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(rng, 3, 0.7, true);
        std::vector<BilabelledGraph> seeds{random_diagram(rng, 3, 0, 2), random_diagram(rng, 3, 0, 2)};
        std::vector<IntTensor> ts, hats;
        for (const auto& s : seeds)
            for (const auto& pi : enumerate_vertex_partitions(s.graph.num_vertices())) {
                const auto q = quotient(s, pi);
                ts.push_back(build_T(g, q));
                hats.push_back(build_That(g, q));
            }
        auto both = ts;
        both.insert(both.end(), hats.begin(), hats.end());
        const std::size_t r = stacked_rank(ts);
        REQUIRE(r == rational_rank(ts));
        REQUIRE(stacked_rank(hats) == r);
        REQUIRE(stacked_rank(both) == r);
    }
}

TEST_CASE("exact rank against rational elimination")
{
    std::mt19937 rng(59);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<IntTensor> rows;
        const std::size_t count = 1 + trial % 6;
        for (std::size_t x = 0; x < count; ++x) {
            IntTensor t(2, 0, 3);
            for (auto& e : t.entries()) e = trial % 3 == 0 ? entry(rng) % 2 : entry(rng);
            rows.push_back(t);
        }
        if (trial % 4 == 0) rows.push_back(rows.front() * std::int64_t{3} - rows.back());
        REQUIRE(stacked_rank(rows) == rational_rank(rows));
    }
    CHECK(exact_rank({}) == 0);
}
