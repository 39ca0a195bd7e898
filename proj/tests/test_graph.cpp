#include "graphcat/canonical.hpp"
#include "graphcat/diagram.hpp"
#include "graphcat/graph.hpp"
#include "graphcat/homomorphism.hpp"
#include "graphcat/partition.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
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

// Brute force over all n^|K| maps.
std::vector<VertexMap> brute_homs(const Graph& k, const Graph& g, bool injective)
{
    std::vector<VertexMap> out;
    const std::size_t nk = k.num_vertices(), n = g.num_vertices();
    std::size_t total = 1;
    for (std::size_t i = 0; i < nk; ++i) total *= n;
    if (nk == 0) total = 1;
    for (std::size_t code = 0; code < total; ++code) {
        VertexMap phi;
        std::size_t c = code;
        for (std::size_t i = 0; i < nk; ++i) {
            phi.images.insert(phi.images.begin(), c % n);
            c /= n;
        }
        if (injective) {
            auto s = phi.images;
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
        }
        if (is_homomorphism(k, g, phi)) out.push_back(phi);
    }
    return out;
}

// Minimal adjacency string over every permutation, independent of the
// pruned search.
std::vector<std::uint8_t> brute_key(const Graph& g)
{
    const std::size_t n = g.num_vertices();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::vector<std::uint8_t> best;
    bool have = false;
    do {
        std::vector<std::uint8_t> bits;
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r <= c; ++r) bits.push_back(g.adjacent(order[r], order[c]) ? 1 : 0);
        if (!have || bits < best) {
            best = bits;
            have = true;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

} // namespace

TEST_CASE("graphs hold loops and ignore duplicate edges")
{
    Graph g(3, {{0, 1}, {1, 0}, {2, 2}});
    CHECK(g.num_edges() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK(g.has_loop(2));
    CHECK_FALSE(g.has_loop(0));
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), ValidationError);
}

TEST_CASE("quotient examples")
{
    auto q = quotient(graphs::path(3), VertexPartition{{{0, 2}, {1}}});
    CHECK(q.graph.num_vertices() == 2);
    CHECK(q.graph.num_edges() == 1);
    CHECK_FALSE(q.graph.has_loop(0));
    CHECK_FALSE(q.graph.has_loop(1));

    const Graph k = graphs::cycle(4);
    auto id = quotient(k, VertexPartition::singletons(4));
    CHECK(id.graph == k);
    CHECK(id.projection == VertexMap::identity(4));

    auto loop = quotient(graphs::complete(2), VertexPartition{{{0, 1}}});
    CHECK(loop.graph.num_vertices() == 1);
    CHECK(loop.graph.has_loop(0));

    CHECK_THROWS_AS(quotient(k, VertexPartition{{{0, 1}, {1, 2, 3}}}), ValidationError);
    CHECK_THROWS_AS(quotient(k, VertexPartition{{{0, 1}, {2}}}), ValidationError);
}

TEST_CASE("iterated quotients equal the quotient by the joined partition")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph k = random_graph(rng, 4, 0.5, true);
        for (const auto& pi : enumerate_vertex_partitions(4)) {
            auto first = quotient(k, pi);
            for (const auto& rho : enumerate_vertex_partitions(first.graph.num_vertices())) {
                auto second = quotient(first.graph, rho);
                std::vector<std::size_t> joined(4);
                for (Vertex v = 0; v < 4; ++v) joined[v] = second.projection(first.projection(v));
                auto direct = quotient(k, VertexPartition::from_assignment(joined));
                REQUIRE(isomorphic(direct.graph, second.graph));
            }
        }
    }
}

TEST_CASE("f-union examples")
{
    const Graph e = graphs::complete(2);
    auto disjoint = f_union(e, graphs::path(3), {});
    CHECK(disjoint.graph == disjoint_union(e, graphs::path(3)));
    CHECK(disjoint.graph.num_vertices() == 5);
    CHECK(disjoint.from_second(0) == 2);

    auto same = f_union(e, e, VertexOverlap{{{0, 0}, {1, 1}}});
    CHECK(same.graph == e);

    auto glued = f_union(e, e, VertexOverlap{{{1, 0}}});
    CHECK(glued.graph.num_vertices() == 3);
    CHECK(isomorphic(glued.graph, graphs::path(3)));

    CHECK_THROWS_AS(f_union(e, e, VertexOverlap{{{2, 0}}}), ValidationError);
    CHECK_THROWS_AS(f_union(e, e, VertexOverlap{{{0, 0}, {0, 1}}}), ValidationError);
}

TEST_CASE("f-union is commutative up to isomorphism")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph k = random_graph(rng, 3, 0.5, true);
        const Graph h = random_graph(rng, 3, 0.5, true);
        for (const auto& f : enumerate_overlaps(3, 3)) {
            REQUIRE(isomorphic(f_union(k, h, f).graph, f_union(h, k, f.inverse()).graph));
        }
    }
}

TEST_CASE("homomorphism examples")
{
    CHECK(enumerate_homomorphisms(graphs::complete(2), graphs::complete(3)).size() == 6);
    CHECK(enumerate_homomorphisms(Graph(1), graphs::cycle(5)).size() == 5);
    CHECK(enumerate_homomorphisms(graphs::complete(3), graphs::complete(2)).empty());
    CHECK(enumerate_homomorphisms(Graph(0), graphs::complete(3)).size() == 1);
    CHECK(enumerate_homomorphisms(Graph(0), Graph(0)).size() == 1);
    CHECK(enumerate_homomorphisms(Graph(1), Graph(0)).empty());
}

TEST_CASE("a non-loop edge collapses only onto a looped vertex")
{
    CHECK(enumerate_homomorphisms(graphs::complete(2), Graph(1)).empty());
    CHECK(enumerate_homomorphisms(graphs::complete(2), graphs::looped_vertex()).size() == 1);
    CHECK(enumerate_homomorphisms(graphs::looped_vertex(), graphs::complete(2)).empty());
}

TEST_CASE("homomorphism search matches brute force, sorted and pinned")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph k = random_graph(rng, 1 + trial % 4, 0.5, trial % 3 == 0);
        const Graph g = random_graph(rng, 1 + trial % 5, 0.6, trial % 2 == 0);
        for (bool inj : {false, true}) {
            auto expected = brute_homs(k, g, inj);
            REQUIRE(enumerate_homomorphisms(k, g, {}, inj) == expected);
            Pins pins(k.num_vertices());
            pins[0] = 0;
            std::vector<VertexMap> pinned;
            for (const auto& phi : expected)
                if (phi(0) == 0) pinned.push_back(phi);
            REQUIRE(enumerate_homomorphisms(k, g, pins, inj) == pinned);
        }
    }
    CHECK_THROWS_AS(enumerate_homomorphisms(Graph(2), Graph(2), Pins{0}), ValidationError);
    CHECK_THROWS_AS(enumerate_homomorphisms(Graph(1), Graph(2), Pins{5}), ValidationError);
}

TEST_CASE("hom counts split over quotients into injective counts")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph k = random_graph(rng, 1 + trial % 4, 0.5, trial % 4 == 0);
        const Graph g = random_graph(rng, 1 + (trial / 4) % 4, 0.6, trial % 2 == 0);
        std::size_t sum = 0;
        for (const auto& pi : enumerate_vertex_partitions(k.num_vertices()))
            sum += count_homomorphisms(quotient(k, pi).graph, g, true);
        REQUIRE(count_homomorphisms(k, g) == sum);
    }
}

TEST_CASE("automorphism examples and group axioms")
{
    CHECK(automorphisms(graphs::complete(2)).size() == 2);
    CHECK(automorphisms(Graph(1)) == std::vector<VertexMap>{VertexMap::identity(1)});
    const Graph k2n1 = disjoint_union(graphs::complete(2), Graph(1));
    const auto aut = automorphisms(k2n1);
    REQUIRE(aut.size() == 2);
    CHECK(aut[1].images == std::vector<Vertex>{1, 0, 2});
    CHECK(automorphisms(graphs::cycle(5)).size() == 10);
    CHECK(automorphisms(graphs::complete(4)).size() == 24);

    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(rng, 5, 0.4, true);
        const auto group = automorphisms(g);
        REQUIRE(std::find(group.begin(), group.end(), VertexMap::identity(5)) != group.end());
        for (const auto& p : group) {
            VertexMap inv;
            inv.images.resize(5);
            for (Vertex v = 0; v < 5; ++v) inv.images[p(v)] = v;
            REQUIRE(std::binary_search(group.begin(), group.end(), inv));
            for (const auto& q : group) {
                VertexMap pq;
                for (Vertex v = 0; v < 5; ++v) pq.images.push_back(p(q(v)));
                REQUIRE(std::binary_search(group.begin(), group.end(), pq));
            }
        }
    }
}

TEST_CASE("canonical form examples")
{
    const Graph p1(3, {{0, 1}, {1, 2}});
    const Graph p2(3, {{2, 0}, {0, 1}});
    CHECK(canonical_form(p1).key == canonical_form(p2).key);
    CHECK(canonical_form(graphs::complete(2)).key != canonical_form(Graph(2)).key);
    CHECK(canonical_form(graphs::complete(3)).key != canonical_form(graphs::path(3)).key);
    CHECK_THROWS_AS(canonical_form(Graph(9)), CapacityError);
    Limits wide;
    wide.canonical_vertices = 9;
    CHECK_NOTHROW(canonical_form(Graph(9), wide));
}

TEST_CASE("canonical keys equal the brute-force minimum and are relabelling invariant")
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const Graph g = random_graph(rng, n, 0.45, trial % 2 == 1);
        const auto form = canonical_form(g);
        REQUIRE(form.key.bits == brute_key(g));
        REQUIRE(form.graph == image_graph(g, form.relabeling, n));
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph relabelled = image_graph(g, VertexMap{perm}, n);
        REQUIRE(canonical_form(relabelled).key == form.key);
    }
}

TEST_CASE("labelled canonical form respects label tuples")
{
    const Graph e = graphs::complete(2);
    CHECK(labelled_canonical_form(e, {0}, {1}).key == labelled_canonical_form(e, {1}, {0}).key);
    const Graph p = graphs::path(3);
    CHECK(labelled_canonical_form(p, {}, {0}).key == labelled_canonical_form(p, {}, {2}).key);
    CHECK(labelled_canonical_form(p, {}, {0}).key != labelled_canonical_form(p, {}, {1}).key);
}

TEST_CASE("graph helpers")
{
    const Graph looped = add_loops_everywhere(graphs::path(3));
    CHECK(looped.num_edges() == 5);
    CHECK(graphs::cycle(4).num_edges() == 4);
    CHECK(spanning_subgraph(3, {Edge(0, 2)}).adjacent(2, 0));
    CHECK(graphs::complete(4).degree(0) == 3);
}
