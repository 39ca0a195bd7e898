#include "graphcat/coset_enumeration.hpp"
#include "graphcat/normal_closure.hpp"
#include "graphcat/word.hpp"

#include <catch_amalgamated.hpp>

#include <functional>
#include <random>

using namespace graphcat;

namespace {

Word w(const char* s) { return word_from_string(s); }

NormalClosureSpec spec(std::size_t n, std::vector<const char*> gens, Strategy s = {})
{
    NormalClosureSpec out{n, {}, s};
    for (const char* g : gens) out.generators.push_back(w(g));
    return out;
}

Word random_word(std::mt19937& rng, std::size_t alphabet, std::size_t len)
{
    std::uniform_int_distribution<Letter> letter(0, alphabet - 1);
    Word out;
    for (std::size_t i = 0; i < len; ++i) out.letters.push_back(letter(rng));
    return out;
}

// Z2^n as a model: a word is trivial iff every letter occurs an even number of times.
bool trivial_in_elementary_abelian(const Word& word, std::size_t n)
{
    for (char bit : letter_parity(word, n))
        if (bit) return false;
    return true;
}

} // namespace

TEST_CASE("reduction examples")
{
    CHECK(reduce(w("aabb")).empty());
    CHECK(reduce(w("abba")).empty());
    CHECK(reduce(w("abab")) == w("abab"));
    CHECK(is_reduced(w("abab")));
    CHECK_FALSE(is_reduced(w("abba")));
}

TEST_CASE("group operations")
{
    CHECK(inverse(w("abc")) == w("cba"));
    CHECK(multiply(w("ab"), w("ba")).empty());
    CHECK(apply_map(VertexMap{{2, 2}}, w("ab")).empty());
    CHECK(apply_map(VertexMap{{1, 0}}, w("abab")) == w("baba"));
    CHECK_THROWS_AS(apply_map(VertexMap{{0}}, w("ab")), ValidationError);
    CHECK(cyclic_reduce(w("abcba")) == w("c"));
    CHECK(conjugate(0, w("b")) == w("aba"));
    CHECK(Word{}.to_string() == "e");
    CHECK(w("ab").to_string(30) == "v0.v1");
    CHECK_THROWS_AS(word_from_string("aB"), ValidationError);
}

TEST_CASE("reduction and inversion laws")
{
    std::mt19937 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const Word u = random_word(rng, 3, trial % 9), v = random_word(rng, 3, trial % 7);
        Word uv = u;
        uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
        REQUIRE(reduce(reduce(u)) == reduce(u));
        REQUIRE(reduce(uv) == multiply(reduce(u), reduce(v)));
        REQUIRE(inverse(inverse(u)) == reduce(u));
        REQUIRE(multiply(u, inverse(u)).empty());
    }
}

TEST_CASE("label words")
{
    CHECK(label_word({0, 1}, {2}) == w("bac"));
    CHECK(label_word({}, {0, 1, 0, 1}) == w("abab"));
    CHECK(label_word({0}, {0}).empty());
    CHECK(label_word_ab_star({0, 1}, {2}) == w("abc"));
    CHECK(label_word_ab_star({}, {0, 1}) == w("ba"));
}

TEST_CASE("membership examples")
{
    const auto a = spec(3, {"abab"});
    CHECK(member(w("abab"), a) == Membership::Yes);
    CHECK(member(w("ab"), a) == Membership::No);
    CHECK(member(w("acac"), a) == Membership::No);
    CHECK(member(Word{}, a) == Membership::Yes);
    CHECK(member(w("aa"), a) == Membership::Yes);
    CHECK(member(w("cababc"), a) == Membership::Yes);
    CHECK(member(w("baba"), a) == Membership::Yes);
    CHECK(NormalClosure(a).resolved_strategy() == Strategy::Kind::Racg);
    CHECK_THROWS_AS(member(w("d"), a), ValidationError);
    CHECK_THROWS_AS(NormalClosure(spec(2, {"abc"})), ValidationError);
}

TEST_CASE("racg eligibility")
{
    CHECK(racg_commutation(spec(3, {"abab", "cbcb"})).has_value());
    CHECK(racg_commutation(spec(3, {"cababc"})).has_value());
    CHECK(racg_commutation(spec(3, {""})).has_value());
    CHECK_FALSE(racg_commutation(spec(3, {"ab"})).has_value());
    CHECK_FALSE(racg_commutation(spec(3, {"abac"})).has_value());
    CHECK_FALSE(racg_commutation(spec(3, {"ababab"})).has_value());
    CHECK_THROWS_AS(NormalClosure(spec(3, {"ab"}, Strategy::racg())), PreconditionError);
}

TEST_CASE("racg shuffle normal form")
{
    auto commute = *racg_commutation(spec(3, {"abab"}));
    CHECK(racg_normal_form(w("abab"), commute).empty());
    CHECK(racg_normal_form(w("acac"), commute) == w("acac"));
    CHECK(racg_normal_form(w("abcab"), commute) == w("abcab"));
    CHECK(racg_normal_form(w("abcba"), commute) == w("abcba"));
    CHECK(racg_normal_form(w("cabac"), commute) == w("cbc"));
}

TEST_CASE("coset enumeration orders")
{
    CHECK(quotient_order_if_finite(spec(3, {"ab", "bc"})) == 2u);
    CHECK(quotient_order_if_finite(spec(2, {"abab"})) == 4u);
    CHECK(quotient_order_if_finite(spec(1, {})) == 2u);
    CHECK_FALSE(quotient_order_if_finite(spec(2, {})).has_value());
    CHECK(quotient_order_if_finite(spec(3, {"abab", "acac", "bcbc"})) == 8u);
    CHECK(quotient_order_if_finite(spec(3, {"ababab", "acac", "bcbcbc"})) == 24u);
    CHECK(quotient_order_if_finite(spec(3, {"ababab", "acac", "bcbcbcbc"})) == 48u);
    CHECK(quotient_order_if_finite(spec(2, {"ababababab"})) == 10u);
    CHECK(quotient_order_if_finite(spec(3, {"a"})).has_value() == false);
    CHECK(quotient_order_if_finite(spec(2, {"a"})) == 2u);
    CHECK(quotient_order_if_finite(spec(0, {})) == 1u);
}

TEST_CASE("finite models trace words through the regular action")
{
    auto model = enumerate_cosets(3, {w("ababab"), w("acac"), w("bcbcbc")}, 1000);
    REQUIRE(model);
    CHECK(model->is_identity(w("ababab")));
    CHECK_FALSE(model->is_identity(w("ab")));
    CHECK(model->is_identity(w("abcabcabcabc")));  // Coxeter element of S4 has order 4
    CHECK_FALSE(model->is_identity(w("abcabc")));
}

TEST_CASE("racg agrees with the finite model on complete commutation")
{
    for (std::size_t n : {2u, 3u, 4u}) {
        std::vector<const char*> gens;
        static const char* pairs[] = {"abab", "acac", "adad", "bcbc", "bdbd", "cdcd"};
        for (const char* p : pairs) {
            bool in_range = true;
            for (const char* c = p; *c; ++c) in_range = in_range && static_cast<std::size_t>(*c - 'a') < n;
            if (in_range) gens.push_back(p);
        }
        const NormalClosure racg(spec(n, gens, Strategy::racg()));
        const NormalClosure finite(spec(n, gens, Strategy::finite_model()));
        REQUIRE(finite.resolved_strategy() == Strategy::Kind::FiniteModel);
        REQUIRE(finite.quotient_order() == (std::size_t{1} << n));
        // Every word of length at most 8 over the alphabet.
        std::vector<Letter> letters;
        std::function<void(std::size_t)> visit = [&](std::size_t len) {
            const Word word(letters);
            const auto r = racg.member(word);
            REQUIRE(r == finite.member(word));
            REQUIRE((r == Membership::Yes) == trivial_in_elementary_abelian(word, n));
            if (len == 8 || (n == 4 && len == 6)) return;
            for (Letter x = 0; x < n; ++x) {
                letters.push_back(x);
                visit(len + 1);
                letters.pop_back();
            }
        };
        visit(0);
    }
}

TEST_CASE("membership is conjugation invariant")
{
    std::mt19937 rng(23);
    const NormalClosure racg(spec(4, {"abab", "bcbc"}));
    const NormalClosure finite(spec(3, {"ababab", "acac", "bcbcbc"}));
    for (int trial = 0; trial < 200; ++trial) {
        const Word word = random_word(rng, 3, trial % 10);
        for (Letter x = 0; x < 3; ++x) {
            REQUIRE(racg.member(conjugate(x, word)) == racg.member(word));
            REQUIRE(finite.member(conjugate(x, word)) == finite.member(word));
        }
    }
}

TEST_CASE("auto strategy resolution")
{
    CHECK(NormalClosure(spec(3, {"abab"})).resolved_strategy() == Strategy::Kind::Racg);
    CHECK(NormalClosure(spec(3, {"ababab", "acac", "bcbcbc"})).resolved_strategy() == Strategy::Kind::FiniteModel);
    Limits small;
    small.coset_cap = 50;
    const NormalClosure bfs(spec(3, {"ababab"}), small);
    CHECK(bfs.resolved_strategy() == Strategy::Kind::BoundedBfs);
    CHECK_FALSE(bfs.exact());
}

TEST_CASE("bounded search proves membership and reports what it cannot decide")
{
    const NormalClosure bfs(spec(3, {"ababab"}, Strategy::bounded_bfs(4, 16)));
    CHECK(bfs.member(w("ababab")) == Membership::Yes);
    CHECK(bfs.member(w("cabababc")) == Membership::Yes);
    CHECK(bfs.member(w("bababa")) == Membership::Yes);
    CHECK(bfs.member(w("abababcbababac")) == Membership::Yes);
    // Odd letter count in a: excluded through the abelianisation.
    CHECK(bfs.member(w("a")) == Membership::No);
    // (ab)^2 lies outside A but has even parity: only Unknown is honest.
    CHECK(bfs.member(w("abab")) == Membership::Unknown);
}

TEST_CASE("finite-model strategy without a finite quotient answers Unknown")
{
    Limits small;
    small.coset_cap = 20;
    const NormalClosure a(spec(2, {}, Strategy::finite_model()), small);
    CHECK(a.member(w("abab")) == Membership::Unknown);
    CHECK(a.member(w("a")) == Membership::No);
    CHECK(a.member(Word{}) == Membership::Yes);
}

TEST_CASE("conjugacy representatives")
{
    CHECK(conjugacy_representative(w("abab")) == conjugacy_representative(w("baba")));
    CHECK(conjugacy_representative(w("cababc")) == w("abab"));
    CHECK(conjugacy_representative(w("abc")) == conjugacy_representative(w("cba")));
    CHECK(conjugacy_representative(w("abac")) != conjugacy_representative(w("abab")));
}
