#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torsurg/errors.hpp"
#include "torsurg/word.hpp"
#include "torsurg/wordparse.hpp"

#include <random>

using namespace torsurg;

namespace {
const std::vector<std::string> kGens{"x", "y", "a1", "a2", "b1", "b2"};

Word rand_word(std::mt19937_64& rng, std::size_t len, int ngens) {
    Word w;
    for (std::size_t i = 0; i < len; ++i)
        w.push_back(make_letter(static_cast<int>(rng() % ngens), rng() % 2 ? 1 : -1));
    return w;
}
}  // namespace

TEST_CASE("free reduction examples") {
    CHECK(free_reduce({1, -1}) == Word{});
    CHECK(free_reduce({1, 2, -2, 1}) == Word{1, 1});
    const Word c = commutator({1}, {2});
    CHECK(free_reduce(c) == c);
    CHECK(c == Word{1, 2, -1, -2});
    CHECK_THROWS_AS(free_reduce({1, 7}, 6), domain_error);
}

TEST_CASE("free reduction is idempotent and compatible with concatenation") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 500; ++it) {
        const Word u = rand_word(rng, rng() % 12, 4);
        const Word v = rand_word(rng, rng() % 12, 4);
        const Word ru = free_reduce(u);
        CHECK(free_reduce(ru) == ru);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(free_reduce(uv) == concat(free_reduce(u), free_reduce(v)));
    }
}

TEST_CASE("commutator convention and examples") {
    CHECK(commutator({1}, {}) == Word{});
    CHECK(commutator({1}, {2}) == Word{1, 2, -1, -2});
    // meridian of T1 is [b1^-1, y^-1]
    const Word mer = commutator({-5}, {-2});
    CHECK(mer == Word{-5, -2, 5, 2});
    CHECK(parse_word("[b1^-1,y^-1]", kGens) == mer);
}

TEST_CASE("cyclic reduction and canonical forms") {
    CHECK(cyclic_reduce({1, 2, -1}) == Word{2});
    // all sign patterns of a commutator coincide up to rotation/inversion
    const Word base = canonical_cyclic(commutator({1}, {2}));
    CHECK(canonical_cyclic(commutator({-1}, {2})) == base);
    CHECK(canonical_cyclic(commutator({1}, {-2})) == base);
    CHECK(canonical_cyclic(commutator({-1}, {-2})) == base);
    CHECK(canonical_cyclic(commutator({2}, {1})) == base);
}

TEST_CASE("word DSL: parse and print round-trip") {
    CHECK(parse_word("x*x^-1", kGens) == Word{});
    CHECK(parse_word("1", kGens) == Word{});
    CHECK(parse_word("x y", kGens) == Word{1, 2});
    CHECK(parse_word("(x*y)^-1", kGens) == Word{-2, -1});
    CHECK(parse_word("a1'", {"a1'"}) == Word{1});
    CHECK(print_word({1, 1, -2}, kGens) == "x^2*y^-1");
    CHECK(parse_word("x^2*y^-1", kGens) == Word{1, 1, -2});

    CHECK_THROWS_AS(parse_word("[x,", kGens), parse_error);
    try {
        parse_word("[x,", kGens);
    } catch (const parse_error& e) {
        CHECK(e.column == 4);
    }
    CHECK_THROWS_AS(parse_word("foo", kGens), parse_error);
    CHECK_THROWS_AS(parse_word("x^", kGens), parse_error);
    CHECK_THROWS_AS(parse_word("", kGens), parse_error);

    std::mt19937_64 rng(11);
    for (int it = 0; it < 500; ++it) {
        const Word w = free_reduce(rand_word(rng, rng() % 16, 6));
        CHECK(parse_word(print_word(w, kGens), kGens) == w);
    }
}
