#include <catch_amalgamated.hpp>

#include "mnforge/group.hpp"
#include "mnforge/random.hpp"

using namespace mnforge;

namespace {
GroupWord x(std::uint32_t i, Int n = 1) { return GroupWord::generator(i, std::move(n)); }
}  // namespace

TEST_CASE("word construction and text form") {
    CHECK(GroupWord().is_identity());
    CHECK(to_string(GroupWord()) == "e");
    CHECK(to_string(x(2)) == "x2");
    CHECK(to_string(x(1, -1) * x(3, 2)) == "x1^-1*x3^2");
    CHECK(to_string(x(1, 5)) == "x1^5");
    CHECK(x(3, 0).is_identity());
    CHECK_THROWS_AS(GroupWord::generator(0), BadArguments);
}

TEST_CASE("word multiplication merges exponents") {
    CHECK(x(1) * x(1, -1) == GroupWord());
    CHECK(x(1, 2) * x(3) * x(1, -1) == x(1) * x(3));
    CHECK(x(2) * x(1) == x(1) * x(2));  // the group is abelian
    GroupWord w = x(1, -1) * x(3, 2);
    CHECK(w * w.inverse() == GroupWord());
    CHECK(w.inverse() == x(1) * x(3, -2));
}

TEST_CASE("word powers") {
    GroupWord w = x(1) * x(2, -1);
    CHECK(w.pow(3) == x(1, 3) * x(2, -3));
    CHECK(w.pow(0) == GroupWord());
    CHECK(w.pow(-2) == w.inverse() * w.inverse());
}

TEST_CASE("exponent queries") {
    GroupWord w = x(1) * x(2, -5);
    CHECK(w.exponent(1) == 1);
    CHECK(w.exponent(2) == -5);
    CHECK(w.exponent(7) == 0);
    CHECK(w.max_index() == 2);
    CHECK(GroupWord().max_index() == 0);
    CHECK((x(1, -1) * x(3, 2)).max_index() == 3);
}

TEST_CASE("parity of a word") {
    CHECK(GroupWord().all_even());
    CHECK((x(1, 2) * x(2, -4)).all_even());
    CHECK_FALSE((x(1, 2) * x(3)).all_even());
    Parity odd = (x(1, 3) * x(2, 2) * x(3, -1)).odd_indices();
    CHECK(odd == Parity({1, 3}));
    CHECK(GroupWord().odd_indices() == Parity());
}

TEST_CASE("word order: pinned comparisons") {
    // Lexicographic from index 1 up, so a negative x1-exponent loses to
    // everything with x1-exponent zero or positive.
    CHECK(x(1, -1) < x(2, -1));
    CHECK(x(2, -1) < GroupWord());
    CHECK(GroupWord() < x(2));
    CHECK(x(2) < x(1));
    // Ties on the leading index fall through to later indices.
    CHECK(x(1) * x(2, -5) < x(1));
    CHECK(x(1) < x(1) * x(2, 5));
    CHECK(x(1) * x(3, -1) < x(1));
    CHECK((x(1) <=> x(1)) == std::strong_ordering::equal);
}

TEST_CASE("word order: axioms on random triples") {
    Rng rng(417);
    for (int t = 0; t < 300; ++t) {
        GroupWord a = random_word(rng, 4, 5);
        GroupWord b = random_word(rng, 4, 5);
        GroupWord c = random_word(rng, 4, 5);
        // Totality and consistency with equality.
        CHECK(((a < b) + (b < a) + (a == b)) == 1);
        // Transitivity.
        if (a < b && b < c) CHECK(a < c);
        // Translation invariance on both sides (the group is abelian, so one
        // check covers both).
        if (a < b) CHECK(c * a < c * b);
        // Inversion reverses the order.
        if (a < b) CHECK(b.inverse() < a.inverse());
    }
}
