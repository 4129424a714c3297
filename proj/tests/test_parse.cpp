#include <catch_amalgamated.hpp>

#include "mnforge/parse.hpp"

using namespace mnforge;

namespace {
const EvalConfig cfg;

Series ev(std::string_view src) { return eval_text(cfg, src); }
GroupWord x(std::uint32_t i, Int n = 1) { return GroupWord::generator(i, std::move(n)); }
Series X(std::uint32_t i, Int n = 1) { return Series::from_word(x(i, std::move(n))); }

std::size_t fail_offset(std::string_view src) {
    try {
        parse(src);
    } catch (const ParseError& e) {
        return e.offset;
    }
    throw std::logic_error("expected a parse error");
}
}  // namespace

TEST_CASE("atoms evaluate to series") {
    CHECK(ev("e") == Series(1));
    CHECK(ev("x3") == X(3));
    CHECK(ev("s2") == Series(FieldElem::radical(2)));
    CHECK(ev("7") == Series(7));
    CHECK(ev("3/4") == Series(FieldElem(Rational(3) / 4)));
    CHECK(ev("gamma(2)") == gamma_series(2));
    CHECK(to_string(ev("gamma(2)")) == "1*x1^-1 + 1*x2^-1");
}

TEST_CASE("operator precedence and associativity") {
    CHECK(ev("2*s1 + 3") == Series(FieldElem(3) + Rational(2) * FieldElem::radical(1)));
    CHECK(ev("2*(s1 + 3)") == Series(FieldElem(6) + Rational(2) * FieldElem::radical(1)));
    CHECK(ev("1 - 2 - 3") == Series(-4));                      // left associative
    CHECK(ev("x1^2*x2") == mul(cfg.tab, X(1, 2), X(2)));
    CHECK(ev("-x1^2") == -X(1, 2));                            // ^ binds before unary -
    CHECK(ev("--x1") == X(1));
    CHECK(ev("x1*s1") == Series::term(-FieldElem::radical(1), x(1)));
    CHECK(ev("s1*s1") == Series(2));
}

TEST_CASE("powers") {
    CHECK(ev("x1^-1") == X(1, -1));
    CHECK(ev("x1^0") == Series(1));
    CHECK(ev("2^-1") == Series(FieldElem(Rational(1) / 2)));
    CHECK(ev("s1^-2") == Series(FieldElem(Rational(1) / 2)));
    CHECK(ev("(x1*x2)^2") == mul(cfg.tab, X(1, 2), X(2, 2)));
    CHECK_THROWS_AS(ev("x1^5000"), BadArguments);
    // A negative power of a sum has no exact answer; the caller must pick a
    // depth explicitly.
    CHECK_THROWS_AS(ev("(1 - x1)^-1"), NeedsDepth);
}

TEST_CASE("inv and comm with optional depth") {
    CHECK(ev("inv(x1)") == X(1, -1));
    CHECK(ev("inv(x1)").is_exact());
    CHECK(ev("inv(1 - x1, 3)") == inverse(cfg.tab, Series(1) - X(1), 3));
    CHECK(ev("inv(1 - x1)").truncation() == cfg.default_depth);
    CHECK(ev("comm(x1, s1)") == Series(-1));
    CHECK(ev("comm(x1, x2)") == Series(1));
    CHECK_THROWS_AS(ev("inv(0)"), ZeroInversion);
}

TEST_CASE("parse errors carry offsets and expectations") {
    CHECK(fail_offset("x1 @") == 3);
    CHECK(fail_offset("x0") == 0);
    CHECK(fail_offset("foo") == 0);
    CHECK(fail_offset("gamma(0)") == 6);
    CHECK(fail_offset("1/0") == 2);
    CHECK(fail_offset("(x1") == 3);
    CHECK(fail_offset("x1 x2") == 3);
    CHECK(fail_offset("x1 +") == 4);
    try {
        parse("x1 @");
    } catch (const ParseError& e) {
        CHECK(e.expected == "a valid token");
        CHECK(std::string(e.what()) == "parse error at offset 3: expected a valid token");
    }
}

TEST_CASE("bare word parsing") {
    CHECK(parse_word("e") == GroupWord());
    CHECK(parse_word("x1^-1*x3^2") == x(1, -1) * x(3, 2));
    CHECK(parse_word("x2*x2") == x(2, 2));
    CHECK_THROWS_AS(parse_word("2*x1"), BadArguments);
    CHECK_THROWS_AS(parse_word("x1 + x2"), BadArguments);
    CHECK_THROWS_AS(parse_word("s1"), BadArguments);
    CHECK_THROWS_AS(parse_word("0"), BadArguments);
}

TEST_CASE("canonical text round-trips through the parser") {
    const char* samples[] = {"1*e - 1*x1", "2/3*x2^-1 + 1*s1*x1", "(3 - 5*s1)*e",
                             "-1*s1*x1 + 1*x1^2*x2^-2"};
    for (const char* s : samples) {
        Series a = ev(s);
        CHECK(to_string(a) == s);
        CHECK(ev(to_string(a)) == a);
    }
}
