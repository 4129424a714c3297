#include <catch_amalgamated.hpp>

#include "mnforge/random.hpp"
#include "mnforge/series.hpp"

using namespace mnforge;

namespace {
const PrimeTable tab;

FieldElem s(std::uint32_t i) { return FieldElem::radical(i); }
GroupWord x(std::uint32_t i, Int n = 1) { return GroupWord::generator(i, std::move(n)); }
Series X(std::uint32_t i, Int n = 1) { return Series::from_word(x(i, std::move(n))); }
}  // namespace

TEST_CASE("twisted multiplication: pinned products") {
    // Passing a word flips the radicals at its odd indices: x1*s1 = -s1*x1.
    CHECK(mul(tab, X(1), Series(s(1))) == Series::term(-s(1), x(1)));
    CHECK(mul(tab, Series(s(1)), X(1)) == Series::term(s(1), x(1)));
    CHECK(to_string(mul(tab, X(1), Series(s(1)))) == "-1*s1*x1");
    // Even powers carry a trivial automorphism.
    CHECK(mul(tab, X(1, 2), Series(s(1))) == Series::term(s(1), x(1, 2)));
    // x2 does not touch s1.
    CHECK(mul(tab, X(2), Series(s(1))) == Series::term(s(1), x(2)));
    // Coefficients multiply in the field: s1*s1 = 2.
    CHECK(mul(tab, Series(s(1)), Series(s(1))) == Series(2));
    CHECK(mul(tab, X(1), X(1, -1)) == Series(1));
    CHECK(pow(tab, X(1) + X(2), 0) == Series(1));
}

TEST_CASE("commutators and conjugates of monomials are exact") {
    // x1 and sqrt(2) anticommute, so their multiplicative commutator is -1.
    Series c = commutator(tab, X(1), Series(s(1)), 1);
    CHECK(c.is_exact());
    CHECK(c == Series(-1));
    CHECK(conjugate(tab, Series(s(1)), X(1), 1) == Series(-s(1)));
    CHECK(conjugate(tab, Series(s(2)), X(1), 1) == Series(s(2)));
    CHECK(commutator(tab, X(1), X(2), 1) == Series(1));
}

TEST_CASE("monomial inverses are exact and two-sided") {
    Series m = Series::term(FieldElem(3) + s(1), x(2, -3));
    Series mi = inverse(tab, m, 9);
    CHECK(mi.is_exact());
    CHECK(mul(tab, m, mi) == Series(1));
    CHECK(mul(tab, mi, m) == Series(1));
    // Phi_{x1}((3*s1)^-1) = -1/6*s1.
    CHECK(monomial_inverse(tab, Rational(3) * s(1), x(1)) ==
          Series::term((Rational(-1) / 6) * s(1), x(1, -1)));
    CHECK_THROWS_AS(inverse(tab, Series(), 3), ZeroInversion);
}

TEST_CASE("partial inversion of 1 - x1") {
    Series a = Series(1) - X(1);
    Series ai = inverse(tab, a, 3);
    CHECK_FALSE(ai.is_exact());
    CHECK(ai.truncation() == 3u);
    // Geometric sum through degree 3.
    CHECK(ai == (Series(1) + X(1) + X(1, 2) + X(1, 3)).tagged(3));
    // Contract: the residual starts at (min supp eps)^(depth+1) = x1^4.
    CHECK(mul(tab, a, ai) == (Series(1) - X(1, 4)).tagged(3));
}

TEST_CASE("residual bound on random inversions") {
    Rng rng(902);
    for (int t = 0; t < 12; ++t) {
        Series a = random_nonzero_series(rng, 2, 3, 2, 4);
        Series ai = inverse(tab, a, 3);
        Series rho = mul(tab, a, ai) - Series(1).tagged(3);
        if (a.is_monomial()) {
            CHECK(ai.is_exact());
            continue;
        }
        Series eps = mul(tab, monomial_inverse(tab, a.coeff(a.min_word()), a.min_word()), a) -
                     Series(1);
        if (rho.is_zero()) continue;
        CHECK(!(rho.min_word() < eps.min_word().pow(4)));
    }
}

TEST_CASE("truncation tags propagate and gate equality") {
    Series a = Series(1).tagged(5);
    Series b = Series(1).tagged(2);
    CHECK((a + b).truncation() == 2u);
    CHECK(mul(tab, a, Series(3)).truncation() == 5u);
    CHECK(a.tagged(7).truncation() == 5u);
    CHECK_FALSE(a == b);                                      // same terms, different depths
    CHECK(a == Series(1).tagged(5));                          // same terms, same depth
    CHECK_THROWS_AS(a == Series(1), TruncatedInput);          // exact vs truncated
    CHECK_THROWS_AS(is_central(a), TruncatedInput);
    CHECK_THROWS_AS(commutation_window_test(tab, a), TruncatedInput);
}

TEST_CASE("centrality is a support condition") {
    Series central = Series(2) + Series::term(FieldElem(Rational(3) / 7), x(1, 2) * x(2, -4));
    CHECK(is_central(central));
    CHECK(commutation_window_test(tab, central));

    CHECK_FALSE(is_central(Series(s(1))));          // irrational coefficient
    CHECK_FALSE(is_central(X(1)));                  // odd word
    CHECK_FALSE(is_central(Series::term(s(3), x(1, 2))));
    CHECK_FALSE(commutation_window_test(tab, Series(s(1))));
    CHECK_FALSE(commutation_window_test(tab, X(1)));
    CHECK(is_central(Series()));
    CHECK(is_central(Series(-5)));
}

TEST_CASE("centrality agrees with the commutation test on random series") {
    Rng rng(311);
    for (int t = 0; t < 40; ++t) {
        Series a = t % 3 == 0 ? random_central_series(rng, 3, 3, 2, 5)
                              : random_series(rng, 3, 3, 2, 5);
        CHECK(is_central(a) == commutation_window_test(tab, a));
    }
}

TEST_CASE("gamma powers: pinned coefficients") {
    CHECK(to_string(gamma_series(2)) == "1*x1^-1 + 1*x2^-1");
    Series g2 = gamma_series(2);
    Series sq = mul(tab, g2, g2);
    CHECK(sq.coeff(x(1, -2)) == FieldElem(1));
    CHECK(sq.coeff(x(1, -1) * x(2, -1)) == FieldElem(2));
    CHECK(sq.coeff(x(2, -2)) == FieldElem(1));
    CHECK(sq.support_size() == 3);
    CHECK_THROWS_AS(gamma_series(0), BadArguments);
}

TEST_CASE("gamma coefficient witness is a factorial") {
    CHECK(gamma_coefficient_witness(tab, 2, 2) == Rational(2));
    CHECK(gamma_coefficient_witness(tab, 5, 4) == Rational(24));
    CHECK(gamma_coefficient_witness(tab, 6, 3) == Rational(6));
    CHECK(gamma_coefficient_witness(tab, 4, 1) == Rational(1));
    CHECK_THROWS_AS(gamma_coefficient_witness(tab, 3, 4), BadArguments);
    CHECK_THROWS_AS(gamma_coefficient_witness(tab, 0, 0), BadArguments);
}

TEST_CASE("gamma independence probe reaches full rank") {
    CHECK(gamma_independence_probe(tab, 4, 0) == 1);
    CHECK(gamma_independence_probe(tab, 4, 2) == 3);
    CHECK(gamma_independence_probe(tab, 6, 4) == 5);
    CHECK_THROWS_AS(gamma_independence_probe(tab, 2, 3), BadArguments);
}

TEST_CASE("series text forms") {
    CHECK(to_string(Series()) == "0");
    CHECK(to_string(Series(1)) == "1*e");
    CHECK(to_string(-X(1)) == "-1*x1");
    CHECK(to_string(Series(1) - Series::term(Rational(5) * s(1), x(1))) == "1*e - 5*s1*x1");
    CHECK(to_string(Series::term(FieldElem(3) - Rational(5) * s(1), GroupWord())) ==
          "(3 - 5*s1)*e");
    CHECK(to_string(Series::term(FieldElem(Rational(2) / 3), x(2, -1))) == "2/3*x2^-1");
}

TEST_CASE("support utilities") {
    Series a = X(2) + Series::term(s(3), x(1, 2));
    CHECK(a.min_word() == x(2));  // exponent 0 at index 1 precedes exponent 2
    CHECK(a.window() == 3);
    CHECK(a.support_size() == 2);
    CHECK(a.coeff(x(5)).is_zero());
    CHECK_THROWS_AS(Series().min_word(), BadArguments);
    CHECK(Series(7).window() == 0);
}
