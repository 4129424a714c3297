// A short tour: the twisting relations, a depth-limited inverse with its
// residual, the center test, the n! coefficient witness, and a finite
// quaternion-type specialization.
#include <iostream>

#include "mnforge/mnforge.hpp"

int main() {
    using namespace mnforge;
    PrimeTable tab;  // p_1 = 2, p_2 = 3, p_3 = 5, ...

    // sqrt(p_1) anticommutes with x_1 and commutes with x_2.
    Series s1(FieldElem::radical(1));
    Series x1 = Series::from_word(GroupWord::generator(1));
    Series x2 = Series::from_word(GroupWord::generator(2));
    std::cout << "x1 * s1        = " << to_string(mul(tab, x1, s1)) << "\n";
    std::cout << "x2 * s1        = " << to_string(mul(tab, x2, s1)) << "\n";
    std::cout << "comm(x1, s1)   = " << to_string(commutator(tab, x1, s1, 1)) << "\n";

    // Monomial inverses are exact; general inverses are partial Neumann sums
    // whose residual sits deep in the group order.
    Series a = Series(1) - x1;
    Series ai = inverse(tab, a, 4);
    std::cout << "inv(1 - x1, 4) = " << to_string(ai) << "\n";
    std::cout << "residual       = " << to_string(mul(tab, a, ai) - Series(1)) << "\n";

    // Centrality is decided by the support: all-even words, rational
    // coefficients.
    Series central = Series::term(FieldElem(3), GroupWord::generator(1, 2));
    std::cout << "3*x1^2 central = " << (is_central(central) ? "yes" : "no") << "\n";
    std::cout << "x1 central     = " << (is_central(x1) ? "yes" : "no") << "\n";

    // The staircase coefficient of gamma_N^n is n!.
    std::cout << "gamma witness (N=5, n=4) = " << to_string(gamma_coefficient_witness(tab, 5, 4))
              << "\n";

    // The 4-dimensional specialization with u^2 = v^2 = -1: commutators have
    // norm 1 and the center is one-dimensional.
    AlgebraParams p(1, {Rational(-1)}, {Rational(-1)});
    AlgebraElem u = AlgebraElem::u(p, 1), v = AlgebraElem::v(p, 1);
    std::cout << "norm(comm(u, v)) = " << to_string(norm(p, commutator(p, u, v))) << "\n";
    std::cout << "centralizer dim  = " << centralizer_dimension(p) << "\n";
    return 0;
}
