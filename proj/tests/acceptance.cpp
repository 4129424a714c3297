// Acceptance gate: ten checks, one pass/fail line each, exit 0 only if all
// pass.  Each check carries a wall-clock budget that is enforced, so a pass
// also certifies the documented performance envelope.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mnforge/cli.hpp"
#include "mnforge/mnforge.hpp"

using namespace mnforge;

namespace {

const PrimeTable tab;

bool staircase_witness() {
    for (std::uint32_t n = 1; n <= 5; ++n)
        for (std::uint32_t N = n; N <= 6; ++N)
            if (gamma_coefficient_witness(tab, N, n) != Rational(factorial(n))) return false;
    return true;
}

bool twisting_relations() {
    for (std::uint32_t i = 1; i <= 8; ++i)
        for (std::uint32_t j = 1; j <= 8; ++j)
            for (std::uint32_t n = 1; n <= 6; ++n) {
                GroupWord w = GroupWord::generator(i, n);
                FieldElem sj = FieldElem::radical(j);
                FieldElem expect = (i == j && n % 2 == 1) ? -sj : sj;
                if (!(mul(tab, Series::from_word(w), Series(sj)) ==
                      Series::term(expect, w)))
                    return false;
                // Passing the word twice restores the coefficient.
                if (!(apply_auto(apply_auto(sj, w.odd_indices()), w.odd_indices()) == sj))
                    return false;
            }
    return true;
}

bool center_membership() {
    Rng rng(derive_seed(7, "acceptance-center"));
    for (int t = 0; t < 200; ++t) {
        Series a = t % 4 == 0 ? random_central_series(rng, 3, 4, 3, 6)
                              : random_series(rng, 3, 4, 3, 6);
        if (t % 4 == 1) a += Series::term(FieldElem::radical(1), GroupWord::generator(2, 2));
        if (is_central(a) != commutation_window_test(tab, a)) return false;
    }
    return true;
}

bool fixed_field() {
    Rng rng(derive_seed(7, "acceptance-fixed"));
    for (int t = 0; t < 200; ++t) {
        FieldElem c =
            t % 3 == 0 ? FieldElem(rng.rational(9, 4)) : random_field_elem(rng, 4, 4, 9);
        bool fixed = true;
        for (std::uint32_t i = 1; i <= 4; ++i)
            if (!(apply_auto(c, IndexSet::single(i)) == c)) fixed = false;
        if (fixed != c.is_rational()) return false;
    }
    return true;
}

bool centralizer_dims() {
    for (std::uint32_t n = 1; n <= 3; ++n) {
        std::vector<AlgebraParams> sets;
        sets.push_back(AlgebraParams::defaults(tab, n));
        sets.push_back(AlgebraParams(n, std::vector<Rational>(n, Rational(-1)),
                                     std::vector<Rational>(n, Rational(-1))));
        // Split case: a_1 = 1 makes the first factor a matrix algebra.
        std::vector<Rational> a(n, Rational(1));
        sets.push_back(AlgebraParams(n, a, AlgebraParams::defaults(tab, n).b));
        for (const AlgebraParams& p : sets)
            if (centralizer_dimension(p) != 1) return false;
    }
    return true;
}

bool norm_and_torsion() {
    AlgebraParams H(1, {Rational(-1)}, {Rational(-1)});
    Rng rng(derive_seed(7, "acceptance-norm"));
    for (int t = 0; t < 100; ++t) {
        AlgebraElem x = random_invertible_algebra_elem(rng, H, 6);
        AlgebraElem y = random_invertible_algebra_elem(rng, H, 6);
        if (norm(H, mul(H, x, y)) != norm(H, x) * norm(H, y)) return false;
        if (norm(H, commutator(H, x, y)) != 1) return false;
    }
    return torsion_order(H, -AlgebraElem::one(H), 4) == 2u;
}

bool conjugate_power_dichotomy() {
    QuatParams p;
    Rng rng(derive_seed(7, "acceptance-herstein"));
    int done = 0;
    while (done < 100) {
        QuatElem a = random_quat(rng, 5);
        QuatElem b = random_quat(rng, 5);
        if (a == QuatElem(1)) continue;
        if (!is_invertible(p, a + b) || !is_invertible(p, b + QuatElem(1))) continue;
        std::uint32_t m = 1 + done % 5;
        if (!conjugate_power_identity_check(p, a, b, m)) return false;
        try {
            conclusion_probe(p, a, b, m);
        } catch (const Error&) {
            return false;
        }
        ++done;
    }
    return true;
}

bool inversion_residuals() {
    Rng rng(derive_seed(7, "acceptance-residual"));
    int done = 0;
    while (done < 50) {
        Series a = random_nonzero_series(rng, 2, 4, 2, 5);
        if (a.is_monomial()) continue;
        Series ai = inverse(tab, a, 4);
        Series rho = mul(tab, a, ai) - Series(1).tagged(4);
        Series eps =
            mul(tab, monomial_inverse(tab, a.coeff(a.min_word()), a.min_word()), a) - Series(1);
        GroupWord bound = eps.min_word().pow(5);
        if (!rho.is_zero() && rho.min_word() < bound) return false;
        ++done;
    }
    return true;
}

bool order_axioms() {
    Rng rng(derive_seed(7, "acceptance-order"));
    for (int t = 0; t < 1000; ++t) {
        GroupWord a = random_word(rng, 5, 6);
        GroupWord b = random_word(rng, 5, 6);
        GroupWord c = random_word(rng, 5, 6);
        int rel = (a < b) + (b < a) + (a == b);
        if (rel != 1) return false;
        if (a < b && b < c && !(a < c)) return false;
        if (a < b && !(c * a < c * b)) return false;
        // Parity is a homomorphism onto subsets with symmetric difference.
        if (!((a * b).odd_indices() == sym_diff(a.odd_indices(), b.odd_indices()))) return false;
        // The squares form a subgroup.
        if (a.all_even() && b.all_even() && !((a * b).all_even() && a.inverse().all_even()))
            return false;
    }
    return true;
}

bool round_trip_and_verify() {
    Rng rng(derive_seed(7, "acceptance-roundtrip"));
    EvalConfig cfg;
    for (int t = 0; t < 200; ++t) {
        Series a = random_series(rng, 3, 4, 3, 9);
        if (!(eval_text(cfg, to_string(a)) == a)) return false;
    }
    std::ostringstream out1, err1, out2, err2;
    int rc1 = run_cli({"verify", "all", "--seed", "7"}, out1, err1);
    int rc2 = run_cli({"verify", "all", "--seed", "7"}, out2, err2);
    return rc1 == 0 && rc2 == 0 && out1.str() == out2.str() && !out1.str().empty();
}

struct Criterion {
    const char* label;
    double budget_seconds;
    std::function<bool()> check;
};

}  // namespace

int main() {
    // The checks must not depend on ambient configuration.
    for (const char* v : {"MNFORGE_PRIMES", "MNFORGE_DEPTH", "MNFORGE_SEED", "MNFORGE_TRIALS"})
        ::unsetenv(v);

    const std::vector<Criterion> criteria = {
        {"staircase coefficient equals n!", 10.0, staircase_witness},
        {"twisting relations across generators", 5.0, twisting_relations},
        {"center membership matches commutation", 10.0, center_membership},
        {"fixed field of all automorphisms is Q", 5.0, fixed_field},
        {"centralizer dimension is one", 10.0, centralizer_dims},
        {"norms and torsion in the quaternion case", 5.0, norm_and_torsion},
        {"conjugate-power identity and dichotomy", 10.0, conjugate_power_dichotomy},
        {"inversion residuals start late", 10.0, inversion_residuals},
        {"group order axioms", 5.0, order_axioms},
        {"round-trips and deterministic verify", 30.0, round_trip_and_verify},
    };

    int passed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = c.check();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        if (secs > c.budget_seconds) {
            ok = false;
            note = " (over budget)";
        }
        std::printf("[%2zu/10] %-42s %s (%.2fs, limit %.0fs)%s\n", i + 1, c.label,
                    ok ? "PASS" : "FAIL", secs, c.budget_seconds, note.c_str());
        if (ok) ++passed;
    }
    std::printf("acceptance: %d/10 passed\n", passed);
    return passed == 10 ? 0 : 1;
}
