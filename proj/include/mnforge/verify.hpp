#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "mnforge/algebra.hpp"
#include "mnforge/field.hpp"
#include "mnforge/group.hpp"
#include "mnforge/herstein.hpp"
#include "mnforge/parse.hpp"
#include "mnforge/quaternion.hpp"
#include "mnforge/random.hpp"
#include "mnforge/series.hpp"

namespace mnforge {

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::uint64_t seed = 0;  // derived per-suite seed actually used
    double elapsed_ms = 0.0;
    std::vector<std::string> messages;  // first few failure labels
};

struct VerifyConfig {
    PrimeTable tab;
    std::uint64_t seed = 7;
    std::uint32_t trials = 0;  // 0 = per-suite defaults; otherwise overrides random loops
    std::uint32_t depth = 8;   // default inversion depth

    std::uint32_t loop(std::uint32_t fallback) const { return trials == 0 ? fallback : trials; }
};

namespace detail {

class Checker {
  public:
    explicit Checker(SuiteResult& r) : r_(r) {}

    void check(bool ok, const char* label) {
        ++r_.checks;
        if (ok) return;
        ++r_.failures;
        if (r_.messages.size() < 5) r_.messages.push_back(label);
    }

    template <typename F>
    void check_throws(F&& f, const char* label) {
        ++r_.checks;
        try {
            f();
        } catch (const Error&) {
            return;
        }
        ++r_.failures;
        if (r_.messages.size() < 5) r_.messages.push_back(label);
    }

  private:
    SuiteResult& r_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// field: exact arithmetic in the multiquadratic tower and its automorphisms.
inline SuiteResult run_field_suite(const VerifyConfig& cfg) {
    SuiteResult r;
    r.name = "field";
    r.seed = derive_seed(cfg.seed, "field");
    Rng rng(r.seed);
    detail::Checker ck(r);
    const PrimeTable& tab = cfg.tab;

    const std::uint32_t triples = cfg.loop(200);
    for (std::uint32_t t = 0; t < triples; ++t) {
        std::uint32_t level = 1 + static_cast<std::uint32_t>(rng.below(6));
        FieldElem a = random_field_elem(rng, level, 3, 9);
        FieldElem b = random_field_elem(rng, level, 3, 9);
        FieldElem c = random_field_elem(rng, level, 3, 9);
        ck.check((a + b) + c == a + (b + c), "field: additive associativity");
        ck.check(a + b == b + a, "field: additive commutativity");
        ck.check(mul(tab, mul(tab, a, b), c) == mul(tab, a, mul(tab, b, c)),
                 "field: multiplicative associativity");
        ck.check(mul(tab, a, b) == mul(tab, b, a), "field: multiplicative commutativity");
        ck.check(mul(tab, a, b + c) == mul(tab, a, b) + mul(tab, a, c),
                 "field: distributivity");
        ck.check(mul(tab, a, FieldElem(1)) == a, "field: unit");
        ck.check((a - a).is_zero(), "field: additive inverse");
        if (!a.is_zero())
            ck.check(mul(tab, a, inv(tab, a)).is_one(), "field: multiplicative inverse");
    }

    // Involution and pairwise commutation of the automorphisms, all i, j <= 8.
    for (std::uint32_t rep = 0; rep < 3; ++rep) {
        FieldElem a = random_field_elem(rng, 8, 4, 9);
        for (std::uint32_t i = 1; i <= 8; ++i) {
            ck.check(apply_auto(apply_auto(a, IndexSet::single(i)), IndexSet::single(i)) == a,
                     "field: involution");
            for (std::uint32_t j = 1; j <= 8; ++j)
                ck.check(apply_auto(apply_auto(a, IndexSet::single(i)), IndexSet::single(j)) ==
                             apply_auto(apply_auto(a, IndexSet::single(j)), IndexSet::single(i)),
                         "field: automorphisms commute");
        }
    }

    // Ring homomorphism property of the automorphisms.
    for (std::uint32_t t = 0; t < cfg.loop(100); ++t) {
        FieldElem a = random_field_elem(rng, 5, 3, 9);
        FieldElem b = random_field_elem(rng, 5, 3, 9);
        Parity flip = random_mask(rng, 5);
        ck.check(apply_auto(a + b, flip) == apply_auto(a, flip) + apply_auto(b, flip),
                 "field: automorphism preserves sums");
        ck.check(apply_auto(mul(tab, a, b), flip) ==
                     mul(tab, apply_auto(a, flip), apply_auto(b, flip)),
                 "field: automorphism preserves products");
    }

    // Fixed-field property at level 4: invariance under the first four
    // automorphisms is exactly rationality.
    std::uint32_t ff = cfg.loop(120);
    for (std::uint32_t t = 0; t < ff; ++t) {
        FieldElem a = t % 3 == 0 ? FieldElem(rng.rational_or_zero(9, 4))
                                 : random_field_elem(rng, 4, 4, 9);
        bool fixed = true;
        for (std::uint32_t i = 1; i <= 4; ++i)
            if (!(apply_auto(a, IndexSet::single(i)) == a)) fixed = false;
        ck.check(fixed == a.is_rational(), "field: fixed field is the rationals");
    }

    return r;
}

// ---------------------------------------------------------------------------
// order: the lexicographic total order on the group and the parity data.
inline SuiteResult run_order_suite(const VerifyConfig& cfg) {
    SuiteResult r;
    r.name = "order";
    r.seed = derive_seed(cfg.seed, "order");
    Rng rng(r.seed);
    detail::Checker ck(r);

    const std::uint32_t triples = cfg.loop(1000);
    for (std::uint32_t t = 0; t < triples; ++t) {
        GroupWord x = random_word(rng, 6, 9);
        GroupWord y = random_word(rng, 6, 9);
        GroupWord z = random_word(rng, 6, 9);
        int rel = x < y ? -1 : (y < x ? 1 : 0);
        ck.check((rel == 0) == (x == y), "order: totality");
        ck.check(!(x < y && y < x), "order: antisymmetry");
        if (x < y && y < z) ck.check(x < z, "order: transitivity");
        if (x < y) ck.check(x * z < y * z, "order: translation invariance");
        ck.check((x * z == y * z) == (x == y), "order: translation preserves equality");
        ck.check(sym_diff(x.odd_indices(), y.odd_indices()) == (x * y).odd_indices(),
                 "order: parity is a homomorphism");
        ck.check((x * x).all_even(), "order: squares land in H");
        ck.check(((x * x) * (y * y)).all_even(), "order: H closed under products");
        ck.check((x * x).inverse().all_even(), "order: H closed under inverses");
        if (x.all_even())
            ck.check(x.odd_indices().empty(), "order: trivial twisting on H");
    }

    // Pinned comparisons.
    ck.check(GroupWord::generator(1, -1) < GroupWord::generator(2, -1),
             "order: x1^-1 before x2^-1");
    ck.check(GroupWord::generator(2, -1) < GroupWord{}, "order: x2^-1 before e");
    ck.check(GroupWord::generator(1) * GroupWord::generator(2, -5) < GroupWord::generator(1),
             "order: later index decides ties");

    return r;
}

// ---------------------------------------------------------------------------
// series: ring axioms, the twisting relations, inversion contract, and
// canonical-text round-trips.
inline SuiteResult run_series_suite(const VerifyConfig& cfg) {
    SuiteResult r;
    r.name = "series";
    r.seed = derive_seed(cfg.seed, "series");
    Rng rng(r.seed);
    detail::Checker ck(r);
    const PrimeTable& tab = cfg.tab;

    for (std::uint32_t t = 0; t < cfg.loop(60); ++t) {
        Series a = random_series(rng, 3, 3, 3, 5);
        Series b = random_series(rng, 3, 3, 3, 5);
        Series c = random_series(rng, 3, 3, 3, 5);
        ck.check(mul(tab, mul(tab, a, b), c) == mul(tab, a, mul(tab, b, c)),
                 "series: associativity");
        ck.check(mul(tab, a, b + c) == mul(tab, a, b) + mul(tab, a, c),
                 "series: left distributivity");
        ck.check(mul(tab, a + b, c) == mul(tab, a, c) + mul(tab, b, c),
                 "series: right distributivity");
        ck.check(mul(tab, a, Series(1)) == a && mul(tab, Series(1), a) == a,
                 "series: two-sided unit");
    }

    // Twisting law for random monomials against random coefficients.
    for (std::uint32_t t = 0; t < cfg.loop(100); ++t) {
        GroupWord x = random_word(rng, 6, 5);
        FieldElem a = random_field_elem(rng, 6, 3, 9);
        ck.check(mul(tab, Series::from_word(x), Series(a)) ==
                     Series::term(apply_auto(a, x.odd_indices()), x),
                 "series: twisting law x a = Phi_x(a) x");
    }

    // Power laws, exhaustive over i, j <= 8 and exponents n <= 6.
    for (std::uint32_t i = 1; i <= 8; ++i) {
        Series sp = Series(FieldElem::radical(i));
        for (std::uint32_t j = 1; j <= 8; ++j) {
            for (std::uint32_t n = 1; n <= 6; ++n) {
                Series xn = Series::from_word(GroupWord::generator(j, n));
                Series lhs = mul(tab, xn, sp);
                Series rhs = mul(tab, sp, xn);
                if (i == j && n % 2 == 1) rhs = -rhs;
                ck.check(lhs == rhs, "series: power twisting law");
            }
        }
    }

    // Inversion contract at depth 4.
    const std::uint32_t inv_trials = cfg.loop(50);
    for (std::uint32_t t = 0; t < inv_trials; ++t) {
        Series a = random_nonzero_series(rng, 3, 4, 3, 5);
        Series ai = inverse(tab, a, 4);
        Series prod = mul(tab, a, ai);
        if (a.is_monomial()) {
            ck.check(ai.is_exact(), "series: monomial inverse is exact");
            ck.check(prod.is_one(), "series: monomial inverse product is 1");
            ck.check(mul(tab, ai, a).is_one(), "series: monomial inverse two-sided");
            continue;
        }
        ck.check(ai.truncation() == std::optional<std::uint32_t>(4),
                 "series: truncation tag carries the depth");
        Series lead_inv = monomial_inverse(tab, a.coeff(a.min_word()), a.min_word());
        Series eps = mul(tab, lead_inv, a) - Series(1);
        GroupWord bound = eps.min_word().pow(5);
        Series resid = prod - Series(1);
        bool all_beyond = true;
        for (const auto& [w, c] : resid.terms())
            if (w < bound) all_beyond = false;
        ck.check(all_beyond, "series: residual support beyond (min supp eps)^(d+1)");
        ck.check(eps.min_word() > GroupWord{}, "series: eps supported above the identity");
    }

    // Truncation-tag discipline.
    {
        Series a = Series(1) - Series::from_word(GroupWord::generator(1));
        Series t2 = inverse(tab, a, 2);
        Series t3 = inverse(tab, a, 3);
        ck.check(!(t2 == t3), "series: different depths compare unequal");
        ck.check((t2 + t3).truncation() == std::optional<std::uint32_t>(2),
                 "series: tags combine to the smaller depth");
        ck.check_throws([&] { (void)(t2 == a); },
                        "series: exact/truncated comparison must throw");
        ck.check_throws([&] { (void)is_central(t2); },
                        "series: centrality of truncated input must throw");
    }

    // Canonical-text round-trip through the parser.
    EvalConfig ecfg{.tab = tab, .default_depth = cfg.depth, .max_pow = 4096};
    for (std::uint32_t t = 0; t < cfg.loop(200); ++t) {
        Series s = random_series(rng, 4, 6, 5, 9);
        bool ok = false;
        try {
            ok = eval(ecfg, parse(to_string(s))) == s;
        } catch (const Error&) {
            ok = false;
        }
        ck.check(ok, "series: canonical text round-trip");
    }

    return r;
}

// ---------------------------------------------------------------------------
// center: the support characterization of centrality agrees with the
// commutation window test.
inline SuiteResult run_center_suite(const VerifyConfig& cfg) {
    SuiteResult r;
    r.name = "center";
    r.seed = derive_seed(cfg.seed, "center");
    Rng rng(r.seed);
    detail::Checker ck(r);
    const PrimeTable& tab = cfg.tab;

    const std::uint32_t trials = cfg.loop(220);
    for (std::uint32_t t = 0; t < trials; ++t) {
        Series s;
        switch (t % 4) {
            case 0:
                s = random_central_series(rng, 4, 4, 2, 9);
                break;
            case 1: {
                // Central bulk plus one deliberate violation.
                s = random_central_series(rng, 4, 4, 2, 9);
                if (rng.chance(1, 2))
                    s.add_term(random_word(rng, 4, 2) * GroupWord::generator(
                                   1 + static_cast<std::uint32_t>(rng.below(4))),
                               FieldElem(1));
                else
                    s.add_term((random_word(rng, 4, 2) * random_word(rng, 4, 2)),
                               FieldElem::radical(1 + static_cast<std::uint32_t>(rng.below(4))));
                break;
            }
            default:
                s = random_series(rng, 4, 6, 4, 9);
                break;
        }
        ck.check(is_central(s) == commutation_window_test(tab, s),
                 "center: predicate agrees with commutation window test");
    }

    // Pinned cases.
    ck.check(is_central(Series::term(FieldElem(3), GroupWord::generator(1, 2))),
             "center: 3*x1^2 is central");
    ck.check(!is_central(Series::term(FieldElem::radical(1), GroupWord::generator(1, 2))),
             "center: s1*x1^2 is not central");
    ck.check(!is_central(Series::from_word(GroupWord::generator(1))),
             "center: x1 is not central");

    return r;
}

// ---------------------------------------------------------------------------
// gamma: the n! coefficient witness and rank of the truncated powers.
inline SuiteResult run_gamma_suite(const VerifyConfig& cfg) {
    SuiteResult r;
    r.name = "gamma";
    r.seed = derive_seed(cfg.seed, "gamma");
    detail::Checker ck(r);
    const PrimeTable& tab = cfg.tab;

    for (std::uint32_t n = 1; n <= 5; ++n)
        for (std::uint32_t N = n; N <= 6; ++N) {
            bool ok = false;
            try {
                ok = gamma_coefficient_witness(tab, N, n) == Rational(factorial(n));
            } catch (const Error&) {
                ok = false;
            }
            ck.check(ok, "gamma: coefficient of the staircase word is n!");
        }

    for (std::uint32_t N = 1; N <= 6; ++N)
        for (std::uint32_t n = 0; n <= std::min(N, 4u); ++n)
            ck.check(gamma_independence_probe(tab, N, n) == n + 1,
                     "gamma: truncated powers are linearly independent");

    // Support of gamma_N is the ascending chain x1^-1 < x2^-1 < ... < xN^-1.
    Series g = gamma_series(4);
    ck.check(g.support_size() == 4, "gamma: support size");
    ck.check(g.min_word() == GroupWord::generator(1, -1), "gamma: minimal support element");
    GroupWord prev;
    bool ascending = true;
    bool first = true;
    for (const auto& [w, c] : g.terms()) {
        if (!first && !(prev < w)) ascending = false;
        prev = w;
        first = false;
        if (!(c == FieldElem(1))) ascending = false;
    }
    ck.check(ascending, "gamma: support ascends with unit coefficients");

    // The square of gamma_2 has coefficient 1 on x1^-2 and 2 on the mixed word.
    Series g2 = mul(tab, gamma_series(2), gamma_series(2));
    ck.check(g2.coeff(GroupWord::generator(1, -2)) == FieldElem(1),
             "gamma: squared diagonal coefficient");
    ck.check(g2.coeff(GroupWord::generator(1, -1) * GroupWord::generator(2, -1)) ==
                 FieldElem(2),
             "gamma: squared mixed coefficient");

    return r;
}

// ---------------------------------------------------------------------------
// algebra: the finite specializations A_n.
inline SuiteResult run_algebra_suite(const VerifyConfig& cfg) {
    SuiteResult r;
    r.name = "algebra";
    r.seed = derive_seed(cfg.seed, "algebra");
    Rng rng(r.seed);
    detail::Checker ck(r);
    const PrimeTable& tab = cfg.tab;

    for (std::uint32_t n = 1; n <= 3; ++n) {
        AlgebraParams p = AlgebraParams::defaults(tab, n);
        const std::uint32_t triples = cfg.loop(n == 3 ? 10 : 30);
        for (std::uint32_t t = 0; t < triples; ++t) {
            AlgebraElem x = random_algebra_elem(rng, p, 5);
            AlgebraElem y = random_algebra_elem(rng, p, 5);
            AlgebraElem z = random_algebra_elem(rng, p, 5);
            ck.check(mul(p, mul(p, x, y), z) == mul(p, x, mul(p, y, z)),
                     "algebra: associativity");
            ck.check(mul(p, x, y + z) == mul(p, x, y) + mul(p, x, z),
                     "algebra: distributivity");
            ck.check(mul(p, AlgebraElem::one(p), x) == x && mul(p, x, AlgebraElem::one(p)) == x,
                     "algebra: unit");
        }
    }

    // Left regular representation is a ring homomorphism; the norm is
    // multiplicative.
    {
        AlgebraParams p = AlgebraParams::defaults(tab, 2);
        for (std::uint32_t t = 0; t < cfg.loop(10); ++t) {
            AlgebraElem x = random_algebra_elem(rng, p, 4);
            AlgebraElem y = random_algebra_elem(rng, p, 4);
            ck.check(regular_matrix(p, mul(p, x, y)) ==
                         mat_mul(regular_matrix(p, x), regular_matrix(p, y)),
                     "algebra: regular representation is multiplicative");
            ck.check(norm(p, mul(p, x, y)) == norm(p, x) * norm(p, y),
                     "algebra: norm is multiplicative");
        }
        for (std::uint32_t t = 0; t < 5; ++t) {
            Rational c = rng.rational(7, 3);
            ck.check(norm(p, AlgebraElem::scalar(p, c)) == rational_pow(c, 16),
                     "algebra: norm of a central scalar");
        }
    }

    // Centralizer triviality across parameter families, split ones included.
    {
        ck.check(centralizer_dimension(AlgebraParams(0, {}, {})) == 1,
                 "algebra: centralizer at n = 0");
        for (std::uint32_t n = 1; n <= 3; ++n) {
            std::vector<AlgebraParams> families;
            families.push_back(AlgebraParams::defaults(tab, n));
            families.push_back(AlgebraParams(
                n, std::vector<Rational>(n, Rational(-1)), std::vector<Rational>(n, Rational(-1))));
            // Split family: u_i^2 = 1 introduces zero divisors.
            std::vector<Rational> ones(n, Rational(1)), bs;
            for (std::uint32_t i = 1; i <= n; ++i) bs.emplace_back(tab.prime(i));
            families.push_back(AlgebraParams(n, ones, bs));
            for (const AlgebraParams& p : families)
                ck.check(centralizer_dimension(p) == 1, "algebra: centralizer is the scalars");
        }
    }

    // Commutator norms and torsion in the quaternion specialization.
    {
        AlgebraParams p(1, {Rational(-1)}, {Rational(-1)});
        const std::uint32_t pairs = cfg.loop(100);
        for (std::uint32_t t = 0; t < pairs; ++t) {
            AlgebraElem g = random_invertible_algebra_elem(rng, p, 7);
            AlgebraElem h = random_invertible_algebra_elem(rng, p, 7);
            ck.check(norm(p, commutator(p, g, h)) == 1, "algebra: commutator norm is 1");
        }
        AlgebraElem minus_one = AlgebraElem::scalar(p, Rational(-1));
        ck.check(torsion_order(p, minus_one, 8) == std::optional<std::uint32_t>(2),
                 "algebra: torsion order of -1");
        AlgebraElem cm = commutator(p, AlgebraElem::u(p, 1), AlgebraElem::v(p, 1));
        ck.check(cm == minus_one, "algebra: commutator of the generators is -1");
        ck.check(!torsion_order(p, AlgebraElem::scalar(p, Rational(2)), 12).has_value(),
                 "algebra: scalar 2 is torsion-free");
    }

    // Consistency with the twisted series product under specialization.
    for (std::uint32_t n = 1; n <= 2; ++n) {
        AlgebraParams p = AlgebraParams::defaults(tab, n);
        for (std::uint32_t t = 0; t < cfg.loop(40); ++t) {
            Series a = random_series(rng, n, 3, 2, 5);
            Series b = random_series(rng, n, 3, 2, 5);
            ck.check(specialize(p, tab, mul(tab, a, b)) ==
                         mul(p, specialize(p, tab, a), specialize(p, tab, b)),
                     "algebra: specialization respects the product");
        }
    }

    return r;
}

// ---------------------------------------------------------------------------
// herstein: identities in the rational quaternion division algebra.
inline SuiteResult run_herstein_suite(const VerifyConfig& cfg) {
    SuiteResult r;
    r.name = "herstein";
    r.seed = derive_seed(cfg.seed, "herstein");
    Rng rng(r.seed);
    detail::Checker ck(r);
    const QuatParams qp;  // (-1, -1): a division ring

    // Inverse law.
    for (std::uint32_t t = 0; t < cfg.loop(200); ++t) {
        QuatElem q = random_quat(rng, 7);
        if (q.is_zero()) continue;
        ck.check(mul(qp, q, inv(qp, q)).is_one() && mul(qp, inv(qp, q), q).is_one(),
                 "herstein: two-sided inverses");
    }

    // Conjugate-power identity and the branch probe.
    for (std::uint32_t m = 1; m <= 5; ++m) {
        const std::uint32_t pairs = cfg.loop(100);
        for (std::uint32_t t = 0; t < pairs; ++t) {
            QuatElem a = random_quat(rng, 5);
            QuatElem b = random_quat(rng, 5);
            while (a.is_zero() || a.is_one() || (a + b).is_zero() ||
                   (b + QuatElem(1)).is_zero()) {
                a = random_quat(rng, 5);
                b = random_quat(rng, 5);
            }
            ck.check(conjugate_power_identity_check(qp, a, b, m),
                     "herstein: conjugate-power identity");
            bool probe_ok = true;
            try {
                (void)conclusion_probe(qp, a, b, m);
            } catch (const Error&) {
                probe_ok = false;
            }
            ck.check(probe_ok, "herstein: branch probe verifies its branch");
        }
    }

    // Exponent transport under constructed hypotheses.
    for (std::uint32_t t = 0; t < cfg.loop(100); ++t) {
        // A pure quaternion squares to a rational, hence commutes with
        // everything at exponent 2.
        QuatElem a(Rational(0), rng.rational_or_zero(5, 3), rng.rational_or_zero(5, 3),
                   rng.rational_or_zero(5, 3));
        if (a.is_zero()) a = QuatElem::u();
        QuatElem x = random_invertible_quat(rng, qp, 5);
        QuatElem y = random_invertible_quat(rng, qp, 5);
        ck.check(exponent_transport_check(qp, a, x, y, 2, 2),
                 "herstein: exponent transport with central squares");
    }
    for (std::uint32_t t = 0; t < cfg.loop(30); ++t) {
        QuatElem a(rng.rational_or_zero(5, 3));  // central element
        QuatElem x = random_invertible_quat(rng, qp, 5);
        QuatElem y = random_invertible_quat(rng, qp, 5);
        ck.check(exponent_transport_check(qp, a, x, y, 1, 1),
                 "herstein: exponent transport with central base");
    }
    ck.check_throws([&] { exponent_transport_check(qp, QuatElem::u(), QuatElem::v(),
                                                   QuatElem::uv(), 1, 2); },
                    "herstein: violated hypotheses must be rejected");

    // Radical exponents: minimality and the pinned values.
    for (std::uint32_t t = 0; t < cfg.loop(60); ++t) {
        QuatElem q = random_quat(rng, 3);
        Subring k = t % 3 == 0 ? Subring::Rationals
                               : (t % 3 == 1 ? Subring::QAdjoinU : Subring::QAdjoinV);
        auto res = radical_exponent(qp, q, k, 12);
        bool ok = true;
        QuatElem acc(1);
        for (std::uint32_t e = 1; e <= 12; ++e) {
            acc = mul(qp, acc, q);
            bool member = in_subring(acc, k);
            if (res && e < *res && member) ok = false;        // not minimal
            if (res && e == *res && !member) ok = false;      // wrong exponent
            if (!res && member) ok = false;                   // missed one
        }
        ck.check(ok, "herstein: radical exponent is the minimal one");
    }
    ck.check(radical_exponent(qp, QuatElem::u(), Subring::Rationals, 4) ==
                 std::optional<std::uint32_t>(2),
             "herstein: u squares into the rationals");
    ck.check(radical_exponent(qp, QuatElem(1) + QuatElem::u(), Subring::Rationals, 20) ==
                 std::optional<std::uint32_t>(4),
             "herstein: 1 + u reaches the rationals at the fourth power");
    ck.check(!radical_exponent(qp, QuatElem(1) + QuatElem::u() + QuatElem::v(),
                               Subring::Rationals, 60)
                  .has_value(),
             "herstein: 1 + u + v never reaches the rationals");
    ck.check(radical_exponent(qp, QuatElem(Rational(7) / 3), Subring::QAdjoinV, 5) ==
                 std::optional<std::uint32_t>(1),
             "herstein: rationals are radical at exponent 1");

    // Dimension-4 commutator-norm sanity through the finite algebra.
    {
        AlgebraParams p(1, {Rational(-1)}, {Rational(-1)});
        for (std::uint32_t t = 0; t < cfg.loop(20); ++t) {
            QuatElem g = random_invertible_quat(rng, qp, 5);
            QuatElem h = random_invertible_quat(rng, qp, 5);
            AlgebraElem ga({g[0], g[1], g[2], g[3]});
            AlgebraElem ha({h[0], h[1], h[2], h[3]});
            ck.check(norm(p, commutator(p, ga, ha)) == 1,
                     "herstein: commutator norms are 1 in the 4-dimensional model");
            QuatElem cq = mul(qp, mul(qp, mul(qp, g, h), inv(qp, g)), inv(qp, h));
            AlgebraElem ca = commutator(p, ga, ha);
            ck.check(ca == AlgebraElem({cq[0], cq[1], cq[2], cq[3]}),
                     "herstein: quaternion and algebra commutators agree");
        }
    }

    return r;
}

// ---------------------------------------------------------------------------
inline std::vector<std::string> all_suite_names() {
    return {"field", "order", "series", "center", "gamma", "algebra", "herstein"};
}

inline SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r;
    if (name == "field")
        r = run_field_suite(cfg);
    else if (name == "order")
        r = run_order_suite(cfg);
    else if (name == "series")
        r = run_series_suite(cfg);
    else if (name == "center")
        r = run_center_suite(cfg);
    else if (name == "gamma")
        r = run_gamma_suite(cfg);
    else if (name == "algebra")
        r = run_algebra_suite(cfg);
    else if (name == "herstein")
        r = run_herstein_suite(cfg);
    else
        throw UsageError("unknown suite '" + name + "'");
    auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

}  // namespace mnforge
