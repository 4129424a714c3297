#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "mnforge/algebra.hpp"
#include "mnforge/field.hpp"
#include "mnforge/group.hpp"
#include "mnforge/quaternion.hpp"
#include "mnforge/series.hpp"

namespace mnforge {

// Deterministic random source.  Draws come straight from mt19937_64 (whose
// output sequence the standard pins down exactly) reduced by modulo, never
// through std::uniform_int_distribution, whose mapping varies across
// standard libraries.  Identical seeds therefore give identical streams on
// every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform-enough draw in [0, n); n must be positive.  The modulo bias is
    // irrelevant here: draws only shape test data.
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    // Nonzero rational with numerator in [-bound, bound] and denominator in
    // [1, den_bound].
    Rational rational(std::int64_t bound, std::int64_t den_bound) {
        std::int64_t num = int_in(-bound, bound);
        if (num == 0) num = 1;
        return Rational(num) / Rational(int_in(1, den_bound));
    }

    Rational rational_or_zero(std::int64_t bound, std::int64_t den_bound) {
        std::int64_t num = int_in(-bound, bound);
        return Rational(num) / Rational(int_in(1, den_bound));
    }

  private:
    std::mt19937_64 eng_;
};

// Per-suite seed derivation: FNV-1a of the suite name folded into the base
// seed, so suites draw independent but reproducible streams.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view label) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h ^ (base * 0x9e3779b97f4a7c15ull);
}

inline RadicalMask random_mask(Rng& rng, std::uint32_t level) {
    std::vector<std::uint32_t> idx;
    for (std::uint32_t i = 1; i <= level; ++i)
        if (rng.chance(1, 2)) idx.push_back(i);
    return RadicalMask(std::move(idx));
}

inline FieldElem random_field_elem(Rng& rng, std::uint32_t level, std::uint32_t max_terms,
                                   std::int64_t bound) {
    FieldElem out;
    std::uint64_t terms = rng.below(max_terms) + 1;
    for (std::uint64_t t = 0; t < terms; ++t)
        out.add_term(random_mask(rng, level), rng.rational_or_zero(bound, 4));
    return out;
}

inline FieldElem random_nonzero_field_elem(Rng& rng, std::uint32_t level,
                                           std::uint32_t max_terms, std::int64_t bound) {
    for (;;) {
        FieldElem e = random_field_elem(rng, level, max_terms, bound);
        if (!e.is_zero()) return e;
    }
}

inline GroupWord random_word(Rng& rng, std::uint32_t max_index, std::int64_t max_exp) {
    GroupWord w;
    for (std::uint32_t i = 1; i <= max_index; ++i) {
        if (rng.chance(1, 2)) continue;
        std::int64_t e = rng.int_in(-max_exp, max_exp);
        w = w * GroupWord::generator(i, e);
    }
    return w;
}

// Generic random exact series: up to max_support terms over words and
// coefficients bounded by the given level.
inline Series random_series(Rng& rng, std::uint32_t level, std::uint32_t max_support,
                            std::int64_t max_exp, std::int64_t bound) {
    Series out;
    std::uint64_t terms = rng.below(max_support) + 1;
    for (std::uint64_t t = 0; t < terms; ++t)
        out.add_term(random_word(rng, level, max_exp),
                     random_field_elem(rng, level, 2, bound));
    return out;
}

inline Series random_nonzero_series(Rng& rng, std::uint32_t level, std::uint32_t max_support,
                                    std::int64_t max_exp, std::int64_t bound) {
    for (;;) {
        Series s = random_series(rng, level, max_support, max_exp, bound);
        if (!s.is_zero()) return s;
    }
}

// A series that is central by construction: all-even words, rational
// coefficients.
inline Series random_central_series(Rng& rng, std::uint32_t level, std::uint32_t max_support,
                                    std::int64_t max_exp, std::int64_t bound) {
    Series out;
    std::uint64_t terms = rng.below(max_support) + 1;
    for (std::uint64_t t = 0; t < terms; ++t) {
        GroupWord w = random_word(rng, level, max_exp);
        out.add_term(w * w, FieldElem(rng.rational_or_zero(bound, 4)));
    }
    return out;
}

inline AlgebraElem random_algebra_elem(Rng& rng, const AlgebraParams& p, std::int64_t bound) {
    std::vector<Rational> coords;
    coords.reserve(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i)
        coords.push_back(Rational(rng.int_in(-bound, bound)));
    return AlgebraElem(std::move(coords));
}

inline AlgebraElem random_invertible_algebra_elem(Rng& rng, const AlgebraParams& p,
                                                  std::int64_t bound) {
    for (;;) {
        AlgebraElem x = random_algebra_elem(rng, p, bound);
        if (norm(p, x) != 0) return x;
    }
}

inline QuatElem random_quat(Rng& rng, std::int64_t bound) {
    return QuatElem(rng.rational_or_zero(bound, 3), rng.rational_or_zero(bound, 3),
                    rng.rational_or_zero(bound, 3), rng.rational_or_zero(bound, 3));
}

inline QuatElem random_invertible_quat(Rng& rng, const QuatParams& p, std::int64_t bound) {
    for (;;) {
        QuatElem q = random_quat(rng, bound);
        if (is_invertible(p, q)) return q;
    }
}

}  // namespace mnforge
