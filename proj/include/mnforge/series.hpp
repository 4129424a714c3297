#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mnforge/errors.hpp"
#include "mnforge/field.hpp"
#include "mnforge/group.hpp"
#include "mnforge/linalg.hpp"

namespace mnforge {

// Finitely supported element of the twisted group algebra K[G, Phi]:
// a map from group words to field coefficients, with the convolution
//
//   (sum a_x x)(sum b_y y) = sum_z ( sum_{xy=z} a_x Phi_x(b_y) ) z,
//
// where Phi_x acts on K by flipping the sign of sqrt(p_i) for each index i
// with odd exponent in x.  A value may carry a truncation tag: a depth d
// recording that it arose from a d-step partial inversion and equals the true
// inverse only up to high-order terms.  Exact values (no tag) are closed
// under the ring operations; any operation touching a truncated operand
// yields a truncated result tagged with the smallest depth involved.
class Series {
  public:
    Series() = default;

    Series(const FieldElem& c) {
        if (!c.is_zero()) terms_.emplace(GroupWord{}, c);
    }

    Series(int n) : Series(FieldElem(n)) {}

    static Series term(const FieldElem& c, const GroupWord& w) {
        Series out;
        if (!c.is_zero()) out.terms_.emplace(w, c);
        return out;
    }

    static Series from_word(const GroupWord& w) { return term(FieldElem(1), w); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_identity() &&
               terms_.begin()->second.is_one();
    }
    bool is_monomial() const { return terms_.size() == 1; }

    bool is_exact() const { return !trunc_.has_value(); }
    std::optional<std::uint32_t> truncation() const { return trunc_; }

    Series tagged(std::uint32_t depth) const {
        Series out = *this;
        out.trunc_ = out.trunc_ ? std::min(*out.trunc_, depth) : depth;
        return out;
    }

    const std::map<GroupWord, FieldElem>& terms() const { return terms_; }

    FieldElem coeff(const GroupWord& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? FieldElem() : it->second;
    }

    std::size_t support_size() const { return terms_.size(); }

    // Order-minimal element of the support.
    const GroupWord& min_word() const {
        if (terms_.empty()) throw BadArguments("min_word of the zero series");
        return terms_.begin()->first;
    }

    // Largest index appearing in any support word or coefficient mask.
    std::uint32_t window() const {
        std::uint32_t w = 0;
        for (const auto& [word, c] : terms_) {
            w = std::max(w, word.max_index());
            w = std::max(w, c.level());
        }
        return w;
    }

    void add_term(const GroupWord& w, const FieldElem& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Series& operator+=(const Series& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        merge_tag(o.trunc_);
        return *this;
    }

    Series& operator-=(const Series& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        merge_tag(o.trunc_);
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

    friend Series operator-(const Series& a) {
        Series out;
        out.trunc_ = a.trunc_;
        for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, -c);
        return out;
    }

    // Exact values compare by terms; truncated values compare by terms only
    // when their depth tags agree.  Comparing exact against truncated is a
    // category error in a test, so it throws rather than answering.
    friend bool operator==(const Series& a, const Series& b) {
        if (a.trunc_.has_value() != b.trunc_.has_value())
            throw TruncatedInput("equality between exact and truncated series");
        if (a.trunc_ && b.trunc_ && *a.trunc_ != *b.trunc_) return false;
        return a.terms_ == b.terms_;
    }

  private:
    void merge_tag(const std::optional<std::uint32_t>& other) {
        if (!other) return;
        trunc_ = trunc_ ? std::min(*trunc_, *other) : *other;
    }

    std::map<GroupWord, FieldElem> terms_;
    std::optional<std::uint32_t> trunc_;
};

// Twisted convolution.  The coefficient passing the word x picks up the
// automorphism attached to x's parity: xa = Phi_x(a) x.
inline Series mul(const PrimeTable& tab, const Series& a, const Series& b) {
    Series out;
    if (!a.is_exact()) out = out.tagged(*a.truncation());
    if (!b.is_exact()) out = out.tagged(*b.truncation());
    for (const auto& [x, ax] : a.terms()) {
        const Parity flip = x.odd_indices();
        for (const auto& [y, by] : b.terms())
            out.add_term(x * y, mul(tab, ax, apply_auto(by, flip)));
    }
    return out;
}

inline Series mul(const PrimeTable& tab, const FieldElem& c, const Series& a) {
    return mul(tab, Series(c), a);
}

inline Series pow(const PrimeTable& tab, const Series& a, std::uint32_t n) {
    Series acc(1);
    for (std::uint32_t k = 0; k < n; ++k) acc = mul(tab, acc, a);
    return acc;
}

// Exact inverse of a single-term series c*x: Phi_x(c^-1) * x^-1.
inline Series monomial_inverse(const PrimeTable& tab, const FieldElem& c, const GroupWord& x) {
    return Series::term(apply_auto(inv(tab, c), x.odd_indices()), x.inverse());
}

// Partial Neumann inversion.  Writing a = a0*x0*(1 + eps) with x0 the
// order-minimal support element, returns
//
//   (sum_{k=0}^{depth} (-eps)^k) * (a0 x0)^-1,
//
// exact when eps = 0 (single term) and tagged with `depth` otherwise.
// Contract: mul(a, result) = 1 + rho where every element of supp(rho) is
// >= (min supp eps)^(depth+1) in the group order.
inline Series inverse(const PrimeTable& tab, const Series& a, std::uint32_t depth) {
    if (a.is_zero()) throw ZeroInversion("inversion of the zero series");
    const GroupWord& x0 = a.min_word();
    Series lead_inv = monomial_inverse(tab, a.coeff(x0), x0);
    if (a.is_monomial()) return lead_inv;
    Series neg_eps = Series(1) - mul(tab, lead_inv, a);
    Series sum(1);
    Series power(1);
    for (std::uint32_t k = 1; k <= depth; ++k) {
        power = mul(tab, power, neg_eps);
        sum += power;
    }
    return mul(tab, sum, lead_inv).tagged(depth);
}

// u a u^-1, with u's inverse taken at the given depth (exact when u is a
// single term).
inline Series conjugate(const PrimeTable& tab, const Series& a, const Series& u,
                        std::uint32_t depth) {
    return mul(tab, mul(tab, u, a), inverse(tab, u, depth));
}

// a b a^-1 b^-1, inverses at the given depth (exact when both operands are
// single terms).
inline Series commutator(const PrimeTable& tab, const Series& a, const Series& b,
                         std::uint32_t depth) {
    return mul(tab, mul(tab, mul(tab, a, b), inverse(tab, a, depth)), inverse(tab, b, depth));
}

// Centrality is a support condition: every word must lie in the subgroup of
// squares (all exponents even, so the attached automorphism is trivial) and
// every coefficient must be rational (fixed by every automorphism).
inline bool is_central(const Series& a) {
    if (!a.is_exact()) throw TruncatedInput("centrality of a truncated series");
    for (const auto& [w, c] : a.terms())
        if (!w.all_even() || !c.is_rational()) return false;
    return true;
}

// Independent centrality decision: check commutation against sqrt(p_i) and
// x_i for every index i up to the window of a.  Indices beyond the window
// commute automatically, so this test decides centrality.
inline bool commutation_window_test(const PrimeTable& tab, const Series& a) {
    if (!a.is_exact()) throw TruncatedInput("commutation test on a truncated series");
    std::uint32_t w = a.window();
    for (std::uint32_t i = 1; i <= w; ++i) {
        Series s = Series(FieldElem::radical(i));
        Series x = Series::from_word(GroupWord::generator(i));
        if (!(mul(tab, s, a) == mul(tab, a, s))) return false;
        if (!(mul(tab, x, a) == mul(tab, a, x))) return false;
    }
    return true;
}

// gamma truncated at N terms: x1^-1 + x2^-1 + ... + xN^-1.
inline Series gamma_series(std::uint32_t N) {
    if (N == 0) throw BadArguments("gamma truncation length must be positive");
    Series out;
    for (std::uint32_t i = 1; i <= N; ++i)
        out.add_term(GroupWord::generator(i, -1), FieldElem(1));
    return out;
}

// Coefficient of X = x1^-1 x2^-1 ... xn^-1 in gamma_N^n, asserting on the way
// up that X is absent from every lower power.  The value is n!: each of the
// n! orderings of the factors contributes once, and the twisting is trivial
// on rational coefficients.
inline Rational gamma_coefficient_witness(const PrimeTable& tab, std::uint32_t N,
                                          std::uint32_t n) {
    if (n == 0 || N == 0 || n > N) throw BadArguments("witness needs 1 <= n <= N");
    GroupWord X;
    for (std::uint32_t i = 1; i <= n; ++i) X = X * GroupWord::generator(i, -1);
    const Series g = gamma_series(N);
    Series power(1);
    for (std::uint32_t k = 1; k <= n; ++k) {
        power = mul(tab, power, g);
        FieldElem c = power.coeff(X);
        if (k < n) {
            if (!c.is_zero())
                throw BadArguments("witness word appeared below the target degree");
        } else {
            if (!c.is_rational())
                throw BadArguments("witness coefficient is not rational");
            return c.rational_part();
        }
    }
    throw BadArguments("unreachable");
}

// Rank of the matrix whose rows are the monomial-coefficient vectors of
// 1, gamma_N, ..., gamma_N^n over the union of their supports (all
// coefficients are rational).  Rank n+1 certifies Q-linear independence of
// the truncated powers.
inline std::size_t gamma_independence_probe(const PrimeTable& tab, std::uint32_t N,
                                            std::uint32_t n) {
    if (N == 0 || n > N) throw BadArguments("probe needs 0 <= n <= N");
    const Series g = gamma_series(N);
    std::vector<Series> powers;
    powers.push_back(Series(1));
    for (std::uint32_t k = 1; k <= n; ++k) powers.push_back(mul(tab, powers.back(), g));

    std::map<GroupWord, std::size_t> columns;
    for (const Series& p : powers)
        for (const auto& [w, c] : p.terms()) columns.emplace(w, 0);
    std::size_t idx = 0;
    for (auto& [w, col] : columns) col = idx++;

    RationalMatrix m(powers.size(), columns.size());
    for (std::size_t r = 0; r < powers.size(); ++r)
        for (const auto& [w, c] : powers[r].terms()) {
            if (!c.is_rational()) throw BadArguments("gamma power with irrational coefficient");
            m.at(r, columns.at(w)) = c.rational_part();
        }
    return rank(std::move(m));
}

// Canonical text: terms in increasing word order, each "<coeff>*<word>" with
// single-term coefficients inlined (sign pulled into the join) and compound
// coefficients parenthesized.  Examples: "1*x1^-1 + 1*x2^-1", "-2*x1",
// "(3 - 5*s1)*e".
inline std::string to_string(const Series& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : a.terms()) {
        bool compound = c.terms().size() > 1;
        if (compound) {
            if (!out.empty()) out += " + ";
            out += "(" + to_string(c) + ")*" + to_string(w);
        } else {
            const auto& [mask, q] = *c.terms().begin();
            Rational shown = q;
            if (out.empty()) {
                if (q < 0) {
                    out += "-";
                    shown = -q;
                }
            } else {
                out += q < 0 ? " - " : " + ";
                if (q < 0) shown = -q;
            }
            out += to_string(shown);
            if (!mask.empty()) out += "*" + to_string(mask);
            out += "*" + to_string(w);
        }
    }
    return out;
}

}  // namespace mnforge
