#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "mnforge/index_set.hpp"
#include "mnforge/primes.hpp"
#include "mnforge/rational.hpp"

namespace mnforge {

// Element of the multiquadratic field Q(sqrt(p_1), sqrt(p_2), ...): a finite
// rational combination of square-free radical monomials, keyed by the set of
// indices under the root.  The empty mask is the rational part.  Zero
// coefficients are never stored, so equality is map equality.
class FieldElem {
  public:
    FieldElem() = default;

    FieldElem(const Rational& r) {
        if (r != 0) terms_.emplace(RadicalMask{}, r);
    }

    FieldElem(int n) : FieldElem(Rational(n)) {}

    static FieldElem radical(std::uint32_t i) { return term(1, IndexSet::single(i)); }

    static FieldElem term(const Rational& c, RadicalMask mask) {
        FieldElem out;
        if (c != 0) terms_insert(out, std::move(mask), c);
        return out;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return is_rational() && rational_part() == 1; }

    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    // Coefficient of the empty mask (0 when absent).
    Rational rational_part() const {
        auto it = terms_.find(RadicalMask{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coeff(const RadicalMask& mask) const {
        auto it = terms_.find(mask);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Largest radical index in any mask; 0 for rational elements.
    std::uint32_t level() const {
        std::uint32_t m = 0;
        for (const auto& [mask, c] : terms_) m = std::max(m, mask.max_index());
        return m;
    }

    const std::map<RadicalMask, Rational>& terms() const { return terms_; }

    FieldElem& operator+=(const FieldElem& o) {
        for (const auto& [mask, c] : o.terms_) add_term(mask, c);
        return *this;
    }

    FieldElem& operator-=(const FieldElem& o) {
        for (const auto& [mask, c] : o.terms_) add_term(mask, -c);
        return *this;
    }

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }

    friend FieldElem operator-(const FieldElem& a) {
        FieldElem out;
        for (const auto& [mask, c] : a.terms_) out.terms_.emplace(mask, -c);
        return out;
    }

    friend FieldElem operator*(const Rational& s, const FieldElem& a) {
        FieldElem out;
        if (s == 0) return out;
        for (const auto& [mask, c] : a.terms_) out.terms_.emplace(mask, s * c);
        return out;
    }

    bool operator==(const FieldElem&) const = default;

    void add_term(const RadicalMask& mask, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(mask, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

  private:
    static void terms_insert(FieldElem& e, RadicalMask mask, const Rational& c) {
        e.terms_.emplace(std::move(mask), c);
    }

    std::map<RadicalMask, Rational> terms_;
};

// Product in K: masks combine by symmetric difference, and each shared index
// contributes a factor p_i from sqrt(p_i)^2 = p_i.
inline FieldElem mul(const PrimeTable& tab, const FieldElem& a, const FieldElem& b) {
    FieldElem out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Rational c = ca * cb;
            for (std::uint32_t i : intersection(ma, mb)) c *= tab.prime(i);
            out.add_term(sym_diff(ma, mb), c);
        }
    }
    return out;
}

// Automorphism determined by a parity set: each term flips sign once per
// index shared between its mask and the set.  Involutive, and commuting
// across different parity sets.
inline FieldElem apply_auto(const FieldElem& a, const Parity& flip) {
    FieldElem out;
    for (const auto& [mask, c] : a.terms())
        out.add_term(mask, shared_count(mask, flip) % 2 == 0 ? c : -c);
    return out;
}

// Inverse by conjugation descent on the top radical: splitting
// a = u + v*sqrt(p_m) at the largest index m gives
// a^-1 = (u - v*sqrt(p_m)) * (u^2 - v^2 p_m)^-1, and the norm on the right
// lives one level down, so the recursion reaches Q in level(a) steps.
inline FieldElem inv(const PrimeTable& tab, const FieldElem& a) {
    if (a.is_zero()) throw ZeroInversion();
    if (a.is_rational()) return FieldElem(Rational(1) / a.rational_part());
    std::uint32_t m = a.level();
    FieldElem u, v;
    for (const auto& [mask, c] : a.terms()) {
        if (mask.contains(m))
            v.add_term(sym_diff(mask, IndexSet::single(m)), c);
        else
            u.add_term(mask, c);
    }
    FieldElem norm = mul(tab, u, u) - Rational(tab.prime(m)) * mul(tab, v, v);
    FieldElem conj = u - mul(tab, v, FieldElem::radical(m));
    return mul(tab, conj, inv(tab, norm));
}

inline std::string to_string(const RadicalMask& mask) {
    std::string out;
    for (std::uint32_t i : mask) {
        if (!out.empty()) out += "*";
        out += "s" + std::to_string(i);
    }
    return out;
}

// Canonical text: terms in mask order, e.g. "3 - 5*s1" or "5/6*s3".
inline std::string to_string(const FieldElem& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [mask, c] : a.terms()) {
        Rational shown = c;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                shown = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) shown = -c;
        }
        out += to_string(shown);
        if (!mask.empty()) out += "*" + to_string(mask);
    }
    return out;
}

}  // namespace mnforge
