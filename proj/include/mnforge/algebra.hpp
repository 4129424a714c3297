#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mnforge/errors.hpp"
#include "mnforge/linalg.hpp"
#include "mnforge/primes.hpp"
#include "mnforge/rational.hpp"
#include "mnforge/series.hpp"

namespace mnforge {

// Parameters of the 2^(2n)-dimensional Q-algebra A_n: a tensor product of n
// quaternion-type algebras with generators u_i, v_i subject to
//
//   u_i^2 = a_i,  v_i^2 = b_i,  v_i u_i = -u_i v_i,
//
// and all other generator pairs commuting.  A_n specializes the twisted
// series algebra: u_i plays sqrt(p_i) and v_i plays x_i, with the central
// squares pinned to rationals.
struct AlgebraParams {
    std::uint32_t n = 0;
    std::vector<Rational> a;  // u_i^2, one per factor, nonzero
    std::vector<Rational> b;  // v_i^2, one per factor, nonzero

    AlgebraParams() = default;

    AlgebraParams(std::uint32_t n_, std::vector<Rational> a_, std::vector<Rational> b_)
        : n(n_), a(std::move(a_)), b(std::move(b_)) {
        if (n > 15) throw BadArguments("algebra factor count too large");
        if (a.size() != n || b.size() != n)
            throw BadArguments("parameter lists must have one entry per factor");
        for (const Rational& q : a)
            if (q == 0) throw BadArguments("parameter a_i must be nonzero");
        for (const Rational& q : b)
            if (q == 0) throw BadArguments("parameter b_i must be nonzero");
    }

    // Default parameters at n factors: a_i = p_i from the table, b_i the next
    // n primes after them, so all 2n values are distinct primes.
    static AlgebraParams defaults(const PrimeTable& tab, std::uint32_t n_) {
        std::vector<Rational> a_, b_;
        for (std::uint32_t i = 1; i <= n_; ++i) a_.emplace_back(tab.prime(i));
        for (std::uint32_t i = n_ + 1; i <= 2 * n_; ++i) b_.emplace_back(tab.prime(i));
        return AlgebraParams(n_, std::move(a_), std::move(b_));
    }

    std::size_t dim() const { return std::size_t{1} << (2 * n); }

    bool operator==(const AlgebraParams&) const = default;
};

// Basis monomial u^eps * v^mu encoded as a linear index eps | (mu << n),
// little-endian in the factor index: bit i-1 of eps is the exponent of u_i,
// bit i-1 of mu the exponent of v_i.
struct BasisIndex {
    std::uint32_t eps = 0;
    std::uint32_t mu = 0;

    static BasisIndex from_linear(const AlgebraParams& p, std::size_t idx) {
        std::uint32_t low_mask = (1u << p.n) - 1;
        return {static_cast<std::uint32_t>(idx) & low_mask,
                (static_cast<std::uint32_t>(idx) >> p.n) & low_mask};
    }

    std::size_t linear(const AlgebraParams& p) const { return eps | (mu << p.n); }

    bool operator==(const BasisIndex&) const = default;
};

// Element of A_n: coordinate vector over the canonical monomial basis.
class AlgebraElem {
  public:
    AlgebraElem() = default;

    explicit AlgebraElem(std::vector<Rational> coords) : coords_(std::move(coords)) {}

    static AlgebraElem zero(const AlgebraParams& p) {
        return AlgebraElem(std::vector<Rational>(p.dim(), Rational(0)));
    }

    static AlgebraElem scalar(const AlgebraParams& p, const Rational& c) {
        AlgebraElem e = zero(p);
        e.coords_[0] = c;
        return e;
    }

    static AlgebraElem one(const AlgebraParams& p) { return scalar(p, 1); }

    static AlgebraElem basis(const AlgebraParams& p, BasisIndex idx) {
        AlgebraElem e = zero(p);
        e.coords_[idx.linear(p)] = 1;
        return e;
    }

    // Generator u_i (1-based factor index).
    static AlgebraElem u(const AlgebraParams& p, std::uint32_t i) {
        check_factor(p, i);
        return basis(p, {1u << (i - 1), 0});
    }

    // Generator v_i (1-based factor index).
    static AlgebraElem v(const AlgebraParams& p, std::uint32_t i) {
        check_factor(p, i);
        return basis(p, {0, 1u << (i - 1)});
    }

    const std::vector<Rational>& coords() const { return coords_; }
    std::size_t dim() const { return coords_.size(); }
    const Rational& coord(std::size_t idx) const { return coords_[idx]; }

    bool is_zero() const {
        for (const Rational& c : coords_)
            if (c != 0) return false;
        return true;
    }

    bool is_one() const {
        if (coords_.empty() || coords_[0] != 1) return false;
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0) return false;
        return true;
    }

    AlgebraElem& operator+=(const AlgebraElem& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }

    AlgebraElem& operator-=(const AlgebraElem& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }

    friend AlgebraElem operator+(AlgebraElem x, const AlgebraElem& y) { return x += y; }
    friend AlgebraElem operator-(AlgebraElem x, const AlgebraElem& y) { return x -= y; }

    friend AlgebraElem operator*(const Rational& s, AlgebraElem x) {
        for (Rational& c : x.coords_) c *= s;
        return x;
    }

    friend AlgebraElem operator-(AlgebraElem x) {
        for (Rational& c : x.coords_) c = -c;
        return x;
    }

    bool operator==(const AlgebraElem&) const = default;

  private:
    static void check_factor(const AlgebraParams& p, std::uint32_t i) {
        if (i == 0 || i > p.n) throw BadArguments("generator index out of range");
    }

    void require_same_dim(const AlgebraElem& o) const {
        if (coords_.size() != o.coords_.size())
            throw DimensionMismatch("algebra elements of different dimension");
    }

    std::vector<Rational> coords_;
};

namespace detail {

// Structure constants: the product of basis monomials (eps1, mu1)(eps2, mu2)
// lands on the XOR pattern, with one sign flip for every v_i on the left
// passing a u_i on the right, and a factor a_i / b_i per squared generator.
inline std::pair<std::size_t, Rational> basis_product(const AlgebraParams& p,
                                                      std::size_t left, std::size_t right) {
    BasisIndex l = BasisIndex::from_linear(p, left);
    BasisIndex r = BasisIndex::from_linear(p, right);
    Rational c = std::popcount(l.mu & r.eps) % 2 == 0 ? 1 : -1;
    for (std::uint32_t i = 0; i < p.n; ++i) {
        if ((l.eps >> i) & (r.eps >> i) & 1u) c *= p.a[i];
        if ((l.mu >> i) & (r.mu >> i) & 1u) c *= p.b[i];
    }
    return {BasisIndex{l.eps ^ r.eps, l.mu ^ r.mu}.linear(p), c};
}

}  // namespace detail

inline AlgebraElem mul(const AlgebraParams& p, const AlgebraElem& x, const AlgebraElem& y) {
    if (x.dim() != p.dim() || y.dim() != p.dim())
        throw DimensionMismatch("element dimension does not match parameters");
    std::vector<Rational> coords(p.dim(), Rational(0));
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (x.coord(i) == 0) continue;
        for (std::size_t j = 0; j < p.dim(); ++j) {
            if (y.coord(j) == 0) continue;
            auto [k, c] = detail::basis_product(p, i, j);
            coords[k] += x.coord(i) * c * y.coord(j);
        }
    }
    return AlgebraElem(std::move(coords));
}

inline AlgebraElem pow(const AlgebraParams& p, const AlgebraElem& x, std::uint32_t k) {
    AlgebraElem acc = AlgebraElem::one(p);
    for (std::uint32_t i = 0; i < k; ++i) acc = mul(p, acc, x);
    return acc;
}

// Matrix of left multiplication by x in the canonical basis.
inline RationalMatrix regular_matrix(const AlgebraParams& p, const AlgebraElem& x) {
    if (x.dim() != p.dim())
        throw DimensionMismatch("element dimension does not match parameters");
    RationalMatrix m(p.dim(), p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (x.coord(i) == 0) continue;
        for (std::size_t j = 0; j < p.dim(); ++j) {
            auto [k, c] = detail::basis_product(p, i, j);
            m.at(k, j) += x.coord(i) * c;
        }
    }
    return m;
}

// Regular norm: determinant of left multiplication.  Multiplicative, and
// c^(2^(2n)) on central scalars c.
inline Rational norm(const AlgebraParams& p, const AlgebraElem& x) {
    return determinant(regular_matrix(p, x));
}

inline AlgebraElem inv(const AlgebraParams& p, const AlgebraElem& x) {
    std::vector<Rational> e0(p.dim(), Rational(0));
    e0[0] = 1;
    auto sol = solve_unique(regular_matrix(p, x), std::move(e0));
    if (!sol) throw SingularElement("element has no inverse");
    return AlgebraElem(std::move(*sol));
}

inline AlgebraElem commutator(const AlgebraParams& p, const AlgebraElem& g,
                              const AlgebraElem& h) {
    return mul(p, mul(p, mul(p, g, h), inv(p, g)), inv(p, h));
}

// Dimension over Q of the centralizer {z : zg = gz for every generator g},
// via the nullity of the stacked system [L_g - R_g] over all 2n generators.
inline std::size_t centralizer_dimension(const AlgebraParams& p) {
    std::vector<AlgebraElem> gens;
    for (std::uint32_t i = 1; i <= p.n; ++i) {
        gens.push_back(AlgebraElem::u(p, i));
        gens.push_back(AlgebraElem::v(p, i));
    }
    RationalMatrix stacked(gens.size() * p.dim(), p.dim());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        // Row block g: (L_g - R_g) z, i.e. column j holds g*e_j - e_j*g.
        for (std::size_t j = 0; j < p.dim(); ++j) {
            AlgebraElem ej = AlgebraElem::basis(p, BasisIndex::from_linear(p, j));
            AlgebraElem d = mul(p, gens[g], ej) - mul(p, ej, gens[g]);
            for (std::size_t k = 0; k < p.dim(); ++k)
                stacked.at(g * p.dim() + k, j) = d.coord(k);
        }
    }
    return nullity(stacked);
}

// Smallest 1 <= k <= bound with x^k = 1, if any.
inline std::optional<std::uint32_t> torsion_order(const AlgebraParams& p, const AlgebraElem& x,
                                                  std::uint32_t bound) {
    AlgebraElem acc = AlgebraElem::one(p);
    for (std::uint32_t k = 1; k <= bound; ++k) {
        acc = mul(p, acc, x);
        if (acc.is_one()) return k;
    }
    return std::nullopt;
}

// Specialization bridge from the twisted series algebra: a term
// c * (radical monomial on mask eps) * (word with exponents n_i) maps to the
// basis monomial with the same eps and mu_i = n_i mod 2, scaled by
// prod b_i^(floor(n_i / 2)) from the central values x_i^2 = b_i.  Consistency
// with series multiplication requires a_i = p_i, since the field already
// reduces sqrt(p_i)^2 to p_i.
inline AlgebraElem specialize(const AlgebraParams& p, const PrimeTable& tab, const Series& s) {
    if (!s.is_exact()) throw TruncatedInput("specialization of a truncated series");
    for (std::uint32_t i = 1; i <= p.n; ++i)
        if (p.a[i - 1] != Rational(tab.prime(i)))
            throw BadArguments("specialization requires a_i to match the prime table");
    AlgebraElem out = AlgebraElem::zero(p);
    for (const auto& [word, coeff] : s.terms()) {
        if (word.max_index() > p.n)
            throw BadArguments("series word index exceeds the factor count");
        std::uint32_t mu = 0;
        Rational central(1);
        for (const auto& [i, e] : word.exponents()) {
            Int q = e >= 0 ? Int(e / 2) : Int((e - 1) / 2);  // floor division
            Int rem = e - 2 * q;
            if (rem != 0) mu |= 1u << (i - 1);
            central *= rational_pow(p.b[i - 1], q);
        }
        for (const auto& [mask, c] : coeff.terms()) {
            if (mask.max_index() > p.n)
                throw BadArguments("coefficient level exceeds the factor count");
            std::uint32_t eps = 0;
            for (std::uint32_t i : mask) eps |= 1u << (i - 1);
            out += (c * central) * AlgebraElem::basis(p, {eps, mu});
        }
    }
    return out;
}

// Canonical text for an element: coordinates joined by commas in basis order.
inline std::string to_string(const AlgebraElem& x) {
    std::string out;
    for (const Rational& c : x.coords()) {
        if (!out.empty()) out += ",";
        out += to_string(c);
    }
    return out;
}

}  // namespace mnforge
