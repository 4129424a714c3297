#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "mnforge/errors.hpp"
#include "mnforge/rational.hpp"

namespace mnforge {

// Parameters of the rational quaternion algebra (a, b / Q): generators u, v
// with u^2 = a, v^2 = b, vu = -uv.  The default (-1, -1) gives the Hamilton
// quaternions over Q, a division ring.
struct QuatParams {
    Rational a = -1;
    Rational b = -1;

    bool operator==(const QuatParams&) const = default;
};

// Element x0 + x1 u + x2 v + x3 uv.
class QuatElem {
  public:
    QuatElem() : c_{Rational(0), Rational(0), Rational(0), Rational(0)} {}

    QuatElem(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    QuatElem(int n) : QuatElem(Rational(n), 0, 0, 0) {}
    QuatElem(const Rational& r) : QuatElem(r, 0, 0, 0) {}

    static QuatElem u() { return QuatElem(0, 1, 0, 0); }
    static QuatElem v() { return QuatElem(0, 0, 1, 0); }
    static QuatElem uv() { return QuatElem(0, 0, 0, 1); }

    const Rational& operator[](std::size_t i) const { return c_[i]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_one() const { return c_[0] == 1 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    QuatElem conjugate() const { return QuatElem(c_[0], -c_[1], -c_[2], -c_[3]); }

    friend QuatElem operator+(const QuatElem& x, const QuatElem& y) {
        return QuatElem(x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2],
                        x.c_[3] + y.c_[3]);
    }

    friend QuatElem operator-(const QuatElem& x, const QuatElem& y) {
        return QuatElem(x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2],
                        x.c_[3] - y.c_[3]);
    }

    friend QuatElem operator-(const QuatElem& x) {
        return QuatElem(-x.c_[0], -x.c_[1], -x.c_[2], -x.c_[3]);
    }

    friend QuatElem operator*(const Rational& s, const QuatElem& x) {
        return QuatElem(s * x.c_[0], s * x.c_[1], s * x.c_[2], s * x.c_[3]);
    }

    bool operator==(const QuatElem&) const = default;

  private:
    std::array<Rational, 4> c_;
};

inline QuatElem mul(const QuatParams& p, const QuatElem& x, const QuatElem& y) {
    const Rational &a = p.a, &b = p.b;
    return QuatElem(
        x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - a * b * x[3] * y[3],
        x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2],
        x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1],
        x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]);
}

// Multiplicative quadratic form: x * conj(x) = norm(x) * 1.
inline Rational quat_norm(const QuatParams& p, const QuatElem& x) {
    return x[0] * x[0] - p.a * x[1] * x[1] - p.b * x[2] * x[2] + p.a * p.b * x[3] * x[3];
}

inline bool is_invertible(const QuatParams& p, const QuatElem& x) {
    return quat_norm(p, x) != 0;
}

inline QuatElem inv(const QuatParams& p, const QuatElem& x) {
    Rational n = quat_norm(p, x);
    if (n == 0) throw SingularElement("quaternion with zero norm has no inverse");
    return (Rational(1) / n) * x.conjugate();
}

inline QuatElem pow(const QuatParams& p, const QuatElem& x, std::uint32_t k) {
    QuatElem acc(1);
    for (std::uint32_t i = 0; i < k; ++i) acc = mul(p, acc, x);
    return acc;
}

inline QuatElem conjugate_by(const QuatParams& p, const QuatElem& g, const QuatElem& x) {
    return mul(p, mul(p, g, x), inv(p, g));
}

inline std::string to_string(const QuatElem& x) {
    return to_string(x[0]) + "," + to_string(x[1]) + "," + to_string(x[2]) + "," +
           to_string(x[3]);
}

}  // namespace mnforge
