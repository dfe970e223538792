#pragma once

#include <array>
#include <string>

#include "oscsym/rational.hpp"

namespace oscsym {

/// Element of ℚ(𝕚, √2), stored as a + b√2 + (c + d√2)𝕚 with rational a,b,c,d.
/// Closed under ring operations; this is the smallest field containing every
/// coefficient of the explicit su_N generator images.
struct ExtScalar {
    Rational a{0}, b{0}, c{0}, d{0};

    ExtScalar() = default;
    ExtScalar(Rational a_, Rational b_ = Rational(0), Rational c_ = Rational(0),
              Rational d_ = Rational(0))
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
    ExtScalar(long v) : a(v) {}  // NOLINT(google-explicit-constructor)

    static ExtScalar sqrt2(const Rational& k) { return ExtScalar(0, k); }
    static ExtScalar imag(const Rational& k) { return ExtScalar(0, 0, k); }
    static ExtScalar imag_sqrt2(const Rational& k) { return ExtScalar(0, 0, 0, k); }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    bool is_real() const { return c == 0 && d == 0; }
    /// Plain rational (no √2, no 𝕚).
    bool is_rational() const { return b == 0 && c == 0 && d == 0; }

    ExtScalar conj() const { return ExtScalar(a, b, -c, -d); }

    friend bool operator==(const ExtScalar& x, const ExtScalar& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const ExtScalar& x, const ExtScalar& y) { return !(x == y); }

    ExtScalar operator-() const { return ExtScalar(-a, -b, -c, -d); }

    ExtScalar& operator+=(const ExtScalar& o) {
        a += o.a; b += o.b; c += o.c; d += o.d;
        return *this;
    }
    ExtScalar& operator-=(const ExtScalar& o) {
        a -= o.a; b -= o.b; c -= o.c; d -= o.d;
        return *this;
    }
    friend ExtScalar operator+(ExtScalar x, const ExtScalar& y) { return x += y; }
    friend ExtScalar operator-(ExtScalar x, const ExtScalar& y) { return x -= y; }

    friend ExtScalar operator*(const ExtScalar& x, const ExtScalar& y) {
        // (re_x + i im_x)(re_y + i im_y) with re/im in Q(sqrt2) as (p, q) = p + q sqrt2.
        auto mul2 = [](const Rational& p1, const Rational& q1, const Rational& p2,
                       const Rational& q2) {
            return std::array<Rational, 2>{p1 * p2 + 2 * q1 * q2, p1 * q2 + q1 * p2};
        };
        auto rr = mul2(x.a, x.b, y.a, y.b);
        auto ii = mul2(x.c, x.d, y.c, y.d);
        auto ri = mul2(x.a, x.b, y.c, y.d);
        auto ir = mul2(x.c, x.d, y.a, y.b);
        return ExtScalar(rr[0] - ii[0], rr[1] - ii[1], ri[0] + ir[0], ri[1] + ir[1]);
    }
    ExtScalar& operator*=(const ExtScalar& o) { return *this = *this * o; }

    friend ExtScalar operator*(const Rational& k, const ExtScalar& x) {
        return ExtScalar(k * x.a, k * x.b, k * x.c, k * x.d);
    }

    std::array<Rational, 4> components() const { return {a, b, c, d}; }

    std::string str() const {
        auto term = [](const Rational& v, const char* unit, bool& first) -> std::string {
            if (v == 0) return "";
            std::string s = to_fraction_string(v);
            if (!first && s[0] != '-') s = "+" + s;
            first = false;
            return s + unit;
        };
        bool first = true;
        std::string out = term(a, "", first) + term(b, "*sqrt2", first) + term(c, "*i", first) +
                          term(d, "*i*sqrt2", first);
        return out.empty() ? "0" : out;
    }
};

}  // namespace oscsym
