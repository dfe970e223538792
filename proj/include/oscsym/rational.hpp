#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oscsym {

/// Exact rational scalar. All library arithmetic is carried out in ℚ; GMP's
/// canonical mpq representation guarantees num/den are coprime with den > 0.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign_of(const Rational& r) { return sgn(r); }

inline Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// base^e for integer e (e may be negative if base != 0).
inline Rational pow_rat(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw std::domain_error("0^negative");
    Rational acc(1);
    Rational b = e > 0 ? base : Rational(1 / base);
    for (long k = 0, n = e > 0 ? e : -e; k < n; ++k) acc *= b;
    return acc;
}

/// Parses "a/b" or "a" (optionally signed). Throws on malformed input.
inline Rational rational_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::string t(s);
    Rational r;
    if (r.set_str(t, 10) != 0) throw std::invalid_argument("bad rational literal: " + t);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + t);
    r.canonicalize();
    return r;
}

/// "num/den", or just "num" for integers.
inline std::string to_fraction_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Fixed-point decimal with `digits` fractional digits, round half away from zero.
inline std::string to_decimal_string(const Rational& r, int digits) {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class num = r.get_num() * scale * 2 + (sgn(r) >= 0 ? r.get_den() : -r.get_den());
    mpz_class scaled = num / (2 * r.get_den());
    bool neg = scaled < 0;
    mpz_class mag = neg ? mpz_class(-scaled) : scaled;
    std::string s = mag.get_str();
    if (digits == 0) return (neg ? "-" : "") + s;
    if (static_cast<int>(s.size()) <= digits) s.insert(0, std::string(digits + 1 - s.size(), '0'));
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace oscsym
