#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "cskit/errors.hpp"

namespace cskit {

// Exact scalar types. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the invariant the rest of the
// library relies on. Floating point never appears anywhere downstream.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) {
    return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational& q) {
    return boost::multiprecision::denominator(q);
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Canonical form: "p/q", or just "p" when q = 1.
inline std::string to_string(const Rational& q) { return q.str(); }

inline std::string to_string(const Integer& n) { return n.str(); }

// Parses "p" or "p/q" with optional leading sign; anything else (notably
// decimal notation) is rejected so inexact values can never sneak in.
inline Rational parse_rational(const std::string& text) {
    auto fail = [&]() -> Rational {
        throw Error(errc::InvalidInput, "not a rational literal: '" + text + "'");
    };
    if (text.empty()) return fail();
    std::size_t pos = 0;
    auto scan_int = [&](bool sign_ok) {
        std::size_t start = pos;
        if (sign_ok && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            ++pos;
            ++digits;
        }
        if (digits == 0) fail();
        return text.substr(start, pos - start);
    };
    std::string num = scan_int(true);
    if (num[0] == '+') num.erase(0, 1);
    if (pos == text.size()) return Rational(Integer(num));
    if (text[pos] != '/') return fail();
    ++pos;
    std::string den = scan_int(false);
    if (pos != text.size()) return fail();
    Integer d(den);
    if (d == 0) throw Error(errc::InvalidInput, "zero denominator in '" + text + "'");
    return Rational(Integer(num), d);
}

inline Integer binomial(const Integer& n, const Integer& k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (Integer i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1; // exact: r is always a binomial coefficient here
    }
    return r;
}

// q^e for integer e (negative e inverts; q must be nonzero then).
inline Rational pow_int(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0) throw Error(errc::ParameterOutOfRange, "zero base with negative exponent");
        return Rational(1) / pow_int(q, -e);
    }
    Rational r = 1, b = q;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

} // namespace cskit
