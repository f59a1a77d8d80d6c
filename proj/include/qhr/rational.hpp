#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "qhr/errors.hpp"

namespace qhr {

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// "num/den", with the denominator always present ("-3/1", "0/1").
inline std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "p", "p/q" (q != 0); the result is canonicalised.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    Rational q;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            q = Rational(Integer(s), 1);
        } else {
            Integer num(s.substr(0, slash));
            Integer den(s.substr(slash + 1));
            if (den == 0) throw DomainError("zero denominator in '" + s + "'");
            q = Rational(num, den);
        }
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational '" + s + "'");
    }
    q.canonicalize();
    return q;
}

} // namespace qhr
