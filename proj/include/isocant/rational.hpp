#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>

#include "isocant/error.hpp"

namespace isocant {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return numerator(q); }
inline BigInt den(const Rational& q) { return denominator(q); }

// "p/q", with "/q" omitted when the value is an integer.
inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

inline std::string to_string(const BigInt& n) { return n.str(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

namespace detail {

inline BigInt parse_integer(const std::string& s) {
    if (s.empty()) throw BadParams("empty integer literal");
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw BadParams("bare sign is not a number: '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw BadParams("bad digit in integer literal: '" + s + "'");
    return BigInt(s);
}

} // namespace detail

// Accepts "p", "p/q" and plain decimals such as "-1.25".
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt p = detail::parse_integer(text.substr(0, slash));
        BigInt q = detail::parse_integer(text.substr(slash + 1));
        if (q == 0) throw BadParams("zero denominator: '" + text + "'");
        return Rational(p, q);
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string head = text.substr(0, dot);
        std::string tail = text.substr(dot + 1);
        bool negative = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) head.erase(0, 1);
        if (head.empty() && tail.empty())
            throw BadParams("no digits in number: '" + text + "'");
        BigInt whole = head.empty() ? BigInt(0) : detail::parse_integer(head);
        BigInt frac = tail.empty() ? BigInt(0) : detail::parse_integer(tail);
        if (frac < 0) throw BadParams("bad decimal literal: '" + text + "'");
        BigInt scale = 1;
        for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
        Rational value = Rational(whole) + Rational(frac, scale);
        return negative ? -value : value;
    }
    return Rational(detail::parse_integer(text));
}

inline Rational rational_pow(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0) throw BadParams("0 has no negative power");
        return rational_pow(Rational(1) / q, -e);
    }
    Rational result = 1;
    Rational base = q;
    for (unsigned long k = static_cast<unsigned long>(e); k != 0; k >>= 1) {
        if (k & 1) result *= base;
        base *= base;
    }
    return result;
}

} // namespace isocant
