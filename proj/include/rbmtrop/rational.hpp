/**
 * Exact scalar types and their text form.
 *
 * Every number that reaches a verdict in this library is a GMP rational;
 * nothing is ever rounded.  Text form is always `p/q` (integers render as
 * `p/1`) so files and JSON round-trip bit-exactly.
 */
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace rbmtrop {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using RationalVector = std::vector<Rational>;

inline std::string to_string(const Rational& r)
{
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

/// Parses `p/q` or a bare integer `p`.  Throws std::invalid_argument.
inline Rational parse_rational(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto as_int = [](std::string_view s) {
        if (s[0] == '+') s.remove_prefix(1);
        return Integer(std::string(s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_int(text))
            throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
        return Rational(as_int(text));
    }
    auto num = trim(text.substr(0, slash));
    auto den = trim(text.substr(slash + 1));
    if (!valid_int(num) || !valid_int(den))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    Integer d = as_int(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(as_int(num)) / Rational(d);
}

inline int sign(const Rational& r) { return r.sign(); }

inline Integer pow2(unsigned e)
{
    Integer z = 1;
    z <<= e;
    return z;
}

/// Uniform rational p/q with 1 <= |p|, q <= bound (sign included when allow_negative).
template <class Rng>
Rational random_rational(Rng& rng, int bound, bool allow_negative)
{
    std::uniform_int_distribution<int> num(allow_negative ? -bound : 1, bound);
    std::uniform_int_distribution<int> den(1, bound);
    int p = num(rng);
    if (allow_negative && p == 0) p = 1;
    return Rational(p, den(rng));
}

template <class Rng>
Rational random_positive_rational(Rng& rng, int bound = 20)
{
    return random_rational(rng, bound, false);
}

}  // namespace rbmtrop
