/**
 * Exact arithmetic primitives shared by every module: arbitrary-precision
 * integers, rationals, and the handful of rounding / radical helpers the
 * chain calculus needs. No floating point is used anywhere.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace chaincal {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// floor(r) as an exact integer.
inline Int rat_floor(const Rat& r)
{
    Int n = rat_num(r), d = rat_den(r);
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

/// ceil(r) as an exact integer.
inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

/// True iff r is an integer.
inline bool rat_is_int(const Rat& r) { return rat_den(r) == 1; }

/// Nearest integer; halves are reported separately since every caller
/// that rounds must treat them as a genericity failure.
inline std::optional<Int> rat_round_strict(const Rat& r)
{
    Rat f = r - Rat(rat_floor(r));
    if (f < Rat(1, 2)) return rat_floor(r);
    if (f > Rat(1, 2)) return rat_floor(r) + 1;
    return std::nullopt;  // exactly half-way
}

/// gcd of two nonnegative rationals (the largest rational dividing both
/// with integer quotient); gcd(x, 0) = x.
inline Rat rat_gcd(const Rat& a, const Rat& b)
{
    if (a == 0) return b;
    if (b == 0) return a;
    Int an = rat_num(a), ad = rat_den(a);
    Int bn = rat_num(b), bd = rat_den(b);
    Int num = boost::multiprecision::gcd(an * bd, bn * ad);
    return Rat(num, ad * bd);
}

/// Integer floor square root (q >= 0 required).
inline Int int_isqrt(const Int& q) { return boost::multiprecision::sqrt(q); }

/// Exact rational square root of q if one exists.
std::optional<Rat> rat_sqrt_exact(const Rat& q);

/// Rational lower/upper bounds for sqrt(q), q >= 0, with enclosure width
/// at most `slack` (slack > 0).
Rat sqrt_lower_bound(const Rat& q, const Rat& slack);
Rat sqrt_upper_bound(const Rat& q, const Rat& slack);

/// Parse "p", "-p" or "p/q" in decimal; throws ParseError on junk.
Rat parse_rat(const std::string& s);

/// Canonical text form: "p" or "p/q" with q > 1.
std::string rat_str(const Rat& r);

/// Comma-separated rational vector, e.g. "1/2,-3,0".
std::string rat_vec_str(const std::vector<Rat>& v);
std::vector<Rat> parse_rat_vec(const std::string& s);

}  // namespace chaincal
