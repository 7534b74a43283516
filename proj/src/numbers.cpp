#include "chaincal/numbers.hpp"

#include <sstream>

#include "chaincal/errors.hpp"

namespace chaincal {

std::optional<Rat> rat_sqrt_exact(const Rat& q)
{
    if (q < 0) return std::nullopt;
    if (q == 0) return Rat(0);
    Int n = rat_num(q), d = rat_den(q);
    Int sn = int_isqrt(n), sd = int_isqrt(d);
    if (sn * sn == n && sd * sd == d) return Rat(sn, sd);
    return std::nullopt;
}

// sqrt(a/b) = sqrt(a*b)/b; scale by s so the 1/(b*s) quantization error
// drops below `slack`.
static Int scaled_isqrt(const Rat& q, const Rat& slack, Int& denom)
{
    Int a = rat_num(q), b = rat_den(q);
    Int s = rat_ceil(Rat(2) / (slack * Int(b))) + 1;
    denom = b * s;
    return int_isqrt(a * b * s * s);
}

Rat sqrt_lower_bound(const Rat& q, const Rat& slack)
{
    if (q <= 0) return Rat(0);
    Int denom;
    Int r = scaled_isqrt(q, slack, denom);
    return Rat(r, denom);
}

Rat sqrt_upper_bound(const Rat& q, const Rat& slack)
{
    if (q <= 0) return Rat(0);
    Int denom;
    Int r = scaled_isqrt(q, slack, denom);
    return Rat(r + 1, denom);
}

Rat parse_rat(const std::string& s)
{
    if (s.empty()) throw ParseError("empty rational literal");
    auto bar = s.find('/');
    auto parse_int = [](const std::string& t) -> Int {
        if (t.empty()) throw ParseError("empty integer literal");
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw ParseError("sign without digits: " + t);
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw ParseError("bad integer literal: " + t);
        return Int(t);
    };
    if (bar == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, bar));
    Int den = parse_int(s.substr(bar + 1));
    if (den == 0) throw ParseError("zero denominator: " + s);
    return Rat(num, den);
}

std::string rat_str(const Rat& r)
{
    std::ostringstream os;
    os << rat_num(r);
    if (rat_den(r) != 1) os << '/' << rat_den(r);
    return os.str();
}

std::string rat_vec_str(const std::vector<Rat>& v)
{
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += rat_str(v[i]);
    }
    return out;
}

std::vector<Rat> parse_rat_vec(const std::string& s)
{
    std::vector<Rat> out;
    if (s.empty()) return out;
    size_t start = 0;
    while (true) {
        size_t comma = s.find(',', start);
        out.push_back(parse_rat(s.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace chaincal
