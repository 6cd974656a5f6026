#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace wallflip {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Domain error with a stable machine-readable code.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool is_integral(const Rat& r) { return denominator(r) == 1; }

inline Int floor_rat(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw Error("negative_sqrt", "isqrt of negative integer");
    if (n == 0) return 0;
    Int x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

// Largest integer k with k <= c + sqrt(t); requires t >= 0.
inline Int floor_add_sqrt(const Rat& c, const Rat& t) {
    if (t < 0) throw Error("negative_sqrt", "floor_add_sqrt with negative radicand");
    // k <= c + sqrt(t)  <=>  k - c <= sqrt(t)  <=>  k <= c  or  (k - c)^2 <= t
    auto ok = [&](const Int& k) {
        Rat d = Rat(k) - c;
        return d <= 0 || d * d <= t;
    };
    // floor(sqrt(t)) = isqrt(num*den) / den exactly (no integer sits strictly
    // between s/den and (s+1)/den for integral s bounds of sqrt(num*den)).
    Int lo = floor_rat(c);
    Int hi = lo + isqrt(numerator(t) * denominator(t)) / denominator(t) + 2;
    while (lo < hi) {  // find last k with ok(k)
        Int mid = (lo + hi + 1) / 2;
        if (ok(mid))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

// Smallest integer k with k >= c - sqrt(t); requires t >= 0.
inline Int ceil_sub_sqrt(const Rat& c, const Rat& t) { return -floor_add_sqrt(-c, t); }

inline std::string rat_str(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p/q", "p", or a plain integer rendering.
inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw Error("zero_denominator", "rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::exception& e) {
        throw Error("bad_rational", "cannot parse rational '" + s + "'");
    }
}

}  // namespace wallflip
