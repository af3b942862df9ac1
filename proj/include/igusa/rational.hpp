#ifndef IGUSA_RATIONAL_HPP
#define IGUSA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace igusa {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using RVec = std::vector<Rat>;

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) { Int t = a % b; a = b; b = t; }
    return a;
}

inline Int int_lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = int_gcd(a, b);
    Int r = (a / g) * b;
    return r < 0 ? Int(-r) : r;
}

// floor(a/b) for b > 0
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// the representative of a mod b in [0, b), b > 0
inline Int mod_reduce(const Int& a, const Int& b) {
    if (b <= 0) throw std::invalid_argument("mod_reduce: modulus must be positive");
    Int r = a % b;
    if (r < 0) r += b;
    return r;
}

inline Int int_pow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long k = e > 0 ? (unsigned long)e : (unsigned long)(-e);
    Rat r = 1;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

// extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = a < 0 ? -1 : 1;
        y = 0;
        return a < 0 ? Int(-a) : a;
    }
    Int x1, y1;
    Int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// inverse of a modulo n (n > 0, gcd(a,n) = 1)
inline Int mod_inverse(const Int& a, const Int& n) {
    Int x, y;
    Int g = ext_gcd(mod_reduce(a, n), n, x, y);
    if (g != 1) throw std::invalid_argument("mod_inverse: element not invertible");
    return mod_reduce(x, n);
}

inline Rat frac_part(const Rat& a) {
    Int num = boost::multiprecision::numerator(a);
    Int den = boost::multiprecision::denominator(a);
    return a - Rat(floor_div(num, den));
}

inline bool is_integer(const Rat& a) {
    return boost::multiprecision::denominator(a) == 1;
}

inline std::string to_string(const Int& v) { return v.str(); }
inline std::string to_string(const Rat& v) {
    Int num = boost::multiprecision::numerator(v);
    Int den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline std::vector<long> divisors_of(long m) {
    std::vector<long> ds;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            ds.push_back(d);
            if (d != m / d) ds.push_back(m / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

}  // namespace igusa

#endif
