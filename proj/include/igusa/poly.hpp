#ifndef IGUSA_POLY_HPP
#define IGUSA_POLY_HPP

// Dense univariate polynomials over an exact coefficient field, sparse
// multivariate (Laurent) polynomials, and the rational-function field over Q
// used as the coefficient field in symbolic-p mode.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "igusa/rational.hpp"

namespace igusa {

template <class K>
struct Poly {
    std::vector<K> c;  // c[i] is the coefficient of t^i; invariant: no trailing zeros

    Poly() = default;
    explicit Poly(K constant) {
        if (!(constant == K(0))) c.push_back(std::move(constant));
    }

    static Poly monomial(std::size_t deg, K coeff) {
        Poly p;
        if (coeff == K(0)) return p;
        p.c.assign(deg + 1, K(0));
        p.c[deg] = std::move(coeff);
        return p;
    }

    bool is_zero() const { return c.empty(); }
    long degree() const { return (long)c.size() - 1; }  // -1 for the zero polynomial
    const K& leading() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back() == K(0)) c.pop_back();
    }

    K at(std::size_t i) const { return i < c.size() ? c[i] : K(0); }

    K evaluate(const K& x) const {
        K v(0);
        for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) + b.at(i);
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) - b.at(i);
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == K(0)) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    Poly operator*(const K& s) const {
        Poly r = *this;
        for (K& x : r.c) x = x * s;
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c.size() != b.c.size()) return false;
        for (std::size_t i = 0; i < a.c.size(); ++i)
            if (!(a.c[i] == b.c[i])) return false;
        return true;
    }
};

template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& num, const Poly<K>& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly<K> q, r = num;
    if (num.degree() < den.degree()) return {q, r};
    q.c.assign((std::size_t)(num.degree() - den.degree() + 1), K(0));
    for (long k = num.degree() - den.degree(); k >= 0; --k) {
        if ((long)r.c.size() - 1 < k + den.degree()) continue;
        K coeff = r.at((std::size_t)(k + den.degree())) / den.leading();
        if (coeff == K(0)) continue;
        q.c[(std::size_t)k] = coeff;
        for (long j = 0; j <= den.degree(); ++j) {
            std::size_t idx = (std::size_t)(k + j);
            r.c[idx] = r.c[idx] - coeff * den.c[(std::size_t)j];
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <class K>
Poly<K> exact_div(const Poly<K>& num, const Poly<K>& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw std::logic_error("exact_div: division is not exact");
    return q;
}

template <class K>
Poly<K> make_monic(Poly<K> p) {
    if (p.is_zero()) return p;
    K inv = K(1) / p.leading();
    for (K& x : p.c) x = x * inv;
    return p;
}

// monic gcd by the euclidean algorithm; specialized for Q below
template <class K>
Poly<K> gcd_poly(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = make_monic(std::move(r));
    }
    return make_monic(std::move(a));
}

namespace detail {

inline Poly<Rat> from_int_coeffs(const std::vector<Int>& v) {
    Poly<Rat> p;
    p.c.assign(v.begin(), v.end());
    p.trim();
    return p;
}

inline std::vector<Int> primitive_int_coeffs(const Poly<Rat>& p) {
    Int lcm_den = 1;
    for (const Rat& x : p.c) lcm_den = int_lcm(lcm_den, boost::multiprecision::denominator(x));
    std::vector<Int> v;
    v.reserve(p.c.size());
    Int g = 0;
    for (const Rat& x : p.c) {
        Rat scaled = x * Rat(lcm_den);
        Int xv = boost::multiprecision::numerator(scaled);
        v.push_back(xv);
        g = int_gcd(g, xv);
    }
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

}  // namespace detail

// gcd over Q via a primitive pseudo-remainder sequence on integer
// coefficients, which keeps intermediate growth under control
inline Poly<Rat> gcd_poly(const Poly<Rat>& pa, const Poly<Rat>& pb) {
    if (pa.is_zero()) return make_monic(pb);
    if (pb.is_zero()) return make_monic(pa);
    std::vector<Int> a = detail::primitive_int_coeffs(pa);
    std::vector<Int> b = detail::primitive_int_coeffs(pb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        if (b.size() == 1) return Poly<Rat>(Rat(1));  // nonzero constant divides everything
        const Int lead = b.back();
        std::vector<Int> r = a;
        while (r.size() >= b.size()) {
            Int coeff = r.back();
            std::size_t shift = r.size() - b.size();
            if (coeff != 0) {
                for (Int& x : r) x *= lead;
                for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= coeff * b[j];
            }
            r.pop_back();
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        Int g = 0;
        for (const Int& x : r) g = int_gcd(g, x);
        if (g > 1)
            for (Int& x : r) x /= g;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(detail::from_int_coeffs(a));
}

// truncated power series of num/den around t = 0 (den(0) must be nonzero)
template <class K>
std::vector<K> series_quotient(const Poly<K>& num, const Poly<K>& den, int order) {
    if (den.is_zero() || den.at(0) == K(0))
        throw std::domain_error("series_quotient: denominator vanishes at the origin");
    std::vector<K> out;
    K d0inv = K(1) / den.at(0);
    std::vector<K> acc(num.c.begin(), num.c.end());
    acc.resize((std::size_t)order + 1, K(0));
    for (int k = 0; k <= order; ++k) {
        K ck = acc[(std::size_t)k] * d0inv;
        out.push_back(ck);
        if (!(ck == K(0))) {
            for (int j = 1; k + j <= order; ++j)
                acc[(std::size_t)(k + j)] = acc[(std::size_t)(k + j)] - ck * den.at((std::size_t)j);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// rational functions in one symbol over Q (the coefficient field Q(P))

class RatFun {
  public:
    RatFun() : num_(), den_(Rat(1)) {}
    RatFun(long v) : num_(Rat(v)), den_(Rat(1)) {}
    explicit RatFun(const Rat& v) : num_(v), den_(Rat(1)) {}
    RatFun(Poly<Rat> num, Poly<Rat> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    static RatFun variable() {
        RatFun r;
        r.num_ = Poly<Rat>::monomial(1, Rat(1));
        return r;
    }
    static RatFun from_poly(Poly<Rat> p) {
        RatFun r;
        r.num_ = std::move(p);
        return r;
    }

    const Poly<Rat>& num() const { return num_; }
    const Poly<Rat>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("RatFun division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return (a.num_ * b.den_) == (b.num_ * a.den_);
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    Rat evaluate(const Rat& x) const {
        Rat d = den_.evaluate(x);
        if (d == 0) throw std::domain_error("RatFun evaluation at a pole");
        return num_.evaluate(x) / d;
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFun with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<Rat>(Rat(1));
            return;
        }
        Poly<Rat> g = gcd_poly(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        Rat lead = den_.leading();
        if (lead != 1) {
            Rat inv = Rat(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Poly<Rat> num_, den_;
};

// ---------------------------------------------------------------------------
// sparse multivariate Laurent polynomials over Q, used for the symbolic
// coefficient rings (variable 0 is the distinguished symbol; exponents of
// variable 0 may be negative)

class MultiPoly {
  public:
    using Key = std::vector<long>;

    MultiPoly() = default;
    MultiPoly(long v) { add(Key{}, Rat(v)); }
    explicit MultiPoly(const Rat& v) { add(Key{}, v); }
    static MultiPoly variable(std::size_t index, long exponent = 1) {
        MultiPoly p;
        Key k(index + 1, 0);
        k[index] = exponent;
        p.add(k, Rat(1));
        return p;
    }

    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(Key k, const Rat& c) {
        if (c == 0) return;
        normalize_key(k);
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool depends_on(std::size_t index) const {
        for (const auto& [k, c] : terms_)
            if (index < k.size() && k[index] != 0) return true;
        return false;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [k, c] : b.terms_) r.add(k, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [k, c] : b.terms_) r.add(k, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                Key k(std::max(ka.size(), kb.size()), 0);
                for (std::size_t i = 0; i < ka.size(); ++i) k[i] += ka[i];
                for (std::size_t i = 0; i < kb.size(); ++i) k[i] += kb[i];
                r.add(std::move(k), ca * cb);
            }
        }
        return r;
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // substitute rational values for all variables
    Rat evaluate(const std::vector<Rat>& values) const {
        Rat total = 0;
        for (const auto& [k, c] : terms_) {
            Rat t = c;
            for (std::size_t i = 0; i < k.size(); ++i) {
                if (k[i] == 0) continue;
                if (i >= values.size()) throw std::invalid_argument("MultiPoly: missing value");
                t *= rat_pow(values[i], k[i]);
            }
            total += t;
        }
        return total;
    }

    // view as a univariate polynomial in variable 0 (exponents must be >= 0)
    Poly<Rat> as_univariate() const {
        Poly<Rat> p;
        for (const auto& [k, c] : terms_) {
            long e = k.empty() ? 0 : k[0];
            for (std::size_t i = 1; i < k.size(); ++i)
                if (k[i] != 0) throw std::logic_error("as_univariate: extra symbols present");
            if (e < 0) throw std::logic_error("as_univariate: negative exponent");
            if ((long)p.c.size() <= e) p.c.resize((std::size_t)e + 1, Rat(0));
            p.c[(std::size_t)e] += c;
        }
        p.trim();
        return p;
    }

  private:
    static void normalize_key(Key& k) {
        while (!k.empty() && k.back() == 0) k.pop_back();
    }

    std::map<Key, Rat> terms_;
};

}  // namespace igusa

#endif
