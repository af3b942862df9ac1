#ifndef IGUSA_FINITE_FIELD_HPP
#define IGUSA_FINITE_FIELD_HPP

// Point counting on the F_p torus, non-degeneracy over F_p, and exact
// multiplicative character sums with values in a cyclotomic field.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "igusa/newton.hpp"
#include "igusa/polynomial.hpp"
#include "igusa/rational.hpp"

namespace igusa {

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline long smallest_primitive_root(long p) {
    if (!is_prime(p)) throw std::invalid_argument("smallest_primitive_root: p not prime");
    if (p == 2) return 1;
    std::vector<long> prime_factors;
    long m = p - 1;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) prime_factors.push_back(m);
    auto powmod = [&](long b, long e) {
        long r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = (long)((__int128)r * b % p);
            b = (long)((__int128)b * b % p);
            e >>= 1;
        }
        return r;
    };
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : prime_factors)
            if (powmod(g, (p - 1) / q) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

namespace detail {

// reduced term list and a per-variable power table for fast torus evaluation
struct TorusEvaluator {
    long p;
    int n;
    std::vector<std::pair<long, std::vector<int>>> terms;  // coefficient mod p, exponents
    std::vector<std::vector<long>> pow_table;               // [var][x-1] unused; see eval

    TorusEvaluator(const IntPolynomial& f, long p_) : p(p_), n(f.dimension()) {
        for (const auto& [mon, c] : f.terms()) {
            long cc = (long)mod_reduce(c, Int(p));
            if (cc) terms.push_back({cc, mon.e});
        }
    }

    long eval(const std::vector<long>& x) const {
        long v = 0;
        for (const auto& [c, e] : terms) {
            long t = c;
            for (int i = 0; i < n; ++i) {
                long b = x[(std::size_t)i] % p;
                for (int k = 0; k < e[(std::size_t)i]; ++k) t = t * b % p;
            }
            v = (v + t) % p;
        }
        return v;
    }
};

// iterate over (F_p^x)^n, calling fn(x)
template <class Fn>
void for_each_torus_point(long p, int n, Fn&& fn) {
    std::vector<long> x((std::size_t)n, 1);
    while (true) {
        fn(x);
        int i = 0;
        while (i < n) {
            ++x[(std::size_t)i];
            if (x[(std::size_t)i] <= p - 1) break;
            x[(std::size_t)i] = 1;
            ++i;
        }
        if (i == n) break;
    }
}

inline void check_torus_budget(long p, int n) {
    double size = 1;
    for (int i = 0; i < n; ++i) size *= (double)(p - 1);
    if (size > 1e8) throw std::invalid_argument("torus enumeration budget exceeded");
}

}  // namespace detail

// number of torus points with f = 0 over F_p
inline Int count_torus_solutions(const IntPolynomial& f, long p) {
    if (!is_prime(p)) throw std::invalid_argument("count_torus_solutions: p not prime");
    detail::check_torus_budget(p, f.dimension());
    detail::TorusEvaluator ev(f, p);
    Int count = 0;
    detail::for_each_torus_point(p, f.dimension(), [&](const std::vector<long>& x) {
        if (ev.eval(x) == 0) ++count;
    });
    return count;
}

struct DegeneracyWitness {
    int face_index;
    std::vector<long> point;
};

// f is non-degenerate over F_p when for every compact face tau the reduced
// face polynomial and all its partials have no common torus zero
inline std::optional<DegeneracyWitness> find_degenerate_face(const NewtonPolyhedron& np, long p) {
    if (!is_prime(p)) throw std::invalid_argument("find_degenerate_face: p not prime");
    const int n = np.dimension();
    detail::check_torus_budget(p, n);
    for (std::size_t i = 0; i < np.faces().size(); ++i) {
        const Face& tau = np.faces()[i];
        if (!tau.compact) continue;
        IntPolynomial ft = face_restriction(np, tau);
        detail::TorusEvaluator ev(ft, p);
        std::vector<detail::TorusEvaluator> dev;
        for (int v = 0; v < n; ++v) dev.emplace_back(partial_derivative(ft, v), p);
        std::optional<DegeneracyWitness> witness;
        detail::for_each_torus_point(p, n, [&](const std::vector<long>& x) {
            if (witness) return;
            if (ev.eval(x) != 0) return;
            for (int v = 0; v < n; ++v)
                if (dev[(std::size_t)v].eval(x) != 0) return;
            witness = DegeneracyWitness{(int)i, x};
        });
        if (witness) return witness;
    }
    return std::nullopt;
}

inline bool is_nondegenerate_fp(const IntPolynomial& f, long p) {
    NewtonPolyhedron np = build_newton_polyhedron(f);
    return !find_degenerate_face(np, p).has_value();
}

// ---------------------------------------------------------------------------
// cyclotomic numbers: exact arithmetic in Q(zeta_d)

inline std::vector<Rat> cyclotomic_polynomial(long d) {
    // Phi_d via repeated exact division of x^d - 1 by Phi_e, e | d, e < d
    std::vector<std::vector<Rat>> phi((std::size_t)d + 1);
    for (long m = 1; m <= d; ++m) {
        if (d % m != 0) continue;
        std::vector<Rat> num((std::size_t)m + 1, Rat(0));
        num[0] = -1;
        num[(std::size_t)m] = 1;  // x^m - 1
        for (long e = 1; e < m; ++e) {
            if (m % e != 0) continue;
            const auto& div = phi[(std::size_t)e];
            // exact polynomial division num / div
            std::vector<Rat> quot(num.size() - div.size() + 1, Rat(0));
            std::vector<Rat> rem = num;
            for (long k = (long)quot.size() - 1; k >= 0; --k) {
                Rat c = rem[(std::size_t)k + div.size() - 1] / div.back();
                quot[(std::size_t)k] = c;
                if (c == 0) continue;
                for (std::size_t j = 0; j < div.size(); ++j)
                    rem[(std::size_t)k + j] -= c * div[j];
            }
            num = quot;
        }
        phi[(std::size_t)m] = num;
    }
    return phi[(std::size_t)d];
}

// element of Q(zeta_d) represented in the power basis modulo Phi_d; plain
// integers construct rational scalars (conductor 1), which promote on demand
class CyclotomicNumber {
  public:
    CyclotomicNumber(long v = 0) : CyclotomicNumber(Rat(v)) {}
    explicit CyclotomicNumber(const Rat& v) : d_(1) {
        modulus_ = cyclotomic_polynomial(1);
        c_.assign(1, v);
    }
    static CyclotomicNumber of_conductor(long d) {
        CyclotomicNumber x;
        x.d_ = d;
        x.modulus_ = cyclotomic_polynomial(d);
        x.c_.assign(x.modulus_.size() - 1, Rat(0));
        return x;
    }
    static CyclotomicNumber scalar(long d, const Rat& v) {
        CyclotomicNumber x = of_conductor(d);
        x.c_[0] = v;
        return x;
    }
    // zeta_d^e
    static CyclotomicNumber root_power(long d, long e) {
        CyclotomicNumber x = of_conductor(d);
        e = ((e % d) + d) % d;
        RVec raw((std::size_t)d, Rat(0));
        raw[(std::size_t)e] = 1;
        x.reduce_from(raw);
        return x;
    }

    long conductor() const { return d_; }
    const RVec& coeffs() const { return c_; }
    bool is_zero() const {
        for (const Rat& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    Rat rational_part() const { return c_.empty() ? Rat(0) : c_[0]; }

    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        CyclotomicNumber r = a.match(b);
        CyclotomicNumber bb = b.match(a);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += bb.c_[i];
        return r;
    }
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        CyclotomicNumber r = a.match(b);
        CyclotomicNumber bb = b.match(a);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= bb.c_[i];
        return r;
    }
    CyclotomicNumber operator-() const {
        CyclotomicNumber r = *this;
        for (Rat& x : r.c_) x = -x;
        return r;
    }
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        CyclotomicNumber aa = a.match(b);
        CyclotomicNumber bb = b.match(a);
        RVec raw(aa.c_.size() + bb.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < aa.c_.size(); ++i) {
            if (aa.c_[i] == 0) continue;
            for (std::size_t j = 0; j < bb.c_.size(); ++j) raw[i + j] += aa.c_[i] * bb.c_[j];
        }
        CyclotomicNumber r = CyclotomicNumber::of_conductor(aa.d_);
        r.reduce_from(raw);
        return r;
    }
    friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return a * b.inverse();
    }
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return !(a == b);
    }

    CyclotomicNumber inverse() const {
        if (is_zero()) throw std::domain_error("cyclotomic inverse of zero");
        // extended euclid in Q[x] against the cyclotomic modulus
        RVec r0 = modulus_;
        RVec r1 = c_;
        trim(r1);
        RVec s0(1, Rat(0)), s1(1, Rat(1));  // coefficients of *this
        while (!(r1.size() == 1 && r1[0] == 0)) {
            auto [q, rem] = divmod(r0, r1);
            RVec s2 = poly_sub(s0, poly_mul(q, s1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
        // r0 = gcd (a nonzero constant, since Phi_d is irreducible)
        if (r0.size() != 1 || r0[0] == 0) throw std::logic_error("cyclotomic gcd not constant");
        CyclotomicNumber inv = of_conductor(d_);
        RVec scaled = s0;
        for (Rat& x : scaled) x /= r0[0];
        inv.reduce_from(scaled);
        return inv;
    }

  private:
    CyclotomicNumber match(const CyclotomicNumber& o) const {
        if (d_ == o.d_) return *this;
        if (d_ == 1) return scalar(o.d_, c_.empty() ? Rat(0) : c_[0]);
        if (o.d_ == 1) return *this;
        throw std::invalid_argument("cyclotomic arithmetic across different conductors");
    }

    void reduce_from(RVec raw) {
        trim(raw);
        auto [q, rem] = divmod(raw, modulus_);
        c_.assign(modulus_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < rem.size() && i < c_.size(); ++i) c_[i] = rem[i];
    }

    static void trim(RVec& v) {
        while (v.size() > 1 && v.back() == 0) v.pop_back();
    }
    static std::pair<RVec, RVec> divmod(RVec num, const RVec& den) {
        RVec q(std::max<std::size_t>(1, num.size() >= den.size() ? num.size() - den.size() + 1 : 1),
               Rat(0));
        if (num.size() >= den.size()) {
            for (long k = (long)(num.size() - den.size()); k >= 0; --k) {
                Rat c = num[(std::size_t)k + den.size() - 1] / den.back();
                q[(std::size_t)k] = c;
                if (c == 0) continue;
                for (std::size_t j = 0; j < den.size(); ++j) num[(std::size_t)k + j] -= c * den[j];
            }
        }
        trim(num);
        return {q, num};
    }
    static RVec poly_mul(const RVec& a, const RVec& b) {
        RVec r(a.size() + b.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    }
    static RVec poly_sub(RVec a, const RVec& b) {
        if (a.size() < b.size()) a.resize(b.size(), Rat(0));
        for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
        trim(a);
        return a;
    }

    long d_;
    RVec c_;
    RVec modulus_;
};

// Multiplicative character of F_p^x of order d > 1, fixed by chi(g) = zeta_d
// for the smallest primitive root g, with chi(0) = 0.
struct CharacterSpec {
    long p;
    long d;
    long g;

    CharacterSpec(long p_, long d_) : p(p_), d(d_) {
        if (!is_prime(p)) throw std::invalid_argument("CharacterSpec: p not prime");
        if (d <= 1 || (p - 1) % d != 0)
            throw std::invalid_argument("CharacterSpec: order must divide p-1 and exceed 1");
        g = smallest_primitive_root(p);
    }
};

// discrete logarithm table: index[g^k] = k
inline std::vector<long> discrete_log_table(long p, long g) {
    std::vector<long> ind((std::size_t)p, -1);
    long v = 1;
    for (long k = 0; k < p - 1; ++k) {
        ind[(std::size_t)v] = k;
        v = v * g % p;
    }
    return ind;
}

// sum of chi(f(x)) over the full torus (F_p^x)^n, exact in Q(zeta_d)
inline CyclotomicNumber character_sum(const IntPolynomial& f, const CharacterSpec& chi) {
    detail::check_torus_budget(chi.p, f.dimension());
    detail::TorusEvaluator ev(f, chi.p);
    auto ind = discrete_log_table(chi.p, chi.g);
    std::vector<Int> bucket((std::size_t)chi.d, Int(0));
    detail::for_each_torus_point(chi.p, f.dimension(), [&](const std::vector<long>& x) {
        long v = ev.eval(x);
        if (v == 0) return;  // chi(0) = 0
        ++bucket[(std::size_t)(ind[(std::size_t)v] % chi.d)];
    });
    CyclotomicNumber sum = CyclotomicNumber::of_conductor(chi.d);
    for (long e = 0; e < chi.d; ++e) {
        if (bucket[(std::size_t)e] == 0) continue;
        sum = sum + CyclotomicNumber::scalar(chi.d, Rat(bucket[(std::size_t)e])) *
                        CyclotomicNumber::root_power(chi.d, e);
    }
    return sum;
}

}  // namespace igusa

#endif
