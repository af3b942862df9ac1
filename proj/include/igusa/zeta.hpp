#ifndef IGUSA_ZETA_HPP
#define IGUSA_ZETA_HPP

// Assembly of the local zeta function as an exact rational function in
// t = p^{-s}: per-face L and S factors, the full sum over compact faces,
// reduction over the coefficient field, and the pole-spectrum report.
//
// Every 1/(p^{sigma+m s} - 1) is rewritten as t^m/(p^sigma - t^m), so a term
// is a numerator polynomial in t over a multiset of tagged denominator
// factors (p^sigma - t^m) together with a unit p^a (p-1)^b.

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "igusa/cone.hpp"
#include "igusa/finite_field.hpp"
#include "igusa/newton.hpp"
#include "igusa/poly.hpp"

namespace igusa {

inline long to_long(const Int& v) {
    if (v > Int(std::numeric_limits<long>::max()) || v < Int(std::numeric_limits<long>::min()))
        throw std::overflow_error("value exceeds machine range");
    return (long)v;
}

// ---------------------------------------------------------------------------
// coefficient ring contexts

struct ConcretePContext {
    using R = Rat;
    using K = Rat;
    long p;
    explicit ConcretePContext(long prime) : p(prime) {
        if (!is_prime(prime)) throw std::invalid_argument("ConcretePContext: p not prime");
    }
    R p_ring() const { return Rat(p); }
    K p_field() const { return Rat(p); }
    K to_field(const R& x) const { return x; }
};

// coefficients are polynomials in a formal symbol P (variable 0) and formal
// torus-count symbols (variables >= 1); reduction happens over Q(P) once the
// count symbols have cancelled
struct SymbolicPContext {
    using R = MultiPoly;
    using K = RatFun;
    R p_ring() const { return MultiPoly::variable(0); }
    K p_field() const { return RatFun::variable(); }
    K to_field(const R& x) const { return RatFun::from_poly(x.as_univariate()); }
};

struct CyclotomicContext {
    using R = CyclotomicNumber;
    using K = CyclotomicNumber;
    long p;
    long d;
    CyclotomicContext(long prime, long order) : p(prime), d(order) {
        CharacterSpec check(prime, order);  // validates p, d
        (void)check;
    }
    R p_ring() const { return CyclotomicNumber::scalar(d, Rat(p)); }
    K p_field() const { return CyclotomicNumber::scalar(d, Rat(p)); }
    K to_field(const R& x) const { return x; }
};

template <class K>
K field_pow(K base, long e) {
    if (e < 0) return K(1) / field_pow(base, -e);
    K r(1);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// unreduced terms over a common tagged denominator

using Family = std::pair<long, long>;  // (m, sigma), denominator factor p^sigma - t^m

template <class Ctx>
struct ZetaTerm {
    using R = typename Ctx::R;
    Poly<R> num;
    std::map<Family, long> factors;
    long unit_p = 0;    // divide by p^unit_p
    long unit_pm1 = 0;  // divide by (p-1)^unit_pm1

    static ZetaTerm zero() { return ZetaTerm{}; }
    bool is_zero() const { return num.is_zero(); }
};

template <class Ctx>
Poly<typename Ctx::R> family_poly(const Ctx& ctx, const Family& f) {
    using R = typename Ctx::R;
    if (f.first < 1 || f.second < 1) throw std::invalid_argument("family_poly: need m, sigma >= 1");
    Poly<R> poly;
    poly.c.assign((std::size_t)f.first + 1, R(0));
    R ps(1);
    for (long i = 0; i < f.second; ++i) ps = ps * ctx.p_ring();
    poly.c[0] = ps;
    poly.c[(std::size_t)f.first] = R(-1);
    poly.trim();
    return poly;
}

template <class Ctx>
ZetaTerm<Ctx> zeta_add(const Ctx& ctx, const ZetaTerm<Ctx>& a, const ZetaTerm<Ctx>& b) {
    using R = typename Ctx::R;
    ZetaTerm<Ctx> out;
    out.factors = a.factors;
    for (const auto& [f, c] : b.factors) {
        auto it = out.factors.find(f);
        if (it == out.factors.end()) out.factors[f] = c;
        else it->second = std::max(it->second, c);
    }
    out.unit_p = std::max(a.unit_p, b.unit_p);
    out.unit_pm1 = std::max(a.unit_pm1, b.unit_pm1);

    auto lift = [&](const ZetaTerm<Ctx>& z) {
        Poly<R> n = z.num;
        for (const auto& [f, c] : out.factors) {
            long have = 0;
            auto it = z.factors.find(f);
            if (it != z.factors.end()) have = it->second;
            for (long i = have; i < c; ++i) n = n * family_poly(ctx, f);
        }
        R pm1 = ctx.p_ring() - R(1);
        for (long i = z.unit_p; i < out.unit_p; ++i) n = n * ctx.p_ring();
        for (long i = z.unit_pm1; i < out.unit_pm1; ++i) n = n * pm1;
        return n;
    };
    out.num = lift(a) + lift(b);
    return out;
}

template <class Ctx>
ZetaTerm<Ctx> zeta_mul(const Ctx& ctx, const ZetaTerm<Ctx>& a, const ZetaTerm<Ctx>& b) {
    (void)ctx;
    ZetaTerm<Ctx> out;
    out.num = a.num * b.num;
    out.factors = a.factors;
    for (const auto& [f, c] : b.factors) out.factors[f] += c;
    out.unit_p = a.unit_p + b.unit_p;
    out.unit_pm1 = a.unit_pm1 + b.unit_pm1;
    return out;
}

// ---------------------------------------------------------------------------
// building blocks

// L factor of a compact face from its torus count N:
//   L = ((p-1)/p)^n - (N/p^{n-1}) (1-t)/(p-t)
template <class Ctx>
ZetaTerm<Ctx> assemble_L(const Ctx& ctx, const typename Ctx::R& n_count, int n) {
    using R = typename Ctx::R;
    R p = ctx.p_ring();
    R pm1 = p - R(1);
    R pm1n(1);
    for (int i = 0; i < n; ++i) pm1n = pm1n * pm1;
    ZetaTerm<Ctx> out;
    out.num.c.assign(2, R(0));
    out.num.c[0] = pm1n * p - n_count * p;
    out.num.c[1] = n_count * p - pm1n;
    out.num.trim();
    out.factors[{1, 1}] = 1;
    out.unit_p = n;
    return out;
}

// constant L factor of the character-twisted zeta: p^{-n} * charsum
template <class Ctx>
ZetaTerm<Ctx> assemble_L_char(const Ctx& ctx, const typename Ctx::R& char_sum, int n) {
    (void)ctx;
    ZetaTerm<Ctx> out;
    out.num = Poly<typename Ctx::R>(char_sum);
    out.unit_p = n;
    return out;
}

// S contribution of one open simplicial piece: with M = sum of the generator
// m-values, Sigma_h p^{sigma(h)} t^{M - m(h)} over the parallelepiped points,
// divided by (p^sigma_j - t^m_j) per generator (m_j >= 1) and (p-1) per
// generator with m_j = 0.
template <class Ctx, class MOracle>
ZetaTerm<Ctx> assemble_S_piece(const Ctx& ctx, const SimplicialCone& piece, MOracle&& m_of,
                               PipedConvention conv = PipedConvention::HalfOpenLow) {
    using R = typename Ctx::R;
    ZetaTerm<Ctx> out;
    long total_m = 0;
    for (const IVec& g : piece.generators) {
        long m = to_long(m_of(g));
        long sigma = to_long(coord_sum(g));
        if (m == 0 && sigma == 0) throw std::invalid_argument("assemble_S: zero generator data");
        total_m += m;
        if (m == 0) {
            if (sigma != 1) throw std::logic_error("assemble_S: m = 0 generator with sigma != 1");
            out.unit_pm1 += 1;
        } else {
            out.factors[{m, sigma}] += 1;
        }
    }
    ParallelepipedSet piped = enumerate_parallelepiped(piece.generators, conv);
    Poly<R> sigma_sum;
    for (const IVec& h : piped.points) {
        long mh = to_long(m_of(h));
        long sh = to_long(coord_sum(h));
        long deg = total_m - mh;
        if (deg < 0) throw std::logic_error("assemble_S: m exceeds the generator total");
        R coeff(1);
        for (long i = 0; i < sh; ++i) coeff = coeff * ctx.p_ring();
        sigma_sum = sigma_sum + Poly<R>::monomial((std::size_t)deg, coeff);
    }
    out.num = sigma_sum;
    return out;
}

// S of a full (possibly non-simplicial) cone: sum over the pieces of a
// simplicial decomposition without new rays
template <class Ctx, class MOracle>
ZetaTerm<Ctx> assemble_S(const Ctx& ctx, const std::vector<IVec>& generators, MOracle&& m_of) {
    auto pieces = simplicial_decomposition(generators);
    ZetaTerm<Ctx> out;
    bool first = true;
    for (const auto& piece : pieces) {
        ZetaTerm<Ctx> t = assemble_S_piece(ctx, piece, m_of);
        out = first ? t : zeta_add(ctx, out, t);
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// reduction and pole spectrum

template <class K>
struct ReducedZeta {
    Poly<K> num;
    Poly<K> den;  // monic
    std::vector<Family> families;  // distinct (m, sigma) in the assembled denominator
};

template <class Ctx>
ReducedZeta<typename Ctx::K> reduce_zeta(const Ctx& ctx, const ZetaTerm<Ctx>& z) {
    using K = typename Ctx::K;
    ReducedZeta<K> out;
    Poly<K> num;
    num.c.reserve(z.num.c.size());
    for (const auto& c : z.num.c) num.c.push_back(ctx.to_field(c));
    num.trim();
    Poly<K> den(K(1));
    for (const auto& [f, cnt] : z.factors) {
        Poly<K> fp;
        fp.c.assign((std::size_t)f.first + 1, K(0));
        fp.c[0] = field_pow(ctx.p_field(), f.second);
        fp.c[(std::size_t)f.first] = K(-1);
        for (long i = 0; i < cnt; ++i) den = den * fp;
        out.families.push_back(f);
    }
    // clear the unit
    K unit = field_pow(ctx.p_field(), z.unit_p) *
             field_pow(ctx.p_field() - K(1), z.unit_pm1);
    num = num * (K(1) / unit);
    // cancel all common factors
    while (true) {
        Poly<K> g = gcd_poly(num, den);
        if (g.degree() <= 0) break;
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    // monic denominator
    if (!den.is_zero() && !(den.leading() == K(1))) {
        K inv = K(1) / den.leading();
        num = num * inv;
        den = den * inv;
    }
    out.num = num;
    out.den = den;
    std::sort(out.families.begin(), out.families.end());
    out.families.erase(std::unique(out.families.begin(), out.families.end()), out.families.end());
    return out;
}

template <class K>
bool fractions_equal(const Poly<K>& n1, const Poly<K>& d1, const Poly<K>& n2, const Poly<K>& d2) {
    return n1 * d2 == n2 * d1;
}

// class polynomials of a family: for each divisor d of m with m0 | d
// (m0 = m / gcd(m, sigma)), the polynomial whose roots are exactly the
// candidate classes k with gcd-index d; their product over d is t^m - p^sigma
template <class K>
struct ClassGroup {
    long d;
    Poly<K> poly;             // the class polynomial B_d
    std::vector<long> classes;  // the k in [0, m) carried by B_d
};

template <class Ctx>
std::vector<ClassGroup<typename Ctx::K>> family_class_groups(const Ctx& ctx, const Family& fam) {
    using K = typename Ctx::K;
    const long m = fam.first, sigma = fam.second;
    long g = (long)int_gcd(Int(m), Int(sigma));
    long m0 = m / g;
    std::vector<ClassGroup<K>> groups;
    for (long d : divisors_of(m)) {
        if (d % m0 != 0) continue;
        Poly<K> a;  // t^d - p^{sigma d / m}
        a.c.assign((std::size_t)d + 1, K(0));
        a.c[0] = K(0) - field_pow(ctx.p_field(), sigma * d / m);
        a.c[(std::size_t)d] = K(1);
        for (const auto& grp : groups)
            if (d % grp.d == 0) a = exact_div(a, grp.poly);
        ClassGroup<K> grp;
        grp.d = d;
        grp.poly = a;
        groups.push_back(grp);
    }
    // attribute the residue classes: k belongs to the smallest valid d with (m/d) | k
    for (long k = 0; k < m; ++k) {
        for (auto& grp : groups) {
            if (k % (m / grp.d) == 0) {
                grp.classes.push_back(k);
                break;
            }
        }
    }
    return groups;
}

template <class K>
struct SurvivorFactor {
    Poly<K> factor;
    int multiplicity = 0;
    std::vector<long> classes;
    bool exact_classes = true;  // false when the class polynomial split further over the field
};

template <class K>
struct FamilyPoles {
    Family family;
    std::vector<SurvivorFactor<K>> survivors;
};

template <class K>
struct PoleReport {
    std::vector<FamilyPoles<K>> families;
};

template <class Ctx>
PoleReport<typename Ctx::K> pole_spectrum(const Ctx& ctx,
                                          const ReducedZeta<typename Ctx::K>& z) {
    using K = typename Ctx::K;
    PoleReport<K> report;
    for (const Family& fam : z.families) {
        FamilyPoles<K> fp;
        fp.family = fam;
        for (const auto& grp : family_class_groups(ctx, fam)) {
            Poly<K> g = gcd_poly(z.den, grp.poly);
            if (g.degree() <= 0) continue;
            SurvivorFactor<K> sf;
            sf.factor = g;
            sf.classes = grp.classes;
            sf.exact_classes = g.degree() == grp.poly.degree();
            Poly<K> rest = z.den;
            while (true) {
                auto [q, r] = divmod(rest, g);
                if (!r.is_zero()) break;
                ++sf.multiplicity;
                rest = q;
            }
            fp.survivors.push_back(std::move(sf));
        }
        if (!fp.survivors.empty()) report.families.push_back(std::move(fp));
    }
    return report;
}

// order of the candidate class (q, r) as a pole of the reduced function
template <class Ctx>
int pole_order(const Ctx& ctx, const ReducedZeta<typename Ctx::K>& z,
               const ComplexCandidate& s0) {
    auto report = pole_spectrum(ctx, z);
    int order = 0;
    for (const auto& fp : report.families) {
        long m = fp.family.first, sigma = fp.family.second;
        if (Rat(sigma) != Rat(m) * s0.q) continue;
        Rat km = s0.r * Rat(m);
        if (!is_integer(km)) continue;
        long k = (long)mod_reduce(boost::multiprecision::numerator(km), Int(m));
        for (const auto& sf : fp.survivors)
            if (std::find(sf.classes.begin(), sf.classes.end(), k) != sf.classes.end())
                order = std::max(order, sf.multiplicity);
    }
    return order;
}

// ---------------------------------------------------------------------------
// the full local zeta function

template <class Ctx>
struct FaceTerm {
    int face_index;
    ZetaTerm<Ctx> L, S;
};

template <class Ctx>
struct LocalZeta {
    ZetaTerm<Ctx> assembled;
    ReducedZeta<typename Ctx::K> reduced;
    std::vector<FaceTerm<Ctx>> face_terms;
};

// generic driver: sum L(tau) * S(cone(tau)) over the compact faces
template <class Ctx, class LProvider>
LocalZeta<Ctx> assemble_local_zeta(const Ctx& ctx, const NewtonPolyhedron& np,
                                   LProvider&& l_of_face) {
    LocalZeta<Ctx> out;
    auto m_of = [&](const IVec& k) { return np.m_value(k); };
    bool first = true;
    for (std::size_t i = 0; i < np.faces().size(); ++i) {
        const Face& tau = np.faces()[i];
        if (!tau.compact) continue;
        FaceTerm<Ctx> ft;
        ft.face_index = (int)i;
        ft.L = l_of_face((int)i);
        ft.S = assemble_S(ctx, face_cone_generators(np, tau), m_of);
        ZetaTerm<Ctx> term = zeta_mul(ctx, ft.L, ft.S);
        out.assembled = first ? term : zeta_add(ctx, out.assembled, term);
        first = false;
        out.face_terms.push_back(std::move(ft));
    }
    if (first) throw std::logic_error("assemble_local_zeta: no compact faces");
    out.reduced = reduce_zeta(ctx, out.assembled);
    return out;
}

// local Igusa zeta function of f at a concrete prime (trivial character)
inline LocalZeta<ConcretePContext> local_igusa_zeta(const NewtonPolyhedron& np,
                                                    const ConcretePContext& ctx) {
    if (auto w = find_degenerate_face(np, ctx.p)) {
        throw std::invalid_argument("local_igusa_zeta: f is degenerate over F_p on face " +
                                    std::to_string(w->face_index));
    }
    const int n = np.dimension();
    return assemble_local_zeta(ctx, np, [&](int face_index) {
        IntPolynomial ft = face_restriction(np, np.faces()[(std::size_t)face_index]);
        Rat count(count_torus_solutions(ft, ctx.p));
        return assemble_L(ctx, count, n);
    });
}

inline LocalZeta<ConcretePContext> local_igusa_zeta(const IntPolynomial& f, long p) {
    NewtonPolyhedron np = build_newton_polyhedron(f);
    ConcretePContext ctx(p);
    return local_igusa_zeta(np, ctx);
}

// ---------------------------------------------------------------------------
// empirical verification of the B1 vanishing theorem

struct ClassVerdict {
    Family family;
    long k = 0;                  // representative class within the family
    std::vector<long> classes;   // all classes sharing the same rational factor
    bool hypotheses_apply = false;
    std::string reason;
    bool is_pole = false;
    int order = 0;
    int expected = 0;
    bool consistent = true;  // the theorem's prediction holds for this class
};

// For every candidate-pole class of every facet family, check the vanishing
// theorem's hypotheses and compare with the exact pole spectrum.  Classes come
// grouped by the rational factors of t^m - p^sigma; conjugate classes are
// poles together, so a group survives exactly when each of its classes does.
template <class Ctx>
std::vector<ClassVerdict> verify_b1_theorem(const Ctx& ctx, const NewtonPolyhedron& np,
                                            const ReducedZeta<typename Ctx::K>& reduced) {
    std::vector<ClassVerdict> out;
    std::set<Family> fams;
    for (const auto& fd : np.facets())
        if (fd.m > 0) fams.insert({to_long(fd.m), to_long(fd.sigma)});
    auto report = pole_spectrum(ctx, reduced);
    for (const Family& fam : fams) {
        const long m = fam.first, sigma = fam.second;
        const FamilyPoles<typename Ctx::K>* fp = nullptr;
        for (const auto& entry : report.families)
            if (entry.family == fam) fp = &entry;
        for (const auto& grp : family_class_groups(ctx, fam)) {
            bool survives = false;
            int mult = 0;
            if (fp) {
                for (const auto& sf : fp->survivors) {
                    if (sf.classes == grp.classes) {
                        survives = true;
                        mult = sf.multiplicity;
                    }
                }
            }
            for (long k : grp.classes) {
                ClassVerdict v;
                v.family = fam;
                v.k = k;
                v.classes = grp.classes;
                ComplexCandidate s0{Rat(sigma, m), Rat(k, m)};
                auto hc = check_theorem_hypotheses(np, s0);
                v.hypotheses_apply = hc.applies;
                v.reason = hc.reason;
                v.is_pole = survives;
                v.order = survives ? mult : 0;
                v.expected = expected_order(np, s0);
                v.consistent = !(v.hypotheses_apply && v.is_pole) && v.order <= v.expected;
                out.push_back(std::move(v));
            }
        }
    }
    return out;
}

// character-twisted local Igusa zeta function (chi non-trivial of order d)
inline LocalZeta<CyclotomicContext> local_igusa_zeta_char(const NewtonPolyhedron& np,
                                                          const CharacterSpec& chi) {
    if (auto w = find_degenerate_face(np, chi.p)) {
        throw std::invalid_argument("local_igusa_zeta_char: f is degenerate over F_p on face " +
                                    std::to_string(w->face_index));
    }
    CyclotomicContext ctx(chi.p, chi.d);
    const int n = np.dimension();
    return assemble_local_zeta(ctx, np, [&](int face_index) {
        IntPolynomial ft = face_restriction(np, np.faces()[(std::size_t)face_index]);
        return assemble_L_char(ctx, character_sum(ft, chi), n);
    });
}

}  // namespace igusa

#endif
