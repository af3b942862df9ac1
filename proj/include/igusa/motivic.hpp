#ifndef IGUSA_MOTIVIC_HPP
#define IGUSA_MOTIVIC_HPP

// Local motivic zeta function over the Laurent ring in L with formal
// face-class symbols, assembled per the combinatorial formula for
// non-degenerate polynomials: compact faces off the coordinate hyperplanes
// contribute L_tau * S(cone), faces inside coordinate hyperplanes contribute
// the primed variants built from (0,1]-parallelepipeds and (1 - L^{-1})
// weights.  Specialization L -> p recovers the p-adic function.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "igusa/face_counts.hpp"
#include "igusa/zeta.hpp"

namespace igusa {

// numerator in T over Z[L^{+-1}, class symbols]; denominator factors
// (m, sigma) stand for 1 - L^{-sigma} T^m (the L-factor denominator
// 1 - L^{-1} T is the (1,1) entry)
struct MotivicZeta {
    Poly<MultiPoly> num;
    std::map<Family, long> factors;
    SymbolRegistry symbols;  // variable 0 = L; others are primed face classes
};

namespace detail {

inline Poly<MultiPoly> motivic_factor_poly(const Family& f) {
    Poly<MultiPoly> poly;
    poly.c.assign((std::size_t)f.first + 1, MultiPoly(0));
    poly.c[0] = MultiPoly(1);
    poly.c[(std::size_t)f.first] = MultiPoly(0) - MultiPoly::variable(0, -f.second);
    poly.trim();
    return poly;
}

struct MotivicTerm {
    Poly<MultiPoly> num;
    std::map<Family, long> factors;
};

inline MotivicTerm motivic_add(const MotivicTerm& a, const MotivicTerm& b) {
    MotivicTerm out;
    out.factors = a.factors;
    for (const auto& [f, c] : b.factors) {
        auto it = out.factors.find(f);
        if (it == out.factors.end()) out.factors[f] = c;
        else it->second = std::max(it->second, c);
    }
    auto lift = [&](const MotivicTerm& z) {
        Poly<MultiPoly> n = z.num;
        for (const auto& [f, c] : out.factors) {
            long have = 0;
            auto it = z.factors.find(f);
            if (it != z.factors.end()) have = it->second;
            for (long i = have; i < c; ++i) n = n * motivic_factor_poly(f);
        }
        return n;
    };
    out.num = lift(a) + lift(b);
    return out;
}

inline MotivicTerm motivic_mul(const MotivicTerm& a, const MotivicTerm& b) {
    MotivicTerm out;
    out.num = a.num * b.num;
    out.factors = a.factors;
    for (const auto& [f, c] : b.factors) out.factors[f] += c;
    return out;
}

}  // namespace detail

// class of the zero set of the face polynomial in the torus of the face's
// free variables (the primed class); closed forms per the face structure
inline MultiPoly class_for_face(const NewtonPolyhedron& np, int face_index,
                                SymbolRegistry& registry) {
    return reduced_face_count(np, face_index, registry);
}

inline MotivicZeta motivic_local_zeta(const NewtonPolyhedron& np) {
    if (np.polynomial().has_constant_term())
        throw std::invalid_argument("motivic_local_zeta: polynomial must vanish at the origin");
    const int n = np.dimension();
    MultiPoly one(1);
    MultiPoly L = MultiPoly::variable(0);
    MultiPoly one_minus_Linv = one - MultiPoly::variable(0, -1);
    auto m_of = [&](const IVec& k) { return np.m_value(k); };

    MotivicZeta out;
    detail::MotivicTerm total;
    bool first = true;

    for (std::size_t i = 0; i < np.faces().size(); ++i) {
        const Face& tau = np.faces()[i];
        if (!tau.compact) continue;
        const int npt = (int)tau.hyperplanes.size();  // |P_tau|
        const int free_vars = n - npt;

        // L factor: (1-L^{-1})^{free} - L^{-free} [X'] (1-T)/(1-L^{-1}T)
        MultiPoly cls = class_for_face(np, (int)i, out.symbols);
        detail::MotivicTerm lterm;
        MultiPoly lead(1);
        for (int k = 0; k < free_vars; ++k) lead = lead * one_minus_Linv;
        if (cls.is_zero()) {
            lterm.num = Poly<MultiPoly>(lead);
        } else {
            MultiPoly scaled = MultiPoly::variable(0, -free_vars) * cls;
            // numerator: lead * (1 - L^{-1} T) - scaled * (1 - T)
            Poly<MultiPoly> a;
            a.c = {lead - scaled, scaled - lead * MultiPoly::variable(0, -1)};
            a.trim();
            lterm.num = a;
            lterm.factors[{1, 1}] = 1;
        }

        // S factor over the simplicial decomposition with (0,1] parallelepipeds
        detail::MotivicTerm sterm;
        bool sfirst = true;
        auto pieces = simplicial_decomposition(face_cone_generators(np, tau));
        for (const auto& piece : pieces) {
            detail::MotivicTerm pt;
            int coord_gens = 0;
            for (const IVec& g : piece.generators) {
                long m = to_long(m_of(g));
                long sigma = to_long(coord_sum(g));
                if (m == 0) {
                    if (sigma != 1) throw std::logic_error("motivic: m = 0 generator not a coordinate ray");
                    ++coord_gens;
                } else {
                    pt.factors[{m, sigma}] += 1;
                }
            }
            ParallelepipedSet piped =
                enumerate_parallelepiped(piece.generators, PipedConvention::HalfOpenHigh);
            Poly<MultiPoly> sigma_sum;
            for (const IVec& h : piped.points) {
                long mh = to_long(m_of(h));
                long sh = to_long(coord_sum(h));
                sigma_sum = sigma_sum + Poly<MultiPoly>::monomial((std::size_t)mh,
                                                                  MultiPoly::variable(0, -sh));
            }
            // weight (1 - L^{-1})^{|P_tau| - |P_i|} for the coordinate rays the
            // piece does not carry
            MultiPoly weight(1);
            for (int k = 0; k < npt - coord_gens; ++k) weight = weight * one_minus_Linv;
            pt.num = sigma_sum * weight;
            sterm = sfirst ? pt : detail::motivic_add(sterm, pt);
            sfirst = false;
        }

        detail::MotivicTerm term = detail::motivic_mul(lterm, sterm);
        total = first ? term : detail::motivic_add(total, term);
        first = false;
    }
    if (first) throw std::logic_error("motivic_local_zeta: no compact faces");
    out.num = total.num;
    out.factors = total.factors;
    return out;
}

// substitute L -> p, T -> t, symbols -> counted classes; returns the reduced
// p-adic rational function
inline ReducedZeta<Rat> specialize(const MotivicZeta& mz, long p,
                                   const std::vector<Rat>& symbol_values) {
    ConcretePContext ctx(p);
    std::vector<Rat> values;
    values.push_back(Rat(p));
    for (const Rat& v : symbol_values) values.push_back(v);
    if (values.size() < mz.symbols.face_of_symbol.size())
        throw std::invalid_argument("specialize: missing symbol value");
    ZetaTerm<ConcretePContext> term;
    long sigma_total = 0;
    for (const auto& [f, c] : mz.factors) {
        term.factors[f] = c;
        sigma_total += f.second * c;
    }
    term.unit_p = -sigma_total;  // (1 - p^{-sigma} t^m) = (p^sigma - t^m) / p^sigma
    term.num.c.reserve(mz.num.c.size());
    for (const auto& c : mz.num.c) term.num.c.push_back(c.evaluate(values));
    term.num.trim();
    return reduce_zeta(ctx, term);
}

// counted class values over F_p for every registered symbol, in symbol order
inline std::vector<Rat> counted_symbol_values(const NewtonPolyhedron& np,
                                              const SymbolRegistry& registry, long p) {
    std::vector<Rat> out;
    for (std::size_t v = 1; v < registry.face_of_symbol.size(); ++v) {
        int fi = registry.face_of_symbol[v];
        const Face& tau = np.faces()[(std::size_t)fi];
        Int full = count_torus_solutions(face_restriction(np, tau), p);
        Rat reduced(full);
        for (std::size_t k = 0; k < tau.hyperplanes.size(); ++k) reduced /= Rat(p - 1);
        if (!is_integer(reduced)) throw std::logic_error("counted_symbol_values: non-integral reduced count");
        out.push_back(reduced);
    }
    return out;
}

}  // namespace igusa

#endif
