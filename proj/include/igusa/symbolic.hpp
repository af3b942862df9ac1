#ifndef IGUSA_SYMBOLIC_HPP
#define IGUSA_SYMBOLIC_HPP

// Local zeta function over the symbolic coefficient ring: the prime is a
// formal symbol P and unknown torus counts stay formal, which makes their
// cancellation in the assembled numerator observable.

#include <string>
#include <vector>

#include "igusa/face_counts.hpp"
#include "igusa/zeta.hpp"

namespace igusa {

struct SymbolicZeta {
    LocalZeta<SymbolicPContext> zeta;
    SymbolRegistry symbols;
    bool counts_cancelled = false;  // numerator free of every count symbol
};

inline bool numerator_mentions_symbol(const Poly<MultiPoly>& num, std::size_t var) {
    for (const auto& c : num.c)
        if (c.depends_on(var)) return true;
    return false;
}

// assemble with formal counts; reduce only when the count symbols cancel
inline SymbolicZeta symbolic_local_zeta(const NewtonPolyhedron& np) {
    SymbolicZeta out;
    SymbolicPContext ctx;
    const int n = np.dimension();
    auto m_of = [&](const IVec& k) { return np.m_value(k); };
    bool first = true;
    for (std::size_t i = 0; i < np.faces().size(); ++i) {
        const Face& tau = np.faces()[i];
        if (!tau.compact) continue;
        FaceTerm<SymbolicPContext> ft;
        ft.face_index = (int)i;
        ft.L = assemble_L(ctx, full_face_count(np, (int)i, out.symbols), n);
        ft.S = assemble_S(ctx, face_cone_generators(np, tau), m_of);
        auto term = zeta_mul(ctx, ft.L, ft.S);
        out.zeta.assembled = first ? term : zeta_add(ctx, out.zeta.assembled, term);
        first = false;
        out.zeta.face_terms.push_back(std::move(ft));
    }
    out.counts_cancelled = true;
    for (std::size_t v = 1; v < out.symbols.face_of_symbol.size(); ++v)
        if (numerator_mentions_symbol(out.zeta.assembled.num, v)) out.counts_cancelled = false;
    if (out.counts_cancelled) out.zeta.reduced = reduce_zeta(ctx, out.zeta.assembled);
    return out;
}

// substitute a concrete prime and counted values for the symbols, then reduce
inline ReducedZeta<Rat> specialize_symbolic(const SymbolicZeta& sz, long p,
                                            const std::vector<Rat>& symbol_values) {
    ConcretePContext cctx(p);
    std::vector<Rat> values;
    values.push_back(Rat(p));
    for (const Rat& v : symbol_values) values.push_back(v);
    ZetaTerm<ConcretePContext> term;
    term.factors = sz.zeta.assembled.factors;
    term.unit_p = sz.zeta.assembled.unit_p;
    term.unit_pm1 = sz.zeta.assembled.unit_pm1;
    term.num.c.reserve(sz.zeta.assembled.num.c.size());
    for (const auto& c : sz.zeta.assembled.num.c) term.num.c.push_back(c.evaluate(values));
    term.num.trim();
    return reduce_zeta(cctx, term);
}

}  // namespace igusa

#endif
