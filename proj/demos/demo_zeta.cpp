// Compute the local Igusa zeta function of x^3 + xy + y^2 + z^2 at p = 3 and
// walk through the ingredients: facets, candidate poles, per-face factors,
// the reduced rational function, and the surviving pole classes.

#include <iostream>

#include "igusa/zeta.hpp"

using namespace igusa;

int main() {
    auto f = parse_polynomial("x^3 + x*y + y^2 + z^2", 3);
    auto np = build_newton_polyhedron(f);

    std::cout << "f = " << print_polynomial(f) << "\n\nfacet data (m, sigma):\n";
    for (const auto& fd : np.facets()) {
        std::cout << "  v = (";
        for (std::size_t i = 0; i < fd.normal.size(); ++i)
            std::cout << (i ? "," : "") << fd.normal[i];
        std::cout << ")   m = " << fd.m << "   sigma = " << fd.sigma << "\n";
    }

    std::cout << "\ncandidate poles (real parts):";
    for (const auto& cp : candidate_poles(np)) std::cout << "  " << to_string(Rat(-cp.q));
    std::cout << "\n";

    const long p = 3;
    ConcretePContext ctx(p);
    auto Z = local_igusa_zeta(np, ctx);

    std::cout << "\nZ at p = " << p << " in t = p^-s, reduced:\n  numerator coefficients: ";
    for (const Rat& c : Z.reduced.num.c) std::cout << to_string(c) << " ";
    std::cout << "\n  denominator coefficients: ";
    for (const Rat& c : Z.reduced.den.c) std::cout << to_string(c) << " ";
    std::cout << "\n\nsurviving pole classes:\n";
    for (const auto& fp : pole_spectrum(ctx, Z.reduced).families) {
        for (const auto& sf : fp.survivors) {
            std::cout << "  family (m,sigma) = (" << fp.family.first << "," << fp.family.second
                      << ")  order " << sf.multiplicity << "  classes k in {";
            for (std::size_t i = 0; i < sf.classes.size(); ++i)
                std::cout << (i ? "," : "") << sf.classes[i];
            std::cout << "} (mod " << fp.family.first << ")\n";
        }
    }
    return 0;
}
