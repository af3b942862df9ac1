#ifndef IGUSA_PIPED3D_HPP
#define IGUSA_PIPED3D_HPP

// Structure theory of the lattice points in a three-dimensional fundamental
// parallelepiped spanned by independent primitive vectors w1,w2,w3 in Z+^3:
// multiplicity profile, the cyclic-generator data xi/eta/l0, and the closed
// form for all mu points.

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "igusa/cone.hpp"
#include "igusa/linalg.hpp"

namespace igusa {

struct MuProfile {
    Int mu;                 // |det(w1,w2,w3)|
    Int mu1, mu2, mu3;      // pair multiplicities of (w2,w3), (w1,w3), (w1,w2)
    Int gamma;              // gcd(mu1, mu2)
    Int lambda;             // lcm(mu1, mu2)
    Int phi1, phi2, phi3;   // mu / (mu_j mu_k)
};

struct CosetInvariants {
    Int xi1, xi2, xi3;      // pair generators of H1, H2, H3
    Int eta, eta_prime, l0; // coset representative data of the third direction
    Int mu3_prime;          // mu3 / gamma
    Int phi3_prime;         // phi3 / mu3_prime
};

// a*x = b (mod n)
struct LinearCongruence {
    Int a, b, n;
};

struct CongruenceSolution {
    Int x0;  // representative in [0, modulus)
    Int modulus;
};

struct CongruenceInfeasible {
    std::size_t i, j;  // indices of a violating pair (i == j: single congruence unsolvable)
};

using CongruenceResult = std::variant<CongruenceSolution, CongruenceInfeasible>;

// Generalized CRT: solve a system of linear congruences a_i x = b_i (mod n_i)
// with not necessarily coprime moduli.  Returns the solution class modulo the
// lcm of the reduced moduli, or the violated pair.
inline CongruenceResult solve_congruences(const std::vector<LinearCongruence>& sys) {
    Int x0 = 0, mod = 1;
    std::vector<std::pair<Int, Int>> reduced;  // (residue, modulus) after clearing a_i
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const auto& c = sys[i];
        if (c.n < 1) throw std::invalid_argument("solve_congruences: modulus must be >= 1");
        Int a = mod_reduce(c.a, c.n);
        Int g = int_gcd(a == 0 ? c.n : a, c.n);
        if (g == 0) g = c.n;
        if (mod_reduce(c.b, g) != 0) return CongruenceInfeasible{i, i};
        Int n2 = c.n / g;
        Int r = n2 == 1 ? Int(0) : mod_reduce(mod_inverse(a / g, n2) * (c.b / g), n2);
        reduced.emplace_back(r, n2);
    }
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        auto [r, n2] = reduced[i];
        Int g = int_gcd(mod, n2);
        if (mod_reduce(x0 - r, g) != 0) {
            // locate a conflicting earlier congruence for the report
            for (std::size_t j = 0; j < i; ++j) {
                Int gj = int_gcd(reduced[j].second, n2);
                if (mod_reduce(reduced[j].first - r, gj) != 0) return CongruenceInfeasible{j, i};
            }
            return CongruenceInfeasible{i, i};
        }
        // combine x = x0 (mod), x = r (n2)
        Int l = int_lcm(mod, n2);
        Int step = mod / g;
        Int k = mod_reduce((r - x0) / g * mod_inverse(step % (n2 / g) == 0 ? Int(1) : step, n2 / g), n2 / g);
        if (n2 / g == 1) k = 0;
        x0 = mod_reduce(x0 + k * mod, l);
        mod = l;
    }
    return CongruenceSolution{x0, mod};
}

inline Int pair_multiplicity(const IVec& a, const IVec& b) { return multiplicity({a, b}); }

// The unique xi in [0, mu) with (1/mu) w_a + (xi/mu) w_b integral, where mu is
// the pair multiplicity; found by direct search.
struct XiPair {
    Int xi, mu;
};

inline XiPair xi_pair(const IVec& wa, const IVec& wb) {
    Int mu = pair_multiplicity(wa, wb);
    const std::size_t n = wa.size();
    for (Int xi = 0; xi < mu; ++xi) {
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k)
            ok = mod_reduce(wa[k] + xi * wb[k], mu) == 0;
        if (ok) return {xi, mu};
    }
    throw std::logic_error("xi_pair: no generator found (non-primitive input?)");
}

// The congruence system determining xi for the pair (w_a, w_b): coordinatewise
// w_b[k] * x = -w_a[k] (mod mu).
inline std::vector<LinearCongruence> xi_pair_congruences(const IVec& wa, const IVec& wb) {
    Int mu = pair_multiplicity(wa, wb);
    std::vector<LinearCongruence> sys;
    for (std::size_t k = 0; k < wa.size(); ++k) sys.push_back({wb[k], -wa[k], mu});
    return sys;
}

inline MuProfile mu_profile(const IVec& w1, const IVec& w2, const IVec& w3) {
    if (w1.size() != 3 || w2.size() != 3 || w3.size() != 3)
        throw std::invalid_argument("mu_profile: vectors must be three-dimensional");
    IMat m{w1, w2, w3};
    Int d = det(m);
    if (d == 0) throw std::invalid_argument("mu_profile: dependent vectors");
    MuProfile p;
    p.mu = d < 0 ? Int(-d) : d;
    p.mu1 = pair_multiplicity(w2, w3);
    p.mu2 = pair_multiplicity(w1, w3);
    p.mu3 = pair_multiplicity(w1, w2);
    p.gamma = int_gcd(p.mu1, p.mu2);
    p.lambda = int_lcm(p.mu1, p.mu2);
    p.phi1 = p.mu / (p.mu2 * p.mu3);
    p.phi2 = p.mu / (p.mu1 * p.mu3);
    p.phi3 = p.mu / (p.mu1 * p.mu2);
    return p;
}

namespace detail {

// 2x2 minors d_ij of the matrix with rows w1,w2,w3 (d_ij = minor obtained by
// deleting row i and column j, unsigned position convention)
inline Int minor_d(const IMat& w, int i, int j) {
    int r0 = -1, r1 = -1, c0 = -1, c1 = -1;
    for (int k = 0; k < 3; ++k) {
        if (k != i) (r0 < 0 ? r0 : r1) = k;
        if (k != j) (c0 < 0 ? c0 : c1) = k;
    }
    return w[r0][c0] * w[r1][c1] - w[r0][c1] * w[r1][c0];
}

}  // namespace detail

// Invariants describing all mu lattice points of the parallelepiped spanned by
// (w1,w2,w3); eta/eta'/l0 are computed from a Bezout combination of the
// reduced minors.
inline CosetInvariants coset_invariants(const IVec& w1, const IVec& w2, const IVec& w3,
                                        const MuProfile& p) {
    CosetInvariants inv;
    inv.xi1 = xi_pair(w2, w3).xi;
    inv.xi2 = xi_pair(w1, w3).xi;
    inv.xi3 = xi_pair(w1, w2).xi;
    inv.mu3_prime = p.mu3 / p.gamma;
    inv.phi3_prime = p.phi3 / inv.mu3_prime;

    IMat w{w1, w2, w3};
    Int d1[3], d2[3], d3[3];
    for (int j = 0; j < 3; ++j) {
        d1[j] = detail::minor_d(w, 0, j) / p.mu1;
        d2[j] = detail::minor_d(w, 1, j) / p.mu2;
        d3[j] = detail::minor_d(w, 2, j) / p.mu3;
    }
    // lambda_j with sum lambda_j d1'[j] = 1  (gcd of the reduced first-row minors is 1)
    Int x01, y01;
    Int g01 = ext_gcd(d1[0], d1[1], x01, y01);
    Int x2, y2;
    Int g = ext_gcd(g01, d1[2], x2, y2);
    if (g != 1) throw std::logic_error("coset_invariants: reduced minors not coprime");
    Int lam[3] = {x01 * x2, y01 * x2, y2};

    Int sum2 = 0, sum3 = 0;
    for (int j = 0; j < 3; ++j) {
        sum2 += lam[j] * d2[j];
        sum3 += lam[j] * d3[j];
    }
    Int A = -sum2, B = sum3;
    inv.eta = mod_reduce(A, p.phi3);
    inv.eta_prime = mod_reduce(B, inv.phi3_prime);
    Int i_star = mod_reduce(floor_div(A, p.phi3), p.mu1);
    Int mu2p = p.mu2 / p.gamma;
    inv.l0 = mod_reduce(floor_div(B, inv.phi3_prime) - i_star * inv.xi1 * mu2p, p.lambda);
    return inv;
}

inline CosetInvariants coset_invariants(const IVec& w1, const IVec& w2, const IVec& w3) {
    return coset_invariants(w1, w2, w3, mu_profile(w1, w2, w3));
}

// All mu points of the fundamental parallelepiped (half-open-low convention),
// generated from the closed form h(i,j,k) rather than by enumeration.
inline ParallelepipedSet parallelepiped_points_3d(const IVec& w1, const IVec& w2, const IVec& w3) {
    MuProfile p = mu_profile(w1, w2, w3);
    CosetInvariants inv = coset_invariants(w1, w2, w3, p);
    Int mu1p = p.mu1 / p.gamma, mu2p = p.mu2 / p.gamma;

    ParallelepipedSet out;
    out.convention = PipedConvention::HalfOpenLow;
    out.mu = p.mu;
    for (Int i = 0; i < p.mu1; ++i) {
        for (Int j = 0; j < p.mu2; ++j) {
            for (Int k = 0; k < p.phi3; ++k) {
                Int i_of_k = mod_reduce(floor_div(k * inv.eta, p.phi3), p.mu1);
                Int l = mod_reduce((i - i_of_k) * inv.xi1 * mu2p + j * inv.xi2 * mu1p +
                                       k * inv.l0 + floor_div(k * inv.eta_prime, inv.phi3_prime),
                                   p.lambda);
                Rat h1 = Rat(j * p.phi3 + k, p.mu2 * p.phi3);
                Rat h2 = Rat(i * p.phi3 + mod_reduce(k * inv.eta, p.phi3), p.mu1 * p.phi3);
                Rat h3 = Rat(l * inv.phi3_prime + mod_reduce(k * inv.eta_prime, inv.phi3_prime),
                             p.lambda * inv.phi3_prime);
                RVec coord{h1, h2, h3};
                IVec pt(3);
                for (int c = 0; c < 3; ++c) {
                    Rat v = h1 * Rat(w1[c]) + h2 * Rat(w2[c]) + h3 * Rat(w3[c]);
                    if (!is_integer(v))
                        throw std::logic_error("parallelepiped_points_3d: non-integral point");
                    pt[c] = boost::multiprecision::numerator(v);
                }
                out.points.push_back(std::move(pt));
                out.coords.push_back(std::move(coord));
            }
        }
    }
    return out;
}

}  // namespace igusa

#endif
