#ifndef IGUSA_ORACLE_HPP
#define IGUSA_ORACLE_HPP

// Brute-force verifiers, kept independent of the cone/parallelepiped
// algorithms they check: membership and enumeration here go through plain
// Gaussian elimination and box scans only.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "igusa/linalg.hpp"
#include "igusa/polynomial.hpp"
#include "igusa/rational.hpp"

namespace igusa {
namespace oracle {

namespace detail {

// one solution of sum_j x_j rows[j] = target, or nullopt (plain elimination)
inline std::optional<RVec> gauss_combination(const std::vector<RVec>& rows, const RVec& target) {
    const std::size_t r = rows.size();
    const std::size_t n = target.size();
    std::vector<RVec> a(n, RVec(r + 1, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < r; ++j) a[i][j] = rows[j][i];
        a[i][r] = target[i];
    }
    std::vector<int> piv_col(n, -1);
    std::size_t row = 0;
    for (std::size_t c = 0; c < r && row < n; ++c) {
        std::size_t p = row;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(a[row], a[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][c] == 0) continue;
            Rat f = a[i][c] / a[row][c];
            for (std::size_t j = c; j <= r; ++j) a[i][j] -= f * a[row][j];
        }
        piv_col[row] = (int)c;
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (a[i][r] != 0) return std::nullopt;
    RVec x(r, Rat(0));
    for (std::size_t i = 0; i < row; ++i) x[piv_col[i]] = a[i][r] / a[i][piv_col[i]];
    return x;
}

inline std::vector<RVec> rat_rows(const std::vector<IVec>& rows) {
    std::vector<RVec> rr;
    rr.reserve(rows.size());
    for (const IVec& r : rows) rr.emplace_back(r.begin(), r.end());
    return rr;
}

}  // namespace detail

// Lattice points of the fundamental parallelepiped by scanning the integer
// bounding box and solving for the coefficients of every candidate point.
// Convention low: coefficients in [0,1); high: (0,1].
inline std::vector<IVec> brute_parallelepiped(const std::vector<IVec>& gens, bool half_open_high) {
    const std::size_t r = gens.size();
    if (r == 0) throw std::invalid_argument("brute_parallelepiped: no generators");
    const std::size_t n = gens[0].size();
    for (const IVec& g : gens)
        for (const Int& x : g)
            if (x < 0 || x > 64) throw std::invalid_argument("brute_parallelepiped: coordinate out of range");
    auto rows = detail::rat_rows(gens);
    {
        // independence check via row rank
        std::size_t rk = 0;
        std::vector<RVec> m = rows;
        for (std::size_t c = 0; c < n && rk < m.size(); ++c) {
            std::size_t p = rk;
            while (p < m.size() && m[p][c] == 0) ++p;
            if (p == m.size()) continue;
            std::swap(m[rk], m[p]);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (i == rk || m[i][c] == 0) continue;
                Rat f = m[i][c] / m[rk][c];
                for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[rk][j];
            }
            ++rk;
        }
        if (rk != r) throw std::invalid_argument("brute_parallelepiped: dependent generators");
    }
    IVec hi(n, 0);
    for (std::size_t k = 0; k < n; ++k)
        for (const IVec& g : gens) hi[k] += g[k];

    // square case: solve by the adjugate, h = adj(G^T) k / det
    std::optional<std::vector<IVec>> adj_cols;
    Int det_val = 0;
    if (r == n) {
        IMat gt(n, IVec(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) gt[i][j] = gens[j][i];
        det_val = det(gt);
        std::vector<IVec> adj(n, IVec(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                IMat minor_mat;
                for (std::size_t a = 0; a < n; ++a) {
                    if (a == j) continue;
                    IVec row;
                    for (std::size_t b = 0; b < n; ++b)
                        if (b != i) row.push_back(gt[a][b]);
                    minor_mat.push_back(row);
                }
                Int m = minor_mat.empty() ? Int(1) : det(minor_mat);
                adj[i][j] = ((i + j) % 2 == 0) ? m : -m;
            }
        adj_cols = std::move(adj);
    }

    std::vector<IVec> pts;
    IVec p(n, 0);
    while (true) {
        bool in = false;
        if (adj_cols) {
            in = true;
            Int d = det_val;
            for (std::size_t j = 0; j < n && in; ++j) {
                Int num = dot((*adj_cols)[j], p);
                if (d < 0) num = -num;
                Int ad = d < 0 ? Int(-d) : d;
                // coefficient num/ad against the convention's range
                if (half_open_high ? (num <= 0 || num > ad) : (num < 0 || num >= ad)) in = false;
            }
        } else {
            RVec target(p.begin(), p.end());
            auto sol = detail::gauss_combination(detail::rat_rows(gens), target);
            if (sol) {
                in = true;
                for (const Rat& c : *sol) {
                    if (half_open_high ? (c <= 0 || c > 1) : (c < 0 || c >= 1)) { in = false; break; }
                }
            }
        }
        if (in) pts.push_back(p);
        std::size_t k = 0;
        while (k < n) {
            ++p[k];
            if (p[k] <= hi[k]) break;
            p[k] = 0;
            ++k;
        }
        if (k == n) break;
    }
    return pts;
}

// membership of a lattice point in the open simplicial cone on the given
// independent generators (all coefficients strictly positive)
inline bool in_open_simplicial_cone(const std::vector<IVec>& gens, const IVec& point) {
    RVec target(point.begin(), point.end());
    auto sol = detail::gauss_combination(detail::rat_rows(gens), target);
    if (!sol) return false;
    for (const Rat& c : *sol)
        if (c <= 0) return false;
    return true;
}

// Relative-interior membership in the (possibly non-simplicial) cone spanned
// by `gens`: the point must lie in the linear span and strictly inside every
// supporting halfspace found among kernels of (d-1)-subsets of generators.
inline bool in_relative_interior(const std::vector<IVec>& gens, const IVec& point) {
    const std::size_t n = gens.empty() ? 0 : gens[0].size();
    auto rows = detail::rat_rows(gens);
    RVec target(point.begin(), point.end());
    auto insp = detail::gauss_combination(rows, target);
    if (!insp) return false;
    // span coordinates: pick a row basis
    std::vector<std::size_t> basis;
    {
        std::vector<RVec> m;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            m.push_back(rows[i]);
            std::size_t rk = 0;
            std::vector<RVec> mm = m;
            for (std::size_t c = 0; c < n && rk < mm.size(); ++c) {
                std::size_t p = rk;
                while (p < mm.size() && mm[p][c] == 0) ++p;
                if (p == mm.size()) continue;
                std::swap(mm[rk], mm[p]);
                for (std::size_t ii = 0; ii < mm.size(); ++ii) {
                    if (ii == rk || mm[ii][c] == 0) continue;
                    Rat f = mm[ii][c] / mm[rk][c];
                    for (std::size_t j = c; j < n; ++j) mm[ii][j] -= f * mm[rk][j];
                }
                ++rk;
            }
            if (rk < m.size()) m.pop_back();
            else basis.push_back(i);
        }
    }
    const std::size_t d = basis.size();
    std::vector<RVec> basis_rows;
    for (std::size_t b : basis) basis_rows.push_back(rows[b]);
    auto coords = [&](const RVec& x) {
        auto s = detail::gauss_combination(basis_rows, x);
        if (!s) throw std::logic_error("in_relative_interior: span inconsistency");
        return *s;
    };
    if (d == 0) return false;
    if (d == 1) {
        // single ray: point must be a positive multiple of the generator
        RVec c = coords(target);
        return c[0] > 0;
    }
    // candidate supporting normals from (d-1)-subsets in span coordinates
    std::vector<RVec> gc;
    for (const auto& g : rows) gc.push_back(coords(g));
    RVec pc = coords(target);
    std::vector<std::size_t> sel(d - 1);
    for (std::size_t i = 0; i < d - 1; ++i) sel[i] = i;
    while (true) {
        // kernel vector of the selected rows (in span coords, dimension d)
        std::vector<RVec> sub;
        for (std::size_t s : sel) sub.push_back(gc[s]);
        // elimination to find one kernel direction
        std::vector<RVec> m = sub;
        std::vector<int> piv(d, -1);
        std::size_t rk = 0;
        for (std::size_t c = 0; c < d && rk < m.size(); ++c) {
            std::size_t p = rk;
            while (p < m.size() && m[p][c] == 0) ++p;
            if (p == m.size()) continue;
            std::swap(m[rk], m[p]);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (i == rk || m[i][c] == 0) continue;
                Rat f = m[i][c] / m[rk][c];
                for (std::size_t j = c; j < d; ++j) m[i][j] -= f * m[rk][j];
            }
            piv[c] = (int)rk;
            ++rk;
        }
        if (rk == d - 1) {  // independent subset: a 1-dim kernel exists
            std::size_t free_col = 0;
            while (free_col < d && piv[free_col] >= 0) ++free_col;
            RVec a(d, Rat(0));
            a[free_col] = 1;
            for (std::size_t c = 0; c < d; ++c)
                if (piv[c] >= 0) a[c] = -m[piv[c]][free_col] / m[piv[c]][c];
            bool pos = false, neg = false;
            for (const auto& g : gc) {
                Rat s = dot(a, g);
                if (s < 0) neg = true;
                if (s > 0) pos = true;
            }
            if (neg && pos) { /* not supporting in either orientation */ }
            else if (neg || pos) {
                if (neg)
                    for (Rat& x : a) x = -x;
                if (dot(a, pc) <= 0) return false;
            }
        }
        long i = (long)(d - 1) - 1;
        while (i >= 0 && sel[i] == gens.size() - (d - 1) + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (std::size_t j = i + 1; j < d - 1; ++j) sel[j] = sel[j - 1] + 1;
    }
    return true;
}

// Partition check: every lattice point of [0,R]^n lying in the relative
// interior of the union cone must be covered by exactly one open piece.
inline bool brute_cone_partition_check(const std::vector<std::vector<IVec>>& pieces, long box_radius) {
    if (pieces.empty()) return false;
    std::vector<IVec> parent;
    for (const auto& p : pieces)
        for (const IVec& g : p) parent.push_back(g);
    const std::size_t n = parent[0].size();
    IVec k(n, 0);
    while (true) {
        if (!is_zero_vec(k)) {
            int cover = 0;
            for (const auto& p : pieces)
                if (in_open_simplicial_cone(p, k)) ++cover;
            bool inside = in_relative_interior(parent, k);
            if ((inside && cover != 1) || (!inside && cover != 0)) return false;
        }
        std::size_t i = 0;
        while (i < n) {
            ++k[i];
            if (k[i] <= box_radius) break;
            k[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return true;
}

// Exact series coefficients of the local zeta integral: the t^l coefficient is
// p^{-n(l+1)} times the number of residue classes x in (pZ/p^{l+1})^n with
// ord_p f(x) = l.
inline std::vector<Rat> series_coefficients_padic(const IntPolynomial& f, long p, int l_max) {
    const int n = f.dimension();
    std::vector<Rat> coeffs;
    double budget = 0;
    for (int l = 1; l <= l_max; ++l) budget += std::pow((double)p, (double)(n * l));
    if (budget > 1e8) throw std::invalid_argument("series_coefficients_padic: budget exceeded");

    for (int l = 1; l <= l_max; ++l) {
        std::int64_t mod = 1;
        for (int i = 0; i <= l; ++i) mod *= p;  // p^{l+1}
        std::int64_t pl = mod / p;              // p^l
        // reduce terms mod p^{l+1}
        struct Term { std::int64_t c; std::vector<int> e; };
        std::vector<Term> terms;
        for (const auto& [m, c] : f.terms()) {
            std::int64_t cc = (std::int64_t)(mod_reduce(c, Int(mod)));
            if (cc) terms.push_back({cc, m.e});
        }
        std::int64_t count = 0;
        std::vector<std::int64_t> a((std::size_t)n, 0);
        const std::int64_t lim = pl;  // classes per coordinate
        while (true) {
            // x_i = p * a_i
            std::int64_t val = 0;
            for (const auto& t : terms) {
                std::int64_t mon = t.c;
                for (int i = 0; i < n; ++i) {
                    std::int64_t xi = (p * a[(std::size_t)i]) % mod;
                    for (int e = 0; e < t.e[(std::size_t)i]; ++e) mon = (std::int64_t)((__int128)mon * xi % mod);
                }
                val = (val + mon) % mod;
            }
            if (val != 0 && val % pl == 0) ++count;
            int i = 0;
            while (i < n) {
                ++a[(std::size_t)i];
                if (a[(std::size_t)i] < lim) break;
                a[(std::size_t)i] = 0;
                ++i;
            }
            if (i == n) break;
        }
        Rat denom = rat_pow(Rat(p), (long)n * (l + 1));
        coeffs.push_back(Rat(count) / denom);
    }
    return coeffs;
}

}  // namespace oracle
}  // namespace igusa

#endif
