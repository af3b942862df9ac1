#ifndef IGUSA_LINALG_HPP
#define IGUSA_LINALG_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "igusa/rational.hpp"

namespace igusa {

using IMat = std::vector<IVec>;  // row-major
using RMat = std::vector<RVec>;

inline Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const RVec& a, const RVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IVec add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Int coord_sum(const IVec& v) {
    Int s = 0;
    for (const Int& x : v) s += x;
    return s;
}

inline IVec primitive_part(IVec v) {
    Int g = 0;
    for (const Int& x : v) g = int_gcd(g, x);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

inline bool is_zero_vec(const IVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

// determinant by fraction-free Bareiss elimination
inline Int det(IMat a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Int prev = 1, sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline int rank(RMat a) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    int r = 0;
    for (std::size_t c = 0; c < cols && (std::size_t)r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != (std::size_t)r && a[i][c] != 0) {
                Rat f = a[i][c] / a[r][c];
                for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            }
        }
        ++r;
    }
    return r;
}

inline RMat to_rmat(const IMat& a) {
    RMat r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i].assign(a[i].begin(), a[i].end());
    return r;
}

inline int rank(const IMat& a) { return rank(to_rmat(a)); }

// Solve sum_j x_j * rows[j] = target over Q. Rows need not be independent;
// returns one solution or nullopt when inconsistent.
inline std::optional<RVec> solve_row_combination(const RMat& rows, const RVec& target) {
    const std::size_t r = rows.size();
    if (r == 0) {
        for (const Rat& t : target)
            if (t != 0) return std::nullopt;
        return RVec{};
    }
    const std::size_t n = rows[0].size();
    // augmented system: columns are the unknowns x_j
    RMat a(n, RVec(r + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < r; ++j) a[i][j] = rows[j][i];
        a[i][r] = target[i];
    }
    std::vector<int> pivot_col(n, -1);
    std::size_t row = 0;
    for (std::size_t c = 0; c < r && row < n; ++c) {
        std::size_t piv = row;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[row], a[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i != row && a[i][c] != 0) {
                Rat f = a[i][c] / a[row][c];
                for (std::size_t j = c; j <= r; ++j) a[i][j] -= f * a[row][j];
            }
        }
        pivot_col[row] = (int)c;
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (a[i][r] != 0) return std::nullopt;
    RVec x(r, Rat(0));
    for (std::size_t i = 0; i < row; ++i) {
        int c = pivot_col[i];
        x[c] = a[i][r] / a[i][c];
    }
    return x;
}

inline std::optional<RVec> solve_row_combination(const std::vector<IVec>& rows, const IVec& target) {
    RMat rr = to_rmat(rows);
    RVec tt(target.begin(), target.end());
    return solve_row_combination(rr, tt);
}

// Kernel vector of a (d-1) x d matrix with independent rows: the generalized
// cross product (signed maximal minors). Returns the zero vector when the rows
// are dependent.
inline IVec cross_kernel(const IMat& rows) {
    const std::size_t d = rows.empty() ? 1 : rows[0].size();
    if (rows.size() + 1 != d) throw std::invalid_argument("cross_kernel: need d-1 rows");
    IVec v(d);
    for (std::size_t i = 0; i < d; ++i) {
        IMat minor_mat;
        for (const IVec& row : rows) {
            IVec rr;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) rr.push_back(row[j]);
            minor_mat.push_back(rr);
        }
        Int m = minor_mat.empty() ? Int(1) : det(minor_mat);
        v[i] = ((d - 1 - i) % 2 == 0) ? m : -m;
    }
    return v;
}

// exact inverse of a square rational matrix
inline RMat inverse(RMat a) {
    const std::size_t n = a.size();
    RMat inv(n, RVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("inverse: singular matrix");
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        Rat d = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= d;
            inv[c][j] /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i != c && a[i][c] != 0) {
                Rat f = a[i][c];
                for (std::size_t j = 0; j < n; ++j) {
                    a[i][j] -= f * a[c][j];
                    inv[i][j] -= f * inv[c][j];
                }
            }
        }
    }
    return inv;
}

// Diagonalization D = U * M * V with U, V unimodular, D diagonal with
// non-negative entries.  (Smith form without the divisibility chain; the
// diagonal still presents Z^r / row-lattice as a product of cyclic groups.)
struct DiagonalForm {
    IMat u;    // r x r
    IMat v;    // n x n
    IVec diag; // min(r,n) entries, each >= 0
};

inline DiagonalForm diagonalize(IMat m) {
    const std::size_t r = m.size();
    const std::size_t n = r == 0 ? 0 : m[0].size();
    IMat u(r, IVec(r, 0)), v(n, IVec(n, 0));
    for (std::size_t i = 0; i < r; ++i) u[i][i] = 1;
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1;

    auto row_op = [&](std::size_t i, std::size_t k, const Int& f) {  // row_i -= f*row_k
        for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[k][j];
        for (std::size_t j = 0; j < r; ++j) u[i][j] -= f * u[k][j];
    };
    auto col_op = [&](std::size_t j, std::size_t k, const Int& f) {  // col_j -= f*col_k
        for (std::size_t i = 0; i < r; ++i) m[i][j] -= f * m[i][k];
        for (std::size_t i = 0; i < n; ++i) v[i][j] -= f * v[i][k];
    };

    std::size_t t = std::min(r, n);
    for (std::size_t k = 0; k < t; ++k) {
        // move a nonzero pivot to (k,k)
        std::size_t pi = r, pj = n;
        for (std::size_t i = k; i < r && pi == r; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (m[i][j] != 0) { pi = i; pj = j; break; }
        if (pi == r) break;
        if (pi != k) { std::swap(m[k], m[pi]); std::swap(u[k], u[pi]); }
        if (pj != k) {
            for (std::size_t i = 0; i < r; ++i) std::swap(m[i][k], m[i][pj]);
            for (std::size_t i = 0; i < n; ++i) std::swap(v[i][k], v[i][pj]);
        }
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = k + 1; i < r; ++i) {
                while (m[i][k] != 0) {
                    Int f = floor_div(m[i][k], m[k][k]);
                    row_op(i, k, f);
                    if (m[i][k] != 0) { std::swap(m[i], m[k]); std::swap(u[i], u[k]); }
                }
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                while (m[k][j] != 0) {
                    Int f = floor_div(m[k][j], m[k][k]);
                    col_op(j, k, f);
                    if (m[k][j] != 0) {
                        for (std::size_t i = 0; i < r; ++i) std::swap(m[i][j], m[i][k]);
                        for (std::size_t i = 0; i < n; ++i) std::swap(v[i][j], v[i][k]);
                        again = true;  // column swap may disturb cleared rows
                    }
                }
            }
            for (std::size_t i = k + 1; i < r; ++i)
                if (m[i][k] != 0) again = true;
        }
        if (m[k][k] < 0) {
            for (std::size_t j = 0; j < n; ++j) m[k][j] = -m[k][j];
            for (std::size_t j = 0; j < r; ++j) u[k][j] = -u[k][j];
        }
    }
    DiagonalForm out;
    out.u = std::move(u);
    out.v = std::move(v);
    out.diag.resize(t);
    for (std::size_t k = 0; k < t; ++k) out.diag[k] = m[k][k];
    return out;
}

}  // namespace igusa

#endif
