#ifndef IGUSA_CONE_HPP
#define IGUSA_CONE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "igusa/linalg.hpp"

namespace igusa {

// An open simplicial cone: strictly positive combinations of independent
// primitive generators.  Its dimension equals the number of generators.
struct SimplicialCone {
    std::vector<IVec> generators;
    int dim() const { return (int)generators.size(); }
};

// multiplicity = gcd of the absolute values of all maximal minors of the
// generator matrix; equals the lattice-point count of the fundamental
// parallelepiped
inline Int multiplicity(const std::vector<IVec>& gens) {
    const std::size_t r = gens.size();
    if (r == 0) throw std::invalid_argument("multiplicity: no generators");
    const std::size_t n = gens[0].size();
    if (r > n || rank(IMat(gens.begin(), gens.end())) != (int)r)
        throw std::invalid_argument("multiplicity: generators must be linearly independent");
    Int g = 0;
    std::vector<std::size_t> cols(r);
    for (std::size_t i = 0; i < r; ++i) cols[i] = i;
    while (true) {
        IMat sub(r, IVec(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) sub[i][j] = gens[i][cols[j]];
        g = int_gcd(g, det(sub));
        if (g == 1) return g;
        long i = (long)r - 1;
        while (i >= 0 && cols[i] == n - r + i) --i;
        if (i < 0) break;
        ++cols[i];
        for (std::size_t j = i + 1; j < r; ++j) cols[j] = cols[j - 1] + 1;
    }
    return g;
}

enum class PipedConvention { HalfOpenLow, HalfOpenHigh };  // coefficients in [0,1) resp. (0,1]

struct ParallelepipedSet {
    PipedConvention convention;
    std::vector<IVec> points;
    std::vector<RVec> coords;  // coefficients of each point w.r.t. the generators
    Int mu;                    // = points.size()
};

// Enumerate the lattice points of the fundamental parallelepiped spanned by
// independent generator rows.  Runs in O(mu) via a diagonalization of the
// generator matrix: the quotient of the saturated span lattice by the row
// lattice is a product of cyclic groups whose representatives map to
// generator-coordinates y_i * U / d.
inline ParallelepipedSet enumerate_parallelepiped(const std::vector<IVec>& gens,
                                                  PipedConvention conv) {
    const std::size_t r = gens.size();
    if (r == 0) throw std::invalid_argument("enumerate_parallelepiped: no generators");
    const std::size_t n = gens[0].size();
    IMat m(gens.begin(), gens.end());
    if (rank(m) != (int)r)
        throw std::invalid_argument("enumerate_parallelepiped: dependent generators");
    DiagonalForm df = diagonalize(m);
    for (const Int& d : df.diag)
        if (d <= 0) throw std::invalid_argument("enumerate_parallelepiped: dependent generators");

    ParallelepipedSet out;
    out.convention = conv;
    out.mu = 1;
    for (const Int& d : df.diag) out.mu *= d;

    IVec y(r, 0);
    while (true) {
        RVec h(r, Rat(0));
        for (std::size_t i = 0; i < r; ++i) {
            if (y[i] == 0) continue;
            Rat f(y[i], df.diag[i]);
            for (std::size_t j = 0; j < r; ++j) h[j] += f * Rat(df.u[i][j]);
        }
        // shift each coordinate into the convention's range
        for (std::size_t j = 0; j < r; ++j) {
            Rat fp = frac_part(h[j]);
            if (conv == PipedConvention::HalfOpenHigh && fp == 0) fp = 1;
            h[j] = fp;
        }
        RVec pt(n, Rat(0));
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < n; ++k) pt[k] += h[j] * Rat(gens[j][k]);
        IVec ipt(n);
        for (std::size_t k = 0; k < n; ++k) {
            if (!is_integer(pt[k])) throw std::logic_error("parallelepiped point not integral");
            ipt[k] = boost::multiprecision::numerator(pt[k]);
        }
        out.points.push_back(std::move(ipt));
        out.coords.push_back(std::move(h));
        // odometer over (y_i mod d_i)
        std::size_t i = 0;
        while (i < r) {
            ++y[i];
            if (y[i] < df.diag[i]) break;
            y[i] = 0;
            ++i;
        }
        if (i == r) break;
    }
    return out;
}

namespace detail {

// Placing-triangulation state over a growing generator list.
class Placing {
  public:
    void insert(const IVec& v) {
        gens_.push_back(v);
        int t = (int)gens_.size() - 1;
        if (cells_.empty()) {
            if (is_zero_vec(v)) throw std::invalid_argument("zero generator");
            cells_.push_back({t});
            basis_ = {t};
            return;
        }
        RVec vr(v.begin(), v.end());
        auto in_span = solve_row_combination(basis_rows(), vr);
        if (!in_span) {  // dimension grows: join v to every cell
            for (auto& c : cells_) c.push_back(t);
            basis_.push_back(t);
            return;
        }
        // already inside the current cone?
        for (const auto& c : cells_)
            if (closed_membership(c, vr)) return;
        // join v to the boundary walls it sees
        auto walls = wall_census();
        std::vector<std::vector<int>> fresh;
        for (const auto& [wall, owners] : walls) {
            if (owners.size() != 1) continue;
            RVec a = wall_normal(wall, owners[0]);
            if (dot(a, span_coords(vr)) < 0) {
                auto cell = wall;
                cell.push_back(t);
                fresh.push_back(cell);
            }
        }
        if (fresh.empty())
            throw std::invalid_argument("simplicial decomposition: cone is not pointed");
        for (auto& c : fresh) cells_.push_back(std::move(c));
    }

    const std::vector<std::vector<int>>& cells() const { return cells_; }
    const std::vector<IVec>& gens() const { return gens_; }

    // walls of the final complex that lie on the boundary of the support cone
    std::vector<std::vector<int>> boundary_walls() const {
        std::vector<std::vector<int>> out;
        for (const auto& [wall, owners] : wall_census())
            if (owners.size() == 1) out.push_back(wall);
        return out;
    }

    // is cone(sub) contained in cone(walls' generators)?
    bool subset_of_wall(const std::vector<int>& sub, const std::vector<int>& wall) const {
        RMat rows;
        for (int g : wall) rows.push_back(RVec(gens_[g].begin(), gens_[g].end()));
        for (int g : sub) {
            auto sol = solve_row_combination(rows, RVec(gens_[g].begin(), gens_[g].end()));
            if (!sol) return false;
            for (const Rat& c : *sol)
                if (c < 0) return false;
        }
        return true;
    }

  private:
    RMat basis_rows() const {
        RMat rows;
        for (int b : basis_) rows.push_back(RVec(gens_[b].begin(), gens_[b].end()));
        return rows;
    }

    RVec span_coords(const RVec& x) const {
        auto sol = solve_row_combination(basis_rows(), x);
        if (!sol) throw std::logic_error("point outside current span");
        return *sol;
    }

    bool closed_membership(const std::vector<int>& cell, const RVec& x) const {
        RMat rows;
        for (int g : cell) rows.push_back(RVec(gens_[g].begin(), gens_[g].end()));
        auto sol = solve_row_combination(rows, x);
        if (!sol) return false;
        for (const Rat& c : *sol)
            if (c < 0) return false;
        return true;
    }

    std::map<std::vector<int>, std::vector<int>> wall_census() const {
        std::map<std::vector<int>, std::vector<int>> walls;  // wall -> owning cell indices
        for (std::size_t ci = 0; ci < cells_.size(); ++ci) {
            const auto& c = cells_[ci];
            for (std::size_t skip = 0; skip < c.size(); ++skip) {
                std::vector<int> w;
                for (std::size_t j = 0; j < c.size(); ++j)
                    if (j != skip) w.push_back(c[j]);
                std::sort(w.begin(), w.end());
                walls[w].push_back((int)ci);
            }
        }
        return walls;
    }

    // inward normal of a wall in span coordinates, oriented toward its cell
    RVec wall_normal(const std::vector<int>& wall, int owner) const {
        const std::size_t d = basis_.size();
        RMat wr;
        for (int g : wall) wr.push_back(span_coords(RVec(gens_[g].begin(), gens_[g].end())));
        RVec a = kernel_vector(wr, d);
        int opp = -1;
        for (int g : cells_[owner]) {
            if (std::find(wall.begin(), wall.end(), g) == wall.end()) { opp = g; break; }
        }
        Rat s = dot(a, span_coords(RVec(gens_[opp].begin(), gens_[opp].end())));
        if (s == 0) throw std::logic_error("degenerate wall");
        if (s < 0)
            for (Rat& x : a) x = -x;
        return a;
    }

    static RVec kernel_vector(const RMat& rows, std::size_t d) {
        // one nonzero solution of rows * a^T = 0, rows has d-1 independent rows
        RMat m = rows;
        std::vector<int> pivot_of_col(d, -1);
        std::size_t row = 0;
        for (std::size_t c = 0; c < d && row < m.size(); ++c) {
            std::size_t piv = row;
            while (piv < m.size() && m[piv][c] == 0) ++piv;
            if (piv == m.size()) continue;
            std::swap(m[row], m[piv]);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (i != row && m[i][c] != 0) {
                    Rat f = m[i][c] / m[row][c];
                    for (std::size_t j = c; j < d; ++j) m[i][j] -= f * m[row][j];
                }
            }
            pivot_of_col[c] = (int)row;
            ++row;
        }
        std::size_t free_col = 0;
        while (free_col < d && pivot_of_col[free_col] >= 0) ++free_col;
        if (free_col == d) throw std::logic_error("kernel_vector: full rank");
        RVec a(d, Rat(0));
        a[free_col] = 1;
        for (std::size_t c = 0; c < d; ++c) {
            int pr = pivot_of_col[c];
            if (pr >= 0) a[c] = -m[pr][free_col] / m[pr][c];
        }
        return a;
    }

    std::vector<IVec> gens_;
    std::vector<std::vector<int>> cells_;
    std::vector<int> basis_;
};

}  // namespace detail

// Decompose the open cone strictly positively spanned by the given generators
// into open simplicial cones whose generators are drawn from the input list.
// The returned pieces partition the open cone set-theoretically: full-dimension
// pieces plus the lower-dimensional separating walls between them.
inline std::vector<SimplicialCone> simplicial_decomposition(const std::vector<IVec>& gens) {
    if (gens.empty()) throw std::invalid_argument("simplicial_decomposition: zero cone");
    for (const IVec& g : gens) {
        if (is_zero_vec(g)) throw std::invalid_argument("simplicial_decomposition: zero generator");
        for (const Int& x : g)
            if (x < 0) throw std::invalid_argument("simplicial_decomposition: generators must be non-negative");
    }
    detail::Placing pl;
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) pl.insert(*it);

    // gather every face of every cell, then keep those interior to the cone
    std::set<std::vector<int>> faces;
    for (const auto& cell : pl.cells()) {
        const std::size_t d = cell.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << d); ++mask) {
            std::vector<int> f;
            for (std::size_t j = 0; j < d; ++j)
                if (mask & (std::size_t(1) << j)) f.push_back(cell[j]);
            std::sort(f.begin(), f.end());
            faces.insert(std::move(f));
        }
    }
    auto bwalls = pl.boundary_walls();
    const int last = (int)pl.gens().size() - 1;
    std::vector<SimplicialCone> out;
    for (const auto& f : faces) {
        bool boundary = false;
        for (const auto& w : bwalls) {
            if (pl.subset_of_wall(f, w)) { boundary = true; break; }
        }
        if (boundary) continue;
        // report generators in input order (insertion ran over the reversed list)
        std::vector<int> input_pos;
        for (int g : f) input_pos.push_back(last - g);
        std::sort(input_pos.begin(), input_pos.end());
        SimplicialCone sc;
        for (int p : input_pos) sc.generators.push_back(gens[p]);
        out.push_back(std::move(sc));
    }
    std::sort(out.begin(), out.end(), [](const SimplicialCone& a, const SimplicialCone& b) {
        if (a.generators.size() != b.generators.size())
            return a.generators.size() > b.generators.size();
        return a.generators < b.generators;
    });
    return out;
}

}  // namespace igusa

#endif
