#ifndef IGUSA_NEWTON_HPP
#define IGUSA_NEWTON_HPP

// Newton polyhedron at the origin: facets with primitive inward normals and
// numerical data (m, sigma), the full face lattice, normal-fan cones,
// candidate poles, the contribution relation, and B1-facet classification.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "igusa/cone.hpp"
#include "igusa/linalg.hpp"
#include "igusa/polynomial.hpp"

namespace igusa {

struct FacetData {
    IVec normal;  // primitive, componentwise >= 0
    Int m;        // min of normal . omega over the support
    Int sigma;    // coordinate sum of the normal
};

struct Face {
    std::vector<IVec> vertices;      // vertices of the polyhedron lying on the face
    std::vector<int> ray_directions; // coordinate axes along which the face is unbounded
    int dim = 0;
    bool compact = false;
    std::vector<int> hyperplanes;    // P_tau: coordinates i with the face inside {x_i = 0}
    std::vector<int> containing_facets;
};

class NewtonPolyhedron {
  public:
    const IntPolynomial& polynomial() const { return f_; }
    int dimension() const { return f_.dimension(); }
    const std::vector<FacetData>& facets() const { return facets_; }
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int i) const { return faces_[(std::size_t)i]; }
    int whole_face_index() const { return whole_index_; }

    // min of k . omega over the support
    Int m_value(const IVec& k) const {
        bool first = true;
        Int m = 0;
        for (const auto& [mon, c] : f_.terms()) {
            Int s = 0;
            for (std::size_t i = 0; i < k.size(); ++i) s += k[i] * mon.e[i];
            if (first || s < m) { m = s; first = false; }
        }
        return m;
    }

    friend NewtonPolyhedron build_newton_polyhedron(const IntPolynomial& f);

    IntPolynomial f_;
    std::vector<FacetData> facets_;
    std::vector<Face> faces_;
    int whole_index_ = -1;
};

namespace detail {

inline bool vec_less(const IVec& a, const IVec& b) { return a < b; }

// smallest face (as vertex/ray pair) containing the given minimizing support
// points: intersection of all facets containing them
struct FaceKey {
    std::vector<IVec> vertices;
    std::vector<int> rays;
    bool operator<(const FaceKey& o) const {
        if (vertices != o.vertices) return vertices < o.vertices;
        return rays < o.rays;
    }
};

inline int affine_dim(const std::vector<IVec>& vertices, const std::vector<int>& rays, int n) {
    if (vertices.empty()) return -1;
    IMat dirs;
    for (std::size_t i = 1; i < vertices.size(); ++i) dirs.push_back(sub(vertices[i], vertices[0]));
    for (int r : rays) {
        IVec e(n, 0);
        e[(std::size_t)r] = 1;
        dirs.push_back(e);
    }
    if (dirs.empty()) return 0;
    return rank(dirs);
}

}  // namespace detail

inline NewtonPolyhedron build_newton_polyhedron(const IntPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("build_newton_polyhedron: zero polynomial");
    if (f.has_constant_term())
        throw std::invalid_argument("build_newton_polyhedron: polynomial must vanish at the origin");
    const int n = f.dimension();
    std::vector<IVec> supp;
    for (const auto& [mon, c] : f.terms()) {
        IVec w(mon.e.begin(), mon.e.end());
        supp.push_back(w);
    }

    NewtonPolyhedron np;
    np.f_ = f;

    // candidate facet normals: kernels of (n-1)-subsets of directions drawn
    // from support-point differences and the coordinate axes
    std::set<IVec> directions;
    for (std::size_t i = 0; i < supp.size(); ++i)
        for (std::size_t j = i + 1; j < supp.size(); ++j) {
            IVec d = primitive_part(sub(supp[i], supp[j]));
            if (!is_zero_vec(d)) {
                IVec nd(d.size());
                for (std::size_t k = 0; k < d.size(); ++k) nd[k] = -d[k];
                directions.insert(std::min(d, nd));  // one representative per line
            }
        }
    for (int i = 0; i < n; ++i) {
        IVec e((std::size_t)n, 0);
        e[(std::size_t)i] = 1;
        directions.insert(e);
    }
    std::vector<IVec> dirs(directions.begin(), directions.end());

    std::set<IVec> normals;
    for (int i = 0; i < n; ++i) {  // coordinate normals are always candidates
        IVec e((std::size_t)n, 0);
        e[(std::size_t)i] = 1;
        normals.insert(e);
    }
    if (n == 1) {
        // single axis: the only facet candidate is e_1
    } else {
        std::vector<std::size_t> sel((std::size_t)(n - 1));
        for (std::size_t i = 0; i < sel.size(); ++i) sel[i] = i;
        if (dirs.size() >= sel.size()) {
            while (true) {
                IMat rows;
                for (std::size_t s : sel) rows.push_back(dirs[s]);
                if (rank(rows) == n - 1) {
                    IVec v = primitive_part(cross_kernel(rows));
                    bool nonneg = true, nonpos = true;
                    for (const Int& x : v) {
                        if (x < 0) nonneg = false;
                        if (x > 0) nonpos = false;
                    }
                    if (nonpos)
                        for (Int& x : v) x = -x;
                    if ((nonneg || nonpos) && !is_zero_vec(v)) normals.insert(v);
                }
                long i = (long)sel.size() - 1;
                while (i >= 0 && sel[(std::size_t)i] == dirs.size() - sel.size() + (std::size_t)i) --i;
                if (i < 0) break;
                ++sel[(std::size_t)i];
                for (std::size_t j = (std::size_t)i + 1; j < sel.size(); ++j) sel[j] = sel[j - 1] + 1;
            }
        }
    }

    // keep candidates whose first meet locus has dimension n-1
    struct RawFacet {
        IVec normal;
        Int m;
        std::vector<IVec> min_points;
        std::vector<int> rays;
    };
    std::vector<RawFacet> raw;
    for (const IVec& v : normals) {
        Int m = np.m_value(v);
        RawFacet rf;
        rf.normal = v;
        rf.m = m;
        for (const IVec& w : supp)
            if (dot(v, w) == m) rf.min_points.push_back(w);
        for (int i = 0; i < n; ++i)
            if (v[(std::size_t)i] == 0) rf.rays.push_back(i);
        if (detail::affine_dim(rf.min_points, rf.rays, n) == n - 1) raw.push_back(std::move(rf));
    }
    // deterministic facet order: descending lexicographic on the normal
    std::sort(raw.begin(), raw.end(),
              [](const RawFacet& a, const RawFacet& b) { return b.normal < a.normal; });

    for (const RawFacet& rf : raw) {
        FacetData fd;
        fd.normal = rf.normal;
        fd.m = rf.m;
        fd.sigma = coord_sum(rf.normal);
        np.facets_.push_back(fd);
    }

    // vertices of the polyhedron: support points uniquely minimizing the sum
    // of the normals of the facets through them (a strictly positive functional
    // exactly when the point is a vertex)
    std::vector<IVec> vertices;
    for (const IVec& w : supp) {
        IVec k((std::size_t)n, 0);
        for (const RawFacet& rf : raw)
            if (dot(rf.normal, w) == rf.m) k = add(k, rf.normal);
        bool strictly_positive = true;
        for (const Int& x : k)
            if (x <= 0) strictly_positive = false;
        if (!strictly_positive) continue;
        Int mk = np.m_value(k);
        if (dot(k, w) != mk) continue;
        int minimizers = 0;
        for (const IVec& w2 : supp)
            if (dot(k, w2) == mk) ++minimizers;
        if (minimizers == 1) vertices.push_back(w);
    }
    std::sort(vertices.begin(), vertices.end());

    // facet faces with their vertex sets
    auto facet_face = [&](std::size_t fi) {
        detail::FaceKey key;
        for (const IVec& w : vertices)
            if (dot(raw[fi].normal, w) == raw[fi].m) key.vertices.push_back(w);
        key.rays = raw[fi].rays;
        return key;
    };

    // face lattice: closure of the facet set under pairwise intersection
    std::set<detail::FaceKey> seen;
    std::vector<detail::FaceKey> pool;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto k = facet_face(i);
        if (seen.insert(k).second) pool.push_back(k);
    }
    for (std::size_t a = 0; a < pool.size(); ++a) {
        for (std::size_t b = a + 1; b < pool.size(); ++b) {
            detail::FaceKey k;
            std::set_intersection(pool[a].vertices.begin(), pool[a].vertices.end(),
                                  pool[b].vertices.begin(), pool[b].vertices.end(),
                                  std::back_inserter(k.vertices));
            if (k.vertices.empty()) continue;
            std::set_intersection(pool[a].rays.begin(), pool[a].rays.end(),
                                  pool[b].rays.begin(), pool[b].rays.end(),
                                  std::back_inserter(k.rays));
            if (seen.insert(k).second) pool.push_back(k);
        }
    }

    // assemble faces; the whole polyhedron comes last
    auto make_face = [&](const detail::FaceKey& key) {
        Face face;
        face.vertices = key.vertices;
        face.ray_directions = key.rays;
        face.dim = detail::affine_dim(key.vertices, key.rays, n);
        face.compact = key.rays.empty();
        for (int i = 0; i < n; ++i) {
            bool zero = true;
            for (const IVec& w : key.vertices)
                if (w[(std::size_t)i] != 0) zero = false;
            for (int r : key.rays)
                if (r == i) zero = false;
            if (zero) face.hyperplanes.push_back(i);
        }
        for (std::size_t fi = 0; fi < raw.size(); ++fi) {
            bool contains = true;
            for (const IVec& w : key.vertices)
                if (dot(raw[fi].normal, w) != raw[fi].m) contains = false;
            for (int r : key.rays)
                if (raw[fi].normal[(std::size_t)r] != 0) contains = false;
            if (contains) face.containing_facets.push_back((int)fi);
        }
        return face;
    };

    // sort proper faces by descending dimension, then by data, for stability
    std::vector<Face> proper;
    for (const auto& key : pool) proper.push_back(make_face(key));
    std::sort(proper.begin(), proper.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim > b.dim;
        if (a.vertices != b.vertices) return a.vertices < b.vertices;
        return a.ray_directions < b.ray_directions;
    });
    np.faces_ = std::move(proper);

    Face whole;
    whole.vertices = vertices;
    for (int i = 0; i < n; ++i) whole.ray_directions.push_back(i);
    whole.dim = n;
    whole.compact = false;
    np.whole_index_ = (int)np.faces_.size();
    np.faces_.push_back(std::move(whole));
    return np;
}

// first meet locus: minimum value and the smallest face containing all
// minimizing support points
inline std::pair<Int, int> m_and_face(const NewtonPolyhedron& np, const IVec& k) {
    for (const Int& x : k)
        if (x < 0) throw std::invalid_argument("m_and_face: k must be componentwise non-negative");
    Int m = np.m_value(k);
    std::vector<int> rays;
    for (std::size_t i = 0; i < k.size(); ++i)
        if (k[i] == 0) rays.push_back((int)i);
    // facets containing every minimizer and all rays of F(k)
    std::vector<IVec> mins;
    for (const auto& [mon, c] : np.polynomial().terms()) {
        IVec w(mon.e.begin(), mon.e.end());
        Int s = dot(k, w);
        if (s == m) mins.push_back(w);
    }
    std::set<int> active;
    for (std::size_t fi = 0; fi < np.facets().size(); ++fi) {
        const auto& fd = np.facets()[fi];
        bool ok = true;
        for (const IVec& w : mins)
            if (dot(fd.normal, w) != fd.m) ok = false;
        for (int r : rays)
            if (fd.normal[(std::size_t)r] != 0) ok = false;
        if (ok) active.insert((int)fi);
    }
    if (active.empty()) return {m, np.whole_face_index()};
    for (std::size_t i = 0; i < np.faces().size(); ++i) {
        const Face& face = np.faces()[i];
        if ((int)i == np.whole_face_index()) continue;
        std::set<int> cf(face.containing_facets.begin(), face.containing_facets.end());
        if (cf == active) return {m, (int)i};
    }
    throw std::logic_error("m_and_face: face lattice lookup failed");
}

// restriction of f to the terms whose exponents lie on the face; the whole
// polyhedron (no containing facets) restricts to f itself
inline IntPolynomial face_restriction(const NewtonPolyhedron& np, const Face& tau) {
    IntPolynomial r(np.polynomial().dimension());
    for (const auto& [mon, c] : np.polynomial().terms()) {
        IVec w(mon.e.begin(), mon.e.end());
        bool on = true;
        for (int fi : tau.containing_facets) {
            const auto& fd = np.facets()[(std::size_t)fi];
            if (dot(fd.normal, w) != fd.m) { on = false; break; }
        }
        if (on) r.add_term(mon, c);
    }
    if (r.is_zero()) throw std::logic_error("face_restriction: empty restriction");
    return r;
}

// the normal-fan cone of a proper face: the cone spanned by the primitive
// normals of all facets containing it
inline std::vector<IVec> face_cone_generators(const NewtonPolyhedron& np, const Face& tau) {
    if (tau.containing_facets.empty())
        throw std::invalid_argument("face_cone_generators: the cone of the whole polyhedron is {0}");
    std::vector<IVec> gens;
    for (int fi : tau.containing_facets) gens.push_back(np.facets()[(std::size_t)fi].normal);
    return gens;
}

// ---------------------------------------------------------------------------
// candidate poles and the contribution relation

// Exact complex candidate s0 = -q + 2*pi*i*r / log p; the defining property
// p^(sigma + m*s0) = 1 for a facet reduces to sigma = m*q and m*r integral.
struct ComplexCandidate {
    Rat q;
    Rat r;
};

struct CandidatePole {
    Rat q;                                    // real part is -q
    bool universal = false;                   // the -1 family from the L-factors
    std::vector<std::pair<Int, Int>> families;  // realizing (m, sigma) pairs
    std::vector<int> contributing_facets;
};

inline std::vector<CandidatePole> candidate_poles(const NewtonPolyhedron& np) {
    std::map<Rat, CandidatePole> by_q;
    {
        CandidatePole universal;
        universal.q = 1;
        universal.universal = true;
        by_q.emplace(Rat(1), universal);
    }
    for (std::size_t fi = 0; fi < np.facets().size(); ++fi) {
        const auto& fd = np.facets()[fi];
        if (fd.m == 0) continue;
        Rat q = Rat(fd.sigma, fd.m);
        auto it = by_q.find(q);
        if (it == by_q.end()) {
            CandidatePole cp;
            cp.q = q;
            it = by_q.emplace(q, cp).first;
        }
        std::pair<Int, Int> fam{fd.m, fd.sigma};
        auto& fams = it->second.families;
        if (std::find(fams.begin(), fams.end(), fam) == fams.end()) fams.push_back(fam);
        it->second.contributing_facets.push_back((int)fi);
    }
    std::vector<CandidatePole> out;
    for (auto& [q, cp] : by_q) {
        std::sort(cp.families.begin(), cp.families.end());
        out.push_back(cp);
    }
    std::sort(out.begin(), out.end(), [](const CandidatePole& a, const CandidatePole& b) {
        return a.q < b.q;
    });
    return out;
}

inline bool facet_contributes(const FacetData& fd, const ComplexCandidate& s0) {
    if (fd.m == 0) return false;
    if (Rat(fd.sigma) != Rat(fd.m) * s0.q) return false;
    return is_integer(Rat(fd.m) * s0.r);
}

inline bool contributes(const NewtonPolyhedron& np, int facet_index, const ComplexCandidate& s0) {
    return facet_contributes(np.facets()[(std::size_t)facet_index], s0);
}

// faces contained in at least one contributing facet
inline std::vector<int> contributing_faces(const NewtonPolyhedron& np, const ComplexCandidate& s0) {
    std::vector<int> contrib_facets;
    for (std::size_t fi = 0; fi < np.facets().size(); ++fi)
        if (facet_contributes(np.facets()[fi], s0)) contrib_facets.push_back((int)fi);
    std::vector<int> out;
    for (std::size_t i = 0; i < np.faces().size(); ++i) {
        const Face& face = np.faces()[i];
        for (int fi : face.containing_facets) {
            if (std::find(contrib_facets.begin(), contrib_facets.end(), fi) != contrib_facets.end()) {
                out.push_back((int)i);
                break;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// B1 classification

enum class B1Kind { NotB1, B1Simplex, NonCompactB1 };

struct B1Classification {
    B1Kind kind = B1Kind::NotB1;
    std::vector<int> variables;  // all variables for which the facet is B1
};

inline B1Classification classify_b1(const NewtonPolyhedron& np, const Face& facet) {
    const int n = np.dimension();
    B1Classification out;
    if (facet.dim != n - 1) throw std::invalid_argument("classify_b1: not a facet");

    if (facet.compact) {
        // simplex test: n affinely independent vertices
        if ((int)facet.vertices.size() != n) return out;
        if (detail::affine_dim(facet.vertices, {}, n) != n - 1) return out;
        for (int i = 0; i < n; ++i) {
            int at0 = 0, at1 = 0;
            for (const IVec& w : facet.vertices) {
                if (w[(std::size_t)i] == 0) ++at0;
                else if (w[(std::size_t)i] == 1) ++at1;
            }
            if (at0 == n - 1 && at1 == 1) out.variables.push_back(i);
        }
        if (!out.variables.empty()) out.kind = B1Kind::B1Simplex;
        return out;
    }

    if (n < 3) return out;
    if (facet.ray_directions.size() != 1) return out;  // non-compact for exactly one variable
    const int j = facet.ray_directions[0];
    // project away coordinate j and test the image for the simplex condition
    std::set<IVec> proj;
    for (const IVec& w : facet.vertices) {
        IVec q;
        for (std::size_t k = 0; k < w.size(); ++k)
            if ((int)k != j) q.push_back(w[k]);
        proj.insert(q);
    }
    std::vector<IVec> pv(proj.begin(), proj.end());
    if ((int)pv.size() != n - 1) return out;
    if (detail::affine_dim(pv, {}, n - 1) != n - 2) return out;
    for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        int pi = i < j ? i : i - 1;  // index of variable i in the projection
        int at0 = 0, at1 = 0;
        for (const IVec& q : pv) {
            if (q[(std::size_t)pi] == 0) ++at0;
            else if (q[(std::size_t)pi] == 1) ++at1;
        }
        if (at0 == n - 2 && at1 == 1) out.variables.push_back(i);
    }
    if (!out.variables.empty()) out.kind = B1Kind::NonCompactB1;
    return out;
}

// ---------------------------------------------------------------------------
// expected order and the main-theorem hypotheses

// Upper bound for the pole order: the largest number of contributing
// generators in any simplicial piece of any compact-face cone, plus one for
// the universal factor when s0 sits on the -1 family.
inline int expected_order(const NewtonPolyhedron& np, const ComplexCandidate& s0) {
    int best = 0;
    for (std::size_t i = 0; i < np.faces().size(); ++i) {
        const Face& face = np.faces()[i];
        if (!face.compact) continue;
        auto pieces = simplicial_decomposition(face_cone_generators(np, face));
        for (const auto& piece : pieces) {
            int cnt = 0;
            for (const IVec& g : piece.generators) {
                FacetData fd;
                fd.normal = g;
                fd.m = np.m_value(g);
                fd.sigma = coord_sum(g);
                if (facet_contributes(fd, s0)) ++cnt;
            }
            best = std::max(best, cnt);
        }
    }
    if (s0.q == 1 && is_integer(s0.r)) return best + 1;
    return best;
}

struct HypothesisCheck {
    bool applies = false;
    std::string reason;  // empty when the hypotheses hold
};

// Hypotheses of the vanishing theorem for a candidate class with q != 1:
// every contributing facet is B1, and each pair of contributing facets is
// either B1 for a common variable or shares at most one point.
inline HypothesisCheck check_theorem_hypotheses(const NewtonPolyhedron& np,
                                                const ComplexCandidate& s0) {
    HypothesisCheck out;
    if (s0.q == 1) {
        out.reason = "real part is -1";
        return out;
    }
    std::vector<int> contrib;
    for (std::size_t fi = 0; fi < np.facets().size(); ++fi)
        if (facet_contributes(np.facets()[fi], s0)) contrib.push_back((int)fi);
    if (contrib.empty()) {
        out.reason = "not a candidate pole";
        return out;
    }
    // facet index -> face object
    auto facet_face = [&](int fi) -> const Face& {
        for (const Face& face : np.faces())
            if (face.dim == np.dimension() - 1 &&
                std::find(face.containing_facets.begin(), face.containing_facets.end(), fi) !=
                    face.containing_facets.end() &&
                face.containing_facets.size() == 1)
                return face;
        throw std::logic_error("facet face not found");
    };
    std::vector<B1Classification> cls;
    for (int fi : contrib) {
        auto c = classify_b1(np, facet_face(fi));
        if (c.kind == B1Kind::NotB1) {
            out.reason = "contributing facet is not B1";
            return out;
        }
        cls.push_back(c);
    }
    for (std::size_t a = 0; a < contrib.size(); ++a) {
        for (std::size_t b = a + 1; b < contrib.size(); ++b) {
            bool same_variable = false;
            for (int va : cls[a].variables)
                for (int vb : cls[b].variables)
                    if (va == vb) same_variable = true;
            if (same_variable) continue;
            const Face& fa = facet_face(contrib[a]);
            const Face& fb = facet_face(contrib[b]);
            std::vector<IVec> common_v;
            std::set_intersection(fa.vertices.begin(), fa.vertices.end(), fb.vertices.begin(),
                                  fb.vertices.end(), std::back_inserter(common_v));
            std::vector<int> common_r;
            std::set_intersection(fa.ray_directions.begin(), fa.ray_directions.end(),
                                  fb.ray_directions.begin(), fb.ray_directions.end(),
                                  std::back_inserter(common_r));
            bool at_most_point = common_r.empty() && common_v.size() <= 1;
            if (!at_most_point) {
                out.reason = "contributing facets share an edge and differ in B1 variable";
                return out;
            }
        }
    }
    out.applies = true;
    return out;
}

}  // namespace igusa

#endif
