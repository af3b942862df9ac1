#ifndef IGUSA_FACE_COUNTS_HPP
#define IGUSA_FACE_COUNTS_HPP

// Structural classification of compact faces whose torus counts (and motivic
// classes) admit closed forms: vertices vanish, edges with one vertex in a
// coordinate hyperplane and the other at height one are solvable for that
// variable, and B1-simplex facets reduce to the complement of their base.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "igusa/newton.hpp"
#include "igusa/poly.hpp"

namespace igusa {

enum class TorusCountForm { Vertex, SolvableEdge, B1Facet, Opaque };

struct FaceCountClass {
    TorusCountForm form = TorusCountForm::Opaque;
    int base_face = -1;  // for B1Facet: index of the chosen base face
};

namespace detail {

inline bool edge_is_solvable(const Face& tau) {
    if (tau.dim != 1 || !tau.compact || tau.vertices.size() != 2) return false;
    const IVec& c = tau.vertices[0];
    const IVec& d = tau.vertices[1];
    for (std::size_t i = 0; i < c.size(); ++i) {
        if ((c[i] == 0 && d[i] == 1) || (c[i] == 1 && d[i] == 0)) return true;
    }
    return false;
}

// index of the face whose vertex set matches exactly (compact, given dim)
inline int find_face_by_vertices(const NewtonPolyhedron& np, std::vector<IVec> verts, int dim) {
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 0; i < np.faces().size(); ++i) {
        const Face& f = np.faces()[i];
        if (f.dim != dim || !f.compact) continue;
        if (f.vertices == verts) return (int)i;
    }
    return -1;
}

}  // namespace detail

inline FaceCountClass classify_torus_count(const NewtonPolyhedron& np, int face_index) {
    const Face& tau = np.faces()[(std::size_t)face_index];
    const int n = np.dimension();
    FaceCountClass out;
    if (!tau.compact) throw std::invalid_argument("classify_torus_count: face must be compact");
    if (tau.dim == 0) {
        out.form = TorusCountForm::Vertex;
        return out;
    }
    if (detail::edge_is_solvable(tau)) {
        out.form = TorusCountForm::SolvableEdge;
        return out;
    }
    if (tau.dim == n - 1) {
        auto cls = classify_b1(np, tau);
        if (cls.kind == B1Kind::B1Simplex) {
            // lexicographically smallest base among the B1 variables
            std::vector<IVec> best;
            for (int var : cls.variables) {
                std::vector<IVec> base;
                for (const IVec& w : tau.vertices)
                    if (w[(std::size_t)var] == 0) base.push_back(w);
                std::sort(base.begin(), base.end());
                if (best.empty() || base < best) best = base;
            }
            int bi = detail::find_face_by_vertices(np, best, n - 2);
            if (bi >= 0) {
                out.form = TorusCountForm::B1Facet;
                out.base_face = bi;
                return out;
            }
        }
    }
    return out;
}

// Registry mapping opaque faces to formal symbol variables.  Variable 0 of the
// multivariate ring is reserved for the distinguished symbol (P or L);
// variables >= 1 carry reduced torus counts (or classes) of opaque faces.
struct SymbolRegistry {
    std::map<int, std::size_t> symbol_of_face;
    std::vector<int> face_of_symbol;  // slot 0 unused

    SymbolRegistry() : face_of_symbol(1, -1) {}

    std::size_t intern(int face_index) {
        auto it = symbol_of_face.find(face_index);
        if (it != symbol_of_face.end()) return it->second;
        std::size_t idx = face_of_symbol.size();
        face_of_symbol.push_back(face_index);
        symbol_of_face.emplace(face_index, idx);
        return idx;
    }
};

// Reduced count/class of a compact face in the torus of its free variables:
// closed form where the structure allows, otherwise a fresh symbol.  The same
// recursion serves the symbolic-p ring (variable 0 = P) and the motivic ring
// (variable 0 = L).
inline MultiPoly reduced_face_count(const NewtonPolyhedron& np, int face_index,
                                    SymbolRegistry& registry) {
    const Face& tau = np.faces()[(std::size_t)face_index];
    const int n = np.dimension();
    const int free_vars = n - (int)tau.hyperplanes.size();
    MultiPoly qm1 = MultiPoly::variable(0) - MultiPoly(1);  // P - 1 (or L - 1)
    auto qm1_pow = [&](int e) {
        MultiPoly r(1);
        for (int i = 0; i < e; ++i) r = r * qm1;
        return r;
    };
    FaceCountClass cls = classify_torus_count(np, face_index);
    switch (cls.form) {
        case TorusCountForm::Vertex:
            return MultiPoly(0);
        case TorusCountForm::SolvableEdge:
            return qm1_pow(free_vars - 1);
        case TorusCountForm::B1Facet: {
            const Face& base = np.faces()[(std::size_t)cls.base_face];
            MultiPoly base_count = reduced_face_count(np, cls.base_face, registry);
            return qm1_pow(n - 1) - qm1_pow((int)base.hyperplanes.size() - 1) * base_count;
        }
        case TorusCountForm::Opaque:
        default:
            return MultiPoly::variable(registry.intern(face_index));
    }
}

// full-torus count: the reduced count times (q-1) per coordinate hyperplane
inline MultiPoly full_face_count(const NewtonPolyhedron& np, int face_index,
                                 SymbolRegistry& registry) {
    const Face& tau = np.faces()[(std::size_t)face_index];
    MultiPoly qm1 = MultiPoly::variable(0) - MultiPoly(1);
    MultiPoly r = reduced_face_count(np, face_index, registry);
    for (std::size_t i = 0; i < tau.hyperplanes.size(); ++i) r = r * qm1;
    return r;
}

}  // namespace igusa

#endif
