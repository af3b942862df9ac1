// List the lattice points of a three-dimensional fundamental parallelepiped
// two ways (structure formulas vs generic enumeration) and show the
// multiplicity profile.

#include <iostream>

#include "igusa/piped3d.hpp"

using namespace igusa;

int main() {
    IVec w1{Int(2), Int(4), Int(3)}, w2{Int(0), Int(1), Int(0)}, w3{Int(0), Int(0), Int(1)};
    auto profile = mu_profile(w1, w2, w3);
    std::cout << "mu = " << profile.mu << ", pair multiplicities (" << profile.mu1 << ","
              << profile.mu2 << "," << profile.mu3 << ")\n";

    auto closed = parallelepiped_points_3d(w1, w2, w3);
    std::cout << "closed-form points:\n";
    for (std::size_t i = 0; i < closed.points.size(); ++i) {
        std::cout << "  (";
        for (int j = 0; j < 3; ++j) std::cout << (j ? "," : "") << closed.points[i][(std::size_t)j];
        std::cout << ")  coordinates (";
        for (int j = 0; j < 3; ++j)
            std::cout << (j ? "," : "") << to_string(closed.coords[i][(std::size_t)j]);
        std::cout << ")\n";
    }

    auto enumerated = enumerate_parallelepiped({w1, w2, w3}, PipedConvention::HalfOpenLow);
    std::cout << "generic enumeration found " << enumerated.points.size() << " points\n";
    return 0;
}
