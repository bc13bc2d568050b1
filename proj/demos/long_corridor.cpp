// Builds the q=3, d=3 cyclic window complex, extracts a corridor, doubles
// it into a pseudo-manifold, and prints the measured diameters.

#include <iostream>

#include "scx/scx.hpp"

int main() {
    using namespace scx;

    LfsrComplexResult r = build_lfsr_complex(3, 3);
    std::cout << "cycle: " << r.complex.facet_count() << " facets on "
              << r.complex.ambient_vertices() << " vertices, poly " << r.poly.to_string()
              << ", diameter " << diameter(r.complex) << "\n";

    PureComplex corridor = drop_facet(r.complex, 0);
    std::cout << "corridor: " << corridor.facet_count() << " facets, diameter "
              << diameter(corridor) << "\n";

    PureComplex doubled = double_corridor(corridor);
    std::cout << "doubled: " << doubled.facet_count() << " facets on "
              << doubled.ambient_vertices() << " vertices, pseudo-manifold "
              << (is_pseudo_manifold(doubled) ? "yes" : "no") << ", diameter "
              << diameter(doubled) << "\n";
    return 0;
}
