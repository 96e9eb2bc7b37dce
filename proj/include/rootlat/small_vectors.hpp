#pragma once

#include <string>
#include <vector>

#include "rootlat/lattice.hpp"
#include "rootlat/weyl.hpp"

namespace rootlat {

struct SmallVectorOrbit {
    OrbitSummary orbit;
    bool in_dual_minus_lattice = false; // elements lie outside R
};

// Weyl-orbit decomposition of the vectors attaining the k-th distinct norm
// value in R^ (k = 1 is closest to zero).
struct SmallVectorReport {
    std::string lattice;
    int k = 0;
    Rat value;
    std::vector<SmallVectorOrbit> orbits;
};

// All nonzero v in L^ with bound <= v.v < 0, sorted lexicographically.
// Complete by construction: dual coordinates m_i = v.v_i satisfy
// m_i^2 <= |bound| |v_i^2| (Cauchy-Schwarz), and the recursive search prunes
// with the exact diagonalized form. Rank capped at 10.
std::vector<LatticeVector> enumerate_dual_up_to(const IrreducibleRootLattice& L, const Rat& bound);

// Rank capped at 10, k capped at 5.
SmallVectorReport kth_smallest(const IrreducibleRootLattice& L, int k);

// Orbits of all nonzero vectors in L^ \ L of square >= -2; the admissible
// component set for reduction and certification. Elements are populated.
std::vector<OrbitSummary> in_scope_orbits(const IrreducibleRootLattice& L);

} // namespace rootlat
