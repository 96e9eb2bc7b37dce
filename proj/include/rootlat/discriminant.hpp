#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rootlat/lattice.hpp"

namespace rootlat {

// Discriminant group A_R = R^/R with its standard generators, which are
// dual basis vectors of selected vertices. generator_squares are the exact
// norms of those vectors; reduce with square_mod2 when only the class of the
// quadratic form value matters.
struct DiscriminantGroup {
    std::vector<Int> invariant_factors; // nontrivial, each divides the next
    std::vector<std::pair<std::string, LatticeVector>> generators;
    std::vector<Rat> generator_squares;

    Int order() const;
    bool trivial() const { return invariant_factors.empty(); }
};

DiscriminantGroup discriminant_group(const IrreducibleRootLattice& L);

// Residues of v against the group generators, one per invariant factor;
// all-zero exactly when v lies in the lattice itself.
std::vector<long> coset_of(const IrreducibleRootLattice& L, const LatticeVector& v);

// Per-component residue tuples.
std::vector<std::vector<long>> discriminant_class(const CompositeLattice& L, const LatticeVector& v);

// Representative of q mod 2Z in (-2, 0].
Rat square_mod2(const Rat& q);

} // namespace rootlat
