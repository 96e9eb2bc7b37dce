#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rootlat/lattice.hpp"

namespace rootlat {

struct OrbitSummary {
    LatticeVector representative; // canonical element, pairs >= 0 with every basis vector
    std::size_t size = 0;
    std::vector<LatticeVector> elements; // sorted; empty unless requested
    std::string generator_label;         // "a1^", "root", or "" when neither applies
};

// Simple reflection s_i(w) = w + (w.v_i) v_i, an isometry for the roots v_i.
LatticeVector reflect(const IrreducibleRootLattice& L, const LatticeVector& w, int i);
LatticeVector reflect(const CompositeLattice& L, const LatticeVector& w, int i);

// The unique orbit element pairing non-negatively with every basis vector,
// reached by greedy reflection. Two vectors are Weyl-equivalent iff their
// canonical representatives coincide.
LatticeVector canonical_rep(const IrreducibleRootLattice& L, const LatticeVector& w);
LatticeVector canonical_rep(const CompositeLattice& L, const LatticeVector& w);

// All vectors of square -2 with integral coefficients; rank capped at 12.
std::vector<LatticeVector> all_roots(const IrreducibleRootLattice& L);
std::vector<LatticeVector> all_roots(const CompositeLattice& L);

LatticeVector highest_root(const IrreducibleRootLattice& L);

// Vertices whose coefficient in the highest root equals 1 (computed, not
// looked up). 1-based indices.
std::vector<int> simple_vertices(const IrreducibleRootLattice& L);

// Breadth-first closure of {w} under all simple reflections.
OrbitSummary orbit(const IrreducibleRootLattice& L, const LatticeVector& w,
                   std::size_t cap = 100000, bool with_elements = false);
OrbitSummary orbit(const CompositeLattice& L, const LatticeVector& w,
                   std::size_t cap = 100000, bool with_elements = false);

// "a1^" when v equals that dual basis vector, "root" for integral square -2
// vectors, "" otherwise.
std::string orbit_label(const IrreducibleRootLattice& L, const LatticeVector& v);

} // namespace rootlat
