#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rootlat/rational.hpp"

namespace rootlat {

enum class Kind { A, D, E };

char kind_letter(Kind kind);

// Irreducible ADE root lattice, negative definite. Vertex numbering follows
// the usual Dynkin pictures: A_n is the chain a_1-..-a_n, D_n is the chain
// d_1-..-d_{n-2} with d_{n-1} and d_n attached to d_{n-2}, and E_n is the
// chain e_2-..-e_n with the branch vertex e_1 attached to e_4.
struct IrreducibleRootLattice {
    Kind kind;
    int rank = 0;
    std::vector<std::vector<int>> gram;    // -2 on the diagonal, 1 on edges
    std::vector<std::pair<int, int>> edges; // 1-based, i < j
    std::vector<std::string> labels;        // "a1".."an", "d1".., "e1"..
    std::vector<LatticeVector> dual_basis;  // dual_basis[i-1] = v_i^, column i of gram^{-1}
    Int det;                                // exact determinant of gram
    Int det_abs;

    std::string name() const; // "A2", "D5", ...
};

// Orthogonal direct sum of irreducible components; vectors use global
// coefficient indices, sliced per component.
struct CompositeLattice {
    std::vector<IrreducibleRootLattice> components;
    std::vector<int> offsets; // offsets[j] = first global 0-based index of component j
    int total_rank = 0;

    std::string spec() const;               // "A2+A2+A2"
    int component_of(int global_index) const; // 0-based component for a 1-based index
};

IrreducibleRootLattice build_irreducible(Kind kind, int rank);
CompositeLattice build_composite(const std::vector<std::pair<Kind, int>>& parts);

// Lattice spec grammar: '+'-separated tokens [ADE][0-9]+, case-insensitive,
// whitespace ignored, optional multiplier prefix as in "4*A2".
CompositeLattice parse_lattice_spec(const std::string& text);

Rat inner_product(const IrreducibleRootLattice& L, const LatticeVector& v, const LatticeVector& w);
Rat inner_product(const CompositeLattice& L, const LatticeVector& v, const LatticeVector& w);
Rat norm(const IrreducibleRootLattice& L, const LatticeVector& v);
Rat norm(const CompositeLattice& L, const LatticeVector& v);

// Pairing (G w)_i with the i-th basis vector, 1-based.
Rat basis_pairing(const IrreducibleRootLattice& L, const LatticeVector& w, int i);
Rat basis_pairing(const CompositeLattice& L, const LatticeVector& w, int i);

LatticeVector dual_basis_vector(const IrreducibleRootLattice& L, int i); // 1-based
LatticeVector basis_vector(int rank, int i);

bool in_dual(const IrreducibleRootLattice& L, const LatticeVector& v);
bool in_dual(const CompositeLattice& L, const LatticeVector& v);

LatticeVector slice_component(const CompositeLattice& L, const LatticeVector& v, int comp);
LatticeVector embed_component(const CompositeLattice& L, const LatticeVector& comp_vec, int comp);

} // namespace rootlat
