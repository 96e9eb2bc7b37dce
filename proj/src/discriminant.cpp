#include "rootlat/discriminant.hpp"

#include "rootlat/error.hpp"

namespace rootlat {

Int DiscriminantGroup::order() const {
    Int p = 1;
    for (const Int& d : invariant_factors) p *= d;
    return p;
}

DiscriminantGroup discriminant_group(const IrreducibleRootLattice& L) {
    DiscriminantGroup g;
    int n = L.rank;
    auto add_gen = [&](int vertex) {
        g.generators.emplace_back(L.labels[vertex - 1] + "^", dual_basis_vector(L, vertex));
        g.generator_squares.push_back(norm(L, g.generators.back().second));
    };
    switch (L.kind) {
    case Kind::A:
        g.invariant_factors = {Int(n + 1)};
        add_gen(1);
        break;
    case Kind::D:
        if (n % 2 == 0) {
            g.invariant_factors = {Int(2), Int(2)};
            add_gen(1);
            add_gen(n);
        } else {
            g.invariant_factors = {Int(4)};
            add_gen(n);
        }
        break;
    case Kind::E:
        if (n == 6) {
            g.invariant_factors = {Int(3)};
            add_gen(6);
        } else if (n == 7) {
            g.invariant_factors = {Int(2)};
            add_gen(7);
        }
        // E_8 is unimodular: trivial group, no generators.
        break;
    }
    if (g.order() != L.det_abs)
        fail(ErrorKind::Internal, L.name() + ": group order does not match |det|");
    return g;
}

std::vector<long> coset_of(const IrreducibleRootLattice& L, const LatticeVector& v) {
    if (static_cast<int>(v.size()) != L.rank)
        fail(ErrorKind::DimensionMismatch, "expected vector of length " + std::to_string(L.rank));
    for (int i = 1; i <= L.rank; ++i)
        if (!is_integral(basis_pairing(L, v, i)))
            fail(ErrorKind::NotInDual,
                 "pairing with " + L.labels[i - 1] + " is " + to_string(basis_pairing(L, v, i)));

    DiscriminantGroup g = discriminant_group(L);
    size_t m = g.invariant_factors.size();
    std::vector<long> residues(m, 0);
    // |A_R| <= 13 in practice; solve by scanning all residue tuples.
    while (true) {
        LatticeVector diff = v;
        for (size_t k = 0; k < m; ++k)
            for (int c = 0; c < L.rank; ++c)
                diff[c] -= residues[k] * g.generators[k].second[c];
        if (is_integral(diff)) return residues;
        size_t k = 0;
        while (k < m) {
            if (++residues[k] < g.invariant_factors[k].get_si()) break;
            residues[k] = 0;
            ++k;
        }
        if (k == m) break;
    }
    fail(ErrorKind::Internal, "dual vector not generated by the discriminant generators");
}

std::vector<std::vector<long>> discriminant_class(const CompositeLattice& L, const LatticeVector& v) {
    if (static_cast<int>(v.size()) != L.total_rank)
        fail(ErrorKind::DimensionMismatch, "expected vector of length " + std::to_string(L.total_rank));
    std::vector<std::vector<long>> cls;
    for (size_t j = 0; j < L.components.size(); ++j)
        cls.push_back(coset_of(L.components[j], slice_component(L, v, static_cast<int>(j))));
    return cls;
}

Rat square_mod2(const Rat& q) {
    // Representative in (-2, 0].
    return q - 2 * Rat(ceil_rat(q / 2));
}

} // namespace rootlat
