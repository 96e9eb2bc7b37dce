#include "rootlat/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "rootlat/error.hpp"

namespace rootlat {

namespace {

constexpr int kRootRankCap = 12;
constexpr long kGreedyCap = 1000000;

template <typename Lattice>
LatticeVector reflect_impl(const Lattice& L, const LatticeVector& w, int i) {
    Rat pairing = basis_pairing(L, w, i); // validates i and the dimension
    LatticeVector out = w;
    out[i - 1] += pairing;
    return out;
}

int gram_entry(const IrreducibleRootLattice& L, int i, int j) { return L.gram[i - 1][j - 1]; }

int gram_entry(const CompositeLattice& L, int i, int j) {
    int ci = L.component_of(i);
    if (ci != L.component_of(j)) return 0;
    return L.components[ci].gram[i - 1 - L.offsets[ci]][j - 1 - L.offsets[ci]];
}

// Greedy descent into the chamber {u : u.v_i >= 0 for all i}. Each reflection
// at a negative pairing lowers the coefficient sum, and the orbit is finite,
// so this terminates; the chamber meets every orbit in exactly one point.
template <typename Lattice>
LatticeVector canonical_impl(const Lattice& L, int rank, const LatticeVector& w) {
    if (static_cast<int>(w.size()) != rank)
        fail(ErrorKind::DimensionMismatch, "expected vector of length " + std::to_string(rank));
    LatticeVector u = w;
    std::vector<Rat> pairing(rank);
    for (int i = 1; i <= rank; ++i) pairing[i - 1] = basis_pairing(L, u, i);
    long steps = 0;
    while (true) {
        int i = 0;
        while (i < rank && pairing[i] >= 0) ++i;
        if (i == rank) return u;
        Rat c = pairing[i];
        u[i] += c;
        for (int j = 1; j <= rank; ++j) {
            int g = gram_entry(L, j, i + 1);
            if (g != 0) pairing[j - 1] += c * g;
        }
        if (++steps > kGreedyCap) fail(ErrorKind::Internal, "canonical_rep did not stabilize");
    }
}

template <typename Lattice>
OrbitSummary orbit_impl(const Lattice& L, int rank, const LatticeVector& w,
                        std::size_t cap, bool with_elements) {
    if (static_cast<int>(w.size()) != rank)
        fail(ErrorKind::DimensionMismatch, "expected vector of length " + std::to_string(rank));
    std::set<LatticeVector, LexLess> seen;
    std::deque<LatticeVector> todo;
    seen.insert(w);
    todo.push_back(w);
    while (!todo.empty()) {
        LatticeVector u = todo.front();
        todo.pop_front();
        for (int i = 1; i <= rank; ++i) {
            LatticeVector r = reflect_impl(L, u, i);
            if (seen.insert(r).second) {
                if (seen.size() > cap)
                    fail(ErrorKind::CapExceeded,
                         "orbit exceeds cap " + std::to_string(cap) + " (partial size " +
                             std::to_string(seen.size()) + ")");
                todo.push_back(r);
            }
        }
    }
    OrbitSummary s;
    s.representative = canonical_impl(L, rank, w);
    s.size = seen.size();
    if (with_elements) s.elements.assign(seen.begin(), seen.end());
    return s;
}

} // namespace

LatticeVector reflect(const IrreducibleRootLattice& L, const LatticeVector& w, int i) {
    return reflect_impl(L, w, i);
}

LatticeVector reflect(const CompositeLattice& L, const LatticeVector& w, int i) {
    return reflect_impl(L, w, i);
}

LatticeVector canonical_rep(const IrreducibleRootLattice& L, const LatticeVector& w) {
    return canonical_impl(L, L.rank, w);
}

LatticeVector canonical_rep(const CompositeLattice& L, const LatticeVector& w) {
    return canonical_impl(L, L.total_rank, w);
}

std::vector<LatticeVector> all_roots(const IrreducibleRootLattice& L) {
    if (L.rank > kRootRankCap)
        fail(ErrorKind::RankCap, "root enumeration capped at rank " + std::to_string(kRootRankCap));
    // All roots form a single reflection orbit in the ADE case.
    OrbitSummary o = orbit(L, basis_vector(L.rank, 1), 100000, true);
    return o.elements;
}

std::vector<LatticeVector> all_roots(const CompositeLattice& L) {
    if (L.total_rank > kRootRankCap)
        fail(ErrorKind::RankCap, "root enumeration capped at rank " + std::to_string(kRootRankCap));
    std::vector<LatticeVector> out;
    for (size_t j = 0; j < L.components.size(); ++j)
        for (const LatticeVector& r : all_roots(L.components[j]))
            out.push_back(embed_component(L, r, static_cast<int>(j)));
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

LatticeVector highest_root(const IrreducibleRootLattice& L) {
    // The canonical representative of the root orbit is the negated highest
    // root (it pairs >= 0 with every basis vector).
    return negated(canonical_rep(L, basis_vector(L.rank, 1)));
}

std::vector<int> simple_vertices(const IrreducibleRootLattice& L) {
    LatticeVector theta = highest_root(L);
    std::vector<int> out;
    for (int i = 1; i <= L.rank; ++i)
        if (theta[i - 1] == 1) out.push_back(i);
    return out;
}

OrbitSummary orbit(const IrreducibleRootLattice& L, const LatticeVector& w,
                   std::size_t cap, bool with_elements) {
    OrbitSummary s = orbit_impl(L, L.rank, w, cap, with_elements);
    s.generator_label = orbit_label(L, s.representative);
    return s;
}

OrbitSummary orbit(const CompositeLattice& L, const LatticeVector& w,
                   std::size_t cap, bool with_elements) {
    return orbit_impl(L, L.total_rank, w, cap, with_elements);
}

std::string orbit_label(const IrreducibleRootLattice& L, const LatticeVector& v) {
    for (int i = 1; i <= L.rank; ++i)
        if (compare(v, L.dual_basis[i - 1]) == 0) return L.labels[i - 1] + "^";
    if (is_integral(v) && norm(L, v) == -2) return "root";
    return "";
}

} // namespace rootlat
