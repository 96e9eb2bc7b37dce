#include "rootlat/small_vectors.hpp"

#include <algorithm>
#include <map>

#include "rootlat/error.hpp"

namespace rootlat {

namespace {

constexpr int kEnumRankCap = 10;

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Diagonalization q of the positive definite form Q(m) = -m^T G^{-1} m on
// integer dual coordinates m_i = v.v_i: after the sweep, q[i][i] = d_i and
// q[i][j] = u_ij for j > i, with Q(m) = sum_i d_i (m_i + sum_{j>i} u_ij m_j)^2.
std::vector<std::vector<Rat>> diagonalize_dual_form(const IrreducibleRootLattice& L) {
    int n = L.rank;
    std::vector<std::vector<Rat>> q(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q[i][j] = -L.dual_basis[j][i];
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (int k = i + 1; k < n; ++k)
            for (int l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
    return q;
}

int dual_index(const IrreducibleRootLattice& L, const LatticeVector& v) {
    for (int i = 1; i <= L.rank; ++i)
        if (compare(v, L.dual_basis[i - 1]) == 0) return i;
    return 0;
}

} // namespace

std::vector<LatticeVector> enumerate_dual_up_to(const IrreducibleRootLattice& L, const Rat& bound) {
    if (L.rank > kEnumRankCap)
        fail(ErrorKind::RankCap, "dual enumeration capped at rank " + std::to_string(kEnumRankCap));
    std::vector<LatticeVector> out;
    if (bound >= 0) return out;
    const Rat budget = -bound;
    int n = L.rank;
    auto q = diagonalize_dual_form(L);
    // Cauchy-Schwarz: m_i^2 = (v.v_i)^2 <= |v^2| |v_i^2| <= 2 |bound|.
    Int box = isqrt(floor_rat(2 * budget));

    std::vector<long> m(n, 0);
    std::vector<Rat> center(n);
    auto emit = [&]() {
        bool nonzero = false;
        for (long c : m)
            if (c != 0) { nonzero = true; break; }
        if (!nonzero) return;
        LatticeVector v(n, Rat(0));
        for (int i = 0; i < n; ++i) {
            if (m[i] == 0) continue;
            for (int r = 0; r < n; ++r) v[r] += m[i] * L.dual_basis[i][r];
        }
        out.push_back(std::move(v));
    };

    auto search = [&](auto&& self, int lvl, const Rat& remaining) -> void {
        Rat c = 0;
        for (int j = lvl + 1; j < n; ++j)
            if (m[j] != 0) c += q[lvl][j] * m[j];
        center[lvl] = c;
        const Rat& d = q[lvl][lvl];
        Int reach = isqrt(floor_rat(remaining / d)) + 1; // >= sqrt(remaining/d)
        Int lo = ceil_rat(-c) - reach;
        Int hi = floor_rat(-c) + reach;
        if (lo < -box) lo = -box;
        if (hi > box) hi = box;
        for (Int x = lo; x <= hi; ++x) {
            Rat off = Rat(x) + c;
            Rat t = d * off * off;
            if (t > remaining) continue; // loose endpoints, exact test
            m[lvl] = x.get_si();
            if (lvl == 0) emit();
            else self(self, lvl - 1, remaining - t);
        }
        m[lvl] = 0;
    };
    search(search, n - 1, budget);
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

SmallVectorReport kth_smallest(const IrreducibleRootLattice& L, int k) {
    if (L.rank > kEnumRankCap)
        fail(ErrorKind::RankCap, "kth_smallest capped at rank " + std::to_string(kEnumRankCap));
    if (k < 1 || k > 5) fail(ErrorKind::KCap, "k must be in 1..5, got " + std::to_string(k));

    std::vector<LatticeVector> vecs;
    std::vector<Rat> values;
    for (long depth = 2;; depth += 2) {
        if (depth > 32) fail(ErrorKind::Internal, "value search did not converge");
        vecs = enumerate_dual_up_to(L, rat(-depth));
        values.clear();
        for (const LatticeVector& v : vecs) values.push_back(norm(L, v));
        std::sort(values.begin(), values.end(), [](const Rat& a, const Rat& b) { return a > b; });
        values.erase(std::unique(values.begin(), values.end()), values.end());
        if (static_cast<int>(values.size()) >= k) break;
    }
    const Rat value = values[k - 1];

    std::map<LatticeVector, std::vector<LatticeVector>, LexLess> groups;
    for (const LatticeVector& v : vecs)
        if (norm(L, v) == value) groups[canonical_rep(L, v)].push_back(v);

    SmallVectorReport report;
    report.lattice = L.name();
    report.k = k;
    report.value = value;
    for (auto& [rep, elements] : groups) {
        SmallVectorOrbit entry;
        entry.orbit.representative = rep;
        entry.orbit.size = elements.size();
        std::sort(elements.begin(), elements.end(), LexLess{});
        entry.orbit.elements = elements;
        entry.orbit.generator_label = orbit_label(L, rep);
        entry.in_dual_minus_lattice = !is_integral(rep);
        report.orbits.push_back(std::move(entry));
    }
    // Dual-generated orbits first, in vertex order; the root orbit last.
    std::sort(report.orbits.begin(), report.orbits.end(),
              [&](const SmallVectorOrbit& a, const SmallVectorOrbit& b) {
                  int ia = a.in_dual_minus_lattice ? dual_index(L, a.orbit.representative) : L.rank + 1;
                  int ib = b.in_dual_minus_lattice ? dual_index(L, b.orbit.representative) : L.rank + 1;
                  if (ia != ib) return ia < ib;
                  return compare(a.orbit.representative, b.orbit.representative) < 0;
              });
    return report;
}

std::vector<OrbitSummary> in_scope_orbits(const IrreducibleRootLattice& L) {
    if (L.rank > kEnumRankCap)
        fail(ErrorKind::RankCap, "in_scope_orbits capped at rank " + std::to_string(kEnumRankCap));
    std::map<LatticeVector, std::vector<LatticeVector>, LexLess> groups;
    for (const LatticeVector& v : enumerate_dual_up_to(L, rat(-2)))
        if (!is_integral(v)) groups[canonical_rep(L, v)].push_back(v);

    std::vector<OrbitSummary> out;
    for (auto& [rep, elements] : groups) {
        OrbitSummary o;
        o.representative = rep;
        o.size = elements.size();
        std::sort(elements.begin(), elements.end(), LexLess{});
        o.elements = std::move(elements);
        o.generator_label = orbit_label(L, rep);
        out.push_back(std::move(o));
    }
    std::sort(out.begin(), out.end(), [&](const OrbitSummary& a, const OrbitSummary& b) {
        Rat na = norm(L, a.representative), nb = norm(L, b.representative);
        if (na != nb) return na > nb; // closest to zero first
        int ia = dual_index(L, a.representative), ib = dual_index(L, b.representative);
        if (ia != ib) return ia < ib;
        return compare(a.representative, b.representative) < 0;
    });
    return out;
}

} // namespace rootlat
