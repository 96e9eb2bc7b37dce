#include "rootlat/lattice.hpp"

#include <algorithm>
#include <cctype>

#include "rootlat/error.hpp"

namespace rootlat {

char kind_letter(Kind kind) {
    switch (kind) {
    case Kind::A: return 'A';
    case Kind::D: return 'D';
    case Kind::E: return 'E';
    }
    return '?';
}

std::string IrreducibleRootLattice::name() const {
    return std::string(1, kind_letter(kind)) + std::to_string(rank);
}

std::string CompositeLattice::spec() const {
    std::string out;
    for (size_t j = 0; j < components.size(); ++j) {
        if (j > 0) out += '+';
        out += components[j].name();
    }
    return out;
}

int CompositeLattice::component_of(int global_index) const {
    if (global_index < 1 || global_index > total_rank)
        fail(ErrorKind::IndexOutOfRange,
             "index " + std::to_string(global_index) + " not in 1.." + std::to_string(total_rank));
    int j = static_cast<int>(components.size()) - 1;
    while (offsets[j] >= global_index) --j;
    return j;
}

namespace {

std::vector<std::pair<int, int>> dynkin_edges(Kind kind, int rank) {
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
    case Kind::A:
        for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
        break;
    case Kind::D:
        for (int i = 1; i < rank - 2; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(rank - 2, rank - 1);
        edges.emplace_back(rank - 2, rank);
        break;
    case Kind::E:
        for (int i = 2; i < rank; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(1, 4);
        break;
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

// Exact Gauss-Jordan over Q; fills the dual basis (columns of the inverse)
// and the determinant.
void invert_gram(IrreducibleRootLattice& L) {
    int n = L.rank;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = L.gram[i][j];
        m[i][n + i] = 1;
    }
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) fail(ErrorKind::Internal, "singular Gram matrix for " + L.name());
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = 1 / m[col][col];
        for (int j = col; j < 2 * n; ++j) m[col][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = col; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    if (!is_integral(det)) fail(ErrorKind::Internal, "non-integral determinant");
    L.det = det.get_num();
    L.det_abs = abs(L.det);
    L.dual_basis.assign(n, LatticeVector(n));
    for (int i = 1; i <= n; ++i)
        for (int r = 0; r < n; ++r) L.dual_basis[i - 1][r] = m[r][n + i - 1];
}

} // namespace

IrreducibleRootLattice build_irreducible(Kind kind, int rank) {
    switch (kind) {
    case Kind::A:
        if (rank < 1) fail(ErrorKind::InvalidRank, "A requires rank >= 1, got " + std::to_string(rank));
        break;
    case Kind::D:
        if (rank < 4) fail(ErrorKind::InvalidRank, "D requires rank >= 4, got " + std::to_string(rank));
        break;
    case Kind::E:
        if (rank < 6 || rank > 8)
            fail(ErrorKind::InvalidRank, "E requires rank in {6,7,8}, got " + std::to_string(rank));
        break;
    }
    IrreducibleRootLattice L;
    L.kind = kind;
    L.rank = rank;
    L.edges = dynkin_edges(kind, rank);
    L.gram.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) L.gram[i][i] = -2;
    for (auto [i, j] : L.edges) {
        L.gram[i - 1][j - 1] = 1;
        L.gram[j - 1][i - 1] = 1;
    }
    const char prefix = static_cast<char>(std::tolower(kind_letter(kind)));
    for (int i = 1; i <= rank; ++i) L.labels.push_back(std::string(1, prefix) + std::to_string(i));
    invert_gram(L);
    return L;
}

CompositeLattice build_composite(const std::vector<std::pair<Kind, int>>& parts) {
    if (parts.empty()) fail(ErrorKind::EmptySpec, "composite lattice needs at least one component");
    CompositeLattice C;
    for (auto [kind, rank] : parts) {
        C.offsets.push_back(C.total_rank);
        C.components.push_back(build_irreducible(kind, rank));
        C.total_rank += rank;
    }
    return C;
}

namespace {

void check_dims(int rank, const LatticeVector& v, const LatticeVector& w) {
    if (static_cast<int>(v.size()) != rank || static_cast<int>(w.size()) != rank)
        fail(ErrorKind::DimensionMismatch,
             "expected vectors of length " + std::to_string(rank) + ", got " +
                 std::to_string(v.size()) + " and " + std::to_string(w.size()));
}

} // namespace

Rat inner_product(const IrreducibleRootLattice& L, const LatticeVector& v, const LatticeVector& w) {
    check_dims(L.rank, v, w);
    Rat s = 0;
    for (int i = 0; i < L.rank; ++i) {
        if (v[i] == 0) continue;
        Rat row = 0;
        for (int j = 0; j < L.rank; ++j)
            if (L.gram[i][j] != 0) row += L.gram[i][j] * w[j];
        s += v[i] * row;
    }
    return s;
}

Rat inner_product(const CompositeLattice& L, const LatticeVector& v, const LatticeVector& w) {
    check_dims(L.total_rank, v, w);
    Rat s = 0;
    for (size_t j = 0; j < L.components.size(); ++j) {
        const auto& comp = L.components[j];
        int off = L.offsets[j];
        LatticeVector a(v.begin() + off, v.begin() + off + comp.rank);
        LatticeVector b(w.begin() + off, w.begin() + off + comp.rank);
        s += inner_product(comp, a, b);
    }
    return s;
}

Rat norm(const IrreducibleRootLattice& L, const LatticeVector& v) { return inner_product(L, v, v); }
Rat norm(const CompositeLattice& L, const LatticeVector& v) { return inner_product(L, v, v); }

Rat basis_pairing(const IrreducibleRootLattice& L, const LatticeVector& w, int i) {
    if (i < 1 || i > L.rank)
        fail(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(i) + " not in 1.." + std::to_string(L.rank));
    if (static_cast<int>(w.size()) != L.rank)
        fail(ErrorKind::DimensionMismatch, "expected vector of length " + std::to_string(L.rank));
    Rat s = 0;
    for (int j = 0; j < L.rank; ++j)
        if (L.gram[i - 1][j] != 0) s += L.gram[i - 1][j] * w[j];
    return s;
}

Rat basis_pairing(const CompositeLattice& L, const LatticeVector& w, int i) {
    if (static_cast<int>(w.size()) != L.total_rank)
        fail(ErrorKind::DimensionMismatch, "expected vector of length " + std::to_string(L.total_rank));
    int j = L.component_of(i);
    const auto& comp = L.components[j];
    int off = L.offsets[j];
    LatticeVector slice(w.begin() + off, w.begin() + off + comp.rank);
    return basis_pairing(comp, slice, i - off);
}

LatticeVector dual_basis_vector(const IrreducibleRootLattice& L, int i) {
    if (i < 1 || i > L.rank)
        fail(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(i) + " not in 1.." + std::to_string(L.rank));
    return L.dual_basis[i - 1];
}

LatticeVector basis_vector(int rank, int i) {
    LatticeVector v(rank, Rat(0));
    v[i - 1] = 1;
    return v;
}

bool in_dual(const IrreducibleRootLattice& L, const LatticeVector& v) {
    for (int i = 1; i <= L.rank; ++i)
        if (!is_integral(basis_pairing(L, v, i))) return false;
    return true;
}

bool in_dual(const CompositeLattice& L, const LatticeVector& v) {
    for (int i = 1; i <= L.total_rank; ++i)
        if (!is_integral(basis_pairing(L, v, i))) return false;
    return true;
}

LatticeVector slice_component(const CompositeLattice& L, const LatticeVector& v, int comp) {
    int off = L.offsets[comp];
    return LatticeVector(v.begin() + off, v.begin() + off + L.components[comp].rank);
}

LatticeVector embed_component(const CompositeLattice& L, const LatticeVector& comp_vec, int comp) {
    LatticeVector out(L.total_rank, Rat(0));
    int off = L.offsets[comp];
    for (size_t i = 0; i < comp_vec.size(); ++i) out[off + i] = comp_vec[i];
    return out;
}

} // namespace rootlat
