#include "rootlat/reduction.hpp"

#include <algorithm>

#include "rootlat/error.hpp"
#include "rootlat/weyl.hpp"

namespace rootlat {

ReductionTrace reduce_component(const IrreducibleRootLattice& L, const LatticeVector& w,
                                TieBreak tie_break) {
    if (static_cast<int>(w.size()) != L.rank)
        fail(ErrorKind::DimensionMismatch, "expected vector of length " + std::to_string(L.rank));
    if (!in_dual(L, w)) fail(ErrorKind::NotInDual, "vector does not pair integrally with " + L.name());
    if (is_integral(w)) fail(ErrorKind::InLattice, "vector lies in " + L.name() + " itself");
    Rat square = norm(L, w);
    if (square < -2)
        fail(ErrorKind::OutOfScopeNorm, "square " + to_string(square) + " is below -2");

    ReductionTrace trace;
    trace.lattice = L.name();
    trace.start = w;

    // Each step lowers the coefficient sum by exactly one and the endpoint is
    // a dual basis vector, so the step count is bounded by the total possible
    // drop. Exceeding the cap means a convention bug, not a long orbit.
    Rat min_dual_sum = coefficient_sum(L.dual_basis[0]);
    for (int i = 1; i < L.rank; ++i)
        min_dual_sum = std::min(min_dual_sum, coefficient_sum(L.dual_basis[i]));
    Rat drop = coefficient_sum(w) - min_dual_sum;
    long cap = drop > 0 ? ceil_rat(drop).get_si() + 1 : 1;

    LatticeVector u = w;
    while (true) {
        int found = 0;
        for (int j = 1; j <= L.rank; ++j) {
            if (basis_pairing(L, u, j) == -1) {
                found = j;
                if (tie_break == TieBreak::SmallestIndex) break;
            }
        }
        if (found == 0) break;
        u[found - 1] -= 1;
        trace.steps.push_back({found, u});
        if (static_cast<long>(trace.steps.size()) > cap)
            fail(ErrorKind::Internal, "reduction exceeded the monovariant step bound");
    }
    trace.end = u;

    const auto simple = simple_vertices(L);
    for (int i : simple) {
        if (compare(u, L.dual_basis[i - 1]) == 0) {
            trace.end_vertex = L.labels[i - 1];
            return trace;
        }
    }
    fail(ErrorKind::Internal, "reduction endpoint is not a simple-vertex dual in " + L.name());
}

namespace {

TraceVerdict bad(const std::string& reason) { return {false, reason}; }

} // namespace

TraceVerdict verify_trace(const IrreducibleRootLattice& L, const ReductionTrace& trace) {
    const int n = L.rank;
    if (static_cast<int>(trace.start.size()) != n || static_cast<int>(trace.end.size()) != n)
        return bad("malformed");
    for (const auto& step : trace.steps)
        if (step.vertex < 1 || step.vertex > n || static_cast<int>(step.after.size()) != n)
            return bad("malformed");

    if (!in_dual(L, trace.start)) return bad("start-not-dual");
    if (is_integral(trace.start)) return bad("start-in-lattice");
    const Rat square = norm(L, trace.start);
    if (square < -2) return bad("start-out-of-scope");

    LatticeVector prev = trace.start;
    for (const auto& step : trace.steps) {
        if (inner_product(L, prev, basis_vector(n, step.vertex)) != -1) return bad("step-pairing");
        LatticeVector expected = prev;
        expected[step.vertex - 1] -= 1;
        if (compare(step.after, expected) != 0) return bad("step-mismatch");
        if (coefficient_sum(step.after) != coefficient_sum(prev) - 1) return bad("sum-drop");
        if (norm(L, step.after) != square) return bad("square-changed");
        prev = step.after;
    }
    if (compare(trace.end, prev) != 0) return bad("end-mismatch");

    LatticeVector diff = trace.start;
    for (int i = 0; i < n; ++i) diff[i] -= trace.end[i];
    if (!is_integral(diff)) return bad("class-changed");

    for (const Rat& c : trace.end)
        if (c >= 0) return bad("end-not-negative");

    int end_vertex = 0;
    for (int i = 1; i <= n; ++i) {
        if (compare(trace.end, dual_basis_vector(L, i)) == 0) {
            end_vertex = i;
            break;
        }
    }
    if (end_vertex == 0) return bad("end-not-simple-dual");
    const auto simple = simple_vertices(L);
    if (std::find(simple.begin(), simple.end(), end_vertex) == simple.end())
        return bad("end-not-simple-dual");
    if (trace.end_vertex != L.labels[end_vertex - 1]) return bad("end-vertex-label");
    return {true, ""};
}

} // namespace rootlat
