#pragma once

#include <string>
#include <vector>

#include "rootlat/lattice.hpp"

namespace rootlat {

struct ReductionStep {
    int vertex = 0; // 1-based index j of the subtracted basis vector
    LatticeVector after;
};

// Record of the iterated step w -> w - v_j, taken whenever w.v_j = -1.
// Every step is the reflection of w in v_j, so squares and discriminant
// classes are constant along the trace while the coefficient sum drops by
// exactly one. The endpoint is the dual vector of a simple vertex.
struct ReductionTrace {
    std::string lattice;
    LatticeVector start;
    std::vector<ReductionStep> steps;
    LatticeVector end;
    std::string end_vertex;
};

enum class TieBreak { SmallestIndex, LargestIndex };

// Requires w in L^ \ L with w.w >= -2.
ReductionTrace reduce_component(const IrreducibleRootLattice& L, const LatticeVector& w,
                                TieBreak tie_break = TieBreak::SmallestIndex);

struct TraceVerdict {
    bool ok = false;
    std::string reason; // empty when ok
};

// Re-checks every trace invariant from scratch, using only the pairing and
// the dual basis. Shares no code with reduce_component.
TraceVerdict verify_trace(const IrreducibleRootLattice& L, const ReductionTrace& trace);

} // namespace rootlat
