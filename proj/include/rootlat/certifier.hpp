#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rootlat/lattice.hpp"
#include "rootlat/reduction.hpp"

namespace rootlat {

// A vector w = (w_1,...,w_m) in R^ \ R with square -1 or -2. Every nonzero
// component lies outside its R_j and inside the admissible orbit range.
struct CandidateVector {
    std::vector<LatticeVector> components;
    Rat square;
    std::vector<std::vector<long>> cls; // per-component residue tuples
};

LatticeVector candidate_global(const CompositeLattice& C, const CandidateVector& w);

struct Certificate {
    CandidateVector candidate;
    std::vector<std::pair<int, ReductionTrace>> component_traces; // (component index, trace)
    bool conclusion = false; // all endpoint coefficients negative in every treated component
};

struct ClassCount {
    std::vector<std::vector<long>> cls;
    std::size_t count = 0;
    std::vector<Rat> sample_squares; // component squares of the first candidate in the class
};

struct CertifyReport {
    std::string lattice;
    Rat target;
    std::size_t n_candidates = 0;
    std::size_t n_certified = 0;
    std::vector<std::string> failures; // empty unless certification aborted
    std::vector<ClassCount> classes;
};

// Complete list of candidates for the given target square (-1 or -2), in
// lexicographic order of the global coefficient vector. Component ranks are
// capped at 8 and the total rank at 24.
std::vector<CandidateVector> enumerate_candidates(const CompositeLattice& C, const Rat& target);

// Reduces every nonzero component and assembles the traces; the conclusion
// is computed from the endpoints, never assumed.
Certificate certify(const CompositeLattice& C, const CandidateVector& w);

// Certifies every candidate, re-verifying each trace independently. Any
// failure aborts with a counterexample dump. threads bounds the worker count;
// the report is aggregated in candidate order regardless of scheduling.
CertifyReport certify_all(const CompositeLattice& C, const Rat& target, int threads = 1);

} // namespace rootlat
