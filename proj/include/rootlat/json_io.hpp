#pragma once

#include <string>

#include <json.hpp>

#include "rootlat/certifier.hpp"
#include "rootlat/discriminant.hpp"
#include "rootlat/lattice.hpp"
#include "rootlat/reduction.hpp"
#include "rootlat/small_vectors.hpp"
#include "rootlat/weyl.hpp"

namespace rootlat {

using Json = nlohmann::ordered_json;

// Wire format for vectors: ','-separated rationals per component,
// ';'-separated components. JSON uses arrays of rational strings.
std::string render_vector(const LatticeVector& v);
std::string render_vector(const CompositeLattice& L, const LatticeVector& v);
LatticeVector parse_vector_literal(const CompositeLattice& L, const std::string& text);

Json vector_json(const LatticeVector& v);
LatticeVector vector_from_json(const Json& j);

std::string render_class(const std::vector<std::vector<long>>& cls);

Json gram_json(const CompositeLattice& L);
Json disc_json(const CompositeLattice& L);
Json orbit_json(const OrbitSummary& summary, bool with_elements);
Json small_vector_json(const SmallVectorReport& report);
Json trace_json(const ReductionTrace& trace);
ReductionTrace trace_from_json(const Json& j);
Json candidate_json(const CompositeLattice& C, const CandidateVector& w);
Json certify_json(const CertifyReport& report);

} // namespace rootlat
