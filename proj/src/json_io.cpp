#include "rootlat/json_io.hpp"

#include "rootlat/error.hpp"

namespace rootlat {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

std::string render_vector(const LatticeVector& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        out += to_string(v[i]);
    }
    return out;
}

std::string render_vector(const CompositeLattice& L, const LatticeVector& v) {
    std::string out;
    for (size_t j = 0; j < L.components.size(); ++j) {
        if (j > 0) out += ';';
        out += render_vector(slice_component(L, v, static_cast<int>(j)));
    }
    return out;
}

LatticeVector parse_vector_literal(const CompositeLattice& L, const std::string& text) {
    std::vector<std::string> comps = split(text, ';');
    if (comps.size() != L.components.size())
        fail(ErrorKind::Parse, "expected " + std::to_string(L.components.size()) +
                                   " vector component(s), got " + std::to_string(comps.size()));
    LatticeVector out;
    for (size_t j = 0; j < comps.size(); ++j) {
        std::vector<std::string> coeffs = split(comps[j], ',');
        if (static_cast<int>(coeffs.size()) != L.components[j].rank)
            fail(ErrorKind::Parse, "component " + std::to_string(j + 1) + " needs " +
                                       std::to_string(L.components[j].rank) + " coefficients, got " +
                                       std::to_string(coeffs.size()));
        for (const std::string& c : coeffs) out.push_back(rat_from_string(c));
    }
    return out;
}

Json vector_json(const LatticeVector& v) {
    Json arr = Json::array();
    for (const Rat& c : v) arr.push_back(to_string(c));
    return arr;
}

LatticeVector vector_from_json(const Json& j) {
    LatticeVector v;
    for (const auto& c : j) v.push_back(rat_from_string(c.get<std::string>()));
    return v;
}

std::string render_class(const std::vector<std::vector<long>>& cls) {
    std::string out;
    for (size_t j = 0; j < cls.size(); ++j) {
        if (j > 0) out += ';';
        for (size_t k = 0; k < cls[j].size(); ++k) {
            if (k > 0) out += ',';
            out += std::to_string(cls[j][k]);
        }
    }
    return out;
}

Json gram_json(const CompositeLattice& L) {
    Json rows = Json::array();
    for (int i = 0; i < L.total_rank; ++i) {
        Json row = Json::array();
        for (int j = 0; j < L.total_rank; ++j) {
            int cj = L.component_of(j + 1);
            int ci = L.component_of(i + 1);
            int entry = (ci == cj) ? L.components[ci].gram[i - L.offsets[ci]][j - L.offsets[cj]] : 0;
            row.push_back(entry);
        }
        rows.push_back(row);
    }
    Json out;
    out["lattice"] = L.spec();
    out["rank"] = L.total_rank;
    out["gram"] = rows;
    return out;
}

Json disc_json(const CompositeLattice& L) {
    Json comps = Json::array();
    for (const auto& comp : L.components) {
        DiscriminantGroup g = discriminant_group(comp);
        Json factors = Json::array();
        for (const Int& d : g.invariant_factors) factors.push_back(d.get_str());
        Json gens = Json::array();
        for (size_t k = 0; k < g.generators.size(); ++k) {
            Json gen;
            gen["label"] = g.generators[k].first;
            gen["vector"] = vector_json(g.generators[k].second);
            gen["square"] = to_string(g.generator_squares[k]);
            gens.push_back(gen);
        }
        Json c;
        c["component"] = comp.name();
        c["invariant_factors"] = factors;
        c["order"] = g.order().get_str();
        c["generators"] = gens;
        comps.push_back(c);
    }
    Json out;
    out["lattice"] = L.spec();
    out["components"] = comps;
    return out;
}

Json orbit_json(const OrbitSummary& summary, bool with_elements) {
    Json out;
    out["representative"] = vector_json(summary.representative);
    out["size"] = summary.size;
    out["generator"] = summary.generator_label;
    if (with_elements) {
        Json elems = Json::array();
        for (const LatticeVector& e : summary.elements) elems.push_back(vector_json(e));
        out["elements"] = elems;
    }
    return out;
}

Json small_vector_json(const SmallVectorReport& report) {
    Json orbits = Json::array();
    for (const SmallVectorOrbit& o : report.orbits) {
        Json entry;
        entry["generator"] = o.orbit.generator_label;
        entry["size"] = o.orbit.size;
        entry["sample"] = vector_json(o.orbit.representative);
        entry["in_dual_minus_lattice"] = o.in_dual_minus_lattice;
        orbits.push_back(entry);
    }
    Json out;
    out["lattice"] = report.lattice;
    out["k"] = report.k;
    out["value"] = to_string(report.value);
    out["orbits"] = orbits;
    return out;
}

Json trace_json(const ReductionTrace& trace) {
    Json steps = Json::array();
    for (const auto& step : trace.steps) {
        Json s;
        s["j"] = step.vertex;
        s["vector"] = vector_json(step.after);
        steps.push_back(s);
    }
    Json out;
    out["lattice"] = trace.lattice;
    out["start"] = vector_json(trace.start);
    out["steps"] = steps;
    out["end"] = vector_json(trace.end);
    out["end_vertex"] = trace.end_vertex;
    return out;
}

ReductionTrace trace_from_json(const Json& j) {
    ReductionTrace trace;
    trace.lattice = j.at("lattice").get<std::string>();
    trace.start = vector_from_json(j.at("start"));
    for (const auto& s : j.at("steps"))
        trace.steps.push_back({s.at("j").get<int>(), vector_from_json(s.at("vector"))});
    trace.end = vector_from_json(j.at("end"));
    trace.end_vertex = j.at("end_vertex").get<std::string>();
    return trace;
}

Json candidate_json(const CompositeLattice& C, const CandidateVector& w) {
    Json comps = Json::array();
    for (const LatticeVector& c : w.components) comps.push_back(vector_json(c));
    Json out;
    out["components"] = comps;
    out["square"] = to_string(w.square);
    out["class"] = render_class(w.cls);
    (void)C;
    return out;
}

Json certify_json(const CertifyReport& report) {
    Json classes = Json::array();
    for (const ClassCount& entry : report.classes) {
        Json c;
        c["class"] = render_class(entry.cls);
        c["count"] = entry.count;
        Json squares = Json::array();
        for (const Rat& sq : entry.sample_squares) squares.push_back(to_string(sq));
        c["min_decomposition"] = squares;
        classes.push_back(c);
    }
    Json out;
    out["lattice"] = report.lattice;
    out["target"] = to_string(report.target);
    out["n_candidates"] = report.n_candidates;
    out["n_certified"] = report.n_certified;
    out["failures"] = Json::array();
    out["classes"] = classes;
    return out;
}

} // namespace rootlat
