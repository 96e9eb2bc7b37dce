#include <pybind11/pybind11.h>

#include <string>

#include "rootlat/certifier.hpp"
#include "rootlat/discriminant.hpp"
#include "rootlat/json_io.hpp"
#include "rootlat/lattice.hpp"
#include "rootlat/reduction.hpp"
#include "rootlat/small_vectors.hpp"
#include "rootlat/verify_paper.hpp"
#include "rootlat/weyl.hpp"

namespace py = pybind11;
using namespace rootlat;

namespace {

// Reports cross the boundary as plain python objects via their JSON form;
// rationals stay exact as "p/q" strings.
py::object to_py(const Json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

LatticeVector vector_from_py(const CompositeLattice& C, const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return parse_vector_literal(C, obj.cast<std::string>());
    LatticeVector v;
    for (const auto& item : obj.cast<py::sequence>()) {
        if (py::isinstance<py::int_>(item)) v.push_back(rat(item.cast<long>()));
        else v.push_back(rat_from_string(item.cast<std::string>()));
    }
    if (static_cast<int>(v.size()) != C.total_rank)
        fail(ErrorKind::DimensionMismatch, "expected " + std::to_string(C.total_rank) + " coefficients");
    return v;
}

const IrreducibleRootLattice& sole_component(const CompositeLattice& C, const char* op) {
    if (C.components.size() != 1)
        fail(ErrorKind::InvalidTarget, std::string(op) + " needs an irreducible lattice");
    return C.components[0];
}

} // namespace

PYBIND11_MODULE(rootlat, m) {
    m.doc() = "Exact toolkit for negative-definite ADE root lattices";

    m.def("gram", [](const std::string& spec) { return to_py(gram_json(parse_lattice_spec(spec))); },
          py::arg("spec"), "Gram matrix of a lattice spec such as 'A3' or 'D5+E7'");

    m.def("disc", [](const std::string& spec) { return to_py(disc_json(parse_lattice_spec(spec))); },
          py::arg("spec"), "Discriminant group data per component");

    m.def("roots", [](const std::string& spec) {
              CompositeLattice C = parse_lattice_spec(spec);
              Json arr = Json::array();
              for (const LatticeVector& r : all_roots(C)) arr.push_back(vector_json(r));
              return to_py(arr);
          },
          py::arg("spec"), "All vectors of square -2 with integral coefficients");

    m.def("simple_vertices", [](const std::string& spec) {
              CompositeLattice C = parse_lattice_spec(spec);
              const auto& L = sole_component(C, "simple_vertices");
              py::list out;
              for (int i : simple_vertices(L)) out.append(L.labels[i - 1]);
              return out;
          },
          py::arg("spec"));

    m.def("orbit", [](const std::string& spec, const py::object& vec, long cap) {
              CompositeLattice C = parse_lattice_spec(spec);
              LatticeVector w = vector_from_py(C, vec);
              OrbitSummary s = orbit(C, w, static_cast<std::size_t>(cap), true);
              if (C.components.size() == 1)
                  s.generator_label = orbit_label(C.components[0], s.representative);
              return to_py(orbit_json(s, true));
          },
          py::arg("spec"), py::arg("vector"), py::arg("cap") = 100000);

    m.def("canonical_rep", [](const std::string& spec, const py::object& vec) {
              CompositeLattice C = parse_lattice_spec(spec);
              return to_py(vector_json(canonical_rep(C, vector_from_py(C, vec))));
          },
          py::arg("spec"), py::arg("vector"));

    m.def("shortvec", [](const std::string& spec, int k) {
              CompositeLattice C = parse_lattice_spec(spec);
              return to_py(small_vector_json(kth_smallest(sole_component(C, "shortvec"), k)));
          },
          py::arg("spec"), py::arg("k") = 1, "Orbits of the k-th smallest dual vectors");

    m.def("reduce", [](const std::string& spec, const py::object& vec) {
              CompositeLattice C = parse_lattice_spec(spec);
              const auto& L = sole_component(C, "reduce");
              return to_py(trace_json(reduce_component(L, vector_from_py(C, vec))));
          },
          py::arg("spec"), py::arg("vector"), "Reflection reduction; returns the full trace");

    m.def("verify_trace", [](const std::string& spec, const py::object& trace) {
              CompositeLattice C = parse_lattice_spec(spec);
              const auto& L = sole_component(C, "verify_trace");
              py::object dumps = py::module_::import("json").attr("dumps");
              Json j = Json::parse(dumps(trace).cast<std::string>());
              TraceVerdict v = verify_trace(L, trace_from_json(j));
              return py::make_tuple(v.ok, v.reason);
          },
          py::arg("spec"), py::arg("trace"), "Independent certificate check; (ok, reason)");

    m.def("enumerate_candidates", [](const std::string& spec, int target) {
              CompositeLattice C = parse_lattice_spec(spec);
              Json arr = Json::array();
              for (const CandidateVector& w : enumerate_candidates(C, rat(target)))
                  arr.push_back(candidate_json(C, w));
              return to_py(arr);
          },
          py::arg("spec"), py::arg("target"));

    m.def("certify", [](const std::string& spec, int target, int threads) {
              CompositeLattice C = parse_lattice_spec(spec);
              return to_py(certify_json(certify_all(C, rat(target), threads)));
          },
          py::arg("spec"), py::arg("target") = -2, py::arg("threads") = 1,
          "Certify every candidate of the target square");

    m.def("verify_paper", []() {
              Json arr = Json::array();
              bool ok = true;
              for (const PaperCheck& c : run_verify_paper()) {
                  Json row;
                  row["location"] = c.location;
                  row["name"] = c.name;
                  row["pass"] = c.pass;
                  row["note"] = c.note;
                  arr.push_back(row);
                  ok = ok && c.pass;
              }
              Json out;
              out["checks"] = arr;
              out["all_pass"] = ok;
              return to_py(out);
          },
          "Reproduce the built-in reference tables; returns the check matrix");

    static py::handle exc = py::exception<Error>(m, "RootlatError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(exc.ptr(), e.what());
        }
    });
}
