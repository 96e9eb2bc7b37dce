#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rootlat/certifier.hpp"
#include "rootlat/discriminant.hpp"
#include "rootlat/error.hpp"
#include "rootlat/json_io.hpp"
#include "rootlat/lattice.hpp"
#include "rootlat/reduction.hpp"
#include "rootlat/small_vectors.hpp"
#include "rootlat/verify_paper.hpp"
#include "rootlat/weyl.hpp"

namespace {

using namespace rootlat;

int worker_threads() {
    const char* env = std::getenv("ROOTLAT_THREADS");
    if (env == nullptr) return 1;
    int n = std::atoi(env);
    return n > 0 ? n : 1;
}

void require_irreducible(const CompositeLattice& C, const std::string& command) {
    if (C.components.size() != 1)
        fail(ErrorKind::InvalidTarget, command + " needs an irreducible lattice, got " + C.spec());
}

void print_gram(const CompositeLattice& C) {
    for (int i = 1; i <= C.total_rank; ++i) {
        int ci = C.component_of(i);
        for (int j = 1; j <= C.total_rank; ++j) {
            int cj = C.component_of(j);
            int entry = 0;
            if (ci == cj) entry = C.components[ci].gram[i - 1 - C.offsets[ci]][j - 1 - C.offsets[cj]];
            std::cout << (j > 1 ? " " : "") << (entry < 0 ? "" : " ") << entry;
        }
        std::cout << "\n";
    }
}

std::string disc_line(const IrreducibleRootLattice& L) {
    DiscriminantGroup g = discriminant_group(L);
    if (g.trivial()) return "trivial";
    std::string out;
    for (size_t i = 0; i < g.invariant_factors.size(); ++i) {
        if (i > 0) out += " x ";
        out += "Z/" + g.invariant_factors[i].get_str();
    }
    for (size_t i = 0; i < g.generators.size(); ++i)
        out += "; " + g.generators[i].first + ": " + to_string(g.generator_squares[i]);
    return out;
}

void print_trace(const CompositeLattice& C, const ReductionTrace& trace) {
    std::cout << "reduce in " << trace.lattice << "\n";
    std::cout << "start " << render_vector(trace.start) << " (square "
              << to_string(norm(C.components[0], trace.start)) << ")\n";
    for (size_t i = 0; i < trace.steps.size(); ++i)
        std::cout << "step " << (i + 1) << ": j=" << trace.steps[i].vertex << " -> "
                  << render_vector(trace.steps[i].after) << "\n";
    std::cout << "end " << trace.end_vertex << "^ = " << render_vector(trace.end) << " ("
              << trace.steps.size() << " step" << (trace.steps.size() == 1 ? "" : "s") << ")\n";
}

void print_certify(const CertifyReport& report) {
    std::cout << report.lattice << " target " << to_string(report.target) << ": "
              << report.n_candidates << " candidates, " << report.n_certified << " certified, "
              << report.failures.size() << " failures\n";
    for (const ClassCount& entry : report.classes) {
        std::cout << "  class " << render_class(entry.cls) << ": " << entry.count
                  << " candidates, squares";
        for (const Rat& sq : entry.sample_squares) std::cout << " " << to_string(sq);
        std::cout << "\n";
    }
}

int print_paper_checks(const std::vector<PaperCheck>& checks, bool json) {
    if (json) {
        Json arr = Json::array();
        for (const PaperCheck& c : checks) {
            Json row;
            row["location"] = c.location;
            row["name"] = c.name;
            row["pass"] = c.pass;
            row["note"] = c.note;
            arr.push_back(row);
        }
        Json out;
        out["checks"] = arr;
        out["n_checks"] = checks.size();
        size_t failed = 0;
        for (const PaperCheck& c : checks)
            if (!c.pass) ++failed;
        out["n_failed"] = failed;
        out["all_pass"] = failed == 0;
        std::cout << out.dump(2) << "\n";
        return failed == 0 ? 0 : 1;
    }
    size_t failed = 0;
    for (const PaperCheck& c : checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.location << " :: " << c.name;
        if (!c.note.empty()) std::cout << "  (" << c.note << ")";
        std::cout << "\n";
        if (!c.pass) ++failed;
    }
    std::cout << (failed == 0 ? "all " : "FAILED: ") << checks.size() << " checks"
              << (failed == 0 ? " passed" : ", " + std::to_string(failed) + " failed") << "\n";
    return failed == 0 ? 0 : 1;
}

struct Options {
    std::string spec;
    std::string vector_literal;
    std::string format = "text";
    int k = 1;
    int target = -2;
    long cap = 100000;
};

int dispatch(const std::string& command, const Options& opt) {
    bool json = opt.format == "json";
    if (opt.format != "text" && opt.format != "json")
        fail(ErrorKind::Parse, "unknown format '" + opt.format + "'");

    if (command == "verify-paper") return print_paper_checks(run_verify_paper(), json);

    CompositeLattice C = parse_lattice_spec(opt.spec);
    if (command == "gram") {
        if (json) std::cout << gram_json(C).dump(2) << "\n";
        else print_gram(C);
        return 0;
    }
    if (command == "disc") {
        if (json) {
            std::cout << disc_json(C).dump(2) << "\n";
        } else if (C.components.size() == 1) {
            std::cout << disc_line(C.components[0]) << "\n";
        } else {
            for (const auto& comp : C.components)
                std::cout << comp.name() << ": " << disc_line(comp) << "\n";
        }
        return 0;
    }
    if (command == "shortvec") {
        require_irreducible(C, "shortvec");
        SmallVectorReport report = kth_smallest(C.components[0], opt.k);
        if (json) {
            std::cout << small_vector_json(report).dump(2) << "\n";
            return 0;
        }
        std::cout << report.lattice << " k=" << report.k << ": value " << to_string(report.value)
                  << ", " << report.orbits.size() << " orbit" << (report.orbits.size() == 1 ? "" : "s")
                  << "\n";
        for (const auto& o : report.orbits)
            std::cout << "  generator " << (o.orbit.generator_label.empty() ? "?" : o.orbit.generator_label)
                      << ", size " << o.orbit.size << ", sample " << render_vector(o.orbit.representative)
                      << (o.in_dual_minus_lattice ? "" : " (in the lattice)") << "\n";
        return 0;
    }
    if (command == "orbit") {
        LatticeVector w = parse_vector_literal(C, opt.vector_literal);
        OrbitSummary summary = orbit(C, w, static_cast<std::size_t>(opt.cap), json);
        if (C.components.size() == 1)
            summary.generator_label = orbit_label(C.components[0], summary.representative);
        if (json) {
            Json out = orbit_json(summary, true);
            out["lattice"] = C.spec();
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        std::cout << "orbit of " << render_vector(C, w) << " in " << C.spec() << ": size "
                  << summary.size << ", representative " << render_vector(C, summary.representative);
        if (!summary.generator_label.empty()) std::cout << ", generator " << summary.generator_label;
        std::cout << "\n";
        return 0;
    }
    if (command == "reduce") {
        require_irreducible(C, "reduce");
        LatticeVector w = parse_vector_literal(C, opt.vector_literal);
        ReductionTrace trace = reduce_component(C.components[0], w);
        TraceVerdict verdict = verify_trace(C.components[0], trace);
        if (!verdict.ok) fail(ErrorKind::Internal, "emitted trace failed verification: " + verdict.reason);
        if (json) std::cout << trace_json(trace).dump(2) << "\n";
        else print_trace(C, trace);
        return 0;
    }
    if (command == "certify") {
        Rat target = rat(opt.target);
        CertifyReport report = certify_all(C, target, worker_threads());
        if (json) std::cout << certify_json(report).dump(2) << "\n";
        else print_certify(report);
        return 0;
    }
    fail(ErrorKind::Internal, "unhandled command " + command);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for negative-definite ADE root lattices: discriminant groups, "
                 "Weyl orbits of short dual vectors, and reflection-reduction certificates."};
    app.require_subcommand(1);

    Options opt;
    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("spec", opt.spec, "lattice spec, e.g. A3, D5+E7, 3*A2")->required();
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "text|json")->default_str("text");
    };

    auto* gram = app.add_subcommand("gram", "print the Gram matrix");
    add_spec(gram);
    add_format(gram);
    auto* disc = app.add_subcommand("disc", "discriminant group and generator squares");
    add_spec(disc);
    add_format(disc);
    auto* shortvec = app.add_subcommand("shortvec", "orbits of the k-th smallest dual vectors");
    add_spec(shortvec);
    add_format(shortvec);
    shortvec->add_option("--k", opt.k, "smallness rank (1..5)");
    auto* orbit_cmd = app.add_subcommand("orbit", "Weyl orbit of a vector");
    add_spec(orbit_cmd);
    add_format(orbit_cmd);
    orbit_cmd->add_option("--vector", opt.vector_literal, "vector literal, e.g. \"-1/2,0,-1/2\"")->required();
    orbit_cmd->add_option("--cap", opt.cap, "orbit size cap");
    auto* reduce = app.add_subcommand("reduce", "reflection reduction of a dual vector");
    add_spec(reduce);
    add_format(reduce);
    reduce->add_option("--vector", opt.vector_literal, "vector literal")->required();
    auto* certify = app.add_subcommand("certify", "certify all candidates of a target square");
    add_spec(certify);
    add_format(certify);
    certify->add_option("--target", opt.target, "target square, -1 or -2");
    auto* verify = app.add_subcommand("verify-paper", "reproduce the reference tables");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt);
    } catch (const rootlat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case rootlat::ErrorKind::Parse:
        case rootlat::ErrorKind::EmptySpec:
            return 2;
        case rootlat::ErrorKind::Internal:
        case rootlat::ErrorKind::CertificationFailure:
            return 3;
        default:
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
