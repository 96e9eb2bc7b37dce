#include "rootlat/certifier.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

#include "rootlat/discriminant.hpp"
#include "rootlat/error.hpp"
#include "rootlat/small_vectors.hpp"

namespace rootlat {

namespace {

constexpr int kComponentRankCap = 8;
constexpr int kTotalRankCap = 24;

std::string render_candidate(const CompositeLattice& C, const CandidateVector& w) {
    std::string out;
    for (size_t j = 0; j < w.components.size(); ++j) {
        if (j > 0) out += ';';
        for (size_t i = 0; i < w.components[j].size(); ++i) {
            if (i > 0) out += ',';
            out += to_string(w.components[j][i]);
        }
    }
    return C.spec() + " [" + out + "]";
}

} // namespace

LatticeVector candidate_global(const CompositeLattice& C, const CandidateVector& w) {
    LatticeVector out;
    out.reserve(C.total_rank);
    for (const auto& comp : w.components) out.insert(out.end(), comp.begin(), comp.end());
    return out;
}

std::vector<CandidateVector> enumerate_candidates(const CompositeLattice& C, const Rat& target) {
    if (target != -1 && target != -2)
        fail(ErrorKind::InvalidTarget, "target square must be -1 or -2, got " + to_string(target));
    if (C.total_rank > kTotalRankCap)
        fail(ErrorKind::RankCap, "total rank capped at " + std::to_string(kTotalRankCap));
    for (const auto& comp : C.components)
        if (comp.rank > kComponentRankCap)
            fail(ErrorKind::RankCap, "component rank capped at " + std::to_string(kComponentRankCap));

    const size_t m = C.components.size();
    // Admissible nonzero choices per component, with their squares.
    std::vector<std::vector<std::pair<LatticeVector, Rat>>> choices(m);
    std::vector<Rat> min_square(m, Rat(0));
    for (size_t j = 0; j < m; ++j) {
        for (const OrbitSummary& o : in_scope_orbits(C.components[j])) {
            Rat sq = norm(C.components[j], o.representative);
            for (const LatticeVector& e : o.elements) {
                if (is_integral(e))
                    fail(ErrorKind::Internal, "in-scope element lies in the lattice");
                choices[j].emplace_back(e, sq);
            }
            min_square[j] = std::min(min_square[j], sq);
        }
        std::sort(choices[j].begin(), choices[j].end(),
                  [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
    }
    // Most negative square still reachable from component j onward.
    std::vector<Rat> suffix_min(m + 1, Rat(0));
    for (size_t j = m; j-- > 0;) suffix_min[j] = suffix_min[j + 1] + min_square[j];

    std::vector<CandidateVector> out;
    std::vector<LatticeVector> picked(m);
    int nonzero = 0;
    auto dfs = [&](auto&& self, size_t j, const Rat& sum) -> void {
        if (sum < target || sum + suffix_min[j] > target) return;
        if (j == m) {
            if (sum == target && nonzero > 0) {
                CandidateVector cand;
                cand.components = picked;
                cand.square = target;
                for (size_t l = 0; l < m; ++l)
                    cand.cls.push_back(coset_of(C.components[l], picked[l]));
                out.push_back(std::move(cand));
            }
            return;
        }
        picked[j] = LatticeVector(C.components[j].rank, Rat(0));
        self(self, j + 1, sum);
        for (const auto& [vec, sq] : choices[j]) {
            picked[j] = vec;
            ++nonzero;
            self(self, j + 1, sum + sq);
            --nonzero;
        }
    };
    dfs(dfs, 0, Rat(0));

    std::sort(out.begin(), out.end(), [&](const CandidateVector& a, const CandidateVector& b) {
        return compare(candidate_global(C, a), candidate_global(C, b)) < 0;
    });
    return out;
}

Certificate certify(const CompositeLattice& C, const CandidateVector& w) {
    Certificate cert;
    cert.candidate = w;
    cert.conclusion = true;
    for (size_t j = 0; j < w.components.size(); ++j) {
        if (is_zero(w.components[j])) continue;
        ReductionTrace trace = reduce_component(C.components[j], w.components[j]);
        for (const Rat& c : trace.end)
            if (c >= 0) cert.conclusion = false;
        cert.component_traces.emplace_back(static_cast<int>(j), std::move(trace));
    }
    return cert;
}

CertifyReport certify_all(const CompositeLattice& C, const Rat& target, int threads) {
    std::vector<CandidateVector> candidates = enumerate_candidates(C, target);
    const size_t n = candidates.size();

    unsigned hw = std::thread::hardware_concurrency();
    size_t workers = std::clamp<long>(threads, 1, hw > 0 ? hw : 1);
    workers = std::min(workers, n > 0 ? n : size_t(1));

    std::vector<std::string> why(n); // empty = certified
    auto run_range = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            try {
                Certificate cert = certify(C, candidates[i]);
                if (!cert.conclusion) {
                    why[i] = "endpoint with non-negative coefficient";
                    continue;
                }
                for (const auto& [j, trace] : cert.component_traces) {
                    TraceVerdict v = verify_trace(C.components[j], trace);
                    if (!v.ok) {
                        why[i] = "component " + std::to_string(j + 1) + " trace rejected: " + v.reason;
                        break;
                    }
                }
            } catch (const std::exception& e) {
                why[i] = e.what();
            }
        }
    };
    if (workers <= 1) {
        run_range(0, n);
    } else {
        std::vector<std::future<void>> futures;
        size_t chunk = (n + workers - 1) / workers;
        for (size_t w = 0; w < workers; ++w) {
            size_t lo = w * chunk, hi = std::min(n, lo + chunk);
            if (lo >= hi) break;
            futures.push_back(std::async(std::launch::async, run_range, lo, hi));
        }
        for (auto& f : futures) f.get();
    }

    for (size_t i = 0; i < n; ++i)
        if (!why[i].empty())
            fail(ErrorKind::CertificationFailure,
                 "candidate " + std::to_string(i) + " of " + render_candidate(C, candidates[i]) +
                     " target " + to_string(target) + ": " + why[i]);

    CertifyReport report;
    report.lattice = C.spec();
    report.target = target;
    report.n_candidates = n;
    report.n_certified = n;

    std::map<std::vector<std::vector<long>>, ClassCount> classes;
    for (const CandidateVector& cand : candidates) {
        auto [it, fresh] = classes.try_emplace(cand.cls);
        if (fresh) {
            it->second.cls = cand.cls;
            for (size_t j = 0; j < cand.components.size(); ++j)
                it->second.sample_squares.push_back(norm(C.components[j], cand.components[j]));
        }
        it->second.count += 1;
    }
    for (auto& [cls, entry] : classes) report.classes.push_back(std::move(entry));
    return report;
}

} // namespace rootlat
