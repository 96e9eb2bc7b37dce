#include "rootlat/verify_paper.hpp"

#include <algorithm>
#include <set>

#include "rootlat/discriminant.hpp"
#include "rootlat/small_vectors.hpp"

namespace rootlat {

namespace {

std::vector<IrreducibleRootLattice> lattices_up_to(int max_rank, bool with_e8 = true) {
    std::vector<IrreducibleRootLattice> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back(build_irreducible(Kind::A, n));
    for (int n = 4; n <= max_rank; ++n) out.push_back(build_irreducible(Kind::D, n));
    for (int n = 6; n <= std::min(max_rank, 8); ++n) {
        if (n == 8 && !with_e8) continue;
        out.push_back(build_irreducible(Kind::E, n));
    }
    return out;
}

std::multiset<std::string> orbit_labels(const SmallVectorReport& report) {
    std::multiset<std::string> labels;
    for (const auto& o : report.orbits)
        labels.insert(o.orbit.generator_label.empty() ? "?" : o.orbit.generator_label);
    return labels;
}

std::string join(const std::multiset<std::string>& labels) {
    std::string out;
    for (const auto& s : labels) {
        if (!out.empty()) out += ",";
        out += s;
    }
    return out;
}

PaperCheck table_row(const std::string& location, const IrreducibleRootLattice& L, int k,
                     const Rat& expected_value, const std::multiset<std::string>& expected_gens,
                     const std::string& extra_note = "") {
    PaperCheck check{location, L.name() + " k=" + std::to_string(k), false, extra_note};
    SmallVectorReport report = kth_smallest(L, k);
    auto gens = orbit_labels(report);
    if (report.value != expected_value) {
        check.note = "expected value " + to_string(expected_value) + ", got " + to_string(report.value);
        return check;
    }
    if (gens != expected_gens) {
        check.note = "expected orbits {" + join(expected_gens) + "}, got {" + join(gens) + "}";
        return check;
    }
    check.pass = true;
    return check;
}

} // namespace

std::vector<PaperCheck> check_table1() {
    std::vector<PaperCheck> checks;
    for (const auto& L : lattices_up_to(12)) {
        PaperCheck check{"Table 1", L.name(), false, ""};
        DiscriminantGroup g = discriminant_group(L);

        std::vector<Int> expected_factors;
        std::vector<std::pair<std::string, Rat>> expected_gens;
        int n = L.rank;
        switch (L.kind) {
        case Kind::A:
            expected_factors = {Int(n + 1)};
            expected_gens = {{"a1^", rat(-n, n + 1)}};
            break;
        case Kind::D:
            if (n % 2 == 0) {
                expected_factors = {Int(2), Int(2)};
                expected_gens = {{"d1^", rat(-1)}, {"d" + std::to_string(n) + "^", rat(-n, 4)}};
            } else {
                expected_factors = {Int(4)};
                expected_gens = {{"d" + std::to_string(n) + "^", rat(-n, 4)}};
            }
            break;
        case Kind::E:
            if (n == 6) {
                expected_factors = {Int(3)};
                expected_gens = {{"e6^", rat(-4, 3)}};
            } else if (n == 7) {
                expected_factors = {Int(2)};
                expected_gens = {{"e7^", rat(-3, 2)}};
            }
            break;
        }

        bool ok = g.invariant_factors == expected_factors && g.order() == L.det_abs &&
                  g.generators.size() == expected_gens.size();
        for (size_t i = 0; ok && i < expected_gens.size(); ++i)
            ok = g.generators[i].first == expected_gens[i].first &&
                 g.generator_squares[i] == expected_gens[i].second;
        check.pass = ok;
        if (!ok) check.note = "discriminant data differs from the reference row";
        checks.push_back(check);
    }
    return checks;
}

std::vector<PaperCheck> check_smallest() {
    std::vector<PaperCheck> checks;
    for (const auto& L : lattices_up_to(8, /*with_e8=*/false)) {
        int n = L.rank;
        Rat value;
        std::multiset<std::string> gens;
        std::string note;
        switch (L.kind) {
        case Kind::A:
            value = rat(-n, n + 1);
            gens.insert("a1^");
            if (n > 1) gens.insert("a" + std::to_string(n) + "^");
            break;
        case Kind::D:
            value = rat(-1);
            if (n == 4) {
                gens = {"d1^", "d3^", "d4^"};
                note = "reference prints d1^, d2^, d3^; with the fork numbered d1-d2<(d3,d4) "
                       "the computed generators are the outer-vertex duals d1^, d3^, d4^";
            } else {
                gens = {"d1^"};
            }
            break;
        case Kind::E:
            if (n == 6) {
                value = rat(-4, 3);
                gens = {"e2^", "e6^"};
            } else {
                value = rat(-3, 2);
                gens = {"e7^"};
            }
            break;
        }
        checks.push_back(table_row("§4.1 table", L, 1, value, gens, note));
    }
    return checks;
}

std::vector<PaperCheck> check_second_smallest() {
    std::vector<PaperCheck> checks;
    for (int n = 3; n <= 8; ++n) {
        auto L = build_irreducible(Kind::A, n);
        std::multiset<std::string> gens = {"a2^"};
        if (n > 3) gens.insert("a" + std::to_string(n - 1) + "^");
        checks.push_back(table_row("§4.2 table", L, 2, rat(-2 * (n - 1), n + 1), gens));
    }
    for (int n = 5; n <= 8; ++n) {
        auto L = build_irreducible(Kind::D, n);
        std::multiset<std::string> gens = {"d" + std::to_string(n - 1) + "^", "d" + std::to_string(n) + "^"};
        if (n == 8) gens.insert("root");
        checks.push_back(table_row("§4.2 table", L, 2, rat(-n, 4), gens));
    }
    // Everywhere else the second value is -2, attained by roots only.
    for (const char* name : {"A1", "A2", "D4", "E6", "E7"}) {
        auto L = parse_lattice_spec(name).components[0];
        checks.push_back(table_row("§4.2 table", L, 2, rat(-2), {"root"}));
    }
    return checks;
}

std::vector<PaperCheck> check_third_smallest() {
    std::vector<PaperCheck> checks;
    for (int n = 5; n <= 8; ++n) {
        auto L = build_irreducible(Kind::A, n);
        std::multiset<std::string> gens = {"a3^"};
        if (n == 6 || n == 7) gens.insert("a" + std::to_string(n - 2) + "^");
        if (n == 8) {
            gens.insert("a6^");
            gens.insert("root");
        }
        checks.push_back(table_row("§4.3 table", L, 3, rat(-3 * (n - 2), n + 1), gens));
    }
    for (int n = 9; n <= 10; ++n) {
        auto L = build_irreducible(Kind::A, n);
        Rat sq = norm(L, dual_basis_vector(L, 3));
        PaperCheck check{"§4.3 table", L.name() + " cutoff", sq < -2,
                         "(a3^)^2 = " + to_string(sq)};
        checks.push_back(check);
    }
    return checks;
}

std::vector<PaperCheck> check_fourth_and_beyond() {
    std::vector<PaperCheck> checks;
    checks.push_back(
        table_row("§4.4", build_irreducible(Kind::A, 7), 4, rat(-2), {"a4^", "root"}));

    // Fifth smallest and beyond: every nonzero dual vector outside the k=1..4
    // orbits has square < -2. Element-level: the non-lattice vectors of the
    // k=1..4 reports exhaust everything the enumerator finds down to -2.
    for (const auto& L : lattices_up_to(8)) {
        PaperCheck check{"§4.4", L.name() + " beyond", false, ""};
        std::set<LatticeVector, LexLess> from_reports;
        for (int k = 1; k <= 4; ++k) {
            SmallVectorReport report = kth_smallest(L, k);
            if (report.value < -2) break;
            for (const auto& o : report.orbits)
                if (o.in_dual_minus_lattice)
                    from_reports.insert(o.orbit.elements.begin(), o.orbit.elements.end());
        }
        std::set<LatticeVector, LexLess> enumerated;
        for (const LatticeVector& v : enumerate_dual_up_to(L, rat(-2)))
            if (!is_integral(v)) enumerated.insert(v);
        check.pass = from_reports == enumerated;
        if (!check.pass)
            check.note = "found " + std::to_string(enumerated.size()) + " vectors, reports cover " +
                         std::to_string(from_reports.size());
        checks.push_back(check);
    }
    return checks;
}

std::vector<PaperCheck> run_verify_paper() {
    std::vector<PaperCheck> checks = check_table1();
    for (auto&& c : check_smallest()) checks.push_back(std::move(c));
    for (auto&& c : check_second_smallest()) checks.push_back(std::move(c));
    for (auto&& c : check_third_smallest()) checks.push_back(std::move(c));
    for (auto&& c : check_fourth_and_beyond()) checks.push_back(std::move(c));
    return checks;
}

bool all_pass(const std::vector<PaperCheck>& checks) {
    for (const PaperCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

} // namespace rootlat
