#pragma once

#include <string>
#include <vector>

namespace rootlat {

// One row of the reproduction matrix for the published reference tables.
struct PaperCheck {
    std::string location; // "Table 1", "§4.1 table", ...
    std::string name;     // "A4", "D8 k=2", ...
    bool pass = false;
    std::string note;     // expected/actual detail, or a labeling remark
};

// Discriminant groups and generator squares for A_1..A_12, D_4..D_12,
// E_6, E_7, E_8.
std::vector<PaperCheck> check_table1();

// Smallest-vector values, orbit counts and generators, ranks <= 8. The D_4
// row carries a note: with the fork numbered d_1-d_2<(d_3,d_4), the three
// orbit generators are the outer-vertex duals d1^, d3^, d4^, while the
// reference table prints d_1^, d_2^, d_3^.
std::vector<PaperCheck> check_smallest();

// Second-smallest values and orbits, including the lattices whose second
// value is -2 attained by roots only.
std::vector<PaperCheck> check_second_smallest();

// Third-smallest table plus the cutoff (a_3^)^2 < -2 for A_9, A_10.
std::vector<PaperCheck> check_third_smallest();

// Fourth-smallest (A_7) and the fifth-smallest bound: every nonzero dual
// vector outside the k=1..4 orbits has square < -2, ranks <= 8.
std::vector<PaperCheck> check_fourth_and_beyond();

std::vector<PaperCheck> run_verify_paper();

bool all_pass(const std::vector<PaperCheck>& checks);

} // namespace rootlat
