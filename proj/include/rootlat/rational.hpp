#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace rootlat {

using Int = mpz_class;
using Rat = mpq_class;

// Coefficient tuple in the simple-root basis (components concatenated for
// composite lattices).
using LatticeVector = std::vector<Rat>;

// Reduced rational with positive denominator.
Rat rat(long num, long den = 1);

// Canonical rendering: "p/q" with q > 0 and gcd(p,q) = 1, "p" when q = 1,
// "0" for zero.
std::string to_string(const Rat& q);

// Inverse of to_string; also accepts non-reduced input like "2/4".
Rat rat_from_string(const std::string& text);

bool is_integral(const Rat& q);
bool is_integral(const LatticeVector& v);
bool is_zero(const LatticeVector& v);

Rat coefficient_sum(const LatticeVector& v);
LatticeVector negated(const LatticeVector& v);

// Lexicographic order, used everywhere a deterministic vector order is needed.
int compare(const LatticeVector& a, const LatticeVector& b);

struct LexLess {
    bool operator()(const LatticeVector& a, const LatticeVector& b) const {
        return compare(a, b) < 0;
    }
};

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

} // namespace rootlat
