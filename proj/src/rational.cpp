#include "rootlat/rational.hpp"

#include <cctype>

#include "rootlat/error.hpp"

namespace rootlat {

Rat rat(long num, long den) {
    if (den == 0) fail(ErrorKind::Internal, "zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

Rat rat_from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail(ErrorKind::Parse, "empty rational literal");
    // mpq_class accepts spurious forms like "1/"; validate the shape first.
    auto digits = [](const std::string& t, size_t from, size_t to) {
        if (from >= to) return false;
        for (size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    size_t slash = s.find('/');
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool ok;
    if (slash == std::string::npos) {
        ok = digits(s, start, s.size());
    } else {
        ok = digits(s, start, slash) && digits(s, slash + 1, s.size());
    }
    if (!ok) fail(ErrorKind::Parse, "bad rational literal '" + text + "'");
    Rat q(s);
    if (q.get_den() == 0) fail(ErrorKind::Parse, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

bool is_integral(const Rat& q) { return q.get_den() == 1; }

bool is_integral(const LatticeVector& v) {
    for (const Rat& c : v)
        if (!is_integral(c)) return false;
    return true;
}

bool is_zero(const LatticeVector& v) {
    for (const Rat& c : v)
        if (c != 0) return false;
    return true;
}

Rat coefficient_sum(const LatticeVector& v) {
    Rat s = 0;
    for (const Rat& c : v) s += c;
    return s;
}

LatticeVector negated(const LatticeVector& v) {
    LatticeVector out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

int compare(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

Int floor_rat(const Rat& q) {
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

Int ceil_rat(const Rat& q) {
    Int out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

} // namespace rootlat
