#include "horoflex/numeric.hpp"

#include <sstream>

namespace horoflex {

void fail(Errc c, const std::string& msg) {
    throw Error(c, std::string(errc_name(c)) + ": " + msg);
}

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::ZeroVector: return "ZeroVector";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::NotDominant: return "NotDominant";
        case Errc::BadGroupSpec: return "BadGroupSpec";
        case Errc::NotStrictlyConvex: return "NotStrictlyConvex";
        case Errc::BadRay: return "BadRay";
        case Errc::NotInSemigroup: return "NotInSemigroup";
        case Errc::NotAWeight: return "NotAWeight";
        case Errc::NoLndExists: return "NoLndExists";
        case Errc::Inconsistent: return "Inconsistent";
        case Errc::NotWellDefined: return "NotWellDefined";
        case Errc::BadInput: return "BadInput";
    }
    return "Error";
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) fail(Errc::ShapeMismatch, "dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) fail(Errc::ShapeMismatch, "dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

IntVec zero_vec(std::size_t n) { return IntVec(n, Int(0)); }

IntVec add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) fail(Errc::ShapeMismatch, "add: dimension mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) fail(Errc::ShapeMismatch, "sub: dimension mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec negated(const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

IntVec scaled(const IntVec& a, const Int& c) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

Int gcd_vec(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) {
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Int one_norm(const IntVec& v) {
    Int s = 0;
    for (const auto& x : v) s += abs(x);
    return s;
}

bool lex_less(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

IntVec scale_to_primitive_int(const RatVec& v) {
    Int den = 1;
    for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    IntVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat q = v[i] * Rat(den);
        w[i] = q.get_num();
    }
    Int g = gcd_vec(w);
    if (g > 1)
        for (auto& x : w) x /= g;
    return w;
}

std::string to_string(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].get_str();
    }
    os << ")";
    return os.str();
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::size_t IntVecHash::operator()(const IntVec& v) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& x : v) {
        unsigned long r = mpz_fdiv_ui(x.get_mpz_t(), 1000000007ul);
        h ^= r + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace horoflex
