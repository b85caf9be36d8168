#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace horoflex {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<IntVec>;  // row-major
using RatMat = std::vector<RatVec>;

enum class Errc {
    EmptyInput,
    ZeroVector,
    ShapeMismatch,
    NotDominant,
    BadGroupSpec,
    NotStrictlyConvex,
    BadRay,
    NotInSemigroup,
    NotAWeight,
    NoLndExists,
    Inconsistent,
    NotWellDefined,
    BadInput,
};

class Error : public std::runtime_error {
  public:
    Error(Errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] void fail(Errc c, const std::string& msg);
const char* errc_name(Errc c);

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
bool is_zero(const IntVec& v);
IntVec zero_vec(std::size_t n);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec negated(const IntVec& a);
IntVec scaled(const IntVec& a, const Int& c);
Int gcd_vec(const IntVec& v);   // >= 0, 0 only for the zero vector
Int one_norm(const IntVec& v);
bool lex_less(const IntVec& a, const IntVec& b);

RatVec to_rat(const IntVec& v);
// clears denominators and divides by the content; zero vector maps to itself
IntVec scale_to_primitive_int(const RatVec& v);

std::string to_string(const IntVec& v);
std::string to_string(const Rat& q);

struct IntVecHash {
    std::size_t operator()(const IntVec& v) const;
};

}  // namespace horoflex
