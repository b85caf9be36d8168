#pragma once

#include "horoflex/numeric.hpp"

namespace horoflex::oracle {

// Brute-force reference implementations used by the property tests and the
// benchmark.  They share no code with the engine: membership is a full
// odometer over coefficient tuples, cone membership checks all generator
// subsets of size at most dim for a nonnegative rational combination
// (Caratheodory), and scans run over a plain coordinate box.  Intentionally
// slow, deliberately simple, serial.

bool brute_member(const IntMat& gens, const IntVec& v, long coeff_bound);

// exact test for v in the rational cone spanned by gens
bool brute_in_cone(const IntMat& gens, const IntVec& v);

std::vector<IntVec> brute_holes(const IntMat& gens, const IntVec& grading, long degree_bound,
                                long box_bound, long coeff_bound);

bool brute_saturation_point(const IntMat& gens, const IntVec& grading, const IntVec& p,
                            long degree_bound, long box_bound, long coeff_bound);

// grid scan for Demazure roots of the cone spanned by `rays`
std::vector<IntVec> brute_demazure_roots(const IntMat& rays, int ray_index, long max_height);

}  // namespace horoflex::oracle
