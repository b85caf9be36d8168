#pragma once

#include <map>
#include <random>

#include "horoflex/horospherical.hpp"

namespace horoflex {

// Element of the weight-skeleton algebra of the semigroup: one formal symbol
// per weight of F, with exact rational coefficients.  For torus-only groups
// this is the honest coordinate algebra K[F].
struct GradedElement {
    std::map<IntVec, Rat> terms;  // weight -> coefficient, no zero entries

    bool is_zero() const { return terms.empty(); }
    bool operator==(const GradedElement&) const = default;
};

GradedElement graded_element(const AffineSemigroup& s,
                             const std::vector<std::pair<IntVec, Rat>>& terms);
GradedElement symbol(const AffineSemigroup& s, const IntVec& weight, const Rat& coeff = Rat(1));

GradedElement add(const GradedElement& a, const GradedElement& b);
GradedElement mul(const GradedElement& a, const GradedElement& b);
GradedElement scale(const GradedElement& a, const Rat& c);

// D_h on the symbol algebra: f_Lambda -> <Lambda, v_ray> * scale * f_{Lambda+e}
struct HomogeneousDerivation {
    IntVec degree;      // e
    int ray_index = -1; // distinguished ray of sigma
    Rat scale = 1;
};

// validated constructor: `root` must carry the verified shift checks
HomogeneousDerivation make_derivation(const HoroVariety& h, const LndRoot& root,
                                      const Rat& scale = Rat(1));

GradedElement apply(const HoroVariety& h, const HomogeneousDerivation& d, const GradedElement& x);

// smallest k with D^k(symbol) = 0; equals <weight, v_ray> + 1
long nilpotency_order(const HoroVariety& h, const HomogeneousDerivation& d, const IntVec& weight);

GradedElement exp_action(const HoroVariety& h, const HomogeneousDerivation& d, const Rat& s,
                         const GradedElement& x);

// Checks that each component sitting at a vertex of the convex hull of the
// component degrees is nilpotent on sampled elements, after verifying that
// the sum itself is (bounded test).  Returns false on a violation.
bool vertex_component_check(const HoroVariety& h,
                            const std::vector<HomogeneousDerivation>& components, int trials,
                            unsigned seed);

// hull vertices among the given integer points (exact rational LP test)
std::vector<std::size_t> hull_vertices(const IntMat& points);

}  // namespace horoflex
