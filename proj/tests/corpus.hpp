#pragma once

// Shared test instances.  Semigroup generators are always given in
// M-coordinates (they span the full lattice); oracle parameters are chosen so
// that the brute-force scans are conclusive on each instance.

#include "horoflex/horospherical.hpp"

namespace horoflex::corpus {

struct SemigroupInstance {
    const char* name;
    IntMat gens;
    bool saturated;
    long oracle_coeff;  // coefficient-sum bound for brute_member at degree 12
    long oracle_box;    // coordinate box covering the degree-12 ball
};

inline std::vector<SemigroupInstance> semigroup_instances() {
    return {
        {"example1", {{2, 0}, {1, 1}, {0, 1}}, false, 14, 12},
        {"example2", {{2, 0}, {1, 1}, {1, 2}}, false, 14, 12},
        {"orthant", {{1, 0}, {0, 1}}, true, 14, 12},
        {"ray12_saturated", {{1, 0}, {1, 1}, {1, 2}}, true, 14, 12},
        {"numerical_3_5", {{3}, {5}}, false, 14, 12},
        {"finite_holes", {{0, 1}, {1, 1}, {2, 0}, {3, 0}}, false, 14, 12},
        {"halfplane_units", {{1, 0}, {-1, 0}, {0, 1}}, true, 30, 12},
        {"threedim", {{2, 0, 0}, {1, 1, 0}, {0, 0, 1}, {0, 1, 0}}, false, 16, 12},
        {"skew_saturated", {{2, 1}, {1, 2}, {1, 1}}, true, 14, 10},
        {"deep_holes", {{2, 0}, {1, 2}, {0, 1}}, false, 16, 12},
        {"numerical_axis_3", {{3, 0}, {1, 1}, {0, 1}}, false, 16, 12},
        {"trivial_line", {{1}}, true, 14, 12},
    };
}

struct VarietyInstance {
    const char* name;
    GroupSpec group;
    IntMat gens;  // ambient coordinates
};

inline GroupSpec a1_torus1() { return GroupSpec{{{'A', 1}}, 1}; }
inline GroupSpec torus(int s) { return GroupSpec{{}, s}; }

inline std::vector<VarietyInstance> variety_instances() {
    return {
        {"example1", a1_torus1(), {{2, 0}, {1, 1}, {0, 1}}},
        {"example2", a1_torus1(), {{2, 0}, {1, 1}, {1, 2}}},
        {"a1_even", GroupSpec{{{'A', 1}}, 0}, {{2}}},
        {"toric_orthant", torus(2), {{1, 0}, {0, 1}}},
        {"toric_finite_holes", torus(2), {{0, 1}, {1, 1}, {2, 0}, {3, 0}}},
        {"toric_units", torus(2), {{1, 0}, {-1, 0}, {0, 2}, {0, 3}, {1, 1}}},
        {"toric_cusp", torus(1), {{2}, {3}}},
        {"a2_mixed", GroupSpec{{{'A', 2}}, 1}, {{1, 0, 1}, {0, 1, 1}, {0, 0, 2}}},
        {"b2_plain", GroupSpec{{{'B', 2}}, 0}, {{1, 0}, {1, 1}}},
    };
}

}  // namespace horoflex::corpus
