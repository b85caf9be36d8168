#pragma once

#include <set>
#include <vector>

#include "horoflex/cone.hpp"
#include "horoflex/numeric.hpp"

namespace horoflex {

struct SimpleFactor {
    char type = 'A';  // one of A B C D E F G
    int rank = 0;
};

// G = (product of simple factors) x (K^x)^torus_rank.  Weights are written in
// the basis (fundamental weights of each factor) ++ (torus characters), so
// dominance is a coordinatewise sign condition on the fundamental block.
struct GroupSpec {
    std::vector<SimpleFactor> simple_factors;
    int torus_rank = 0;

    int semisimple_rank() const {
        int s = 0;
        for (const auto& f : simple_factors) s += f.rank;
        return s;
    }
    int ambient_dim() const { return semisimple_rank() + torus_rank; }
};

void validate(const GroupSpec& g);  // BadGroupSpec on invalid type/rank

IntMat cartan_matrix(char type, int rank);

struct RootDatum {
    std::vector<IntMat> positive_roots_by_factor;  // simple-root coordinates
    std::vector<IntMat> cartan_by_factor;

    std::size_t total_positive_roots() const {
        std::size_t n = 0;
        for (const auto& f : positive_roots_by_factor) n += f.size();
        return n;
    }
};

RootDatum positive_roots(const GroupSpec& g);

// closed-form count of positive roots for one factor
long classical_positive_root_count(char type, int rank);

Cone dominant_chamber(const GroupSpec& g);

// indices (into the concatenated simple-root block) of simple roots pairing
// nonzero with some generator; generators must be dominant
std::set<int> support_of_semigroup(const GroupSpec& g, const IntMat& generators);

// number of positive roots whose simple-root support lies inside S
long delta(const GroupSpec& g, const std::set<int>& support);

}  // namespace horoflex
