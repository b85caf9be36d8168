#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "horoflex/cone.hpp"
#include "horoflex/lattice.hpp"
#include "horoflex/linsolve.hpp"

namespace horoflex {

// Finitely generated subsemigroup of Z^r whose generators span the full
// lattice, together with its cone sigma^vee and a grading functional w (the
// sum of the primitive extreme rays of sigma).  w is strictly positive on
// every generator outside the lineality space of sigma^vee; membership is
// decided exactly and memoized, so the type is safe to share across threads.
class AffineSemigroup {
  public:
    static AffineSemigroup from_generators(const IntMat& gens);

    const IntMat& gens() const { return gens_; }
    int rank() const { return rank_; }
    const Cone& cone() const { return cone_; }          // sigma^vee
    const Cone& sigma() const { return sigma_; }        // its dual
    const IntVec& grading() const { return grading_; }  // w
    Int degree(const IntVec& v) const { return dot(grading_, v); }
    Int max_gen_degree() const;

    bool member(const IntVec& v) const;
    // multiplicities over gens() on success
    std::optional<IntVec> member_certificate(const IntVec& v) const;

  private:
    AffineSemigroup() = default;
    int member_code(const IntVec& v) const;
    bool in_unit_lattice(const IntVec& v) const;

    struct MemberCache {
        std::unordered_map<IntVec, int, IntVecHash> memo;
        std::mutex mu;
    };

    IntMat gens_;
    int rank_ = 0;
    Cone cone_;
    Cone sigma_;
    IntVec grading_;
    std::vector<std::size_t> pos_idx_, zero_idx_;
    std::optional<LatticeBasis> unit_lattice_;  // generated by degree-zero gens
    IntMat unit_transform_;                     // basis rows over the zero gens
    IntMat unit_relations_;  // per zero gen: nonneg combo of zero gens summing to 0 with entry >= 1 there
    mutable std::unique_ptr<MemberCache> cache_ = std::make_unique<MemberCache>();
};

// Lattice points x of c with <w,x> <= degree_bound, sorted by (degree, lex).
// For a strictly convex c (relative to w) this is exactly the degree ball;
// coordinates along lineality directions are additionally capped by `cap`
// times the lineality basis entries, which keeps the scan finite.
std::vector<IntVec> lattice_points(const Cone& c, const IntVec& w, const Int& degree_bound,
                                   const Int& cap);

// points of sigma^vee up to the degree bound that are not in the semigroup
std::vector<IntVec> saturation_holes(const AffineSemigroup& s, const Int& degree_bound);

// irreducible elements of the saturation up to the degree bound
std::vector<IntVec> hilbert_basis(const AffineSemigroup& s, const Int& degree_bound);

struct ModuleGens {
    IntMat gens;  // first element 0
    Int certified_up_to = 0;
};

// module generators of the saturation over the semigroup, BFS by degree
ModuleGens module_generators(const AffineSemigroup& s, const Int& degree_bound);

// p + m in F for every module generator m; exact relative to mg
bool is_saturation_point(const AffineSemigroup& s, const ModuleGens& mg, const IntVec& p);

struct SaturationStatus {
    enum class Kind { AlmostSaturated, NowhereSaturatedCertified, UndecidedUpToBound };
    Kind kind = Kind::UndecidedUpToBound;
    IntVec witness;             // AlmostSaturated
    IntFeasibility obstruction; // NowhereSaturatedCertified
    Int bound = 0;

    bool decided() const { return kind != Kind::UndecidedUpToBound; }
};

// The combined integer system whose solutions are saturation points on the
// face: p = sum c_i g_i with p orthogonal to tau and p + m_j in F for every
// nonzero module generator m_j.
struct SaturationSystem {
    IntMat columns;
    IntVec rhs;
    std::size_t gen_count = 0;  // leading columns giving the c-part
};
SaturationSystem saturation_system(const AffineSemigroup& s, const FacePair& face,
                                   const ModuleGens& mg);

SaturationStatus face_saturation_status(const AffineSemigroup& s, const FacePair& face,
                                        const ModuleGens& mg, const Int& search_bound);

}  // namespace horoflex
