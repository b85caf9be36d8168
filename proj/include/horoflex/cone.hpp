#pragma once

#include <vector>

#include "horoflex/numeric.hpp"

namespace horoflex {

// Rational polyhedral cone carrying both representations in canonical form.
//
// `rays()` is the canonical generating set: primitive extreme-ray
// representatives orthogonal to the lineality space, plus a +/- pair for each
// row of the HNF basis of the lineality lattice, all sorted lexicographically.
// `ineqs()` is the same canonical list for the dual cone, so the H-rep reads
// { x : <a,x> >= 0 for all a in ineqs() }.  Two cones are equal as sets iff
// their canonical lists are equal componentwise.
class Cone {
  public:
    Cone() = default;  // empty placeholder in a 0-dimensional space
    static Cone from_generators(int ambient_dim, const IntMat& generators);
    static Cone from_inequalities(int ambient_dim, const IntMat& normals);
    static Cone zero(int ambient_dim);
    static Cone full_space(int ambient_dim);

    int ambient_dim() const { return ambient_dim_; }
    const IntMat& rays() const { return rays_; }
    const IntMat& ineqs() const { return ineqs_; }
    const IntMat& pointed_rays() const { return pointed_; }
    const IntMat& lineality_basis() const { return lin_basis_; }
    const IntMat& facet_normals() const { return ineq_pointed_; }
    int lineality_dim() const { return static_cast<int>(lin_basis_.size()); }
    int dim() const { return dim_; }
    bool is_full_dimensional() const { return dim_ == ambient_dim_; }
    bool is_strictly_convex() const { return lin_basis_.empty(); }

    bool contains(const IntVec& v) const;
    bool contains_cone(const Cone& other) const;

    bool operator==(const Cone& o) const {
        return ambient_dim_ == o.ambient_dim_ && rays_ == o.rays_ && ineqs_ == o.ineqs_;
    }

  private:
    int ambient_dim_ = 0;
    int dim_ = 0;
    IntMat rays_, ineqs_;
    IntMat pointed_, lin_basis_;
    IntMat ineq_pointed_, ineq_lin_;
};

Cone dual_cone(const Cone& c);
int cone_dim(const Cone& c);
bool is_full_dimensional(const Cone& c);

// extreme rays of a strictly convex cone; error NotStrictlyConvex otherwise
IntMat extremal_rays(const Cone& c);

struct FacePair {
    Cone tau;       // face of c
    Cone tau_hat;   // paired face of the dual
    IntVec support; // u in dual(c) with tau = c ∩ u^perp (zero for tau = c)
};

// all faces of c, each paired with its dual face, sorted by (dim, rays)
std::vector<FacePair> faces(const Cone& c);

struct DemazureRoot {
    IntVec e;
    int distinguished_ray_index = -1;

    bool operator==(const DemazureRoot&) const = default;
};

bool is_demazure_root(const Cone& c, const IntVec& e, int ray_index);

// all roots with one-norm at most max_height, sorted lexicographically
std::vector<DemazureRoot> demazure_roots(const Cone& c, int ray_index, const Int& max_height);

}  // namespace horoflex
