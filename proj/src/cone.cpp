#include "horoflex/cone.hpp"

#include <algorithm>
#include <map>

#include "horoflex/lattice.hpp"
#include "horoflex/linsolve.hpp"

namespace horoflex {

namespace {

void sort_unique(IntMat& rows) {
    std::sort(rows.begin(), rows.end(), lex_less);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

// is v a nonnegative combination of `gens` plus the span of `lin`?
bool in_generated_cone(const IntVec& v, const IntMat& gens, const IntMat& lin) {
    std::size_t m = v.size();
    IntMat cols = gens;
    for (const auto& l : lin) {
        cols.push_back(l);
        cols.push_back(negated(l));
    }
    RatMat A(m, RatVec(cols.size(), Rat(0)));
    for (std::size_t k = 0; k < cols.size(); ++k)
        for (std::size_t i = 0; i < m; ++i) A[i][k] = Rat(cols[k][i]);
    return lp_feasible(A, to_rat(v)).feasible;
}

IntMat reduce_generators(IntMat rays, const IntMat& lin) {
    sort_unique(rays);
    for (std::size_t i = 0; i < rays.size();) {
        IntMat others;
        for (std::size_t j = 0; j < rays.size(); ++j)
            if (j != i) others.push_back(rays[j]);
        if (in_generated_cone(rays[i], others, lin))
            rays.erase(rays.begin() + i);
        else
            ++i;
    }
    return rays;
}

struct VRep {
    IntMat pointed;  // extreme-ray representatives, orthogonal to lin, sorted
    IntMat lin;      // HNF basis rows of the lineality lattice
};

IntVec project_off_lineality(const IntVec& r, const IntMat& lin) {
    if (lin.empty()) return r;
    std::size_t k = lin.size();
    RatMat G(k, RatVec(k, Rat(0)));
    RatVec rhs(k, Rat(0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) G[i][j] = Rat(dot(lin[i], lin[j]));
        rhs[i] = Rat(dot(lin[i], r));
    }
    auto t = solve_rational(G, rhs);
    if (!t) fail(Errc::Inconsistent, "gram system must be solvable");
    RatVec out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        out[i] = Rat(r[i]);
        for (std::size_t a = 0; a < k; ++a) out[i] -= (*t)[a] * Rat(lin[a][i]);
    }
    return scale_to_primitive_int(out);
}

// double description: V-representation of { x : <a,x> >= 0 for all normals }
VRep solve_hrep(int dim, const IntMat& raw_normals) {
    IntMat normals;
    for (const auto& a : raw_normals) {
        if (static_cast<int>(a.size()) != dim)
            fail(Errc::ShapeMismatch, "inequality of wrong dimension");
        if (!is_zero(a)) normals.push_back(primitive_vector(a));
    }
    sort_unique(normals);

    IntMat rays;
    IntMat lin;
    for (int i = 0; i < dim; ++i) {
        IntVec e = zero_vec(dim);
        e[i] = 1;
        lin.push_back(e);
    }

    for (const auto& a : normals) {
        std::size_t split = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (dot(a, lin[i]) != 0) {
                split = i;
                break;
            }
        if (split < lin.size()) {
            IntVec l0 = lin[split];
            if (dot(a, l0) < 0) l0 = negated(l0);
            Int al0 = dot(a, l0);
            IntMat new_lin;
            for (std::size_t i = 0; i < lin.size(); ++i) {
                if (i == split) continue;
                IntVec l = sub(scaled(lin[i], al0), scaled(l0, dot(a, lin[i])));
                new_lin.push_back(primitive_vector(l));
            }
            IntMat new_rays;
            for (const auto& r : rays) {
                IntVec w = sub(scaled(r, al0), scaled(l0, dot(a, r)));
                if (!is_zero(w)) new_rays.push_back(primitive_vector(w));
            }
            new_rays.push_back(l0);
            lin = std::move(new_lin);
            rays = reduce_generators(std::move(new_rays), lin);
        } else {
            IntMat keep, pos, neg;
            for (const auto& r : rays) {
                Int s = dot(a, r);
                if (s > 0)
                    pos.push_back(r);
                else if (s < 0)
                    neg.push_back(r);
                else
                    keep.push_back(r);
            }
            IntMat next = keep;
            for (const auto& p : pos) next.push_back(p);
            for (const auto& p : pos)
                for (const auto& mrow : neg) {
                    IntVec w = sub(scaled(mrow, dot(a, p)), scaled(p, dot(a, mrow)));
                    if (!is_zero(w)) next.push_back(primitive_vector(w));
                }
            rays = reduce_generators(std::move(next), lin);
        }
    }

    // lineality recomputed exactly from the normals, then rays re-keyed to it
    IntMat lin_canon = integer_kernel_basis(normals, dim);
    if (static_cast<int>(lin_canon.size()) != static_cast<int>(lin.size()))
        fail(Errc::Inconsistent, "double description lineality mismatch");
    IntMat pointed;
    for (const auto& r : rays) {
        IntVec p = project_off_lineality(r, lin_canon);
        if (!is_zero(p)) pointed.push_back(p);
    }
    pointed = reduce_generators(std::move(pointed), lin_canon);
    return VRep{std::move(pointed), std::move(lin_canon)};
}

IntMat canonical_generators(const VRep& v) {
    IntMat out = v.pointed;
    for (const auto& l : v.lin) {
        out.push_back(l);
        out.push_back(negated(l));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

int generator_rank(const VRep& v) {
    IntMat all = v.pointed;
    for (const auto& l : v.lin) all.push_back(l);
    if (all.empty()) return 0;
    return rational_rank(all);
}

}  // namespace

bool Cone::contains(const IntVec& v) const {
    if (static_cast<int>(v.size()) != ambient_dim_)
        fail(Errc::ShapeMismatch, "Cone::contains: wrong dimension");
    for (const auto& a : ineqs_)
        if (dot(a, v) < 0) return false;
    return true;
}

bool Cone::contains_cone(const Cone& other) const {
    for (const auto& g : other.rays_)
        if (!contains(g)) return false;
    return true;
}

Cone Cone::from_inequalities(int ambient_dim, const IntMat& normals) {
    Cone c;
    c.ambient_dim_ = ambient_dim;
    VRep primal = solve_hrep(ambient_dim, normals);
    c.pointed_ = primal.pointed;
    c.lin_basis_ = primal.lin;
    c.rays_ = canonical_generators(primal);
    c.dim_ = generator_rank(primal);
    VRep dual = solve_hrep(ambient_dim, c.rays_);
    c.ineq_pointed_ = dual.pointed;
    c.ineq_lin_ = dual.lin;
    c.ineqs_ = canonical_generators(dual);

    for (const auto& r : c.rays_)
        for (const auto& a : c.ineqs_)
            if (dot(a, r) < 0) fail(Errc::Inconsistent, "cone cross-check: ray violates H-rep");
    for (const auto& a : normals)
        if (!is_zero(a) && !in_generated_cone(primitive_vector(a), dual.pointed, dual.lin))
            fail(Errc::Inconsistent, "cone cross-check: lost inequality");
    if (c.dim_ + static_cast<int>(dual.lin.size()) != ambient_dim ||
        generator_rank(dual) + c.lineality_dim() != ambient_dim)
        fail(Errc::Inconsistent, "cone cross-check: dimension pairing failed");
    return c;
}

Cone Cone::from_generators(int ambient_dim, const IntMat& generators) {
    for (const auto& g : generators)
        if (static_cast<int>(g.size()) != ambient_dim)
            fail(Errc::ShapeMismatch, "generator of wrong dimension");
    Cone c;
    c.ambient_dim_ = ambient_dim;
    VRep dual = solve_hrep(ambient_dim, generators);
    c.ineq_pointed_ = dual.pointed;
    c.ineq_lin_ = dual.lin;
    c.ineqs_ = canonical_generators(dual);
    VRep primal = solve_hrep(ambient_dim, c.ineqs_);
    c.pointed_ = primal.pointed;
    c.lin_basis_ = primal.lin;
    c.rays_ = canonical_generators(primal);
    c.dim_ = generator_rank(primal);

    for (const auto& r : c.rays_)
        for (const auto& a : c.ineqs_)
            if (dot(a, r) < 0) fail(Errc::Inconsistent, "cone cross-check: ray violates H-rep");
    IntMat gen_lin;  // input generators can only produce lineality via opposite combinations
    for (const auto& r : c.pointed_) {
        IntMat plain;
        for (const auto& g : generators)
            if (!is_zero(g)) plain.push_back(g);
        IntMat no_lin;
        if (!in_generated_cone(r, plain, no_lin))
            fail(Errc::Inconsistent, "cone cross-check: canonical ray outside generated cone");
    }
    if (c.dim_ + static_cast<int>(dual.lin.size()) != ambient_dim ||
        generator_rank(dual) + c.lineality_dim() != ambient_dim)
        fail(Errc::Inconsistent, "cone cross-check: dimension pairing failed");
    return c;
}

Cone Cone::zero(int ambient_dim) { return from_generators(ambient_dim, {}); }

Cone Cone::full_space(int ambient_dim) { return from_inequalities(ambient_dim, {}); }

Cone dual_cone(const Cone& c) { return Cone::from_generators(c.ambient_dim(), c.ineqs()); }

int cone_dim(const Cone& c) { return c.dim(); }

bool is_full_dimensional(const Cone& c) { return c.is_full_dimensional(); }

IntMat extremal_rays(const Cone& c) {
    if (!c.is_strictly_convex())
        fail(Errc::NotStrictlyConvex, "extremal_rays: cone has lineality");
    return c.pointed_rays();
}

std::vector<FacePair> faces(const Cone& c) {
    const IntMat& fnormals = c.facet_normals();
    if (fnormals.size() > 16) fail(Errc::BadInput, "faces: too many facets");
    std::map<IntMat, Cone> distinct;  // keyed by canonical rays
    for (std::size_t mask = 0; mask < (std::size_t(1) << fnormals.size()); ++mask) {
        IntMat normals = c.ineqs();
        for (std::size_t i = 0; i < fnormals.size(); ++i)
            if (mask & (std::size_t(1) << i)) normals.push_back(negated(fnormals[i]));
        Cone face = Cone::from_inequalities(c.ambient_dim(), normals);
        distinct.emplace(face.rays(), face);
    }
    std::vector<FacePair> out;
    for (auto& [key, face] : distinct) {
        IntVec support = zero_vec(c.ambient_dim());
        for (const auto& a : fnormals) {
            bool active = true;
            for (const auto& g : face.rays())
                if (dot(a, g) != 0) {
                    active = false;
                    break;
                }
            if (active) support = add(support, a);
        }
        if (!is_zero(support)) support = primitive_vector(support);
        IntMat hat_normals = c.rays();
        for (const auto& g : face.rays()) hat_normals.push_back(negated(g));
        Cone tau_hat = Cone::from_inequalities(c.ambient_dim(), hat_normals);
        if (face.dim() + tau_hat.dim() != c.ambient_dim())
            fail(Errc::Inconsistent, "face pairing dimension mismatch");
        out.push_back(FacePair{face, tau_hat, support});
    }
    std::sort(out.begin(), out.end(), [](const FacePair& a, const FacePair& b) {
        if (a.tau.dim() != b.tau.dim()) return a.tau.dim() < b.tau.dim();
        return a.tau.rays() < b.tau.rays();
    });
    return out;
}

bool is_demazure_root(const Cone& c, const IntVec& e, int ray_index) {
    if (!c.is_strictly_convex())
        fail(Errc::NotStrictlyConvex, "demazure roots need a strictly convex cone");
    const IntMat& rays = c.pointed_rays();
    if (ray_index < 0 || ray_index >= static_cast<int>(rays.size()))
        fail(Errc::BadRay, "invalid ray index");
    if (static_cast<int>(e.size()) != c.ambient_dim())
        fail(Errc::ShapeMismatch, "root of wrong dimension");
    for (int j = 0; j < static_cast<int>(rays.size()); ++j) {
        Int s = dot(rays[j], e);
        if (j == ray_index) {
            if (s != -1) return false;
        } else if (s < 0) {
            return false;
        }
    }
    return true;
}

std::vector<DemazureRoot> demazure_roots(const Cone& c, int ray_index, const Int& max_height) {
    if (!c.is_strictly_convex())
        fail(Errc::NotStrictlyConvex, "demazure roots need a strictly convex cone");
    const IntMat& rays = c.pointed_rays();
    if (ray_index < 0 || ray_index >= static_cast<int>(rays.size()))
        fail(Errc::BadRay, "invalid ray index");
    long h = max_height.get_si();
    if (h < 0) h = 0;
    int dim = c.ambient_dim();
    std::vector<DemazureRoot> out;
    IntVec e = zero_vec(dim);
    auto scan = [&](auto&& self, int pos, long left) -> void {
        if (pos == dim) {
            if (is_demazure_root(c, e, ray_index)) out.push_back(DemazureRoot{e, ray_index});
            return;
        }
        for (long v = -left; v <= left; ++v) {
            e[pos] = v;
            self(self, pos + 1, left - std::abs(v));
        }
        e[pos] = 0;
    };
    scan(scan, 0, h);
    std::sort(out.begin(), out.end(),
              [](const DemazureRoot& a, const DemazureRoot& b) { return lex_less(a.e, b.e); });
    return out;
}

}  // namespace horoflex
