#include "horoflex/horospherical.hpp"

#include <algorithm>
#include <memory>

namespace horoflex {

FacePair ray_face_pair(const HoroVariety& h, int ray_index) {
    const IntMat& rays = h.sigma().pointed_rays();
    if (ray_index < 0 || ray_index >= static_cast<int>(rays.size()))
        fail(Errc::BadRay, "invalid ray index");
    const IntVec& v = rays[ray_index];
    Cone tau = Cone::from_generators(h.rank(), {v});
    IntMat normals = h.sigma_dual().ineqs();
    normals.push_back(negated(v));
    Cone tau_hat = Cone::from_inequalities(h.rank(), normals);
    if (tau.dim() + tau_hat.dim() != h.rank())
        fail(Errc::Inconsistent, "ray face pairing dimension mismatch");
    return FacePair{tau, tau_hat, v};
}

namespace {

std::set<int> face_support(const HoroVariety& h, const Cone& tau_hat,
                           std::vector<std::size_t>* indices_out = nullptr) {
    IntMat on_face;
    for (std::size_t i = 0; i < h.gens_m().size(); ++i)
        if (tau_hat.contains(h.gens_m()[i])) {
            on_face.push_back(h.ambient_gens()[i]);
            if (indices_out) indices_out->push_back(i);
        }
    return support_of_semigroup(h.group(), on_face);
}

}  // namespace

HoroVariety HoroVariety::build(const GroupSpec& group, const IntMat& ambient_gens) {
    validate(group);
    if (ambient_gens.empty()) fail(Errc::EmptyInput, "at least one generator is required");
    support_of_semigroup(group, ambient_gens);  // dominance and shape check

    HoroVariety h;
    h.group_ = group;
    h.ambient_gens_ = ambient_gens;
    h.lattice_ = hermite_basis(ambient_gens);
    int r = h.lattice_.rank;
    for (const auto& g : ambient_gens) {
        auto c = coordinates_in_lattice(g, h.lattice_);
        if (!c) fail(Errc::Inconsistent, "generator outside its own lattice");
        h.gens_m_.push_back(*c);
    }

    h.semigroup_ = std::make_shared<AffineSemigroup>(AffineSemigroup::from_generators(h.gens_m_));
    h.sigma_dual_ = h.semigroup_->cone();
    h.sigma_ = h.semigroup_->sigma();
    if (!h.sigma_dual_.is_full_dimensional())
        fail(Errc::Inconsistent, "sigma^vee must be full-dimensional in M-coordinates");

    IntMat chamber_normals;
    for (int j = 0; j < group.semisimple_rank(); ++j) {
        IntVec col(r);
        for (int k = 0; k < r; ++k) col[k] = h.lattice_.basis_rows[k][j];
        if (!is_zero(col)) chamber_normals.push_back(col);
    }
    h.theta_dual_ = Cone::from_inequalities(r, chamber_normals);
    h.theta_ = dual_cone(h.theta_dual_);

    if (!h.theta_dual_.contains_cone(h.sigma_dual_))
        fail(Errc::Inconsistent, "sigma^vee must lie in theta^vee");
    if (!h.sigma_.contains_cone(h.theta_))
        fail(Errc::Inconsistent, "theta must lie in sigma");
    return h;
}

Bounds HoroVariety::default_bounds() const {
    Int base = semigroup_->max_gen_degree();
    if (base < 1) base = 1;
    Bounds b;
    b.degree = 8 * base;
    b.module_degree = 8 * base;
    b.search_degree = 8 * base;
    b.root_height = 16;
    return b;
}

long dimension(const HoroVariety& h) {
    return h.sigma_dual().dim() + delta(h.group(), support_of_semigroup(h.group(), h.ambient_gens()));
}

std::vector<OrbitInfo> orbit_lattice(const HoroVariety& h) {
    long dim_x = dimension(h);
    std::vector<OrbitInfo> out;
    for (auto& fp : faces(h.sigma())) {
        OrbitInfo info;
        std::set<int> supp = face_support(h, fp.tau_hat, &info.face_gen_indices);
        info.orbit_dim = fp.tau_hat.dim() + delta(h.group(), supp);
        info.codim = dim_x - info.orbit_dim;
        info.face = std::move(fp);
        out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(), [](const OrbitInfo& a, const OrbitInfo& b) {
        if (a.orbit_dim != b.orbit_dim) return a.orbit_dim < b.orbit_dim;
        return a.face.tau.rays() < b.face.tau.rays();
    });
    return out;
}

std::vector<int> codim_one_rays(const HoroVariety& h) {
    const IntMat& rays = h.sigma().pointed_rays();
    const IntMat& theta_rays = h.theta().pointed_rays();
    long full_delta = delta(h.group(), support_of_semigroup(h.group(), h.ambient_gens()));

    std::vector<int> by_theta, by_dimension;
    for (int i = 0; i < static_cast<int>(rays.size()); ++i) {
        bool theta_ray =
            std::find(theta_rays.begin(), theta_rays.end(), rays[i]) != theta_rays.end();
        if (!theta_ray) by_theta.push_back(i);
        FacePair fp = ray_face_pair(h, i);
        if (delta(h.group(), face_support(h, fp.tau_hat)) == full_delta) by_dimension.push_back(i);
    }
    if (by_theta != by_dimension)
        fail(Errc::Inconsistent, "codimension-one characterizations disagree");
    return by_theta;
}

std::vector<RayStatus> significant_rays(const HoroVariety& h, const ModuleGens& mg,
                                        const Bounds& bounds) {
    std::vector<int> codim1 = codim_one_rays(h);
    const IntMat& rays = h.sigma().pointed_rays();
    std::vector<RayStatus> out(rays.size());
    long n = static_cast<long>(rays.size());
    // per-ray analyses are independent; results do not depend on scheduling
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < n; ++i) {
        RayStatus rs;
        rs.ray_index = static_cast<int>(i);
        rs.ray = rays[i];
        rs.codim_one = std::find(codim1.begin(), codim1.end(), i) != codim1.end();
        if (rs.codim_one)
            rs.status = face_saturation_status(h.semigroup(), ray_face_pair(h, rs.ray_index), mg,
                                               bounds.search_degree);
        out[i] = std::move(rs);
    }
    return out;
}

GammaPair regularity_cone(const HoroVariety& h, const std::vector<RayStatus>& statuses) {
    IntMat min_gens = h.theta().rays();
    IntMat max_gens = min_gens;
    for (const auto& rs : statuses) {
        if (!rs.codim_one) continue;
        switch (rs.status->kind) {
            case SaturationStatus::Kind::AlmostSaturated:
                min_gens.push_back(rs.ray);
                max_gens.push_back(rs.ray);
                break;
            case SaturationStatus::Kind::UndecidedUpToBound:
                max_gens.push_back(rs.ray);
                break;
            case SaturationStatus::Kind::NowhereSaturatedCertified: break;
        }
    }
    GammaPair g;
    g.gamma_min = Cone::from_generators(h.rank(), min_gens);
    g.gamma_max = Cone::from_generators(h.rank(), max_gens);
    if (!h.sigma().contains_cone(g.gamma_max) || !g.gamma_min.contains_cone(h.theta()) ||
        !g.gamma_max.contains_cone(g.gamma_min))
        fail(Errc::Inconsistent, "theta <= gamma_min <= gamma_max <= sigma violated");
    return g;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Flexible: return "FLEXIBLE";
        case Verdict::NotFlexible: return "NOT_FLEXIBLE";
        case Verdict::Undecided: return "UNDECIDED";
    }
    return "UNDECIDED";
}

FlexReport flexibility(const HoroVariety& h, const Bounds& bounds) {
    FlexReport rep;
    rep.bounds = bounds;
    rep.dim_x = dimension(h);
    rep.module_gens = module_generators(h.semigroup(), bounds.module_degree);
    rep.ray_statuses = significant_rays(h, rep.module_gens, bounds);
    rep.gamma = regularity_cone(h, rep.ray_statuses);
    if (rep.gamma.gamma_min.is_full_dimensional()) {
        rep.verdict = Verdict::Flexible;
    } else if (!rep.gamma.gamma_max.is_full_dimensional()) {
        rep.verdict = Verdict::NotFlexible;
        IntMat kernel = integer_kernel_basis(rep.gamma.gamma_max.rays(), h.rank());
        if (kernel.empty())
            fail(Errc::Inconsistent, "low-dimensional cone must have a normal vector");
        rep.hyperplane_normal = kernel.front();
    } else {
        rep.verdict = Verdict::Undecided;
    }
    return rep;
}

Cone regular_locus_weight_cone(const HoroVariety& h, const Cone& gamma) {
    if (gamma.ambient_dim() != h.rank()) fail(Errc::ShapeMismatch, "gamma in wrong space");
    return dual_cone(gamma);
}

bool has_nonconstant_invertible(const HoroVariety& h, const Cone& gamma) {
    Cone gv = regular_locus_weight_cone(h, gamma);
    bool invertibles = gv.lineality_dim() > 0;
    if (invertibles == gamma.is_full_dimensional())
        fail(Errc::Inconsistent, "invertibles must match non-full-dimensionality of gamma");
    return invertibles;
}

Int vanishing_order(const HoroVariety& h, const IntVec& weight, int ray_index) {
    const IntMat& rays = h.sigma().pointed_rays();
    if (ray_index < 0 || ray_index >= static_cast<int>(rays.size()))
        fail(Errc::BadRay, "invalid ray index");
    if (static_cast<int>(weight.size()) != h.rank() || !h.theta_dual().contains(weight))
        fail(Errc::NotAWeight, "weight outside theta^vee");
    return dot(weight, rays[ray_index]);
}

IntMat ideal_module_generators(const HoroVariety& h, int ray_index, const Int& degree_bound) {
    const IntMat& rays = h.sigma().pointed_rays();
    if (ray_index < 0 || ray_index >= static_cast<int>(rays.size()))
        fail(Errc::BadRay, "invalid ray index");
    const IntVec& v = rays[ray_index];
    const AffineSemigroup& s = h.semigroup();
    std::vector<IntVec> pts = lattice_points(s.cone(), s.grading(), degree_bound, degree_bound);
    std::sort(pts.begin(), pts.end(), [&](const IntVec& a, const IntVec& b) {
        Int da = s.degree(a), db = s.degree(b);
        if (da != db) return da < db;
        Int na = one_norm(a), nb = one_norm(b);
        if (na != nb) return na < nb;
        return lex_less(a, b);
    });
    IntMat found;
    for (const auto& z : pts) {
        if (dot(z, v) <= 0 || !s.member(z)) continue;
        bool covered = false;
        for (const auto& g : found)
            if (s.member(sub(z, g))) {
                covered = true;
                break;
            }
        if (!covered) found.push_back(z);
    }
    return found;
}

std::optional<LndRoot> find_lnd_root(const HoroVariety& h, int ray_index,
                                     const SaturationStatus& status, const Bounds& bounds) {
    if (status.kind == SaturationStatus::Kind::NowhereSaturatedCertified)
        fail(Errc::NoLndExists, "dual facet is nowhere saturated, no such derivation exists");
    if (status.kind == SaturationStatus::Kind::UndecidedUpToBound)
        fail(Errc::NoLndExists, "dual facet saturation undecided at the given bounds");

    IntMat ideal = ideal_module_generators(h, ray_index, bounds.module_degree);
    std::vector<DemazureRoot> roots = demazure_roots(h.sigma(), ray_index, bounds.root_height);
    std::stable_sort(roots.begin(), roots.end(), [](const DemazureRoot& a, const DemazureRoot& b) {
        Int na = one_norm(a.e), nb = one_norm(b.e);
        if (na != nb) return na < nb;
        return lex_less(a.e, b.e);
    });
    const AffineSemigroup& s = h.semigroup();
    for (const auto& root : roots) {
        if (!h.theta_dual().contains(root.e)) continue;
        LndRoot out;
        out.root = root;
        out.in_theta_dual = true;
        out.ideal_gens = ideal;
        bool ok = true;
        for (const auto& g : ideal) {
            IntVec shifted = add(g, root.e);
            auto cert = s.member_certificate(shifted);
            if (!cert) {
                ok = false;
                break;
            }
            out.shift_checks.push_back(ShiftCheck{g, shifted, *cert});
        }
        if (ok) return out;
    }
    return std::nullopt;
}

}  // namespace horoflex
