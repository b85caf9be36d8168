#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "horoflex/cone.hpp"
#include "horoflex/rootsystem.hpp"
#include "horoflex/semigroup.hpp"

namespace horoflex {

struct Bounds {
    Int degree = 0;
    Int module_degree = 0;
    Int search_degree = 0;
    Int root_height = 0;
};

// Combinatorial model of an affine complexity-zero horospherical variety:
// the weight lattice M generated by the dominant generators, both cone pairs
// (sigma^vee, sigma) and (theta^vee, theta) in M/N coordinates, and the
// weight semigroup.
class HoroVariety {
  public:
    static HoroVariety build(const GroupSpec& group, const IntMat& ambient_gens);

    const GroupSpec& group() const { return group_; }
    const IntMat& ambient_gens() const { return ambient_gens_; }
    const LatticeBasis& lattice() const { return lattice_; }
    const IntMat& gens_m() const { return gens_m_; }
    const Cone& sigma_dual() const { return sigma_dual_; }
    const Cone& sigma() const { return sigma_; }
    const Cone& theta_dual() const { return theta_dual_; }
    const Cone& theta() const { return theta_; }
    const AffineSemigroup& semigroup() const { return *semigroup_; }
    int rank() const { return lattice_.rank; }

    Bounds default_bounds() const;

  private:
    HoroVariety() = default;
    GroupSpec group_;
    IntMat ambient_gens_;
    LatticeBasis lattice_;
    IntMat gens_m_;
    Cone sigma_dual_;
    Cone sigma_;
    Cone theta_dual_;
    Cone theta_;
    std::shared_ptr<const AffineSemigroup> semigroup_;
};

long dimension(const HoroVariety& h);

enum class Regularity { Regular, NotRegular, Undecided, NotComputed };

struct OrbitInfo {
    FacePair face;
    std::vector<std::size_t> face_gen_indices;  // generators lying on tau_hat
    long orbit_dim = 0;
    long codim = 0;
    Regularity regularity = Regularity::NotComputed;
};

std::vector<OrbitInfo> orbit_lattice(const HoroVariety& h);

// face pair (tau = ray of sigma, tau_hat <= sigma^vee) for one extremal ray
FacePair ray_face_pair(const HoroVariety& h, int ray_index);

// indices into sigma().pointed_rays() of rays with codimension-one orbit;
// validated against the dimension-formula characterization
std::vector<int> codim_one_rays(const HoroVariety& h);

struct RayStatus {
    int ray_index = -1;
    IntVec ray;
    bool codim_one = false;
    std::optional<SaturationStatus> status;  // codim-one rays only
};

std::vector<RayStatus> significant_rays(const HoroVariety& h, const ModuleGens& mg,
                                        const Bounds& bounds);

struct GammaPair {
    Cone gamma_min;  // theta + certified significant rays
    Cone gamma_max;  // also includes undecided rays
};

GammaPair regularity_cone(const HoroVariety& h, const std::vector<RayStatus>& statuses);

enum class Verdict { Flexible, NotFlexible, Undecided };
const char* verdict_name(Verdict v);

struct FlexReport {
    Verdict verdict = Verdict::Undecided;
    long dim_x = 0;
    GammaPair gamma;
    std::vector<RayStatus> ray_statuses;
    ModuleGens module_gens;
    std::optional<IntVec> hyperplane_normal;  // NOT_FLEXIBLE certificate
    Bounds bounds;
};

FlexReport flexibility(const HoroVariety& h, const Bounds& bounds);

// gamma^vee in M-coordinates
Cone regular_locus_weight_cone(const HoroVariety& h, const Cone& gamma);
bool has_nonconstant_invertible(const HoroVariety& h, const Cone& gamma);

// order of vanishing <weight, v_ray> along the divisor of the ray's orbit
Int vanishing_order(const HoroVariety& h, const IntVec& weight, int ray_index);

struct ShiftCheck {
    IntVec ideal_gen;
    IntVec shifted;      // ideal_gen + e
    IntVec certificate;  // membership multiplicities of `shifted`
};

struct LndRoot {
    DemazureRoot root;
    bool in_theta_dual = false;
    IntMat ideal_gens;  // module generators of the ray's ideal over F
    std::vector<ShiftCheck> shift_checks;
};

// module generators of { v in F : <v, v_ray> > 0 } over F, BFS by degree
IntMat ideal_module_generators(const HoroVariety& h, int ray_index, const Int& degree_bound);

// smallest (by one-norm, then lex) Demazure root of sigma at the ray that
// lies in theta^vee and shifts every ideal generator back into F
std::optional<LndRoot> find_lnd_root(const HoroVariety& h, int ray_index,
                                     const SaturationStatus& status, const Bounds& bounds);

}  // namespace horoflex
