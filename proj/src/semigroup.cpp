#include "horoflex/semigroup.hpp"

#include <algorithm>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace horoflex {

namespace {

bool degree_lex_less(const IntVec& w, const IntVec& a, const IntVec& b) {
    Int da = dot(w, a), db = dot(w, b);
    if (da != db) return da < db;
    return lex_less(a, b);
}

}  // namespace

AffineSemigroup AffineSemigroup::from_generators(const IntMat& gens) {
    if (gens.empty()) fail(Errc::EmptyInput, "semigroup needs at least one generator");
    int r = static_cast<int>(gens[0].size());
    for (const auto& g : gens)
        if (static_cast<int>(g.size()) != r) fail(Errc::ShapeMismatch, "mixed generator dimensions");

    AffineSemigroup s;
    s.gens_ = gens;
    s.rank_ = r;
    if (r > 0) {
        LatticeBasis L = hermite_basis(gens);
        bool full = (L.rank == r);
        if (full)
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    if (L.basis_rows[i][j] != Int(i == j ? 1 : 0)) full = false;
        if (!full)
            fail(Errc::BadInput, "generators must span the full lattice (work in M-coordinates)");
    }
    s.cone_ = Cone::from_generators(r, gens);
    s.sigma_ = dual_cone(s.cone_);
    s.grading_ = zero_vec(r);
    for (const auto& v : s.sigma_.pointed_rays()) s.grading_ = add(s.grading_, v);

    for (std::size_t j = 0; j < gens.size(); ++j) {
        Int d = s.degree(gens[j]);
        if (d < 0) fail(Errc::Inconsistent, "grading negative on a generator");
        if (d > 0) {
            s.pos_idx_.push_back(j);
        } else {
            if (!is_zero(gens[j]) &&
                (!s.cone_.contains(gens[j]) || !s.cone_.contains(negated(gens[j]))))
                fail(Errc::Inconsistent, "degree-zero generator outside the lineality space");
            s.zero_idx_.push_back(j);
        }
    }

    IntMat zero_gens;
    for (auto j : s.zero_idx_) zero_gens.push_back(gens[j]);
    bool any_nonzero = false;
    for (const auto& z : zero_gens) any_nonzero |= !is_zero(z);
    if (any_nonzero) {
        HermiteTransform ht = hermite_basis_transform(zero_gens);
        s.unit_lattice_ = ht.basis;
        s.unit_transform_ = ht.transform;
        // the degree-zero generators span a subspace cone, hence a group: a
        // nonnegative relation through each generator exists and certifies it
        for (std::size_t a = 0; a < zero_gens.size(); ++a) {
            IntVec target = negated(zero_gens[a]);
            IntFeasibility f;
            for (Int bound = 2; bound <= 64; bound *= 2) {
                f = solve_nonneg_integer(zero_gens, target, bound);
                if (f.kind == IntFeasibility::Kind::Solution) break;
                if (f.infeasible_certified())
                    fail(Errc::Inconsistent, "degree-zero generators do not form a group");
            }
            if (f.kind != IntFeasibility::Kind::Solution)
                fail(Errc::Inconsistent, "relation search for unit generators exhausted");
            IntVec rel = f.solution;
            rel[a] += 1;  // z_a + (combo for -z_a) = 0
            s.unit_relations_.push_back(rel);
        }
    }
    return s;
}

Int AffineSemigroup::max_gen_degree() const {
    Int m = 0;
    for (const auto& g : gens_) m = std::max(m, degree(g));
    return m;
}

bool AffineSemigroup::in_unit_lattice(const IntVec& v) const {
    if (!unit_lattice_) return is_zero(v);
    return coordinates_in_lattice(v, *unit_lattice_).has_value();
}

// -1: not a member.  gens_.size(): resolved by the unit lattice (or v = 0).
// j < gens_.size(): v - gens_[j] is a member.
int AffineSemigroup::member_code(const IntVec& v) const {
    if (in_unit_lattice(v)) return static_cast<int>(gens_.size());
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        auto it = cache_->memo.find(v);
        if (it != cache_->memo.end()) return it->second;
    }
    int code = -1;
    for (auto j : pos_idx_) {
        IntVec u = sub(v, gens_[j]);
        if (!cone_.contains(u)) continue;
        if (member_code(u) != -1) {
            code = static_cast<int>(j);
            break;
        }
    }
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        cache_->memo.emplace(v, code);
    }
    return code;
}

bool AffineSemigroup::member(const IntVec& v) const {
    if (static_cast<int>(v.size()) != rank_) fail(Errc::ShapeMismatch, "member: wrong dimension");
    if (!cone_.contains(v)) return false;
    return member_code(v) != -1;
}

std::optional<IntVec> AffineSemigroup::member_certificate(const IntVec& v) const {
    if (!member(v)) return std::nullopt;
    IntVec mult(gens_.size(), Int(0));
    IntVec u = v;
    for (;;) {
        int code = member_code(u);
        if (code < 0) fail(Errc::Inconsistent, "member certificate walk failed");
        if (code == static_cast<int>(gens_.size())) break;
        mult[code] += 1;
        u = sub(u, gens_[code]);
    }
    if (!is_zero(u)) {
        // express the unit-lattice residue as a nonnegative combination
        auto coords = coordinates_in_lattice(u, *unit_lattice_);
        if (!coords) fail(Errc::Inconsistent, "residue outside unit lattice");
        IntVec over_zero(zero_idx_.size(), Int(0));
        for (std::size_t k = 0; k < coords->size(); ++k)
            for (std::size_t j = 0; j < zero_idx_.size(); ++j)
                over_zero[j] += (*coords)[k] * unit_transform_[k][j];
        for (std::size_t j = 0; j < over_zero.size(); ++j) {
            if (over_zero[j] >= 0) continue;
            Int need = -over_zero[j];
            const IntVec& rel = unit_relations_[j];
            Int k = (need + rel[j] - 1) / rel[j];
            for (std::size_t t = 0; t < over_zero.size(); ++t) over_zero[t] += k * rel[t];
        }
        for (std::size_t j = 0; j < zero_idx_.size(); ++j) mult[zero_idx_[j]] += over_zero[j];
    }
    IntVec check = zero_vec(rank_);
    for (std::size_t j = 0; j < gens_.size(); ++j) {
        if (mult[j] < 0) fail(Errc::Inconsistent, "negative certificate multiplicity");
        check = add(check, scaled(gens_[j], mult[j]));
    }
    if (check != v) fail(Errc::Inconsistent, "certificate fails substitution");
    return mult;
}

std::vector<IntVec> lattice_points(const Cone& c, const IntVec& w, const Int& degree_bound,
                                   const Int& cap) {
    int r = c.ambient_dim();
    std::vector<IntVec> out;
    if (degree_bound < 0) return out;
    if (r == 0) {
        out.push_back(IntVec{});
        return out;
    }

    std::vector<Int> lo(r), hi(r);
    for (int i = 0; i < r; ++i) {
        Int pointed_bound = 0;
        Int cap_bound = 0;
        for (const auto& ray : c.pointed_rays()) {
            Int d = dot(w, ray);
            if (d > 0) {
                Int cand;  // ceil(|ray_i| * degree_bound / d)
                Int num = abs(ray[i]) * degree_bound;
                mpz_cdiv_q(cand.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
                pointed_bound = std::max(pointed_bound, cand);
            } else {
                cap_bound += cap * abs(ray[i]);
            }
        }
        for (const auto& l : c.lineality_basis()) cap_bound += cap * abs(l[i]);
        Int box = pointed_bound + cap_bound;
        bool nonneg = true, nonpos = true;
        for (const auto& g : c.rays()) {
            if (g[i] < 0) nonneg = false;
            if (g[i] > 0) nonpos = false;
        }
        lo[i] = nonneg ? Int(0) : -box;
        hi[i] = nonpos ? Int(0) : box;
    }

    long total = 1;
    std::vector<long> size(r), low(r);
    for (int i = 0; i < r; ++i) {
        Int span = hi[i] - lo[i] + 1;
        if (!span.fits_slong_p()) fail(Errc::BadInput, "enumeration box too large");
        size[i] = span.get_si();
        low[i] = lo[i].get_si();
        if (total > (1L << 28) / std::max(1L, size[i]))
            fail(Errc::BadInput, "enumeration box too large");
        total *= size[i];
    }

    auto decode = [&](long t) {
        IntVec x(r);
        for (int i = r - 1; i >= 0; --i) {
            x[i] = low[i] + (t % size[i]);
            t /= size[i];
        }
        return x;
    };

#ifdef _OPENMP
    int nth = omp_get_max_threads();
    std::vector<std::vector<IntVec>> bucket(nth);
#pragma omp parallel for schedule(static)
    for (long t = 0; t < total; ++t) {
        IntVec x = decode(t);
        if (dot(w, x) <= degree_bound && c.contains(x))
            bucket[omp_get_thread_num()].push_back(std::move(x));
    }
    for (auto& b : bucket)
        for (auto& x : b) out.push_back(std::move(x));
#else
    for (long t = 0; t < total; ++t) {
        IntVec x = decode(t);
        if (dot(w, x) <= degree_bound && c.contains(x)) out.push_back(std::move(x));
    }
#endif
    std::sort(out.begin(), out.end(),
              [&](const IntVec& a, const IntVec& b) { return degree_lex_less(w, a, b); });
    return out;
}

std::vector<IntVec> saturation_holes(const AffineSemigroup& s, const Int& degree_bound) {
    std::vector<IntVec> pts =
        lattice_points(s.cone(), s.grading(), degree_bound, degree_bound);
    std::vector<char> in(pts.size(), 0);
    long n = static_cast<long>(pts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long i = 0; i < n; ++i) in[i] = s.member(pts[i]) ? 1 : 0;
    std::vector<IntVec> holes;
    for (long i = 0; i < n; ++i)
        if (!in[i]) holes.push_back(pts[i]);
    return holes;
}

std::vector<IntVec> hilbert_basis(const AffineSemigroup& s, const Int& degree_bound) {
    for (const auto& l : s.cone().lineality_basis())
        if (!is_zero(l)) return {};  // units make every element reducible
    std::vector<IntVec> pts =
        lattice_points(s.cone(), s.grading(), degree_bound, degree_bound);
    std::vector<char> irred(pts.size(), 0);
    long n = static_cast<long>(pts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long i = 0; i < n; ++i) {
        const IntVec& z = pts[i];
        Int dz = s.degree(z);
        if (dz == 0) continue;  // the unit is not an irreducible element
        bool reducible = false;
        for (const auto& x : pts) {
            Int dx = s.degree(x);
            if (dx == 0) continue;
            if (2 * dx > dz) break;  // pts sorted by degree
            if (x == z) continue;
            if (s.cone().contains(sub(z, x))) {
                reducible = true;
                break;
            }
        }
        irred[i] = reducible ? 0 : 1;
    }
    std::vector<IntVec> out;
    for (long i = 0; i < n; ++i)
        if (irred[i]) out.push_back(pts[i]);
    return out;
}

ModuleGens module_generators(const AffineSemigroup& s, const Int& degree_bound) {
    std::vector<IntVec> pts =
        lattice_points(s.cone(), s.grading(), degree_bound, degree_bound);
    std::sort(pts.begin(), pts.end(), [&](const IntVec& a, const IntVec& b) {
        Int da = s.degree(a), db = s.degree(b);
        if (da != db) return da < db;
        Int na = one_norm(a), nb = one_norm(b);
        if (na != nb) return na < nb;
        return lex_less(a, b);
    });
    ModuleGens mg;
    mg.certified_up_to = degree_bound;
    for (const auto& z : pts) {
        bool covered = false;
        for (const auto& g : mg.gens) {
            IntVec diff = sub(z, g);
            if (s.cone().contains(diff) && s.member(diff)) {
                covered = true;
                break;
            }
        }
        if (!covered) mg.gens.push_back(z);
    }
    return mg;
}

bool is_saturation_point(const AffineSemigroup& s, const ModuleGens& mg, const IntVec& p) {
    if (!s.member(p)) fail(Errc::NotInSemigroup, "saturation point candidate outside semigroup");
    for (const auto& m : mg.gens)
        if (!s.member(add(p, m))) return false;
    return true;
}

SaturationSystem saturation_system(const AffineSemigroup& s, const FacePair& face,
                                   const ModuleGens& mg) {
    const IntMat& gens = s.gens();
    std::size_t n = gens.size();
    int r = s.rank();
    IntMat shifts;
    for (const auto& m : mg.gens)
        if (!is_zero(m)) shifts.push_back(m);
    std::size_t J = shifts.size();
    const IntMat& tau_gens = face.tau.rays();
    std::size_t T = tau_gens.size();
    std::size_t rows = T + static_cast<std::size_t>(r) * J;

    SaturationSystem sys;
    sys.gen_count = n;
    sys.rhs = zero_vec(rows);
    for (std::size_t jj = 0; jj < J; ++jj)
        for (int i = 0; i < r; ++i) sys.rhs[T + jj * r + i] = -shifts[jj][i];

    for (std::size_t k = 0; k < n; ++k) {
        IntVec col = zero_vec(rows);
        for (std::size_t t = 0; t < T; ++t) col[t] = dot(gens[k], tau_gens[t]);
        for (std::size_t jj = 0; jj < J; ++jj)
            for (int i = 0; i < r; ++i) col[T + jj * r + i] = gens[k][i];
        sys.columns.push_back(std::move(col));
    }
    for (std::size_t jj = 0; jj < J; ++jj)
        for (std::size_t k = 0; k < n; ++k) {
            IntVec col = zero_vec(rows);
            for (int i = 0; i < r; ++i) col[T + jj * r + i] = -gens[k][i];
            sys.columns.push_back(std::move(col));
        }
    return sys;
}

SaturationStatus face_saturation_status(const AffineSemigroup& s, const FacePair& face,
                                        const ModuleGens& mg, const Int& search_bound) {
    SaturationStatus st;
    st.bound = search_bound;

    // certificate first: when the combined system is provably infeasible no
    // witness can exist and the facet search is pointless
    SaturationSystem sys = saturation_system(s, face, mg);
    // last-resort search depth chosen so the tuple count C(n+k, k) stays small
    Int dfs_bound = 0;
    {
        Int n = static_cast<long>(sys.columns.size());
        Int tuples = 1;
        while (dfs_bound < std::min(search_bound, Int(6))) {
            Int next = tuples * (n + dfs_bound + 1) / (dfs_bound + 1);
            if (next > 200000) break;
            tuples = next;
            dfs_bound += 1;
        }
    }
    IntFeasibility f = solve_nonneg_integer(sys.columns, sys.rhs, dfs_bound);
    if (f.infeasible_certified()) {
        st.kind = SaturationStatus::Kind::NowhereSaturatedCertified;
        st.obstruction = f;
        return st;
    }

    std::vector<IntVec> pts =
        lattice_points(face.tau_hat, s.grading(), search_bound, search_bound);
    for (const auto& p : pts) {
        if (!s.member(p)) continue;
        if (is_saturation_point(s, mg, p)) {
            st.kind = SaturationStatus::Kind::AlmostSaturated;
            st.witness = p;
            return st;
        }
    }

    if (f.kind == IntFeasibility::Kind::Solution) {
        IntVec p = zero_vec(s.rank());
        for (std::size_t k = 0; k < sys.gen_count; ++k)
            p = add(p, scaled(s.gens()[k], f.solution[k]));
        if (s.member(p) && is_saturation_point(s, mg, p)) {
            st.kind = SaturationStatus::Kind::AlmostSaturated;
            st.witness = p;
            return st;
        }
    }
    st.kind = SaturationStatus::Kind::UndecidedUpToBound;
    return st;
}

}  // namespace horoflex
