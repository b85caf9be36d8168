#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "horoflex/oracle.hpp"
#include "horoflex/semigroup.hpp"

using namespace horoflex;

namespace {

IntVec v2(long a, long b) { return IntVec{Int(a), Int(b)}; }
IntMat m2(std::initializer_list<std::pair<long, long>> vs) {
    IntMat m;
    for (auto [a, b] : vs) m.push_back(v2(a, b));
    return m;
}

AffineSemigroup example1() { return AffineSemigroup::from_generators(m2({{2, 0}, {1, 1}, {0, 1}})); }
AffineSemigroup example2() { return AffineSemigroup::from_generators(m2({{2, 0}, {1, 1}, {1, 2}})); }

}  // namespace

TEST_CASE("membership on the worked examples") {
    AffineSemigroup s = example2();
    CHECK_FALSE(s.member(v2(1, 0)));
    CHECK(s.member(v2(2, 2)));
    CHECK(s.member(zero_vec(2)));
    auto cert = s.member_certificate(v2(2, 2));
    REQUIRE(cert.has_value());
    CHECK((*cert) == IntVec{Int(0), Int(2), Int(0)});
}

TEST_CASE("generators must span the full lattice") {
    CHECK_THROWS_AS((void)AffineSemigroup::from_generators(m2({{2, 0}, {0, 2}, {1, 1}})), Error);
}

TEST_CASE("holes of the first example on the axis") {
    AffineSemigroup s = example1();
    // grading is (1,1), so degree 10 covers the whole x <= 5 strip on the axis
    std::vector<IntVec> holes = saturation_holes(s, 10);
    IntMat on_axis;
    for (const auto& h : holes)
        if (h[1] == 0 && h[0] <= 5) on_axis.push_back(h);
    CHECK(on_axis == m2({{1, 0}, {3, 0}, {5, 0}}));
}

TEST_CASE("holes of the second example include (1,0) and (2,1)") {
    AffineSemigroup s = example2();
    std::vector<IntVec> holes = saturation_holes(s, 10);
    CHECK(std::find(holes.begin(), holes.end(), v2(1, 0)) != holes.end());
    CHECK(std::find(holes.begin(), holes.end(), v2(2, 1)) != holes.end());
}

TEST_CASE("a saturated semigroup has no holes") {
    AffineSemigroup s = AffineSemigroup::from_generators(m2({{1, 0}, {0, 1}}));
    CHECK(saturation_holes(s, 12).empty());
}

TEST_CASE("hilbert basis of standard cones") {
    AffineSemigroup orthant = AffineSemigroup::from_generators(m2({{1, 0}, {0, 1}}));
    CHECK(hilbert_basis(orthant, 8) == m2({{0, 1}, {1, 0}}));

    AffineSemigroup wedge = AffineSemigroup::from_generators(m2({{1, 0}, {1, 1}, {1, 2}}));
    CHECK(hilbert_basis(wedge, 6) == m2({{1, 0}, {1, 1}, {1, 2}}));
}

TEST_CASE("module generators of the saturation") {
    CHECK(module_generators(example1(), 16).gens == m2({{0, 0}, {1, 0}}));
    CHECK(module_generators(example2(), 16).gens == m2({{0, 0}, {1, 0}}));
    AffineSemigroup sat = AffineSemigroup::from_generators(m2({{1, 0}, {0, 1}}));
    CHECK(module_generators(sat, 12).gens == IntMat{zero_vec(2)});
}

TEST_CASE("module generators cover every hole up to the certified degree") {
    for (const auto& inst : corpus::semigroup_instances()) {
        AffineSemigroup s = AffineSemigroup::from_generators(inst.gens);
        ModuleGens mg = module_generators(s, 12);
        CHECK(mg.certified_up_to == 12);
        REQUIRE(!mg.gens.empty());
        CHECK(is_zero(mg.gens.front()));
        // pairwise non-redundant
        for (std::size_t i = 0; i < mg.gens.size(); ++i)
            for (std::size_t j = 0; j < mg.gens.size(); ++j) {
                if (i == j) continue;
                IntVec diff = sub(mg.gens[i], mg.gens[j]);
                if (s.cone().contains(diff)) CHECK_FALSE(s.member(diff));
            }
        for (const auto& h : saturation_holes(s, 12)) {
            bool covered = false;
            for (const auto& m : mg.gens) {
                if (is_zero(m)) continue;
                IntVec diff = sub(h, m);
                if (s.cone().contains(diff) && s.member(diff)) covered = true;
            }
            CHECK(covered);
        }
    }
}

TEST_CASE("saturation points on the worked examples") {
    AffineSemigroup s2 = example2();
    ModuleGens mg2 = module_generators(s2, 16);
    CHECK(is_saturation_point(s2, mg2, v2(1, 2)));

    AffineSemigroup s1 = example1();
    ModuleGens mg1 = module_generators(s1, 16);
    CHECK_FALSE(is_saturation_point(s1, mg1, v2(2, 0)));
    CHECK_THROWS_AS((void)is_saturation_point(s1, mg1, v2(1, 0)), Error);

    AffineSemigroup sat = AffineSemigroup::from_generators(m2({{1, 0}, {0, 1}}));
    ModuleGens mgs = module_generators(sat, 12);
    CHECK(is_saturation_point(sat, mgs, v2(3, 1)));
}

TEST_CASE("saturation points are closed under adding semigroup elements") {
    AffineSemigroup s = example2();
    ModuleGens mg = module_generators(s, 16);
    std::vector<IntVec> pts = lattice_points(s.cone(), s.grading(), 8, 8);
    for (const auto& p : pts) {
        if (!s.member(p) || !is_saturation_point(s, mg, p)) continue;
        for (const auto& q : s.gens()) CHECK(is_saturation_point(s, mg, add(p, q)));
    }
}

TEST_CASE("face saturation statuses of the worked examples") {
    AffineSemigroup s2 = example2();
    ModuleGens mg2 = module_generators(s2, 16);
    // tau = ray (2,-1) of sigma, tau_hat = cone((1,2))
    FacePair f1;
    f1.tau = Cone::from_generators(2, m2({{2, -1}}));
    IntMat normals = s2.cone().ineqs();
    normals.push_back(v2(-2, 1));
    f1.tau_hat = Cone::from_inequalities(2, normals);
    SaturationStatus st1 = face_saturation_status(s2, f1, mg2, 16);
    REQUIRE(st1.kind == SaturationStatus::Kind::AlmostSaturated);
    CHECK(st1.witness == v2(1, 2));

    // tau = ray (0,1), tau_hat = cone((1,0)): parity obstruction
    FacePair f2;
    f2.tau = Cone::from_generators(2, m2({{0, 1}}));
    IntMat normals2 = s2.cone().ineqs();
    normals2.push_back(v2(0, -1));
    f2.tau_hat = Cone::from_inequalities(2, normals2);
    SaturationStatus st2 = face_saturation_status(s2, f2, mg2, 16);
    CHECK(st2.kind == SaturationStatus::Kind::NowhereSaturatedCertified);
    SaturationSystem sys = saturation_system(s2, f2, mg2);
    CHECK(replay(sys.columns, sys.rhs, st2.obstruction));

    AffineSemigroup s1 = example1();
    ModuleGens mg1 = module_generators(s1, 16);
    FacePair f3;
    f3.tau = Cone::from_generators(2, m2({{0, 1}}));
    IntMat normals3 = s1.cone().ineqs();
    normals3.push_back(v2(0, -1));
    f3.tau_hat = Cone::from_inequalities(2, normals3);
    SaturationStatus st3 = face_saturation_status(s1, f3, mg1, 16);
    CHECK(st3.kind == SaturationStatus::Kind::NowhereSaturatedCertified);

    // the whole cone is always almost saturated
    FacePair whole;
    whole.tau = Cone::zero(2);
    whole.tau_hat = s1.cone();
    SaturationStatus st4 = face_saturation_status(s1, whole, mg1, 16);
    REQUIRE(st4.kind == SaturationStatus::Kind::AlmostSaturated);
    CHECK(st4.witness == v2(0, 1));
}

TEST_CASE("witnesses replay through independent membership checks") {
    for (const auto& inst : corpus::semigroup_instances()) {
        AffineSemigroup s = AffineSemigroup::from_generators(inst.gens);
        ModuleGens mg = module_generators(s, 10);
        FacePair whole;
        whole.tau = Cone::zero(s.rank());
        whole.tau_hat = s.cone();
        SaturationStatus st = face_saturation_status(s, whole, mg, 10);
        if (st.kind != SaturationStatus::Kind::AlmostSaturated) continue;
        CHECK(s.member(st.witness));
        for (const auto& m : mg.gens) CHECK(s.member(add(st.witness, m)));
    }
}

TEST_CASE("membership with units resolves through the degree-zero lattice") {
    AffineSemigroup s = AffineSemigroup::from_generators(m2({{1, 0}, {-1, 0}, {0, 1}}));
    CHECK(s.member(v2(-5, 3)));
    CHECK_FALSE(s.member(v2(0, -1)));
    auto cert = s.member_certificate(v2(-5, 3));
    REQUIRE(cert.has_value());
    IntVec acc = zero_vec(2);
    for (std::size_t i = 0; i < s.gens().size(); ++i) {
        CHECK((*cert)[i] >= 0);
        acc = add(acc, scaled(s.gens()[i], (*cert)[i]));
    }
    CHECK(acc == v2(-5, 3));
}

TEST_CASE("member agrees with the brute-force oracle up to degree 12") {
    for (const auto& inst : corpus::semigroup_instances()) {
        CAPTURE(inst.name);
        AffineSemigroup s = AffineSemigroup::from_generators(inst.gens);
        std::vector<IntVec> pts = lattice_points(s.cone(), s.grading(), 12, 12);
        for (const auto& p : pts) {
            bool engine = s.member(p);
            bool brute = oracle::brute_member(inst.gens, p, inst.oracle_coeff);
            CHECK(engine == brute);
        }
        if (inst.saturated) CHECK(saturation_holes(s, 12).empty());
    }
}

TEST_CASE("brute-force oracle examples") {
    IntMat gens = m2({{2, 0}, {1, 1}, {0, 1}});
    CHECK_FALSE(oracle::brute_member(gens, v2(1, 0), 10));
    CHECK(oracle::brute_member(gens, v2(2, 2), 10));
    CHECK(oracle::brute_member(gens, v2(0, 0), 10));

    IntMat gens2 = m2({{2, 0}, {1, 1}, {1, 2}});
    AffineSemigroup s2 = AffineSemigroup::from_generators(gens2);
    CHECK(oracle::brute_saturation_point(gens2, s2.grading(), v2(1, 2), 12, 12, 16));
    AffineSemigroup s1 = AffineSemigroup::from_generators(gens);
    CHECK_FALSE(oracle::brute_saturation_point(gens, s1.grading(), v2(2, 0), 12, 12, 16));
    IntMat sat = m2({{1, 0}, {0, 1}});
    AffineSemigroup ss = AffineSemigroup::from_generators(sat);
    CHECK(oracle::brute_saturation_point(sat, ss.grading(), v2(3, 2), 12, 12, 20));
    CHECK(oracle::brute_holes(sat, ss.grading(), 10, 10, 12).empty());

    CHECK(oracle::brute_in_cone(gens2, v2(1, 0)));
    CHECK(oracle::brute_in_cone(gens2, v2(2, 1)));
    CHECK_FALSE(oracle::brute_in_cone(gens2, v2(0, 1)));
    CHECK_FALSE(oracle::brute_in_cone(gens2, v2(-1, 0)));
}

TEST_CASE("every face of a saturated semigroup is almost saturated at the unit") {
    for (const IntMat& gens : {m2({{1, 0}, {0, 1}}), m2({{1, 0}, {1, 1}, {1, 2}})}) {
        AffineSemigroup s = AffineSemigroup::from_generators(gens);
        ModuleGens mg = module_generators(s, 12);
        REQUIRE(mg.gens == IntMat{zero_vec(2)});
        for (const auto& fp : faces(s.sigma())) {
            SaturationStatus st = face_saturation_status(s, fp, mg, 12);
            REQUIRE(st.kind == SaturationStatus::Kind::AlmostSaturated);
            CHECK(st.witness == zero_vec(2));  // minimal-degree witness
        }
    }
}

TEST_CASE("concurrent membership queries are linearizable") {
    AffineSemigroup s = example2();
    std::vector<IntVec> pts = lattice_points(s.cone(), s.grading(), 14, 14);
    std::vector<char> serial(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) serial[i] = s.member(pts[i]) ? 1 : 0;

    AffineSemigroup fresh = example2();  // cold cache, queried under OpenMP
    std::vector<char> parallel(pts.size());
    long n = static_cast<long>(pts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (long i = 0; i < n; ++i) parallel[i] = fresh.member(pts[i]) ? 1 : 0;
    CHECK(serial == parallel);
}
