#include <doctest.h>

#include <random>

#include "horoflex/cone.hpp"
#include "horoflex/oracle.hpp"

using namespace horoflex;

namespace {

IntVec v2(long a, long b) { return IntVec{Int(a), Int(b)}; }
IntMat m2(std::initializer_list<std::pair<long, long>> vs) {
    IntMat m;
    for (auto [a, b] : vs) m.push_back(v2(a, b));
    return m;
}

}  // namespace

TEST_CASE("the positive orthant is self-dual") {
    Cone c = Cone::from_generators(2, m2({{1, 0}, {0, 1}}));
    CHECK(dual_cone(c) == c);
    CHECK(c.rays() == m2({{0, 1}, {1, 0}}));
}

TEST_CASE("dual of cone((1,0),(1,2))") {
    Cone c = Cone::from_generators(2, m2({{1, 0}, {1, 2}}));
    Cone d = dual_cone(c);
    CHECK(d.rays() == m2({{0, 1}, {2, -1}}));
}

TEST_CASE("dual of the whole plane is the origin") {
    Cone c = Cone::from_generators(2, m2({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
    CHECK(c.dim() == 2);
    CHECK(c.lineality_dim() == 2);
    Cone d = dual_cone(c);
    CHECK(d.dim() == 0);
    CHECK(d.rays().empty());
}

TEST_CASE("extremal rays drop interior generators") {
    Cone c = Cone::from_generators(2, m2({{1, 0}, {1, 1}, {1, 2}}));
    CHECK(extremal_rays(c) == m2({{1, 0}, {1, 2}}));

    Cone e2 = Cone::from_generators(2, m2({{2, -1}, {0, 1}}));
    CHECK(extremal_rays(e2) == m2({{0, 1}, {2, -1}}));

    Cone single = Cone::from_generators(2, m2({{1, 0}}));
    CHECK(extremal_rays(single) == m2({{1, 0}}));

    Cone halfplane = Cone::from_generators(2, m2({{1, 0}, {0, 1}, {0, -1}}));
    CHECK_THROWS_AS((void)extremal_rays(halfplane), Error);
}

TEST_CASE("face lattice of the orthant") {
    Cone c = Cone::from_generators(2, m2({{1, 0}, {0, 1}}));
    auto fps = faces(c);
    REQUIRE(fps.size() == 4);
    // the zero face pairs with the whole dual
    CHECK(fps.front().tau.dim() == 0);
    CHECK(fps.front().tau_hat == dual_cone(c));
    CHECK(fps.back().tau == c);
    for (const auto& fp : fps) CHECK(fp.tau.dim() + fp.tau_hat.dim() == 2);
}

TEST_CASE("face pairing in the first worked example") {
    Cone sigma = Cone::from_generators(2, m2({{1, 0}, {0, 1}}));
    for (const auto& fp : faces(sigma)) {
        if (fp.tau.dim() == 1 && fp.tau.pointed_rays() == m2({{0, 1}}))
            CHECK(fp.tau_hat.pointed_rays() == m2({{1, 0}}));
    }
}

TEST_CASE("cone dimension and full-dimensionality") {
    CHECK(cone_dim(Cone::from_generators(2, m2({{1, 0}}))) == 1);
    CHECK_FALSE(is_full_dimensional(Cone::from_generators(2, m2({{1, 0}}))));
    Cone g = Cone::from_generators(2, m2({{1, 0}, {2, -1}}));
    CHECK(cone_dim(g) == 2);
    CHECK(is_full_dimensional(g));
    CHECK(cone_dim(Cone::zero(2)) == 0);
}

TEST_CASE("demazure root membership") {
    Cone sigma = Cone::from_generators(2, m2({{2, -1}, {0, 1}}));
    int ray = -1;
    for (int i = 0; i < 2; ++i)
        if (sigma.pointed_rays()[i] == v2(2, -1)) ray = i;
    REQUIRE(ray >= 0);
    CHECK(is_demazure_root(sigma, v2(0, 1), ray));
    CHECK_FALSE(is_demazure_root(sigma, v2(0, -1), ray));

    Cone orthant = Cone::from_generators(2, m2({{1, 0}, {0, 1}}));
    int rx = orthant.pointed_rays()[0] == v2(0, 1) ? 1 : 0;
    CHECK(is_demazure_root(orthant, v2(-1, 0), rx));
    CHECK_FALSE(is_demazure_root(orthant, v2(-1, -1), rx));
    CHECK_THROWS_AS((void)is_demazure_root(orthant, v2(-1, 0), 5), Error);
}

TEST_CASE("demazure root enumeration is bounded by the one-norm") {
    Cone sigma = Cone::from_generators(2, m2({{2, -1}, {0, 1}}));
    int ray = sigma.pointed_rays()[0] == v2(2, -1) ? 0 : 1;
    auto at = [&](long h) {
        IntMat out;
        for (const auto& r : demazure_roots(sigma, ray, Int(h))) out.push_back(r.e);
        return out;
    };
    CHECK(at(6) == m2({{0, 1}, {1, 3}}));
    CHECK(at(7) == m2({{0, 1}, {1, 3}, {2, 5}}));
}

TEST_CASE("demazure enumeration matches the grid-scan oracle") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-3, 3);
    int tested = 0;
    while (tested < 12) {
        IntVec a = v2(d(rng), d(rng)), b = v2(d(rng), d(rng));
        if (is_zero(a) || is_zero(b)) continue;
        Cone c = Cone::from_generators(2, {a, b});
        if (!c.is_strictly_convex() || c.pointed_rays().size() != 2) continue;
        ++tested;
        for (int ray = 0; ray < 2; ++ray) {
            IntMat engine;
            for (const auto& r : demazure_roots(c, ray, Int(5))) engine.push_back(r.e);
            CHECK(engine == oracle::brute_demazure_roots(c.pointed_rays(), ray, 5));
        }
    }
}

TEST_CASE("double duality and convexity duality on random cones") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> d(-4, 4);
    std::uniform_int_distribution<int> dims(2, 4);
    for (int trial = 0; trial < 40; ++trial) {
        int dim = dims(rng);
        IntMat gens;
        for (int i = 0; i < dim; ++i) {
            IntVec v(dim);
            for (auto& x : v) x = d(rng);
            if (!is_zero(v)) gens.push_back(v);
        }
        if (gens.empty()) continue;
        Cone c = Cone::from_generators(dim, gens);
        Cone dd = dual_cone(dual_cone(c));
        CHECK(dd == c);
        CHECK(c.is_strictly_convex() == dual_cone(c).is_full_dimensional());
        CHECK(dual_cone(c).is_strictly_convex() == c.is_full_dimensional());
    }
}

TEST_CASE("face pairing is an inclusion-reversing bijection") {
    for (const IntMat& gens :
         {m2({{1, 0}, {1, 2}}), m2({{1, 0}, {0, 1}}), m2({{2, -1}, {0, 1}})}) {
        Cone c = Cone::from_generators(2, gens);
        auto fps = faces(c);
        for (const auto& a : fps)
            for (const auto& b : fps) {
                bool tau_incl = b.tau.contains_cone(a.tau);
                bool hat_incl = a.tau_hat.contains_cone(b.tau_hat);
                CHECK(tau_incl == hat_incl);
            }
        // supports cut out their faces
        for (const auto& fp : fps) {
            if (fp.tau == c) continue;
            CHECK(dual_cone(c).contains(fp.support));
            for (const auto& g : fp.tau.rays()) CHECK(dot(fp.support, g) == 0);
        }
    }
}

TEST_CASE("faces of a three-dimensional orthant") {
    IntMat gens = {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(0), Int(1)}};
    Cone c = Cone::from_generators(3, gens);
    CHECK(faces(c).size() == 8);
}

TEST_CASE("demazure roots require a strictly convex cone") {
    Cone halfplane = Cone::from_generators(2, m2({{1, 0}, {0, 1}, {0, -1}}));
    CHECK_THROWS_AS((void)demazure_roots(halfplane, 0, Int(3)), Error);
    CHECK_THROWS_AS((void)is_demazure_root(halfplane, v2(0, 1), 0), Error);
}
