#include <doctest.h>

#include <random>

#include "horoflex/linsolve.hpp"

using namespace horoflex;

namespace {

IntMat cols2(std::initializer_list<std::pair<long, long>> cs) {
    IntMat m;
    for (auto [a, b] : cs) m.push_back(IntVec{Int(a), Int(b)});
    return m;
}

// reference decision by full enumeration of coefficient tuples
bool exhaustive(const IntMat& columns, const IntVec& b, long bound) {
    std::size_t n = columns.size();
    std::vector<long> x(n, 0);
    for (;;) {
        long sum = 0;
        for (auto c : x) sum += c;
        if (sum <= bound) {
            IntVec acc = zero_vec(b.size());
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < b.size(); ++i) acc[i] += Int(x[j]) * columns[j][i];
            if (acc == b) return true;
        }
        std::size_t i = 0;
        while (i < n && x[i] == bound) x[i++] = 0;
        if (i == n) return false;
        ++x[i];
    }
}

}  // namespace

TEST_CASE("parity system is certified infeasible, not merely unknown") {
    IntMat A = cols2({{2, 0}, {1, 1}, {0, 1}});
    IntVec b{Int(1), Int(0)};
    IntFeasibility r = solve_nonneg_integer(A, b, 10);
    CHECK(r.infeasible_certified());
    CHECK(replay(A, b, r));
    CHECK_FALSE(exhaustive(A, b, 10));
}

TEST_CASE("solvable system returns a verified solution") {
    IntMat A = cols2({{2, 0}, {1, 1}, {0, 1}});
    IntVec b{Int(2), Int(2)};
    IntFeasibility r = solve_nonneg_integer(A, b, 10);
    REQUIRE(r.kind == IntFeasibility::Kind::Solution);
    CHECK(replay(A, b, r));
    IntVec acc = zero_vec(2);
    for (std::size_t j = 0; j < A.size(); ++j) acc = add(acc, scaled(A[j], r.solution[j]));
    CHECK(acc == b);
}

TEST_CASE("zero right-hand side always has the zero solution") {
    IntMat A = cols2({{3, -1}, {-2, 5}});
    IntFeasibility r = solve_nonneg_integer(A, zero_vec(2), 0);
    REQUIRE(r.kind == IntFeasibility::Kind::Solution);
    CHECK(is_zero(r.solution));
}

TEST_CASE("pure LP infeasibility yields a Farkas certificate") {
    // single column (1,0) cannot reach b = (0,1)
    IntMat A = cols2({{1, 0}});
    IntVec b{Int(0), Int(1)};
    IntFeasibility r = solve_nonneg_integer(A, b, 5);
    CHECK(r.kind == IntFeasibility::Kind::InfeasibleLP);
    CHECK(replay(A, b, r));
}

TEST_CASE("pure congruence infeasibility yields a modulus certificate") {
    // 2x = 1 over one variable
    IntMat A = {IntVec{Int(2)}};
    IntVec b{Int(1)};
    IntFeasibility r = solve_nonneg_integer(A, b, 5);
    CHECK(r.kind == IntFeasibility::Kind::InfeasibleCongruence);
    REQUIRE(r.congruence);
    CHECK(r.congruence->modulus == 2);
    CHECK(replay(A, b, r));
}

TEST_CASE("forced-zero composite certificate") {
    // the saturation system of the first worked example's vertical facet:
    // LP-feasible, lattice-feasible, but forced zeros leave a parity clash
    IntMat A;
    A.push_back(IntVec{Int(0), Int(2), Int(0)});    // c1
    A.push_back(IntVec{Int(1), Int(1), Int(1)});    // c2
    A.push_back(IntVec{Int(1), Int(0), Int(1)});    // c3
    A.push_back(IntVec{Int(0), Int(-2), Int(0)});   // d1
    A.push_back(IntVec{Int(0), Int(-1), Int(-1)});  // d2
    A.push_back(IntVec{Int(0), Int(0), Int(-1)});   // d3
    IntVec b{Int(0), Int(-1), Int(0)};
    IntFeasibility r = solve_nonneg_integer(A, b, 8);
    CHECK(r.kind == IntFeasibility::Kind::InfeasibleComposite);
    CHECK(!r.forced_zero.empty());
    REQUIRE(r.congruence);
    CHECK(r.congruence->modulus % 2 == 0);
    CHECK(replay(A, b, r));
}

TEST_CASE("certificates never replay against a solvable system") {
    IntMat A = cols2({{2, 0}, {1, 1}, {0, 1}});
    IntFeasibility bogus;
    bogus.kind = IntFeasibility::Kind::InfeasibleCongruence;
    bogus.congruence = CongruenceCertificate{Int(2), IntVec{Int(1), Int(0)}, {0, 1, 2}};
    CHECK_FALSE(replay(A, IntVec{Int(2), Int(2)}, bogus));
}

TEST_CASE("random small instances agree with exhaustive search when decided") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> entry(-5, 5);
    std::uniform_int_distribution<int> dims(2, 3);
    int decided = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int m = dims(rng), n = dims(rng) + 1;
        IntMat A;
        for (int j = 0; j < n; ++j) {
            IntVec col(m);
            for (auto& x : col) x = entry(rng);
            A.push_back(col);
        }
        IntVec b(m);
        for (auto& x : b) x = entry(rng);
        long bound = 7;
        IntFeasibility r = solve_nonneg_integer(A, b, bound);
        bool truth = exhaustive(A, b, bound);
        if (r.kind == IntFeasibility::Kind::Solution) {
            CHECK(replay(A, b, r));
            CHECK(truth);
            ++decided;
        } else if (r.infeasible_certified()) {
            CHECK(replay(A, b, r));
            CHECK_FALSE(truth);
            ++decided;
        } else {
            // unknown is allowed only if the bounded search really found nothing
            CHECK_FALSE(truth);
        }
    }
    CHECK(decided > 60);
}

TEST_CASE("lp_feasible finds points and Farkas certificates") {
    RatMat A = {{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}};
    LpResult r = lp_feasible(A, {Rat(2), Rat(0)});
    CHECK(r.feasible);

    // x1 - x2 = 1 and x1 + x2 = -1 with x >= 0 is impossible
    RatMat B = {{Rat(1), Rat(-1)}, {Rat(1), Rat(1)}};
    LpResult r2 = lp_feasible(B, {Rat(1), Rat(-1)});
    CHECK_FALSE(r2.feasible);
    REQUIRE(r2.farkas.size() == 2);
}

TEST_CASE("lp_max_coordinate classifies unbounded, positive and forced-zero") {
    // x1 free to grow along the kernel of the single constraint
    RatMat A = {{Rat(1), Rat(-1)}};
    CHECK(lp_max_coordinate(A, {Rat(0)}, 0).kind == LpMax::Unbounded);

    RatMat B = {{Rat(1), Rat(1)}};
    LpMax mx = lp_max_coordinate(B, {Rat(3)}, 0);
    REQUIRE(mx.kind == LpMax::Positive);
    CHECK(mx.value == 3);

    // x1 + x2 = 0 with x >= 0 forces both coordinates to zero
    RatMat C = {{Rat(1), Rat(1)}};
    LpMax z = lp_max_coordinate(C, {Rat(0)}, 0);
    CHECK(z.kind == LpMax::Zero);
}

TEST_CASE("solve_rational handles solvable and unsolvable systems") {
    RatMat A = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK_FALSE(solve_rational(A, {Rat(1), Rat(3)}).has_value());
    auto x = solve_rational(A, {Rat(1), Rat(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] + 2 * (*x)[1] == 1);
}
