// Compares the OpenMP hole-enumeration kernel against the serial brute-force
// oracle on the same instance and checks that both produce the same holes.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "horoflex/oracle.hpp"
#include "horoflex/semigroup.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace horoflex;

int main(int argc, char** argv) {
    long degree = argc > 1 ? std::atol(argv[1]) : 24;

    IntMat gens = {{2, 0}, {1, 1}, {1, 2}};
    AffineSemigroup s = AffineSemigroup::from_generators(gens);

    auto tick = [] { return std::chrono::steady_clock::now(); };
    auto ms = [](auto a, auto b) {
        return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count() / 1000.0;
    };

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    std::printf("instance: gens (2,0) (1,1) (1,2), degree bound %ld\n", degree);

    auto t0 = tick();
    std::vector<IntVec> engine = saturation_holes(s, Int(degree));
    auto t1 = tick();
    std::vector<IntVec> brute =
        oracle::brute_holes(gens, s.grading(), degree, degree, degree);
    auto t2 = tick();

    std::printf("parallel engine: %zu holes in %.2f ms\n", engine.size(), ms(t0, t1));
    std::printf("serial oracle:   %zu holes in %.2f ms\n", brute.size(), ms(t1, t2));
    if (engine != brute) {
        std::printf("MISMATCH between engine and oracle\n");
        return 1;
    }
    std::printf("results identical\n");
    return 0;
}
