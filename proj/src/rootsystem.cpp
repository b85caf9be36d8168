#include "horoflex/rootsystem.hpp"

#include <algorithm>
#include <map>

namespace horoflex {

namespace {

bool valid_factor(char type, int rank) {
    switch (type) {
        case 'A': return rank >= 1;
        case 'B': return rank >= 2;
        case 'C': return rank >= 2;
        case 'D': return rank >= 3;  // D3 accepted (isomorphic to A3)
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

}  // namespace

void validate(const GroupSpec& g) {
    if (g.torus_rank < 0) fail(Errc::BadGroupSpec, "negative torus rank");
    for (const auto& f : g.simple_factors)
        if (!valid_factor(f.type, f.rank))
            fail(Errc::BadGroupSpec,
                 std::string("invalid simple factor ") + f.type + std::to_string(f.rank));
}

IntMat cartan_matrix(char type, int rank) {
    if (!valid_factor(type, rank)) fail(Errc::BadGroupSpec, "invalid type/rank");
    IntMat a(rank, IntVec(rank, Int(0)));
    for (int i = 0; i < rank; ++i) a[i][i] = 2;
    auto edge = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (type) {
        case 'A':
            for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1);
            break;
        case 'B':
            for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1);
            a[rank - 1][rank - 2] = -2;  // last simple root short
            break;
        case 'C':
            for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1);
            a[rank - 2][rank - 1] = -2;  // last simple root long
            break;
        case 'D':
            for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1);
            edge(rank - 3, rank - 1);
            break;
        case 'E':
            // chain 0-2-3-4-5(-6(-7)), extra node 1 attached to 3
            edge(0, 2);
            edge(2, 3);
            edge(3, 4);
            edge(4, 5);
            if (rank >= 7) edge(5, 6);
            if (rank >= 8) edge(6, 7);
            edge(1, 3);
            break;
        case 'F':
            edge(0, 1);
            edge(2, 3);
            a[1][2] = -1;
            a[2][1] = -2;
            break;
        case 'G':
            a[0][1] = -1;
            a[1][0] = -3;
            break;
    }
    return a;
}

long classical_positive_root_count(char type, int rank) {
    switch (type) {
        case 'A': return static_cast<long>(rank) * (rank + 1) / 2;
        case 'B':
        case 'C': return static_cast<long>(rank) * rank;
        case 'D': return static_cast<long>(rank) * (rank - 1);
        case 'E': return rank == 6 ? 36 : (rank == 7 ? 63 : 120);
        case 'F': return 24;
        case 'G': return 6;
    }
    fail(Errc::BadGroupSpec, "unknown type");
}

RootDatum positive_roots(const GroupSpec& g) {
    validate(g);
    RootDatum d;
    for (const auto& f : g.simple_factors) {
        IntMat cartan = cartan_matrix(f.type, f.rank);
        std::vector<IntVec> roots;
        std::map<IntVec, bool> seen;
        std::vector<IntVec> level;
        for (int i = 0; i < f.rank; ++i) {
            IntVec e = zero_vec(f.rank);
            e[i] = 1;
            level.push_back(e);
            seen[e] = true;
        }
        // root-string closure by height
        while (!level.empty()) {
            std::vector<IntVec> next;
            for (const auto& beta : level) {
                roots.push_back(beta);
                for (int i = 0; i < f.rank; ++i) {
                    IntVec alpha = zero_vec(f.rank);
                    alpha[i] = 1;
                    if (beta == alpha) continue;
                    Int p = 0;
                    IntVec down = sub(beta, alpha);
                    while (seen.count(down)) {
                        ++p;
                        down = sub(down, alpha);
                    }
                    Int pairing = 0;
                    for (int j = 0; j < f.rank; ++j) pairing += beta[j] * cartan[i][j];
                    if (p - pairing >= 1) {
                        IntVec up = add(beta, alpha);
                        if (!seen.count(up)) {
                            seen[up] = true;
                            next.push_back(up);
                        }
                    }
                }
            }
            level = std::move(next);
        }
        std::sort(roots.begin(), roots.end(), lex_less);
        if (static_cast<long>(roots.size()) != classical_positive_root_count(f.type, f.rank))
            fail(Errc::Inconsistent, "positive root count disagrees with the classical count");
        d.positive_roots_by_factor.push_back(std::move(roots));
        d.cartan_by_factor.push_back(std::move(cartan));
    }
    return d;
}

Cone dominant_chamber(const GroupSpec& g) {
    validate(g);
    int amb = g.ambient_dim();
    IntMat normals;
    for (int i = 0; i < g.semisimple_rank(); ++i) {
        IntVec e = zero_vec(amb);
        e[i] = 1;
        normals.push_back(e);
    }
    return Cone::from_inequalities(amb, normals);
}

std::set<int> support_of_semigroup(const GroupSpec& g, const IntMat& generators) {
    validate(g);
    int ss = g.semisimple_rank();
    std::set<int> s;
    for (const auto& v : generators) {
        if (static_cast<int>(v.size()) != g.ambient_dim())
            fail(Errc::ShapeMismatch, "generator of wrong dimension");
        for (int i = 0; i < ss; ++i) {
            if (v[i] < 0) fail(Errc::NotDominant, "generator with negative fundamental coordinate");
            if (v[i] != 0) s.insert(i);
        }
    }
    return s;
}

long delta(const GroupSpec& g, const std::set<int>& support) {
    RootDatum d = positive_roots(g);
    long count = 0;
    int offset = 0;
    for (std::size_t f = 0; f < g.simple_factors.size(); ++f) {
        int rank = g.simple_factors[f].rank;
        for (const auto& beta : d.positive_roots_by_factor[f]) {
            bool inside = true;
            for (int j = 0; j < rank; ++j)
                if (beta[j] > 0 && !support.count(offset + j)) {
                    inside = false;
                    break;
                }
            if (inside) ++count;
        }
        offset += rank;
    }
    return count;
}

}  // namespace horoflex
