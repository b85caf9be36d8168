#include "horoflex/oracle.hpp"

#include <algorithm>
#include <optional>

namespace horoflex::oracle {

namespace {

bool member_rec(const IntMat& gens, const IntVec& v, IntVec& acc, std::size_t idx, long budget) {
    if (idx == gens.size()) return acc == v;
    for (long c = 0; c <= budget; ++c) {
        if (member_rec(gens, v, acc, idx + 1, budget - c)) return true;
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += gens[idx][i];
    }
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] -= Int(budget + 1) * gens[idx][i];
    return false;
}

// rational coefficients with sum t_i * subset_i = v, by plain Gaussian
// elimination; nullopt when the subset is dependent or the system is
// inconsistent
std::optional<RatVec> solve_subset(const IntMat& subset, const IntVec& v) {
    std::size_t m = v.size(), k = subset.size();
    RatMat a(m, RatVec(k + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = Rat(subset[j][i]);
        a[i][k] = Rat(v[i]);
    }
    std::vector<std::size_t> pivot_of_col(k, std::size_t(-1));
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < m; ++col) {
        std::size_t pr = row;
        while (pr < m && a[pr][col] == 0) ++pr;
        if (pr == m) return std::nullopt;  // dependent subset
        std::swap(a[row], a[pr]);
        Rat p = a[row][col];
        for (auto& x : a[row]) x /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j <= k; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (a[i][k] != 0) return std::nullopt;
    RatVec t(k);
    for (std::size_t col = 0; col < k; ++col) t[col] = a[pivot_of_col[col]][k];
    return t;
}

}  // namespace

bool brute_member(const IntMat& gens, const IntVec& v, long coeff_bound) {
    IntVec acc = zero_vec(v.size());
    return member_rec(gens, v, acc, 0, coeff_bound);
}

bool brute_in_cone(const IntMat& gens, const IntVec& v) {
    if (is_zero(v)) return true;
    std::size_t n = gens.size();
    std::size_t r = v.size();
    if (n > 20) return false;  // subsets explode; corpus instances stay small
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) > r) continue;
        IntMat subset;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (std::size_t(1) << j)) subset.push_back(gens[j]);
        auto t = solve_subset(subset, v);
        if (!t) continue;
        bool nonneg = true;
        for (const auto& q : *t) nonneg = nonneg && q >= 0;
        if (nonneg) return true;
    }
    return false;
}

std::vector<IntVec> brute_holes(const IntMat& gens, const IntVec& grading, long degree_bound,
                                long box_bound, long coeff_bound) {
    std::size_t r = grading.size();
    std::vector<IntVec> holes;
    if (r == 0) return holes;
    IntVec x(r, Int(-box_bound));
    bool more = true;
    while (more) {
        Int deg = dot(grading, x);
        if (deg >= 0 && deg <= degree_bound && brute_in_cone(gens, x) &&
            !brute_member(gens, x, coeff_bound))
            holes.push_back(x);
        std::size_t i = r;
        while (i-- > 0) {
            if (x[i] < box_bound) {
                x[i] += 1;
                break;
            }
            x[i] = -box_bound;
            if (i == 0) more = false;
        }
    }
    std::sort(holes.begin(), holes.end(), [&](const IntVec& a, const IntVec& b) {
        Int da = dot(grading, a), db = dot(grading, b);
        if (da != db) return da < db;
        return lex_less(a, b);
    });
    return holes;
}

bool brute_saturation_point(const IntMat& gens, const IntVec& grading, const IntVec& p,
                            long degree_bound, long box_bound, long coeff_bound) {
    std::size_t r = grading.size();
    if (r == 0) return true;
    IntVec z(r, Int(-box_bound));
    bool more = true;
    while (more) {
        Int deg = dot(grading, z);
        if (deg >= 0 && deg <= degree_bound && brute_in_cone(gens, z)) {
            IntVec shifted(r);
            for (std::size_t i = 0; i < r; ++i) shifted[i] = p[i] + z[i];
            if (!brute_member(gens, shifted, coeff_bound)) return false;
        }
        std::size_t i = r;
        while (i-- > 0) {
            if (z[i] < box_bound) {
                z[i] += 1;
                break;
            }
            z[i] = -box_bound;
            if (i == 0) more = false;
        }
    }
    return true;
}

std::vector<IntVec> brute_demazure_roots(const IntMat& rays, int ray_index, long max_height) {
    std::size_t r = rays.empty() ? 0 : rays[0].size();
    std::vector<IntVec> out;
    if (r == 0) return out;
    IntVec e(r, Int(-max_height));
    bool more = true;
    while (more) {
        Int norm = 0;
        for (const auto& c : e) norm += abs(c);
        if (norm <= max_height) {
            bool ok = true;
            for (std::size_t j = 0; j < rays.size(); ++j) {
                Int s = 0;
                for (std::size_t i = 0; i < r; ++i) s += rays[j][i] * e[i];
                if (static_cast<int>(j) == ray_index ? (s != -1) : (s < 0)) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back(e);
        }
        std::size_t i = r;
        while (i-- > 0) {
            if (e[i] < max_height) {
                e[i] += 1;
                break;
            }
            e[i] = -max_height;
            if (i == 0) more = false;
        }
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace horoflex::oracle
