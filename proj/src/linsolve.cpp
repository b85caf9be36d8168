#include "horoflex/linsolve.hpp"

#include <algorithm>
#include <cassert>

#include "horoflex/lattice.hpp"

namespace horoflex {

namespace {

// Dense exact simplex on { x >= 0 : A'x = b' }, b' >= 0, with one artificial
// variable per row.  Bland's rule throughout, so every run terminates.
struct Tableau {
    std::size_t n = 0;   // original columns
    std::size_t m0 = 0;  // original rows (artificial block width)
    RatMat t;            // rows x (n + m0 + 1), last column is the rhs
    RatVec z;            // reduced-cost row, same width
    RatVec cost;         // size n + m0
    std::vector<std::size_t> basis;   // per current row
    std::vector<std::size_t> rowid;   // original row index per current row
    bool allow_artificial = true;

    std::size_t width() const { return n + m0; }

    void price() {
        z.assign(width() + 1, Rat(0));
        for (std::size_t j = 0; j <= width(); ++j) {
            Rat s = (j < width()) ? cost[j] : Rat(0);
            for (std::size_t r = 0; r < t.size(); ++r) s -= cost[basis[r]] * t[r][j];
            z[j] = s;
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        Rat p = t[r][c];
        for (auto& v : t[r]) v /= p;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i == r || t[i][c] == 0) continue;
            Rat f = t[i][c];
            for (std::size_t j = 0; j <= width(); ++j) t[i][j] -= f * t[r][j];
        }
        if (z[c] != 0) {
            Rat f = z[c];
            for (std::size_t j = 0; j <= width(); ++j) z[j] -= f * t[r][j];
        }
        basis[r] = c;
    }

    // 0 = optimal, 1 = unbounded
    int iterate() {
        for (;;) {
            std::size_t enter = width();
            for (std::size_t j = 0; j < width(); ++j) {
                if (j >= n && !allow_artificial) break;
                if (z[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == width()) return 0;
            std::size_t leave = t.size();
            Rat best;
            for (std::size_t r = 0; r < t.size(); ++r) {
                if (t[r][enter] <= 0) continue;
                Rat ratio = t[r][width()] / t[r][enter];
                if (leave == t.size() || ratio < best ||
                    (ratio == best && basis[r] < basis[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == t.size()) return 1;
            pivot(leave, enter);
        }
    }

    Rat objective_value() const { return -z[width()]; }

    RatVec primal(std::size_t vars) const {
        RatVec x(vars, Rat(0));
        for (std::size_t r = 0; r < t.size(); ++r)
            if (basis[r] < vars) x[basis[r]] = t[r][width()];
        return x;
    }

    // y over the ORIGINAL rows, from the artificial reduced costs
    RatVec dual(std::size_t orig_rows) const {
        RatVec y(orig_rows, Rat(0));
        for (std::size_t r = 0; r < t.size(); ++r) {
            std::size_t i = rowid[r];
            y[i] = cost[n + i] - z[n + i];
        }
        return y;
    }
};

struct Phase1 {
    Tableau tab;
    std::vector<int> sign;  // per original row
    bool feasible = false;
};

Phase1 phase1(const RatMat& A, const RatVec& b) {
    std::size_t m = A.size();
    std::size_t n = m ? A[0].size() : 0;
    if (b.size() != m) fail(Errc::ShapeMismatch, "lp: rhs size mismatch");
    for (const auto& row : A)
        if (row.size() != n) fail(Errc::ShapeMismatch, "lp: ragged matrix");

    Phase1 p;
    p.sign.assign(m, 1);
    Tableau& tb = p.tab;
    tb.n = n;
    tb.m0 = m;
    tb.t.assign(m, RatVec(n + m + 1, Rat(0)));
    tb.basis.resize(m);
    tb.rowid.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        int s = (b[i] < 0) ? -1 : 1;
        p.sign[i] = s;
        for (std::size_t j = 0; j < n; ++j) tb.t[i][j] = Rat(s) * A[i][j];
        tb.t[i][n + i] = 1;
        tb.t[i][n + m] = Rat(s) * b[i];
        tb.basis[i] = n + i;
        tb.rowid[i] = i;
    }
    tb.cost.assign(n + m, Rat(0));
    for (std::size_t i = 0; i < m; ++i) tb.cost[n + i] = 1;
    tb.price();
    int st = tb.iterate();
    if (st != 0) fail(Errc::Inconsistent, "phase-1 objective cannot be unbounded");
    p.feasible = (tb.objective_value() == 0);
    if (!p.feasible) return p;

    // drive artificials out of the basis; drop redundant rows
    for (std::size_t r = 0; r < tb.t.size();) {
        if (tb.basis[r] < n) {
            ++r;
            continue;
        }
        std::size_t c = n;
        for (std::size_t j = 0; j < n; ++j)
            if (tb.t[r][j] != 0) {
                c = j;
                break;
            }
        if (c < n) {
            tb.pivot(r, c);
            ++r;
        } else {
            tb.t.erase(tb.t.begin() + r);
            tb.basis.erase(tb.basis.begin() + r);
            tb.rowid.erase(tb.rowid.begin() + r);
        }
    }
    return p;
}

RatMat int_to_rat_matrix(const IntMat& columns, std::size_t m) {
    RatMat A(m, RatVec(columns.size(), Rat(0)));
    for (std::size_t k = 0; k < columns.size(); ++k)
        for (std::size_t i = 0; i < m; ++i) A[i][k] = Rat(columns[k][i]);
    return A;
}

bool check_farkas(const RatMat& A, const RatVec& b, const RatVec& y) {
    std::size_t m = A.size();
    std::size_t n = m ? A[0].size() : 0;
    if (y.size() != m) return false;
    for (std::size_t j = 0; j < n; ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < m; ++i) s += y[i] * A[i][j];
        if (s < 0) return false;
    }
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i) s += y[i] * b[i];
    return s < 0;
}

bool check_forced_zero(const RatMat& A, const RatVec& b, std::size_t j, const RatVec& u) {
    std::size_t m = A.size();
    std::size_t n = m ? A[0].size() : 0;
    if (u.size() != m || j >= n) return false;
    for (std::size_t k = 0; k < n; ++k) {
        Rat s = 0;
        for (std::size_t i = 0; i < m; ++i) s += u[i] * A[i][k];
        if (s < Rat(k == j ? 1 : 0)) return false;
    }
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i) s += u[i] * b[i];
    return s <= 0;
}

bool check_congruence(const IntMat& columns, const IntVec& b, const CongruenceCertificate& c) {
    if (c.modulus <= 0) return false;
    for (auto k : c.columns) {
        if (k >= columns.size()) return false;
        Int s = dot(c.functional, columns[k]);
        if (s % c.modulus != 0) return false;
    }
    Int s = dot(c.functional, b);
    return s % c.modulus != 0;
}

// congruence certificate for "b is not in the integer span of the listed
// columns"; requires that this really is the case
CongruenceCertificate congruence_certificate(const IntMat& columns, const IntVec& b,
                                             std::vector<std::size_t> cover) {
    std::size_t m = b.size();
    IntMat cols;
    for (auto k : cover) cols.push_back(columns[k]);
    CongruenceCertificate cert;
    cert.columns = std::move(cover);

    if (cols.empty() || rational_rank(cols) == 0) {
        std::size_t i = 0;
        while (i < m && b[i] == 0) ++i;
        if (i == m) fail(Errc::Inconsistent, "congruence certificate for b=0");
        cert.functional = zero_vec(m);
        cert.functional[i] = 1;
        cert.modulus = abs(b[i]) + 1;
        return cert;
    }

    LatticeBasis L = hermite_basis(cols);
    // outside the rational span: an integer functional vanishing on the span
    // but not on b does the job with any modulus exceeding |<u,b>|
    RatMat span_sys(m, RatVec(L.rank, Rat(0)));
    for (int k = 0; k < L.rank; ++k)
        for (std::size_t i = 0; i < m; ++i) span_sys[i][k] = Rat(L.basis_rows[k][i]);
    RatVec rb = to_rat(b);
    auto coords = solve_rational(span_sys, rb);
    if (!coords) {
        IntMat kernel = integer_kernel_basis(L.basis_rows, static_cast<int>(m));
        for (const auto& k : kernel) {
            Int s = dot(k, b);
            if (s != 0) {
                cert.functional = k;
                cert.modulus = abs(s) + 1;
                return cert;
            }
        }
        fail(Errc::Inconsistent, "no separating functional found");
    }
    // inside the span: some lattice coordinate of b is fractional; the dual
    // coordinate functional has integer values on the lattice but not on b
    int frac = -1;
    for (int k = 0; k < L.rank; ++k)
        if ((*coords)[k].get_den() != 1) {
            frac = k;
            break;
        }
    if (frac < 0) fail(Errc::Inconsistent, "congruence certificate requested for solvable system");
    RatMat dual_sys(L.rank, RatVec(m, Rat(0)));
    for (int k = 0; k < L.rank; ++k)
        for (std::size_t i = 0; i < m; ++i) dual_sys[k][i] = Rat(L.basis_rows[k][i]);
    RatVec e(L.rank, Rat(0));
    e[frac] = 1;
    auto y = solve_rational(dual_sys, e);
    if (!y) fail(Errc::Inconsistent, "dual coordinate functional must exist");
    Int den = 1;
    for (const auto& q : *y) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    cert.modulus = den;
    cert.functional.resize(m);
    for (std::size_t i = 0; i < m; ++i) cert.functional[i] = Rat((*y)[i] * Rat(den)).get_num();
    return cert;
}

}  // namespace

LpResult lp_feasible(const RatMat& A, const RatVec& b) {
    Phase1 p = phase1(A, b);
    LpResult res;
    res.feasible = p.feasible;
    std::size_t m = A.size();
    std::size_t n = m ? A[0].size() : 0;
    if (p.feasible) {
        res.x = p.tab.primal(n);
        for (std::size_t i = 0; i < m; ++i) {
            Rat s = 0;
            for (std::size_t j = 0; j < n; ++j) s += A[i][j] * res.x[j];
            if (s != b[i]) fail(Errc::Inconsistent, "lp solution fails substitution");
        }
    } else {
        RatVec y = p.tab.dual(m);
        res.farkas.resize(m);
        for (std::size_t i = 0; i < m; ++i) res.farkas[i] = -(Rat(p.sign[i]) * y[i]);
        if (!check_farkas(A, b, res.farkas)) fail(Errc::Inconsistent, "farkas replay failed");
    }
    return res;
}

LpMax lp_max_coordinate(const RatMat& A, const RatVec& b, std::size_t j) {
    Phase1 p = phase1(A, b);
    if (!p.feasible) fail(Errc::Inconsistent, "lp_max_coordinate on infeasible system");
    Tableau& tb = p.tab;
    std::size_t m = A.size();
    tb.allow_artificial = false;
    tb.cost.assign(tb.width(), Rat(0));
    tb.cost[j] = -1;  // min -x_j
    tb.price();
    LpMax out;
    if (tb.iterate() == 1) {
        out.kind = LpMax::Unbounded;
        return out;
    }
    out.x = tb.primal(tb.n);
    Rat v = out.x[j];
    if (v > 0) {
        out.kind = LpMax::Positive;
        out.value = v;
        return out;
    }
    out.kind = LpMax::Zero;
    RatVec y = tb.dual(m);
    out.dual.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.dual[i] = -(Rat(p.sign[i]) * y[i]);
    if (!check_forced_zero(A, b, j, out.dual))
        fail(Errc::Inconsistent, "forced-zero dual replay failed");
    return out;
}

std::optional<RatVec> solve_rational(const RatMat& A, const RatVec& b) {
    std::size_t m = A.size();
    std::size_t n = m ? A[0].size() : 0;
    if (b.size() != m) fail(Errc::ShapeMismatch, "solve_rational: rhs size mismatch");
    RatMat t(m, RatVec(n + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
        t[i][n] = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t pr = r;
        while (pr < m && t[pr][c] == 0) ++pr;
        if (pr == m) continue;
        std::swap(t[r], t[pr]);
        Rat p = t[r][c];
        for (auto& v : t[r]) v /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || t[i][c] == 0) continue;
            Rat f = t[i][c];
            for (std::size_t k = 0; k <= n; ++k) t[i][k] -= f * t[r][k];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (t[i][n] != 0) return std::nullopt;
    RatVec x(n, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = t[i][n];
    return x;
}

IntFeasibility solve_nonneg_integer(const IntMat& columns, const IntVec& b, const Int& bound) {
    std::size_t m = b.size();
    std::size_t n = columns.size();
    for (const auto& c : columns)
        if (c.size() != m) fail(Errc::ShapeMismatch, "solve_nonneg_integer: column size mismatch");
    if (bound < 0) fail(Errc::BadInput, "solve_nonneg_integer: negative bound");

    IntFeasibility res;
    if (is_zero(b)) {
        res.kind = IntFeasibility::Kind::Solution;
        res.solution = zero_vec(n);
        return res;
    }

    RatMat A = int_to_rat_matrix(columns, m);
    RatVec rb = to_rat(b);
    LpResult lp = lp_feasible(A, rb);
    if (!lp.feasible) {
        res.kind = IntFeasibility::Kind::InfeasibleLP;
        res.farkas = FarkasCertificate{lp.farkas};
        return res;
    }

    std::vector<std::size_t> all_cols(n);
    for (std::size_t k = 0; k < n; ++k) all_cols[k] = k;
    if (!coordinates_in_lattice(b, hermite_basis(columns))) {
        res.kind = IntFeasibility::Kind::InfeasibleCongruence;
        res.congruence = congruence_certificate(columns, b, all_cols);
        if (!check_congruence(columns, b, *res.congruence))
            fail(Errc::Inconsistent, "congruence replay failed");
        return res;
    }

    // forced-zero reduction: variables that are 0 in every rational solution.
    // One LP maximizing t over { x - t >= 0, A x = b } decides whether any
    // variable is forced at all; per-variable LPs run only for candidates
    // that were zero in the feasible points already seen.
    std::vector<ForcedZeroCertificate> forced;
    std::vector<std::size_t> kept;
    std::vector<char> not_forced(n, 0);
    for (std::size_t j = 0; j < n; ++j) not_forced[j] = lp.x[j] > 0;
    // the composite certificate needs b outside the lattice of the columns
    // that survive; columns positive in any feasible point always survive,
    // so a lattice hit on those alone rules the certificate out
    {
        IntMat positive_cols;
        for (std::size_t j = 0; j < n; ++j)
            if (not_forced[j]) positive_cols.push_back(columns[j]);
        bool hopeless = !positive_cols.empty() &&
                        coordinates_in_lattice(b, hermite_basis(positive_cols)).has_value();
        if (!hopeless) {
            RatMat Aug = A;  // max t over { x - t*1 >= 0, A x = b }
            for (std::size_t i = 0; i < m; ++i) {
                Rat sum = 0;
                for (std::size_t j = 0; j < n; ++j) sum += A[i][j];
                Aug[i].push_back(sum);
            }
            LpMax gate = lp_max_coordinate(Aug, rb, n);
            if (gate.kind != LpMax::Zero) {
                for (std::size_t j = 0; j < n; ++j) not_forced[j] = 1;
            } else {
                for (std::size_t j = 0; j < n; ++j) {
                    if (not_forced[j]) continue;
                    LpMax mx = lp_max_coordinate(A, rb, j);
                    if (mx.kind == LpMax::Zero) {
                        forced.push_back(ForcedZeroCertificate{j, mx.dual});
                    } else {
                        for (std::size_t k = 0; k < n; ++k)
                            if (k < mx.x.size() && mx.x[k] > 0) not_forced[k] = 1;
                        not_forced[j] = 1;
                    }
                }
            }
        } else {
            for (std::size_t j = 0; j < n; ++j) not_forced[j] = 1;
        }
    }
    for (std::size_t j = 0; j < n; ++j)
        if (not_forced[j]) kept.push_back(j);
    if (!forced.empty()) {
        IntMat kept_cols;
        for (auto k : kept) kept_cols.push_back(columns[k]);
        bool lattice_ok =
            !kept_cols.empty() && coordinates_in_lattice(b, hermite_basis(kept_cols)).has_value();
        if (!lattice_ok) {
            res.kind = IntFeasibility::Kind::InfeasibleComposite;
            res.forced_zero = forced;
            res.congruence = congruence_certificate(columns, b, kept);
            if (!check_congruence(columns, b, *res.congruence))
                fail(Errc::Inconsistent, "congruence replay failed");
            return res;
        }
    }

    // last resort: exhaustive search over coefficient sum <= bound
    IntVec x = zero_vec(n);
    IntVec residual = b;
    Int budget = bound;
    // depth-first over columns in index order
    std::vector<std::size_t> stack;
    std::function<bool(std::size_t, Int)> dfs = [&](std::size_t j, Int left) -> bool {
        if (is_zero(residual)) return true;
        if (j == n || left == 0) return false;
        // try multiplicities of column j from 0 upward
        for (Int c = 0; c <= left; ++c) {
            if (c > 0)
                for (std::size_t i = 0; i < m; ++i) residual[i] -= columns[j][i];
            x[j] = c;
            if (dfs(j + 1, left - c)) return true;
        }
        for (std::size_t i = 0; i < m; ++i) residual[i] += x[j] * columns[j][i];
        x[j] = 0;
        return false;
    };
    if (dfs(0, budget)) {
        IntVec check = zero_vec(m);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < m; ++i) check[i] += x[j] * columns[j][i];
        if (check != b) fail(Errc::Inconsistent, "integer solution fails substitution");
        res.kind = IntFeasibility::Kind::Solution;
        res.solution = x;
        return res;
    }
    res.kind = IntFeasibility::Kind::UnknownUpToBound;
    res.bound = bound;
    return res;
}

bool replay(const IntMat& columns, const IntVec& b, const IntFeasibility& r) {
    std::size_t m = b.size();
    std::size_t n = columns.size();
    switch (r.kind) {
        case IntFeasibility::Kind::Solution: {
            if (r.solution.size() != n) return false;
            IntVec check = zero_vec(m);
            for (std::size_t j = 0; j < n; ++j) {
                if (r.solution[j] < 0) return false;
                for (std::size_t i = 0; i < m; ++i) check[i] += r.solution[j] * columns[j][i];
            }
            return check == b;
        }
        case IntFeasibility::Kind::InfeasibleLP:
            return r.farkas && check_farkas(int_to_rat_matrix(columns, m), to_rat(b), r.farkas->y);
        case IntFeasibility::Kind::InfeasibleCongruence: {
            if (!r.congruence || r.congruence->columns.size() != n) return false;
            return check_congruence(columns, b, *r.congruence);
        }
        case IntFeasibility::Kind::InfeasibleComposite: {
            if (!r.congruence) return false;
            RatMat A = int_to_rat_matrix(columns, m);
            RatVec rb = to_rat(b);
            std::vector<bool> covered(n, false);
            for (const auto& fz : r.forced_zero) {
                if (!check_forced_zero(A, rb, fz.column, fz.dual)) return false;
                covered[fz.column] = true;
            }
            for (auto k : r.congruence->columns) {
                if (k >= n) return false;
                covered[k] = true;
            }
            for (std::size_t k = 0; k < n; ++k)
                if (!covered[k]) return false;
            return check_congruence(columns, b, *r.congruence);
        }
        case IntFeasibility::Kind::UnknownUpToBound:
            return false;
    }
    return false;
}

}  // namespace horoflex
