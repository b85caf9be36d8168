#include "horoflex/lattice.hpp"

#include <algorithm>
#include <cassert>

namespace horoflex {

namespace {

struct HnfWork {
    IntMat rows;       // working rows, ambient length each
    IntMat transform;  // optional unimodular tracking, same row count
    bool track = false;

    void combine(std::size_t a, std::size_t b, std::size_t col) {
        // unimodular 2-row transform putting gcd at (a, col) and 0 at (b, col)
        Int g, p, q;
        mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), rows[a][col].get_mpz_t(),
                   rows[b][col].get_mpz_t());
        Int ag = rows[a][col] / g;
        Int bg = rows[b][col] / g;
        auto apply = [&](IntMat& m) {
            IntVec na(m[a].size()), nb(m[a].size());
            for (std::size_t k = 0; k < m[a].size(); ++k) {
                na[k] = p * m[a][k] + q * m[b][k];
                nb[k] = ag * m[b][k] - bg * m[a][k];
            }
            m[a] = std::move(na);
            m[b] = std::move(nb);
        };
        apply(rows);
        if (track) apply(transform);
    }

    void negate(std::size_t a) {
        for (auto& x : rows[a]) x = -x;
        if (track)
            for (auto& x : transform[a]) x = -x;
    }

    void submul(std::size_t a, std::size_t b, const Int& f) {
        // row a -= f * row b
        for (std::size_t k = 0; k < rows[a].size(); ++k) rows[a][k] -= f * rows[b][k];
        if (track)
            for (std::size_t k = 0; k < transform[a].size(); ++k)
                transform[a][k] -= f * transform[b][k];
    }
};

// Trailing-pivot HNF.  Returns indices of pivot rows ordered by ascending
// pivot column; on return `w.rows` holds the reduced rows in place.
std::vector<std::size_t> hnf_in_place(HnfWork& w, std::size_t dim) {
    std::vector<std::size_t> pivot_row_for_col(dim, std::size_t(-1));
    std::vector<bool> is_pivot(w.rows.size(), false);
    for (std::size_t col = dim; col-- > 0;) {
        std::size_t lead = std::size_t(-1);
        for (std::size_t i = 0; i < w.rows.size(); ++i) {
            if (is_pivot[i] || w.rows[i][col] == 0) continue;
            if (lead == std::size_t(-1)) {
                lead = i;
            } else {
                w.combine(lead, i, col);
            }
        }
        if (lead == std::size_t(-1)) continue;
        if (w.rows[lead][col] < 0) w.negate(lead);
        // reduce this column in the pivot rows of later columns
        for (std::size_t c2 = col + 1; c2 < dim; ++c2) {
            std::size_t k = pivot_row_for_col[c2];
            if (k == std::size_t(-1) || w.rows[k][col] == 0) continue;
            Int f;
            mpz_fdiv_q(f.get_mpz_t(), w.rows[k][col].get_mpz_t(), w.rows[lead][col].get_mpz_t());
            if (f != 0) w.submul(k, lead, f);
        }
        pivot_row_for_col[col] = lead;
        is_pivot[lead] = true;
    }
    std::vector<std::size_t> order;
    for (std::size_t col = 0; col < dim; ++col)
        if (pivot_row_for_col[col] != std::size_t(-1)) order.push_back(pivot_row_for_col[col]);
    return order;
}

}  // namespace

LatticeBasis hermite_basis(const IntMat& generators) {
    if (generators.empty()) fail(Errc::EmptyInput, "hermite_basis: no generators");
    std::size_t dim = generators[0].size();
    for (const auto& g : generators)
        if (g.size() != dim) fail(Errc::ShapeMismatch, "hermite_basis: mixed dimensions");
    HnfWork w;
    w.rows = generators;
    auto order = hnf_in_place(w, dim);
    LatticeBasis L;
    L.ambient_dim = static_cast<int>(dim);
    L.rank = static_cast<int>(order.size());
    for (auto i : order) L.basis_rows.push_back(w.rows[i]);
    return L;
}

HermiteTransform hermite_basis_transform(const IntMat& generators) {
    if (generators.empty()) fail(Errc::EmptyInput, "hermite_basis: no generators");
    std::size_t dim = generators[0].size();
    for (const auto& g : generators)
        if (g.size() != dim) fail(Errc::ShapeMismatch, "hermite_basis: mixed dimensions");
    HnfWork w;
    w.rows = generators;
    w.track = true;
    w.transform.assign(generators.size(), IntVec(generators.size(), Int(0)));
    for (std::size_t i = 0; i < generators.size(); ++i) w.transform[i][i] = 1;
    auto order = hnf_in_place(w, dim);
    HermiteTransform out;
    out.basis.ambient_dim = static_cast<int>(dim);
    out.basis.rank = static_cast<int>(order.size());
    for (auto i : order) {
        out.basis.basis_rows.push_back(w.rows[i]);
        out.transform.push_back(w.transform[i]);
    }
    return out;
}

std::optional<IntVec> coordinates_in_lattice(const IntVec& v, const LatticeBasis& L) {
    if (static_cast<int>(v.size()) != L.ambient_dim)
        fail(Errc::ShapeMismatch, "coordinates_in_lattice: wrong dimension");
    IntVec residual = v;
    IntVec coeffs(L.rank, Int(0));
    for (int i = L.rank - 1; i >= 0; --i) {
        const IntVec& row = L.basis_rows[i];
        int pcol = L.ambient_dim - 1;
        while (pcol >= 0 && row[pcol] == 0) --pcol;
        assert(pcol >= 0);
        if (residual[pcol] % row[pcol] != 0) return std::nullopt;
        Int c = residual[pcol] / row[pcol];
        for (int k = 0; k <= pcol; ++k) residual[k] -= c * row[k];
        coeffs[i] = c;
    }
    if (!is_zero(residual)) return std::nullopt;
    return coeffs;
}

IntVec primitive_vector(const IntVec& v) {
    if (is_zero(v)) fail(Errc::ZeroVector, "primitive_vector: zero vector");
    Int g = gcd_vec(v);
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

int rational_rank(const IntMat& rows) {
    if (rows.empty()) return 0;
    return hermite_basis(rows).rank;
}

IntMat integer_kernel_basis(const IntMat& rows, int ambient_dim) {
    std::size_t n = static_cast<std::size_t>(ambient_dim);
    std::size_t m = rows.size();
    for (const auto& r : rows)
        if (r.size() != n) fail(Errc::ShapeMismatch, "integer_kernel_basis: wrong dimension");
    if (m == 0) {
        IntMat id(n, IntVec(n, Int(0)));
        for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
        return n ? hermite_basis(id).basis_rows : IntMat{};
    }
    // z * G = 0 where G[i][k] = rows[k][i]; unimodular row reduction of G
    // turns zero rows of the reduced matrix into kernel basis rows of the
    // tracked transform.
    HnfWork w;
    w.rows.assign(n, IntVec(m, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) w.rows[i][k] = rows[k][i];
    w.track = true;
    w.transform.assign(n, IntVec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) w.transform[i][i] = 1;
    hnf_in_place(w, m);
    IntMat kernel;
    for (std::size_t i = 0; i < n; ++i)
        if (is_zero(w.rows[i])) kernel.push_back(w.transform[i]);
    if (kernel.empty()) return {};
    return hermite_basis(kernel).basis_rows;
}

}  // namespace horoflex
