#pragma once

#include <optional>

#include "horoflex/numeric.hpp"

namespace horoflex {

// Basis of a sublattice of Z^n in row-style Hermite normal form.  The pivot of
// each row is its trailing nonzero entry; pivot columns strictly increase with
// the row index, pivots are positive, and the entries below a pivot (in later
// rows) are reduced into [0, pivot).  For a full-rank square basis the matrix
// is lower triangular.  The form is unique, so lattices compare by basis.
struct LatticeBasis {
    int ambient_dim = 0;
    int rank = 0;
    IntMat basis_rows;

    bool operator==(const LatticeBasis&) const = default;
};

LatticeBasis hermite_basis(const IntMat& generators);

// basis together with basis_rows[i] = sum_j transform[i][j] * generators[j]
struct HermiteTransform {
    LatticeBasis basis;
    IntMat transform;
};
HermiteTransform hermite_basis_transform(const IntMat& generators);

// coefficients c with sum c_i * basis_i = v, or nullopt if v is outside
std::optional<IntVec> coordinates_in_lattice(const IntVec& v, const LatticeBasis& L);

IntVec primitive_vector(const IntVec& v);

int rational_rank(const IntMat& rows);

// HNF-canonical basis of { z in Z^n : <z, row> = 0 for every row }
IntMat integer_kernel_basis(const IntMat& rows, int ambient_dim);

}  // namespace horoflex
