// Exact integer linear algebra: rank, determinants, Hermite forms, integer
// kernels and lattice saturation.  Everything here is arbitrary precision;
// no floating point is involved.
#pragma once

#include <newtonbif/numeric.hpp>

#include <optional>
#include <vector>

namespace nbif {

using ZVec = std::vector<Integer>;
using ZMat = std::vector<ZVec>;  // row major

ZVec zvec_of(const std::vector<std::int64_t>& v);
std::vector<std::int64_t> int64_of(const ZVec& v);  // throws on overflow

Integer dot(const ZVec& a, const ZVec& b);

// Divides by the gcd of the entries; the zero vector stays zero.
void make_primitive(ZVec& v);

// Exact rank over Q, by fraction-free elimination.
int rank(ZMat a);

// Determinant of a square matrix (Bareiss fraction-free elimination).
Integer det(ZMat a);

// Column-style Hermite reduction: returns unimodular U with A*U in column
// echelon form (zero columns last).  Only U is needed by the callers.
ZMat column_transform_to_echelon(const ZMat& a);

// Basis (as rows) of the full integer kernel {x in Z^n : A x = 0}.
// The kernel of an integer matrix is automatically a saturated lattice.
ZMat integer_kernel_basis(const ZMat& a, int n_cols);

// Basis (as rows) of span_Q(rows) intersected with Z^n, computed as the
// kernel of the kernel.  Empty input spans the zero lattice.
ZMat saturate_row_span(const ZMat& rows, int n_cols);

// Solves A x = b over Q; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_rational(const ZMat& a, const std::vector<Rational>& b);

// Integer coordinates c with sum_k c_k * basis[k] = v, or nullopt when v is
// not in the integer row span of basis (basis rows must be Q-independent).
std::optional<ZVec> integer_coordinates(const ZMat& basis, const ZVec& v);

}  // namespace nbif
