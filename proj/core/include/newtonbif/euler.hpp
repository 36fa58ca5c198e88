// Euler characteristics of affine plane-curve fibers and the jump of chi
// across a candidate value.  The fiber {f = c} in C^2 is analyzed through the
// projection to the first coordinate: away from finitely many x-positions it
// is an unbranched cover of the line, and chi is assembled from the sheet
// count, the exceptional fibers, and the vertical lines inside the curve.
#pragma once

#include <newtonbif/critical.hpp>

namespace nbif {

// chi = V + r*(1 - S - V) + sum of exceptional root counts, where V is the
// number of vertical lines, S the number of exceptional x-positions, and r
// the generic count of distinct y-roots.  The stored fields always satisfy
// that identity, so chi can be recomputed from them.
struct FiberTopology {
  Scalar value;
  int chi = 0;
  std::vector<Scalar> vertical_lines;  // x with the whole line {x} x C in the fiber
  std::vector<std::pair<Scalar, int>> exceptional_points;  // (x, distinct y-roots there)
  int generic_root_count = 0;
  NumStatus status = NumStatus::exact;
};

// Euler characteristic of {f = c} for a 2-variable affine polynomial.
//
// Rational c: the vertical-line count, sheet count, and exceptional-position
// count are exact (squarefree-part degrees); root counts at rational
// exceptional positions are exact as well, and only irrational ones fall
// back to numeric root counting (status numeric).  Non-rational c: the
// y-discriminant is interpolated from numeric Sylvester determinants and the
// whole computation is numeric.  Root counting at numerically located
// positions uses a merge tolerance 100x root_count to absorb position error.
//
// Throws std::invalid_argument unless f is affine in exactly two variables,
// std::domain_error for constant f, and PrecisionError when c sits
// numerically on a multiple-component locus or a count would depend on the
// tolerance choice.
FiberTopology chi_affine_curve_fiber(const SparsePoly& f, const Scalar& c,
                                     const Tolerances& tol);

// E_f(b) = (-1)^(n-1) (chi(b+eps) - chi(b)) with n = 2.  eps is a positive
// power of ten at most a thousandth of the distance from b to the nearest
// other candidate, and the result is only returned when chi(b+eps) agrees
// with chi(b+eps/2); otherwise PrecisionError.
int euler_jump(const SparsePoly& f, const Scalar& b,
               const std::vector<Scalar>& candidates, const Tolerances& tol);

// Deterministic rational value at distance >= 1/5 from every listed value;
// used to sample generic fibers.
Rational pick_generic_value(const std::vector<Scalar>& avoid);

}  // namespace nbif
