// Root finding for univariate polynomials: exact rational roots and numeric
// complex roots via balanced companion matrices.
#pragma once

#include <newtonbif/unipoly.hpp>

#include <complex>
#include <vector>

namespace nbif {

// All rational roots of p, each once, sorted ascending.  Every returned value
// is verified by exact evaluation.  The candidate search is complete whenever
// the trailing/leading coefficients factor within the internal trial-division
// budget (always the case below ~1e12); beyond that, roots involving an
// unfactored part may be missed, never misreported.
std::vector<Rational> rational_roots(const UniPoly& p);

// Numeric roots of the exact squarefree part of p, so each root appears once.
// Sorted by (real, imaginary).  Throws PrecisionError when two roots sit
// within 10*cluster_tol of each other (relative) and the distinct-root count
// would depend on the tolerance; std::invalid_argument on the zero polynomial.
std::vector<std::complex<double>> complex_roots(const UniPoly& p,
                                                double cluster_tol = 1e-9);

// Numeric roots, with multiplicity, of c[0] + c[1]*t + ... with complex
// coefficients.  Exactly-zero leading coefficients are trimmed first; throws
// PrecisionError when the leading coefficient is negligible against the rest
// (the companion matrix would be meaningless) and std::invalid_argument when
// every coefficient vanishes.
std::vector<std::complex<double>> complex_roots(std::vector<std::complex<double>> coeffs);

// Number of distinct values under a relative merge tolerance.  Throws
// PrecisionError when some inter-cluster gap falls within a factor 10 of the
// tolerance, i.e. when the answer would depend on the tolerance choice.
int count_distinct(const std::vector<std::complex<double>>& pts, double merge_tol);

}  // namespace nbif
