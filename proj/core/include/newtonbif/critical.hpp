// Critical values on face tori and in the affine space, the nondegeneracy
// check and the isolated-singularity test: the analytic inputs of the
// candidate bifurcation set.
#pragma once

#include <newtonbif/bipoly.hpp>
#include <newtonbif/newton.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nbif {

// Pinned numeric thresholds.  Exact code paths never consult them; every
// approximate comparison in the library goes through one of these fields.
struct Tolerances {
  double cluster = 1e-9;            // merging near-equal candidate values
  double residual = 1e-8;           // accepting numeric solutions of systems
  double recognize = 1e-10;         // recognizing a rational from a double
  std::uint64_t max_den = 1000000;  // largest denominator recognition proposes
  double root_count = 1e-6;         // merging roots when counting distinct ones
};

enum class Verdict { pass, fail, unknown };
const char* to_cstr(Verdict v);

// Concrete evidence for a failed check, reproducible exactly when its status
// says so (the description then names an exact certificate, e.g. a factor).
struct Witness {
  std::string description;
  NumStatus status = NumStatus::numeric;
};

struct CheckResult {
  Verdict verdict = Verdict::unknown;
  NumStatus status = NumStatus::numeric;  // strength of the evidence
  std::string detail;
  std::optional<Witness> witness;
};

// f_gamma written on the d-dimensional torus of the face's affine span:
// f_gamma(x) = x^base_vertex * g(x^U) with the rows of `basis` forming U.
struct FaceRestriction {
  int face_index = -1;
  int dim = 0;
  ZMat basis;
  Exponent base_vertex;
  SparsePoly laurent{1, PolyMode::laurent};  // g itself, for honest values
  SparsePoly cleared{1};  // g times a monomial unit; torus zero sets only
};

FaceRestriction restrict_to_face_torus(const SparsePoly& f, const LatticePolytope& np,
                                       int face_index);

struct TorusCriticalValues {
  std::vector<Scalar> values;
  // exact: provably every critical value appears (individual entries may
  // still be numeric); numeric: floating point decided what was kept;
  // heuristic: randomized search only, values may be missing entirely
  NumStatus completeness = NumStatus::exact;
};

// Critical values of g on its torus; for an atypical face this is the
// candidate contribution of that face.
TorusCriticalValues critical_values_torus(const FaceRestriction& r, const Tolerances& tol,
                                          std::uint64_t seed);

// Kouchnirenko condition for one restriction: g = grad g = 0 has no torus
// solution (equivalent to the face system of f having none).
CheckResult restriction_nondegenerate(const FaceRestriction& r, const Tolerances& tol,
                                      std::uint64_t seed);

// Whether the fiber {g = b} on the restriction torus has only isolated
// singular points.
CheckResult restriction_fiber_isolated(const FaceRestriction& r, const Scalar& b,
                                       const Tolerances& tol, std::uint64_t seed);

// The two face-level wrappers: a single origin-free face of the polyhedron,
// and the conjunction over all of them.
CheckResult face_nondegenerate(const SparsePoly& f, const LatticePolytope& np,
                               int face_index, const Tolerances& tol, std::uint64_t seed);
CheckResult nondegenerate_at_infinity(const NewtonData& nd, const Tolerances& tol,
                                      std::uint64_t seed);

// Isolated singularities over the value b: every atypical-face fiber
// {f_gamma = b} has only isolated singular points on its span torus.
CheckResult isolated_singularities_over(const NewtonData& nd, const Scalar& b,
                                        const Tolerances& tol, std::uint64_t seed);

struct AffineCriticalValues {
  std::vector<Scalar> values;  // f(Sing f)
  NumStatus completeness = NumStatus::exact;
};

// Exact for one and two variables, seeded numeric search for three and four,
// empty heuristic beyond (callers may inject assumed values there).
AffineCriticalValues affine_critical_values(const SparsePoly& f, const Tolerances& tol,
                                            std::uint64_t seed);

// Deterministic merge: exact values dedupe by equality and absorb weaker
// neighbours within tol.cluster; numeric values cluster together.  The
// result is sorted by (real, imaginary) part.
std::vector<Scalar> merge_values(std::vector<Scalar> vals, const Tolerances& tol);

}  // namespace nbif
