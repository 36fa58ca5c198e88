// Candidate bifurcation values and their certificates.  K_f is assembled
// from the affine critical values, the value at the origin, and the critical
// values of the face parts on their tori; a candidate is promoted to a
// certified bifurcation value when all hypotheses of one of six certificate
// routes hold.
#pragma once

#include <newtonbif/critical.hpp>
#include <newtonbif/euler.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nbif {

// one candidate value with the provenance of every list that contributed it
struct CandidateValue {
  Scalar value;
  bool from_affine_critical = false;  // value of f at an affine critical point
  bool from_value_at_origin = false;  // f(0)
  std::vector<int> from_faces;  // polyhedron face indices whose torus values hit it
  // pass: avoids the affine critical values and f(0); fail: among them;
  // unknown: too close to the excluded set to decide at the tolerance
  Verdict in_theorem_scope = Verdict::pass;
};

struct KfData {
  NewtonData newton;
  CheckResult nondegeneracy;
  std::vector<CandidateValue> values;         // sorted by value, deduplicated
  NumStatus completeness = NumStatus::exact;  // meet over the contributing lists
};

// Assemble the candidate set with per-value origin attribution; values that
// agree exactly or within tol.cluster merge and union their origins.  Throws
// DegenerateInputError unless the Newton polyhedron has full dimension.
// check_nondegeneracy = false records an unknown verdict instead of running
// the test, so certificates degrade honestly rather than assume it.
// assume_affine, when given, replaces the computed affine critical values
// with a trusted exact list (useful beyond two variables, where the computed
// list is only heuristic).
KfData assemble_kf(const SparsePoly& f, const Tolerances& tol, std::uint64_t seed,
                   bool check_nondegeneracy = true,
                   const std::optional<std::vector<Rational>>& assume_affine = std::nullopt);

enum class CertVerdict { certified_in_Bf, candidate_only, unknown };
const char* to_cstr(CertVerdict v);

struct HypothesisEntry {
  std::string route;  // certificate route slug
  std::string name;   // hypothesis label
  Verdict status = Verdict::unknown;
  std::string evidence;
};

struct Certificate {
  CandidateValue value;
  CertVerdict verdict = CertVerdict::candidate_only;
  // slug of the certifying route; for an unknown verdict the first route
  // blocked only by unknowns; empty when every route fails outright
  std::string theorem;
  std::vector<HypothesisEntry> trace;
  std::optional<int> euler_jump;  // two-variable inputs only
};

// fixed evaluation order of the certificate routes
inline constexpr const char* kCertificateRoutes[] = {
    "plane-equality",     "space-isolated-singularities",
    "orthant-avoiding-cones", "orthant-face-cones",
    "dim4-disjoint-edges",    "dim4-low-dimensional"};

// Evaluate the routes in order; the first route whose hypotheses all pass
// certifies, and later routes are evaluated only under full_trace.  A value
// outside the theorem scope is candidate-only (ambiguous scope: unknown)
// without route evaluation.  For two variables the Euler-characteristic jump
// is attached to every in-scope certificate when it can be computed stably.
Certificate certify(const KfData& kf, const CandidateValue& b, const Tolerances& tol,
                    std::uint64_t seed, bool full_trace = false);

// all certificates, in candidate order
std::vector<Certificate> certify_all(const KfData& kf, const Tolerances& tol,
                                     std::uint64_t seed, bool full_trace = false);

// 1 when the orthant meets tau in a set of dimension dim(tau), else 0.
// Throws std::invalid_argument unless tau is pointed.
int e_function(const Cone& tau);

// Number of extreme rays shared, as primitive vectors, by sigma and
// sigma intersected with the orthant.  Throws std::invalid_argument unless
// sigma is pointed.
int common_edges_count(const Cone& sigma);

// The guaranteed containment statement: equality for two variables,
// one-sided inclusion above, and a warning instead when nondegeneracy did
// not pass.
std::string inclusion_statement(int n, const CheckResult& nondegeneracy);

}  // namespace nbif
