#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <newtonbif/certify.hpp>
#include <newtonbif/errors.hpp>

#include <string>
#include <vector>

using namespace nbif;

namespace {

const Tolerances tol{};

SparsePoly case_a() { return SparsePoly::parse("x + x*y + x^2*y^2", 2); }
SparsePoly case_b() { return SparsePoly::parse("x + x^2*y", 2); }
SparsePoly exp3() { return SparsePoly::parse("x1^2 + x1^2*x2^2 + x1^2*x2^2*x3^3", 3); }
// the tiny middle coefficient parks two face critical values within the
// excluded-set proximity band around 0 without letting them merge into it
SparsePoly near_zero_pair() { return SparsePoly::parse("x^3*y^3 - 1/250000*x*y + x", 2); }

bool is_exactly(const CandidateValue& cv, const Rational& q) {
  return cv.value.is_exact() && *cv.value.exact == q;
}

// every trace entry of the cited route must hold for a certified verdict
bool cited_route_passes(const Certificate& c) {
  bool seen = false;
  for (const HypothesisEntry& h : c.trace) {
    if (h.route != c.theorem) continue;
    seen = true;
    if (h.status != Verdict::pass) return false;
  }
  return seen;
}

}  // namespace

TEST_CASE("the candidate set of the first running example") {
  KfData kf = assemble_kf(case_a(), tol, 1);
  CHECK(kf.nondegeneracy.verdict == Verdict::pass);
  CHECK(kf.completeness == NumStatus::exact);
  REQUIRE(kf.values.size() == 2);

  const CandidateValue& low = kf.values[0];
  CHECK(is_exactly(low, Rational(-1) / Rational(4)));
  CHECK(!low.from_affine_critical);
  CHECK(!low.from_value_at_origin);
  REQUIRE(low.from_faces.size() == 1);
  CHECK(low.from_faces[0] == kf.newton.atypical[0].face_index);
  CHECK(low.in_theorem_scope == Verdict::pass);

  const CandidateValue& zero = kf.values[1];
  CHECK(is_exactly(zero, 0));
  CHECK(zero.from_affine_critical);   // the singular point (0,-1) has value 0
  CHECK(zero.from_value_at_origin);   // and f(0) = 0 merges into the same entry
  CHECK(zero.from_faces.empty());
  CHECK(zero.in_theorem_scope == Verdict::fail);
}

TEST_CASE("the candidate set of the second running example") {
  KfData kf = assemble_kf(case_b(), tol, 1);
  CHECK(kf.completeness == NumStatus::exact);
  REQUIRE(kf.values.size() == 1);
  CHECK(is_exactly(kf.values[0], 0));
  CHECK(!kf.values[0].from_affine_critical);  // the polynomial is smooth
  CHECK(kf.values[0].from_value_at_origin);
  CHECK(kf.values[0].from_faces.empty());  // the atypical face part is x^2*y
  CHECK(kf.values[0].in_theorem_scope == Verdict::fail);
}

TEST_CASE("the candidate set of the space example") {
  KfData kf = assemble_kf(exp3(), tol, 1);
  CHECK(kf.newton.atypical.size() == 5);
  CHECK(kf.nondegeneracy.verdict == Verdict::pass);
  // affine critical values beyond two variables are sampled, not eliminated
  CHECK(kf.completeness == NumStatus::heuristic);
  REQUIRE(kf.values.size() == 1);
  const CandidateValue& zero = kf.values[0];
  CHECK(is_exactly(zero, 0));
  CHECK(zero.value.status == NumStatus::exact);  // f(0) absorbs its sampled shadow
  CHECK(zero.from_affine_critical);
  CHECK(zero.from_value_at_origin);
  CHECK(zero.from_faces.empty());  // every face part is a monomial or gradient-free
  CHECK(zero.in_theorem_scope == Verdict::fail);
}

TEST_CASE("certificates for the first running example") {
  KfData kf = assemble_kf(case_a(), tol, 1);
  std::vector<Certificate> certs = certify_all(kf, tol, 1);
  REQUIRE(certs.size() == 2);

  const Certificate& low = certs[0];
  CHECK(low.verdict == CertVerdict::certified_in_Bf);
  CHECK(low.theorem == kCertificateRoutes[0]);
  CHECK(cited_route_passes(low));
  REQUIRE(low.euler_jump.has_value());
  CHECK(*low.euler_jump == 1);

  const Certificate& zero = certs[1];
  CHECK(zero.verdict == CertVerdict::candidate_only);
  CHECK(zero.theorem.empty());
  REQUIRE(zero.trace.size() == 1);
  CHECK(zero.trace[0].route == "scope");
  CHECK(zero.trace[0].status == Verdict::fail);
  CHECK(zero.trace[0].evidence.find("f(Sing f)") != std::string::npos);
  REQUIRE(zero.euler_jump.has_value());  // the jump is reported regardless of scope
  CHECK(*zero.euler_jump == 1);
}

TEST_CASE("a full trace keeps evaluating routes after the first success") {
  KfData kf = assemble_kf(case_a(), tol, 1);
  Certificate c = certify(kf, kf.values[0], tol, 1, true);
  CHECK(c.verdict == CertVerdict::certified_in_Bf);
  CHECK(c.theorem == kCertificateRoutes[0]);  // the first passing route is cited

  auto route_fold = [&](const char* route) {
    Verdict v = Verdict::pass;
    bool seen = false;
    for (const HypothesisEntry& h : c.trace) {
      if (h.route != route) continue;
      seen = true;
      if (h.status == Verdict::fail) v = Verdict::fail;
      if (h.status == Verdict::unknown && v == Verdict::pass) v = Verdict::unknown;
    }
    REQUIRE(seen);
    return v;
  };
  CHECK(route_fold(kCertificateRoutes[0]) == Verdict::pass);
  CHECK(route_fold(kCertificateRoutes[1]) == Verdict::fail);  // needs three variables
  CHECK(route_fold(kCertificateRoutes[2]) == Verdict::pass);  // sigma = ray (1,-1)
  CHECK(route_fold(kCertificateRoutes[3]) == Verdict::pass);
  CHECK(route_fold(kCertificateRoutes[4]) == Verdict::fail);
  CHECK(route_fold(kCertificateRoutes[5]) == Verdict::fail);

  // without the flag the trace stops at the certifying route
  Certificate first = certify(kf, kf.values[0], tol, 1);
  for (const HypothesisEntry& h : first.trace) CHECK(h.route == kCertificateRoutes[0]);
}

TEST_CASE("certificates for the second running example") {
  KfData kf = assemble_kf(case_b(), tol, 1);
  std::vector<Certificate> certs = certify_all(kf, tol, 1);
  REQUIRE(certs.size() == 1);
  CHECK(certs[0].verdict == CertVerdict::candidate_only);
  CHECK(certs[0].theorem.empty());
  REQUIRE(certs[0].euler_jump.has_value());
  CHECK(*certs[0].euler_jump == 1);
}

TEST_CASE("the space example certifies a hand-built member value") {
  KfData kf = assemble_kf(exp3(), tol, 1);
  CandidateValue b;
  b.value = Scalar::make_exact(7);
  b.from_faces = {kf.newton.atypical[0].face_index};
  b.in_theorem_scope = Verdict::pass;

  Certificate c = certify(kf, b, tol, 1);
  CHECK(c.verdict == CertVerdict::certified_in_Bf);
  CHECK(c.theorem == kCertificateRoutes[1]);
  CHECK(cited_route_passes(c));
  CHECK(!c.euler_jump.has_value());  // only two-variable inputs carry the jump

  // three variables rule out the plane route on the way
  bool plane_failed = false;
  for (const HypothesisEntry& h : c.trace)
    if (h.route == kCertificateRoutes[0] && h.status == Verdict::fail) plane_failed = true;
  CHECK(plane_failed);
}

TEST_CASE("values too close to the excluded set are left undecided") {
  KfData kf = assemble_kf(near_zero_pair(), tol, 1);
  CHECK(kf.completeness == NumStatus::exact);
  REQUIRE(kf.values.size() == 3);

  // two numeric face values at a distance of about 3.1e-9 from the excluded 0:
  // past the merge tolerance, inside the proximity band
  CHECK(kf.values[0].value.status == NumStatus::numeric);
  CHECK(kf.values[0].in_theorem_scope == Verdict::unknown);
  CHECK(kf.values[0].from_faces.size() == 1);
  CHECK(is_exactly(kf.values[1], 0));
  CHECK(kf.values[1].in_theorem_scope == Verdict::fail);
  CHECK(kf.values[2].in_theorem_scope == Verdict::unknown);
  CHECK(doctest::Approx(kf.values[2].value.approx.real()).epsilon(1e-3) == 3.0792e-9);

  std::vector<Certificate> certs = certify_all(kf, tol, 1);
  CHECK(certs[0].verdict == CertVerdict::unknown);
  REQUIRE(certs[0].trace.size() == 1);
  CHECK(certs[0].trace[0].route == "scope");
  CHECK(certs[0].trace[0].status == Verdict::unknown);
  CHECK(certs[1].verdict == CertVerdict::candidate_only);
  CHECK(certs[2].verdict == CertVerdict::unknown);
}

TEST_CASE("skipping the nondegeneracy check degrades certificates") {
  KfData kf = assemble_kf(case_a(), tol, 1, false);
  CHECK(kf.nondegeneracy.verdict == Verdict::unknown);
  CHECK(kf.nondegeneracy.status == NumStatus::heuristic);
  CHECK(kf.nondegeneracy.detail.find("skipped") != std::string::npos);

  Certificate c = certify(kf, kf.values[0], tol, 1);
  CHECK(c.verdict == CertVerdict::unknown);
  CHECK(c.theorem == kCertificateRoutes[0]);  // the first blocked route is named
  bool nondeg_unknown = false;
  for (const HypothesisEntry& h : c.trace)
    if (h.route == kCertificateRoutes[0] && h.status == Verdict::unknown)
      nondeg_unknown = true;
  CHECK(nondeg_unknown);
  REQUIRE(c.euler_jump.has_value());  // the independent check still runs
  CHECK(*c.euler_jump == 1);
}

TEST_CASE("degenerate Newton polyhedra are rejected") {
  CHECK_THROWS_AS(assemble_kf(SparsePoly::parse("x + x^2", 2), tol, 1), DegenerateInputError);
}

TEST_CASE("the e function on pointed cones") {
  CHECK(e_function(cone_from_rays(2, {})) == 1);  // the zero cone lies in the orthant
  CHECK(e_function(cone_from_rays(2, {zvec_of({1, 0})})) == 1);
  CHECK(e_function(cone_from_rays(2, {zvec_of({1, -1})})) == 0);
  CHECK(e_function(positive_orthant(3)) == 1);
  CHECK(e_function(cone_from_rays(2, {zvec_of({1, 0}), zvec_of({1, -1})})) == 0);

  NewtonData d = analyze_newton(exp3());
  for (const FaceClassification& fc : d.atypical)
    CHECK(e_function(fc.sigma) == (fc.sigma_cap_orthant.dim == fc.sigma.dim ? 1 : 0));

  CHECK_THROWS_AS(e_function(cone_from_rays(2, {zvec_of({1, 0}), zvec_of({-1, 0})})),
                  std::invalid_argument);
}

TEST_CASE("counting edges shared with the orthant cut") {
  CHECK(common_edges_count(cone_from_rays(2, {zvec_of({1, -1})})) == 0);
  CHECK(common_edges_count(cone_from_rays(2, {zvec_of({1, 0}), zvec_of({1, -1})})) == 1);
  CHECK(common_edges_count(positive_orthant(2)) == 2);  // contained cones share all rays

  // the edge [0,(2,0,0)] of the space example: rays (0,0,1) and (0,3,-2)
  NewtonData d = analyze_newton(exp3());
  for (const FaceClassification& fc : d.atypical)
    CHECK(common_edges_count(fc.sigma) == fc.common_edges);
  CHECK(common_edges_count(cone_from_rays(3, {zvec_of({0, 0, 1}), zvec_of({0, 3, -2})})) == 1);

  CHECK_THROWS_AS(common_edges_count(cone_from_rays(2, {zvec_of({0, 1}), zvec_of({0, -1})})),
                  std::invalid_argument);
}

TEST_CASE("inclusion statements follow the nondegeneracy verdict") {
  CheckResult pass{Verdict::pass, NumStatus::exact, "", std::nullopt};
  CheckResult fail{Verdict::fail, NumStatus::exact, "", std::nullopt};
  CheckResult unk{Verdict::unknown, NumStatus::numeric, "", std::nullopt};
  CHECK(inclusion_statement(2, pass) == "B_f = K_f");
  CHECK(inclusion_statement(3, pass).find("contained in K_f") != std::string::npos);
  CHECK(inclusion_statement(3, fail).find("no containment") != std::string::npos);
  CHECK(inclusion_statement(2, unk).find("conditional") != std::string::npos);
}

TEST_CASE("verdict names") {
  CHECK(std::string(to_cstr(CertVerdict::certified_in_Bf)) == "certified-in-B_f");
  CHECK(std::string(to_cstr(CertVerdict::candidate_only)) == "candidate-only");
  CHECK(std::string(to_cstr(CertVerdict::unknown)) == "unknown");
}

TEST_CASE("certified verdicts always rest on fully passing routes") {
  const std::vector<std::pair<std::string, int>> inputs = {
      {"x + x*y + x^2*y^2", 2}, {"x + x^2*y", 2},
      {"x1^2 + x1^2*x2^2 + x1^2*x2^2*x3^3", 3}, {"x^3*y^3 - 1/250000*x*y + x", 2},
      {"x^2 + y^2", 2},         {"x*y + x^3", 2},
      {"x + y + x^2*y^2", 2},   {"x1*x2*x3 + x1^2 + x2^2", 3},
  };
  for (const auto& [src, n] : inputs) {
    CAPTURE(src);
    KfData kf = assemble_kf(SparsePoly::parse(src, n), tol, 7);
    for (const Certificate& c : certify_all(kf, tol, 7, true)) {
      if (c.verdict == CertVerdict::certified_in_Bf) {
        CHECK(!c.theorem.empty());
        CHECK(cited_route_passes(c));
      } else if (c.verdict == CertVerdict::unknown && !c.theorem.empty()) {
        // the named route must be blocked, not failed
        for (const HypothesisEntry& h : c.trace)
          if (h.route == c.theorem) CHECK(h.status != Verdict::fail);
      } else if (c.verdict == CertVerdict::candidate_only &&
                 c.value.in_theorem_scope == Verdict::pass) {
        // every route was evaluated and failed outright
        for (const char* route : kCertificateRoutes) {
          bool failed = false;
          for (const HypothesisEntry& h : c.trace)
            if (h.route == route && h.status == Verdict::fail) failed = true;
          CHECK(failed);
        }
      }
    }
  }
}
