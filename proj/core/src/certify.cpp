#include <newtonbif/certify.hpp>

#include <newtonbif/errors.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nbif {

namespace {

int scalar_rank(const Scalar& s) {
  switch (s.status) {
    case NumStatus::exact: return 0;
    case NumStatus::numeric: return 1;
    default: return 2;
  }
}

bool value_less(const Scalar& a, const Scalar& b) {
  if (a.approx.real() != b.approx.real()) return a.approx.real() < b.approx.real();
  return a.approx.imag() < b.approx.imag();
}

bool same_value(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) return *a.exact == *b.exact;
  return approx_equal(a.approx, b.approx, tol);
}

std::string origin_summary(const CandidateValue& v) {
  std::string s;
  if (v.from_affine_critical) s += "affine critical value";
  if (v.from_value_at_origin) s += (s.empty() ? "" : ", ") + std::string("value at the origin");
  if (!v.from_faces.empty()) {
    s += (s.empty() ? "" : ", ") + std::string("faces {");
    for (std::size_t i = 0; i < v.from_faces.size(); ++i)
      s += (i ? "," : "") + std::to_string(v.from_faces[i]);
    s += "}";
  }
  return s.empty() ? "none" : s;
}

// one certificate route: ordered hypothesis checks folded into a verdict,
// where a fail outweighs any unknown
struct RouteEval {
  std::vector<HypothesisEntry> entries;
  Verdict verdict = Verdict::pass;

  void add(const char* route, std::string name, Verdict st, std::string evidence) {
    entries.push_back({route, std::move(name), st, std::move(evidence)});
    if (st == Verdict::fail) verdict = Verdict::fail;
    if (st == Verdict::unknown && verdict == Verdict::pass) verdict = Verdict::unknown;
  }
};

}  // namespace

const char* to_cstr(CertVerdict v) {
  switch (v) {
    case CertVerdict::certified_in_Bf: return "certified-in-B_f";
    case CertVerdict::candidate_only: return "candidate-only";
    default: return "unknown";
  }
}

KfData assemble_kf(const SparsePoly& f, const Tolerances& tol, std::uint64_t seed,
                   bool check_nondegeneracy,
                   const std::optional<std::vector<Rational>>& assume_affine) {
  NewtonData nd = analyze_newton(f);
  if (!nd.full_dimensional)
    throw DegenerateInputError("the Newton polyhedron at infinity is not full dimensional");
  KfData out{std::move(nd), CheckResult{}, {}, NumStatus::exact};
  out.nondegeneracy =
      check_nondegeneracy
          ? nondegenerate_at_infinity(out.newton, tol, seed)
          : CheckResult{Verdict::unknown, NumStatus::heuristic,
                        "nondegeneracy check skipped on request", std::nullopt};

  struct Item {
    Scalar v;
    bool aff = false, orig = false;
    std::vector<int> faces;
  };
  std::vector<Item> items;

  if (assume_affine) {
    for (const Rational& q : *assume_affine)
      items.push_back({Scalar::make_exact(q), true, false, {}});
  } else {
    const AffineCriticalValues aff = affine_critical_values(f, tol, seed);
    out.completeness = aff.completeness;
    for (const Scalar& s : aff.values) items.push_back({s, true, false, {}});
  }

  Rational f0(0);
  const auto cterm = f.terms().find(Exponent(f.ambient_dim(), 0));
  if (cterm != f.terms().end()) f0 = cterm->second;
  items.push_back({Scalar::make_exact(f0), false, true, {}});

  for (const FaceClassification& fc : out.newton.atypical) {
    const FaceRestriction r = restrict_to_face_torus(f, out.newton.newton, fc.face_index);
    const TorusCriticalValues tv = critical_values_torus(r, tol, seed);
    out.completeness = combine(out.completeness, tv.completeness);
    for (const Scalar& s : tv.values) items.push_back({s, false, false, {fc.face_index}});
  }

  // strongest representative first, then cluster and union the origins
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (scalar_rank(a.v) != scalar_rank(b.v)) return scalar_rank(a.v) < scalar_rank(b.v);
    return value_less(a.v, b.v);
  });
  for (const Item& it : items) {
    CandidateValue* home = nullptr;
    for (CandidateValue& cv : out.values)
      if (same_value(cv.value, it.v, tol.cluster)) {
        home = &cv;
        break;
      }
    if (!home) {
      out.values.push_back({it.v, false, false, {}, Verdict::pass});
      home = &out.values.back();
    }
    home->from_affine_critical |= it.aff;
    home->from_value_at_origin |= it.orig;
    for (int fi : it.faces)
      if (std::find(home->from_faces.begin(), home->from_faces.end(), fi) ==
          home->from_faces.end())
        home->from_faces.push_back(fi);
  }
  std::sort(out.values.begin(), out.values.end(),
            [](const CandidateValue& a, const CandidateValue& b) {
              return value_less(a.value, b.value);
            });

  // scope: among the excluded values, near one without merging, or clear
  for (CandidateValue& cv : out.values) {
    std::sort(cv.from_faces.begin(), cv.from_faces.end());
    if (cv.from_affine_critical || cv.from_value_at_origin) {
      cv.in_theorem_scope = Verdict::fail;
      continue;
    }
    cv.in_theorem_scope = Verdict::pass;
    for (const CandidateValue& other : out.values) {
      if (!other.from_affine_critical && !other.from_value_at_origin) continue;
      if (same_value(cv.value, other.value, 10 * tol.cluster)) {
        cv.in_theorem_scope = Verdict::unknown;
        break;
      }
    }
  }
  return out;
}

int e_function(const Cone& tau) {
  if (!tau.pointed()) throw std::invalid_argument("e is defined for pointed cones");
  const Cone cap = cone_intersect(tau, positive_orthant(tau.ambient_dim));
  return cap.dim == tau.dim ? 1 : 0;
}

int common_edges_count(const Cone& sigma) {
  if (!sigma.pointed()) throw std::invalid_argument("shared edges need a pointed cone");
  const Cone cap = cone_intersect(sigma, positive_orthant(sigma.ambient_dim));
  int count = 0;
  for (const ZVec& r : sigma.rays)
    if (std::binary_search(cap.rays.begin(), cap.rays.end(), r)) ++count;
  return count;
}

std::string inclusion_statement(int n, const CheckResult& nondegeneracy) {
  if (nondegeneracy.verdict == Verdict::fail)
    return "degenerate at infinity: no containment between B_f and K_f is asserted";
  if (nondegeneracy.verdict == Verdict::unknown)
    return "nondegeneracy unresolved: any containment of B_f in K_f is conditional on it";
  return n == 2 ? "B_f = K_f"
                : "B_f is contained in K_f; the certified subset is listed below";
}

Certificate certify(const KfData& kf, const CandidateValue& b, const Tolerances& tol,
                    std::uint64_t seed, bool full_trace) {
  Certificate cert;
  cert.value = b;

  const NewtonData& nd = kf.newton;
  const int n = nd.f.ambient_dim();

  // an independent check, attached to every two-variable certificate
  const auto attach_jump = [&]() {
    if (n != 2) return;
    std::vector<Scalar> kvals;
    for (const CandidateValue& cv : kf.values) kvals.push_back(cv.value);
    try {
      cert.euler_jump = euler_jump(nd.f, b.value, kvals, tol);
    } catch (const PrecisionError&) {
      // leave the jump unset rather than report an unstable number
    }
  };

  if (b.in_theorem_scope == Verdict::fail) {
    cert.verdict = CertVerdict::candidate_only;
    cert.trace.push_back({"scope", "value outside the excluded set", Verdict::fail,
                          "theorem scope excludes f(Sing f) and f(0)"});
    attach_jump();
    return cert;
  }
  if (b.in_theorem_scope == Verdict::unknown) {
    cert.verdict = CertVerdict::unknown;
    cert.trace.push_back({"scope", "value outside the excluded set", Verdict::unknown,
                          "the value sits too close to the excluded set to decide"});
    attach_jump();
    return cert;
  }

  // faces whose torus critical values contain b
  std::vector<const FaceClassification*> rel;
  for (const FaceClassification& fc : nd.atypical)
    if (std::binary_search(b.from_faces.begin(), b.from_faces.end(), fc.face_index))
      rel.push_back(&fc);

  const auto label_of = [&](const FaceClassification& fc) {
    return face_label(nd.newton, nd.face_of(fc));
  };

  // the isolated-singularity check is shared by every route beyond the first
  std::optional<CheckResult> isai_cache;
  const auto isai = [&]() -> const CheckResult& {
    if (!isai_cache) isai_cache = isolated_singularities_over(nd, b.value, tol, seed);
    return *isai_cache;
  };

  const auto add_candidate_membership = [&](RouteEval& r, const char* route) {
    const bool member = b.from_affine_critical || b.from_value_at_origin || !b.from_faces.empty();
    r.add(route, "value drawn from the candidate set",
          member ? Verdict::pass : Verdict::fail, "origins: " + origin_summary(b));
  };
  const auto add_vars = [&](RouteEval& r, const char* route, int want, const char* name) {
    r.add(route, name, n == want ? Verdict::pass : Verdict::fail,
          "n = " + std::to_string(n));
  };
  const auto add_dim = [&](RouteEval& r, const char* route) {
    r.add(route, "full-dimensional Newton polyhedron",
          nd.full_dimensional ? Verdict::pass : Verdict::fail,
          "dim = " + std::to_string(nd.full_dimensional ? n : nd.newton.dim()));
  };
  const auto add_nondeg = [&](RouteEval& r, const char* route) {
    r.add(route, "nondegenerate at infinity", kf.nondegeneracy.verdict,
          kf.nondegeneracy.detail);
  };
  const auto add_isai = [&](RouteEval& r, const char* route) {
    const CheckResult& c = isai();
    r.add(route, "isolated singular points at infinity over the value", c.verdict, c.detail);
  };
  const auto add_rel_simple = [&](RouteEval& r, const char* route) {
    for (const FaceClassification* fc : rel)
      if (fc->relatively_simple) {
        r.add(route, "a contributing face is relatively simple", Verdict::pass,
              "face " + label_of(*fc));
        return;
      }
    r.add(route, "a contributing face is relatively simple", Verdict::fail,
          "none of the " + std::to_string(rel.size()) + " contributing faces qualifies");
  };

  const auto route1 = [&]() {  // plane-equality
    RouteEval r;
    const char* id = kCertificateRoutes[0];
    add_vars(r, id, 2, "two variables");
    add_dim(r, id);
    add_nondeg(r, id);
    add_candidate_membership(r, id);
    return r;
  };
  const auto route2 = [&]() {  // space-isolated-singularities
    RouteEval r;
    const char* id = kCertificateRoutes[1];
    add_vars(r, id, 3, "three variables");
    add_dim(r, id);
    add_nondeg(r, id);
    add_candidate_membership(r, id);
    add_isai(r, id);
    return r;
  };
  const auto route3 = [&]() {  // orthant-avoiding-cones
    RouteEval r;
    const char* id = kCertificateRoutes[2];
    add_dim(r, id);
    add_nondeg(r, id);
    add_candidate_membership(r, id);
    add_isai(r, id);
    std::vector<std::string> bad;
    for (const FaceClassification* fc : rel) {
      const bool zero_cap = fc->sigma_cap_orthant.is_zero();
      if (zero_cap != fc->relint_in_open_orthant)
        throw std::logic_error("relative-interior and normal-cone tests disagree on a face");
      if (!zero_cap) bad.push_back(label_of(*fc));
    }
    if (bad.empty())
      r.add(id, "contributing normal cones meet the orthant only at the origin", Verdict::pass,
            "all " + std::to_string(rel.size()) +
                " contributing faces have their relative interior in the open orthant");
    else
      r.add(id, "contributing normal cones meet the orthant only at the origin", Verdict::fail,
            "violated by face " + bad.front() +
                (bad.size() > 1 ? " and " + std::to_string(bad.size() - 1) + " more" : ""));
    add_rel_simple(r, id);
    return r;
  };
  const auto route4 = [&]() {  // orthant-face-cones
    RouteEval r;
    const char* id = kCertificateRoutes[3];
    add_dim(r, id);
    add_nondeg(r, id);
    add_candidate_membership(r, id);
    add_isai(r, id);
    std::vector<std::string> bad;
    for (const FaceClassification* fc : rel)
      if (!fc->orthant_face.has_value() || fc->sigma_cap_orthant.dim > 2)
        bad.push_back(label_of(*fc));
    if (bad.empty())
      r.add(id, "orthant cuts of contributing cones are orthant faces of dimension at most 2",
            Verdict::pass, "all " + std::to_string(rel.size()) + " contributing faces comply");
    else
      r.add(id, "orthant cuts of contributing cones are orthant faces of dimension at most 2",
            Verdict::fail, "violated by face " + bad.front());
    bool found = false;
    std::string witness;
    for (const FaceClassification* fc : rel)
      if (fc->relatively_simple &&
          (fc->sigma_cap_orthant.dim != 2 || fc->common_edges <= 1)) {
        found = true;
        witness = label_of(*fc);
        break;
      }
    r.add(id, "a relatively simple contributing face shares at most one edge with its orthant cut",
          found ? Verdict::pass : Verdict::fail,
          found ? "face " + witness
                : "none of the " + std::to_string(rel.size()) + " contributing faces qualifies");
    return r;
  };
  const auto route5 = [&]() {  // dim4-disjoint-edges
    RouteEval r;
    const char* id = kCertificateRoutes[4];
    add_vars(r, id, 4, "four variables");
    add_dim(r, id);
    add_nondeg(r, id);
    add_candidate_membership(r, id);
    add_isai(r, id);
    std::vector<std::string> bad;
    for (const FaceClassification* fc : rel)
      if (fc->sigma.dim == 3 && fc->sigma_cap_orthant.dim == 3 && fc->common_edges != 0)
        bad.push_back(label_of(*fc));
    if (bad.empty())
      r.add(id, "equal-dimension orthant cuts share no edge with their cone", Verdict::pass,
            "no contributing face violates the edge condition");
    else
      r.add(id, "equal-dimension orthant cuts share no edge with their cone", Verdict::fail,
            "violated by face " + bad.front());
    bool found = false;
    std::string witness;
    for (const FaceClassification* fc : rel)
      if (!(fc->sigma.dim == 3 && fc->sigma_cap_orthant.dim == 2) || fc->common_edges <= 1) {
        found = true;
        witness = label_of(*fc);
        break;
      }
    r.add(id, "a contributing face limits the shared edges",
          found ? Verdict::pass : Verdict::fail,
          found ? "face " + witness
                : "every contributing face has a two-dimensional orthant cut with shared edges");
    return r;
  };
  const auto route6 = [&]() {  // dim4-low-dimensional
    RouteEval r;
    const char* id = kCertificateRoutes[5];
    add_vars(r, id, 4, "four variables");
    add_dim(r, id);
    add_nondeg(r, id);
    add_candidate_membership(r, id);
    add_isai(r, id);
    std::vector<std::string> bad;
    for (const FaceClassification* fc : rel)
      if (fc->sigma_cap_orthant.dim > 1 && fc->sigma.dim > 2) bad.push_back(label_of(*fc));
    if (bad.empty())
      r.add(id, "contributing cones are low dimensional against the orthant", Verdict::pass,
            "all " + std::to_string(rel.size()) +
                " contributing faces have a small cone or a small orthant cut");
    else
      r.add(id, "contributing cones are low dimensional against the orthant", Verdict::fail,
            "violated by face " + bad.front());
    return r;
  };

  bool certified = false;
  std::string first_unknown;
  for (int i = 0; i < 6; ++i) {
    RouteEval ev;
    switch (i) {
      case 0: ev = route1(); break;
      case 1: ev = route2(); break;
      case 2: ev = route3(); break;
      case 3: ev = route4(); break;
      case 4: ev = route5(); break;
      default: ev = route6(); break;
    }
    for (HypothesisEntry& e : ev.entries) cert.trace.push_back(std::move(e));
    if (ev.verdict == Verdict::pass && !certified) {
      certified = true;
      cert.verdict = CertVerdict::certified_in_Bf;
      cert.theorem = kCertificateRoutes[i];
      if (!full_trace) break;
    }
    if (ev.verdict == Verdict::unknown && first_unknown.empty())
      first_unknown = kCertificateRoutes[i];
  }
  if (!certified) {
    if (!first_unknown.empty()) {
      cert.verdict = CertVerdict::unknown;
      cert.theorem = first_unknown;
    } else {
      cert.verdict = CertVerdict::candidate_only;
      cert.theorem.clear();
    }
  }

  attach_jump();
  return cert;
}

std::vector<Certificate> certify_all(const KfData& kf, const Tolerances& tol,
                                     std::uint64_t seed, bool full_trace) {
  std::vector<Certificate> out;
  for (const CandidateValue& cv : kf.values) out.push_back(certify(kf, cv, tol, seed, full_trace));
  return out;
}

}  // namespace nbif
