#include <newtonbif/report.hpp>

#include <newtonbif/errors.hpp>

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace nbif {

namespace {

using ordered_json = nlohmann::ordered_json;

// shortest round-trip form, e.g. "1e-09"; used where a float is config echo
std::string double_string(double x) { return ordered_json(x).dump(); }

std::int64_t to_i64(const Integer& x) { return x.convert_to<std::int64_t>(); }

ordered_json zvec_json(const ZVec& v) {
  ordered_json a = ordered_json::array();
  for (const Integer& x : v) a.push_back(to_i64(x));
  return a;
}

ordered_json exponent_json(const Exponent& e) {
  ordered_json a = ordered_json::array();
  for (std::int64_t x : e) a.push_back(x);
  return a;
}

// every floating-point number in a report goes through here
ordered_json scalar_json(const Scalar& s) {
  ordered_json j;
  j["status"] = to_cstr(s.status);
  if (s.is_exact()) j["exact"] = rational_string(*s.exact);
  j["re"] = s.approx.real();
  j["im"] = s.approx.imag();
  return j;
}

ordered_json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  ordered_json j;
  j["description"] = w->description;
  j["status"] = to_cstr(w->status);
  return j;
}

ordered_json check_json(const CheckResult& c) {
  ordered_json j;
  j["verdict"] = to_cstr(c.verdict);
  j["status"] = to_cstr(c.status);
  j["detail"] = c.detail;
  j["witness"] = witness_json(c.witness);
  return j;
}

ordered_json config_json(const RunConfig& config) {
  ordered_json j;
  j["input"] = config.input;
  j["ambient_dim"] = config.ambient_dim;
  j["seed"] = config.seed;
  ordered_json t;
  t["cluster"] = double_string(config.tol.cluster);
  t["residual"] = double_string(config.tol.residual);
  t["recognize"] = double_string(config.tol.recognize);
  t["root_count"] = double_string(config.tol.root_count);
  t["max_denominator"] = config.tol.max_den;
  j["tolerances"] = t;
  j["full_trace"] = config.full_trace;
  j["skip_nondegeneracy_check"] = config.skip_nondegeneracy;
  if (config.assume_critical_values) {
    ordered_json a = ordered_json::array();
    for (const Rational& q : *config.assume_critical_values) a.push_back(rational_string(q));
    j["assume_critical_values"] = a;
  } else {
    j["assume_critical_values"] = nullptr;
  }
  return j;
}

ordered_json envelope(const RunConfig& config) {
  ordered_json j;
  j["schema_version"] = 1;
  j["config"] = config_json(config);
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json atypical_json(const NewtonData& nd, const FaceClassification& fc) {
  ordered_json j;
  j["face"] = face_label(nd.newton, nd.face_of(fc));
  j["face_index"] = fc.face_index;
  j["dim"] = nd.face_of(fc).dim;
  ordered_json rays = ordered_json::array();
  for (const ZVec& r : fc.sigma.rays) rays.push_back(zvec_json(r));
  j["sigma"] = ordered_json{{"dim", fc.sigma.dim}, {"rays", std::move(rays)}};
  j["sigma_cap_orthant_dim"] = fc.sigma_cap_orthant.dim;
  if (fc.orthant_face) {
    ordered_json axes = ordered_json::array();
    for (int a : *fc.orthant_face) axes.push_back(a);
    j["orthant_face_axes"] = axes;
  } else {
    j["orthant_face_axes"] = nullptr;
  }
  j["common_edges"] = fc.common_edges;
  j["relatively_simple"] = fc.relatively_simple;
  j["relint_in_open_orthant"] = fc.relint_in_open_orthant;
  j["bad_partner"] = fc.bad_partner && nd.newton_positive
                         ? ordered_json(face_label(*nd.newton_positive, *fc.bad_partner))
                         : ordered_json(nullptr);
  return j;
}

ordered_json newton_json(const NewtonData& nd) {
  ordered_json j;
  ordered_json verts = ordered_json::array();
  for (const Exponent& v : nd.newton.vertices()) verts.push_back(exponent_json(v));
  j["vertices"] = verts;
  j["dim"] = nd.newton.dim();
  j["full_dimensional"] = nd.full_dimensional;
  j["convenient"] = nd.convenient;
  j["normalized_volume"] = to_i64(nd.newton.normalized_volume());
  ordered_json at = ordered_json::array();
  for (const FaceClassification& fc : nd.atypical) at.push_back(atypical_json(nd, fc));
  j["atypical_faces"] = at;
  return j;
}

ordered_json origins_json(const NewtonData& nd, const CandidateValue& cv) {
  ordered_json j;
  j["affine_critical"] = cv.from_affine_critical;
  j["value_at_origin"] = cv.from_value_at_origin;
  ordered_json faces = ordered_json::array();
  for (int fi : cv.from_faces)
    faces.push_back(ordered_json{{"face_index", fi},
                                 {"face", face_label(nd.newton, nd.newton.faces()[fi])}});
  j["faces"] = faces;
  return j;
}

ordered_json kf_json(const KfData& kf) {
  ordered_json j;
  j["completeness"] = to_cstr(kf.completeness);
  ordered_json vals = ordered_json::array();
  for (const CandidateValue& cv : kf.values) {
    ordered_json v;
    v["value"] = scalar_json(cv.value);
    v["origins"] = origins_json(kf.newton, cv);
    v["in_theorem_scope"] = to_cstr(cv.in_theorem_scope);
    vals.push_back(std::move(v));
  }
  j["values"] = vals;
  return j;
}

ordered_json certificate_json(const Certificate& c) {
  ordered_json j;
  j["value"] = scalar_json(c.value.value);
  j["verdict"] = to_cstr(c.verdict);
  j["route"] = c.theorem.empty() ? ordered_json(nullptr) : ordered_json(c.theorem);
  j["euler_jump"] = c.euler_jump ? ordered_json(*c.euler_jump) : ordered_json(nullptr);
  ordered_json tr = ordered_json::array();
  for (const HypothesisEntry& h : c.trace)
    tr.push_back(ordered_json{{"route", h.route},
                              {"hypothesis", h.name},
                              {"status", to_cstr(h.status)},
                              {"evidence", h.evidence}});
  j["trace"] = tr;
  return j;
}

ordered_json fiber_json(const FiberTopology& t) {
  ordered_json j;
  j["value"] = scalar_json(t.value);
  j["chi"] = t.chi;
  j["status"] = to_cstr(t.status);
  j["generic_root_count"] = t.generic_root_count;
  ordered_json vls = ordered_json::array();
  for (const Scalar& v : t.vertical_lines) vls.push_back(scalar_json(v));
  j["vertical_lines"] = vls;
  ordered_json ex = ordered_json::array();
  for (const auto& [pos, count] : t.exceptional_points)
    ex.push_back(ordered_json{{"position", scalar_json(pos)}, {"fiber_roots", count}});
  j["exceptional_points"] = ex;
  return j;
}

// ---- text rendering ----------------------------------------------------

std::string exponent_text(const Exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

std::string rays_text(const std::vector<ZVec>& rays) {
  std::string s = "{";
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (i) s += ",";
    s += "(";
    for (std::size_t k = 0; k < rays[i].size(); ++k)
      s += (k ? "," : "") + rays[i][k].str();
    s += ")";
  }
  return s + "}";
}

std::string config_text(const RunConfig& config) {
  std::ostringstream os;
  os << "input: " << config.input << "\n";
  os << "variables: " << config.ambient_dim << "   seed: " << config.seed << "\n";
  os << "tolerances: cluster " << double_string(config.tol.cluster) << ", residual "
     << double_string(config.tol.residual) << ", recognize " << double_string(config.tol.recognize)
     << ", root-count " << double_string(config.tol.root_count) << ", max denominator "
     << config.tol.max_den << "\n";
  if (config.assume_critical_values) {
    os << "assumed critical values:";
    for (const Rational& q : *config.assume_critical_values) os << " " << rational_string(q);
    os << "\n";
  }
  return os.str();
}

void newton_text(std::ostringstream& os, const NewtonData& nd) {
  os << "newton polyhedron at infinity: dimension " << nd.newton.dim()
     << (nd.full_dimensional ? " (full)" : " (degenerate)")
     << (nd.convenient ? ", convenient" : ", not convenient") << "\n  vertices:";
  for (const Exponent& v : nd.newton.vertices()) os << " " << exponent_text(v);
  os << "\n  normalized volume: " << nd.newton.normalized_volume().str() << "\n";
  os << "atypical faces: " << nd.atypical.size() << "\n";
  for (const FaceClassification& fc : nd.atypical) {
    os << "  " << face_label(nd.newton, nd.face_of(fc)) << ": sigma rays "
       << rays_text(fc.sigma.rays) << ", cap dimension " << fc.sigma_cap_orthant.dim
       << ", shared edges " << fc.common_edges
       << (fc.relatively_simple ? ", relatively simple" : "");
    if (fc.bad_partner && nd.newton_positive)
      os << ", bad partner " << face_label(*nd.newton_positive, *fc.bad_partner);
    os << "\n";
  }
}

void check_text(std::ostringstream& os, const CheckResult& c) {
  os << "nondegenerate at infinity: " << to_cstr(c.verdict) << " [" << to_cstr(c.status) << "] "
     << c.detail << "\n";
  if (c.witness) os << "  witness [" << to_cstr(c.witness->status) << "]: "
                    << c.witness->description << "\n";
}

std::string origins_text(const NewtonData& nd, const CandidateValue& cv) {
  std::string s;
  if (cv.from_affine_critical) s += "affine critical values";
  if (cv.from_value_at_origin) s += (s.empty() ? "" : ", ") + std::string("f(0)");
  for (int fi : cv.from_faces)
    s += (s.empty() ? "face " : ", face ") + face_label(nd.newton, nd.newton.faces()[fi]);
  return s.empty() ? "none" : s;
}

void kf_text(std::ostringstream& os, const KfData& kf) {
  os << "candidate values (list " << to_cstr(kf.completeness) << "):\n";
  for (const CandidateValue& cv : kf.values)
    os << "  " << cv.value.to_string() << " [" << to_cstr(cv.value.status) << "] from "
       << origins_text(kf.newton, cv) << "; scope " << to_cstr(cv.in_theorem_scope) << "\n";
}

void certificate_text(std::ostringstream& os, const Certificate& c) {
  os << "  " << c.value.value.to_string() << ": " << to_cstr(c.verdict);
  if (!c.theorem.empty())
    os << (c.verdict == CertVerdict::certified_in_Bf ? " via " : " blocked at ") << c.theorem;
  if (c.euler_jump) os << "; euler jump " << *c.euler_jump;
  os << "\n";
  for (const HypothesisEntry& h : c.trace)
    os << "    " << h.route << " | " << h.name << ": " << to_cstr(h.status) << " ("
       << h.evidence << ")\n";
}

void fiber_text(std::ostringstream& os, const FiberTopology& t) {
  os << "chi(" << t.value.to_string() << ") = " << t.chi << " [" << to_cstr(t.status) << "]\n";
  os << "  generic roots per fiber of the coordinate projection: " << t.generic_root_count
     << "\n";
  os << "  vertical lines:";
  if (t.vertical_lines.empty()) os << " none";
  for (const Scalar& v : t.vertical_lines) os << " " << v.to_string();
  os << "\n  exceptional positions:";
  if (t.exceptional_points.empty()) os << " none";
  for (const auto& [pos, count] : t.exceptional_points)
    os << " (" << pos.to_string() << " -> " << count << " roots)";
  os << "\n";
}

}  // namespace

int infer_ambient_dim(const std::string& text) {
  int dim = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != 'x' && c != 'y' && c != 'z' && c != 'w') continue;
    if (i > 0 && (std::isalnum(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '_'))
      continue;
    int idx = c == 'x' ? 1 : c == 'y' ? 2 : c == 'z' ? 3 : 4;
    if (c == 'x' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      idx = 0;
      std::size_t k = i + 1;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])) && idx < 1000)
        idx = idx * 10 + (text[k++] - '0');
    }
    if (idx > dim) dim = idx;
  }
  return dim;
}

Report run_analyze(const RunConfig& config) {
  if (!(config.tol.cluster > 0) || !(config.tol.residual > 0) || !(config.tol.recognize > 0) ||
      !(config.tol.root_count > 0) || config.tol.max_den == 0)
    throw std::invalid_argument("tolerances must be positive");
  RunConfig cfg = config;
  if (cfg.ambient_dim <= 0) cfg.ambient_dim = infer_ambient_dim(cfg.input);
  if (cfg.ambient_dim <= 0)
    throw std::invalid_argument("cannot infer the number of variables; pass it explicitly");
  const SparsePoly f = SparsePoly::parse(cfg.input, cfg.ambient_dim);
  KfData kf = assemble_kf(f, cfg.tol, cfg.seed, !cfg.skip_nondegeneracy,
                          cfg.assume_critical_values);
  std::vector<Certificate> certs = certify_all(kf, cfg.tol, cfg.seed, cfg.full_trace);
  std::string inclusion = inclusion_statement(f.ambient_dim(), kf.nondegeneracy);
  return Report{std::move(cfg), std::move(kf), std::move(certs), std::move(inclusion)};
}

CandidateValue locate_candidate(const KfData& kf, const Scalar& b, const Tolerances& tol) {
  for (const CandidateValue& cv : kf.values) {
    if (b.is_exact() && cv.value.is_exact()) {
      if (*b.exact == *cv.value.exact) return cv;
    } else if (approx_equal(b.approx, cv.value.approx, tol.cluster)) {
      return cv;
    }
  }
  CandidateValue out;
  out.value = b;
  out.in_theorem_scope = Verdict::pass;
  for (const CandidateValue& cv : kf.values) {
    if (!cv.from_affine_critical && !cv.from_value_at_origin) continue;
    if (approx_equal(b.approx, cv.value.approx, 10 * tol.cluster)) {
      out.in_theorem_scope = Verdict::unknown;
      break;
    }
  }
  return out;
}

std::string to_json(const Report& report) {
  ordered_json j = envelope(report.config);
  j["polynomial"] = report.kf.newton.f.to_string();
  j["newton"] = newton_json(report.kf.newton);
  j["nondegeneracy"] = check_json(report.kf.nondegeneracy);
  j["inclusion"] = report.inclusion;
  j["kf"] = kf_json(report.kf);
  ordered_json certs = ordered_json::array();
  for (const Certificate& c : report.certificates) certs.push_back(certificate_json(c));
  j["certificates"] = certs;
  return dump(j);
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  os << config_text(report.config);
  os << "polynomial: " << report.kf.newton.f.to_string() << "\n";
  newton_text(os, report.kf.newton);
  check_text(os, report.kf.nondegeneracy);
  os << "inclusion: " << report.inclusion << "\n";
  kf_text(os, report.kf);
  os << "certificates:\n";
  for (const Certificate& c : report.certificates) certificate_text(os, c);
  return os.str();
}

std::string report_faces_json(const RunConfig& config, const NewtonData& nd) {
  ordered_json j = envelope(config);
  ordered_json faces = ordered_json::array();
  for (std::size_t i = 0; i < nd.newton.faces().size(); ++i) {
    const FaceDescriptor& f = nd.newton.faces()[i];
    if (f.dim < 0) continue;  // skip the empty face
    bool atypical = false;
    for (const FaceClassification& fc : nd.atypical)
      if (fc.face_index == static_cast<int>(i)) atypical = true;
    ordered_json e;
    e["index"] = i;
    e["face"] = face_label(nd.newton, f);
    e["dim"] = f.dim;
    e["contains_origin"] = f.contains_origin;
    e["atypical"] = atypical;
    faces.push_back(std::move(e));
  }
  j["faces"] = faces;
  return dump(j);
}

std::string report_fan_json(const RunConfig& config, const NewtonData& nd) {
  if (!nd.fan)
    throw DegenerateInputError("the dual fan needs a full-dimensional Newton polyhedron");
  ordered_json j = envelope(config);
  ordered_json cones = ordered_json::array();
  for (const auto& [face_index, cone] : nd.fan->entries) {
    ordered_json e;
    e["face_index"] = face_index;
    e["face"] = face_label(nd.newton, nd.newton.faces()[face_index]);
    e["dim"] = cone.dim;
    ordered_json rays = ordered_json::array();
    for (const ZVec& r : cone.rays) rays.push_back(zvec_json(r));
    e["rays"] = rays;
    cones.push_back(std::move(e));
  }
  j["fan"] = cones;
  return dump(j);
}

std::string report_kf_json(const RunConfig& config, const KfData& kf) {
  ordered_json j = envelope(config);
  j["nondegeneracy"] = check_json(kf.nondegeneracy);
  j["kf"] = kf_json(kf);
  return dump(j);
}

std::string report_certificate_json(const RunConfig& config, const KfData& kf,
                                    const Certificate& cert) {
  ordered_json j = envelope(config);
  j["nondegeneracy"] = check_json(kf.nondegeneracy);
  j["certificate"] = certificate_json(cert);
  return dump(j);
}

std::string report_fiber_json(const RunConfig& config, const FiberTopology& fiber) {
  ordered_json j = envelope(config);
  j["fiber"] = fiber_json(fiber);
  return dump(j);
}

std::string report_jump_json(const RunConfig& config, const Scalar& b, int jump) {
  ordered_json j = envelope(config);
  j["jump"] = ordered_json{{"value", scalar_json(b)}, {"euler_jump", jump}};
  return dump(j);
}

std::string report_faces_text(const RunConfig& config, const NewtonData& nd) {
  std::ostringstream os;
  os << config_text(config);
  newton_text(os, nd);
  os << "faces:\n";
  for (std::size_t i = 0; i < nd.newton.faces().size(); ++i) {
    const FaceDescriptor& f = nd.newton.faces()[i];
    if (f.dim < 0) continue;
    os << "  [" << i << "] " << face_label(nd.newton, f) << " dim " << f.dim
       << (f.contains_origin ? ", through the origin" : "") << "\n";
  }
  return os.str();
}

std::string report_fan_text(const RunConfig& config, const NewtonData& nd) {
  if (!nd.fan)
    throw DegenerateInputError("the dual fan needs a full-dimensional Newton polyhedron");
  std::ostringstream os;
  os << config_text(config);
  os << "dual fan (one cone per nonempty face):\n";
  for (const auto& [face_index, cone] : nd.fan->entries)
    os << "  " << face_label(nd.newton, nd.newton.faces()[face_index]) << ": dim " << cone.dim
       << " rays " << rays_text(cone.rays) << "\n";
  return os.str();
}

std::string report_kf_text(const RunConfig& config, const KfData& kf) {
  std::ostringstream os;
  os << config_text(config);
  check_text(os, kf.nondegeneracy);
  kf_text(os, kf);
  return os.str();
}

std::string report_certificate_text(const RunConfig& config, const KfData& kf,
                                    const Certificate& cert) {
  std::ostringstream os;
  os << config_text(config);
  check_text(os, kf.nondegeneracy);
  os << "certificate:\n";
  certificate_text(os, cert);
  return os.str();
}

std::string report_fiber_text(const RunConfig& config, const FiberTopology& fiber) {
  std::ostringstream os;
  os << config_text(config);
  fiber_text(os, fiber);
  return os.str();
}

std::string report_jump_text(const RunConfig& config, const Scalar& b, int jump) {
  std::ostringstream os;
  os << config_text(config);
  os << "euler jump at " << b.to_string() << ": " << jump << "\n";
  return os.str();
}

}  // namespace nbif
