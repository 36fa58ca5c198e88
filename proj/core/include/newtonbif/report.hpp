// Assembles the full pipeline into self-describing reports: a typed result
// bundle, deterministic JSON with status-tagged numbers, and a text view.
#pragma once

#include <newtonbif/certify.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nbif {

struct RunConfig {
  std::string input;     // polynomial text (file contents already resolved)
  int ambient_dim = 0;   // 0 = infer from the variables used in the text
  Tolerances tol{};
  std::uint64_t seed = 0;
  bool full_trace = false;
  bool skip_nondegeneracy = false;
  // replaces the sampled affine critical values with a trusted exact list
  std::optional<std::vector<Rational>> assume_critical_values;
};

// Smallest ambient dimension the variables in `text` require (x,y,z,w count
// as x1..x4); at least 1.  Purely lexical, no full parse.
int infer_ambient_dim(const std::string& text);

// Everything run_analyze computed, in pipeline order.
struct Report {
  RunConfig config;
  KfData kf;  // carries the Newton analysis and nondegeneracy verdict
  std::vector<Certificate> certificates;
  std::string inclusion;
};

// Full pipeline: parse, Newton analysis, nondegeneracy, candidate set,
// certificates (with Euler jumps for two variables).  Throws
// std::invalid_argument on malformed input or non-positive tolerances and
// DegenerateInputError when the Newton polyhedron is not full dimensional.
Report run_analyze(const RunConfig& config);

// Match b against the assembled candidate set (within the merge tolerance),
// or build an unmatched candidate whose scope verdict reflects proximity to
// the excluded values.
CandidateValue locate_candidate(const KfData& kf, const Scalar& b, const Tolerances& tol);

// JSON, serialized with two-space indentation and a trailing newline.  Every
// floating-point leaf sits inside a status-tagged scalar object; identical
// (input, seed, tolerances) yield byte-identical output.  schema_version 1.
std::string to_json(const Report& report);
std::string to_text(const Report& report);

// Stage-isolated payloads wrapped in the same envelope (schema_version,
// config echo) and data shapes as the full report.
std::string report_faces_json(const RunConfig& config, const NewtonData& nd);
std::string report_fan_json(const RunConfig& config, const NewtonData& nd);
std::string report_kf_json(const RunConfig& config, const KfData& kf);
std::string report_certificate_json(const RunConfig& config, const KfData& kf,
                                    const Certificate& cert);
std::string report_fiber_json(const RunConfig& config, const FiberTopology& fiber);
std::string report_jump_json(const RunConfig& config, const Scalar& b, int jump);

std::string report_faces_text(const RunConfig& config, const NewtonData& nd);
std::string report_fan_text(const RunConfig& config, const NewtonData& nd);
std::string report_kf_text(const RunConfig& config, const KfData& kf);
std::string report_certificate_text(const RunConfig& config, const KfData& kf,
                                    const Certificate& cert);
std::string report_fiber_text(const RunConfig& config, const FiberTopology& fiber);
std::string report_jump_text(const RunConfig& config, const Scalar& b, int jump);

}  // namespace nbif
