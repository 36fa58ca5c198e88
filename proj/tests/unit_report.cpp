#include <newtonbif/errors.hpp>
#include <newtonbif/report.hpp>

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace nbif;
using nlohmann::json;

namespace {

RunConfig config_for(const std::string& input) {
  RunConfig cfg;
  cfg.input = input;
  return cfg;
}

const char* kCaseA = "x + x*y + x^2*y^2";
const char* kCaseB = "x + x^2*y";
const char* kSpace = "x1^2 + x1^2*x2^2 + x1^2*x2^2*x3^3";
// the face values of this polynomial sit between the merge and the ambiguity
// tolerance around the excluded value 0
const char* kNearZeroPair = "x^3*y^3 - 1/250000*x*y + x";

// every floating-point leaf must sit in a status-tagged scalar object under
// the keys re/im; bare floats anywhere else violate the output contract
void check_float_tagging(const json& j) {
  if (j.is_object()) {
    const bool tagged = j.contains("status");
    for (const auto& [key, value] : j.items()) {
      if (value.is_number_float()) {
        INFO("float under key ", key);
        CHECK(tagged);
        CHECK((key == "re" || key == "im"));
      } else {
        check_float_tagging(value);
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      CHECK(!value.is_number_float());
      check_float_tagging(value);
    }
  }
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const std::string path = "cli_out_" + std::to_string(counter++) + ".txt";
  std::string cmd = env_prefix;
  if (!cmd.empty()) cmd += " ";
  cmd += std::string("\"") + NBIF_CLI_PATH + "\" " + args + " > " + path + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  r.output = os.str();
  return r;
}

}  // namespace

TEST_CASE("identical runs produce byte-identical reports") {
  const Report a = run_analyze(config_for(kCaseA));
  const Report b = run_analyze(config_for(kCaseA));
  CHECK(to_json(a) == to_json(b));
  CHECK(to_text(a) == to_text(b));
}

TEST_CASE("the analyze report for the second running example") {
  // frozen byte-for-byte from a verified run
  const std::string golden = R"gold({
  "schema_version": 1,
  "config": {
    "input": "x + x^2*y",
    "ambient_dim": 2,
    "seed": 0,
    "tolerances": {
      "cluster": "1e-09",
      "residual": "1e-08",
      "recognize": "1e-10",
      "root_count": "1e-06",
      "max_denominator": 1000000
    },
    "full_trace": false,
    "skip_nondegeneracy_check": false,
    "assume_critical_values": null
  },
  "polynomial": "x1 + x1^2*x2",
  "newton": {
    "vertices": [
      [
        0,
        0
      ],
      [
        1,
        0
      ],
      [
        2,
        1
      ]
    ],
    "dim": 2,
    "full_dimensional": true,
    "convenient": false,
    "normalized_volume": 1,
    "atypical_faces": [
      {
        "face": "{(0,0),(2,1)}",
        "face_index": 5,
        "dim": 1,
        "sigma": {
          "dim": 1,
          "rays": [
            [
              1,
              -2
            ]
          ]
        },
        "sigma_cap_orthant_dim": 0,
        "orthant_face_axes": [],
        "common_edges": 0,
        "relatively_simple": true,
        "relint_in_open_orthant": true,
        "bad_partner": null
      }
    ]
  },
  "nondegeneracy": {
    "verdict": "pass",
    "status": "exact",
    "detail": "all 3 origin-free faces have torus-free face systems",
    "witness": null
  },
  "inclusion": "B_f = K_f",
  "kf": {
    "completeness": "exact",
    "values": [
      {
        "value": {
          "status": "exact",
          "exact": "0",
          "re": 0.0,
          "im": 0.0
        },
        "origins": {
          "affine_critical": false,
          "value_at_origin": true,
          "faces": []
        },
        "in_theorem_scope": "fail"
      }
    ]
  },
  "certificates": [
    {
      "value": {
        "status": "exact",
        "exact": "0",
        "re": 0.0,
        "im": 0.0
      },
      "verdict": "candidate-only",
      "route": null,
      "euler_jump": 1,
      "trace": [
        {
          "route": "scope",
          "hypothesis": "value outside the excluded set",
          "status": "fail",
          "evidence": "theorem scope excludes f(Sing f) and f(0)"
        }
      ]
    }
  ]
}
)gold";
  CHECK(to_json(run_analyze(config_for(kCaseB))) == golden);
}

TEST_CASE("the analyze report for the first running example has the expected shape") {
  const json j = json::parse(to_json(run_analyze(config_for(kCaseA))));
  CHECK(j["schema_version"] == 1);
  CHECK(j["config"]["input"] == kCaseA);
  CHECK(j["config"]["ambient_dim"] == 2);
  CHECK(j["config"]["tolerances"]["cluster"] == "1e-09");
  CHECK(j["config"]["tolerances"]["max_denominator"] == 1000000);
  CHECK(j["polynomial"] == "x1 + x1*x2 + x1^2*x2^2");
  CHECK(j["newton"]["dim"] == 2);
  CHECK(j["newton"]["normalized_volume"] == 2);
  REQUIRE(j["newton"]["atypical_faces"].size() == 1);
  CHECK(j["newton"]["atypical_faces"][0]["face_index"] == 5);
  CHECK(j["nondegeneracy"]["verdict"] == "pass");
  CHECK(j["inclusion"] == "B_f = K_f");
  CHECK(j["kf"]["completeness"] == "exact");
  REQUIRE(j["kf"]["values"].size() == 2);
  CHECK(j["kf"]["values"][0]["value"]["exact"] == "-1/4");
  CHECK(j["kf"]["values"][0]["origins"]["faces"][0]["face_index"] == 5);
  CHECK(j["kf"]["values"][0]["in_theorem_scope"] == "pass");
  CHECK(j["kf"]["values"][1]["value"]["exact"] == "0");
  CHECK(j["kf"]["values"][1]["origins"]["affine_critical"] == true);
  CHECK(j["kf"]["values"][1]["origins"]["value_at_origin"] == true);
  CHECK(j["kf"]["values"][1]["in_theorem_scope"] == "fail");
  REQUIRE(j["certificates"].size() == 2);
  CHECK(j["certificates"][0]["verdict"] == "certified-in-B_f");
  CHECK(j["certificates"][0]["route"] == "plane-equality");
  CHECK(j["certificates"][0]["euler_jump"] == 1);
  CHECK(j["certificates"][1]["verdict"] == "candidate-only");
  CHECK(j["certificates"][1]["route"].is_null());
  CHECK(j["certificates"][1]["euler_jump"] == 1);
  CHECK(j["certificates"][1]["trace"][0]["route"] == "scope");
}

TEST_CASE("every floating-point leaf sits inside a status-tagged object") {
  for (const char* input : {kCaseA, kSpace, kNearZeroPair, "x^2 + 2*x*y + y^2"}) {
    CAPTURE(input);
    check_float_tagging(json::parse(to_json(run_analyze(config_for(input)))));
  }
  // the stage emitters follow the same contract
  RunConfig cfg = config_for(kCaseA);
  cfg.ambient_dim = 2;
  const SparsePoly f = SparsePoly::parse(cfg.input, 2);
  const NewtonData nd = analyze_newton(f);
  const KfData kf = assemble_kf(f, cfg.tol, cfg.seed);
  check_float_tagging(json::parse(report_faces_json(cfg, nd)));
  check_float_tagging(json::parse(report_fan_json(cfg, nd)));
  check_float_tagging(json::parse(report_kf_json(cfg, kf)));
  const Certificate cert = certify(kf, kf.values[0], cfg.tol, cfg.seed, true);
  check_float_tagging(json::parse(report_certificate_json(cfg, kf, cert)));
  const FiberTopology fiber = chi_affine_curve_fiber(f, Scalar::make_approx(0.3), cfg.tol);
  check_float_tagging(json::parse(report_fiber_json(cfg, fiber)));
  check_float_tagging(json::parse(report_jump_json(cfg, kf.values[0].value, 1)));
}

TEST_CASE("locating a value in the candidate list") {
  const Tolerances tol;
  const SparsePoly f = SparsePoly::parse(kCaseA, 2);
  const KfData kf = assemble_kf(f, tol, 0);

  const CandidateValue exact_hit = locate_candidate(kf, Scalar::make_exact(Rational(-1, 4)), tol);
  CHECK(!exact_hit.from_faces.empty());
  CHECK(exact_hit.in_theorem_scope == Verdict::pass);

  const CandidateValue approx_hit = locate_candidate(kf, Scalar::make_approx(-0.25), tol);
  CHECK(!approx_hit.from_faces.empty());

  const CandidateValue excluded = locate_candidate(kf, Scalar::make_exact(Rational(0)), tol);
  CHECK(excluded.from_value_at_origin);
  CHECK(excluded.in_theorem_scope == Verdict::fail);

  const CandidateValue miss = locate_candidate(kf, Scalar::make_exact(Rational(7)), tol);
  CHECK(!miss.from_affine_critical);
  CHECK(!miss.from_value_at_origin);
  CHECK(miss.from_faces.empty());
  CHECK(miss.in_theorem_scope == Verdict::pass);

  // a value near (but not matching) an excluded candidate is undecidable
  const SparsePoly g = SparsePoly::parse(kNearZeroPair, 2);
  const KfData gkf = assemble_kf(g, tol, 0);
  const CandidateValue near = locate_candidate(gkf, Scalar::make_approx(5e-9), tol);
  CHECK(near.from_faces.empty());
  CHECK(near.in_theorem_scope == Verdict::unknown);
}

TEST_CASE("the variable count is inferred from the text") {
  CHECK(infer_ambient_dim(kCaseA) == 2);
  CHECK(infer_ambient_dim(kSpace) == 3);
  CHECK(infer_ambient_dim("w + z") == 4);
  CHECK(infer_ambient_dim("x + x2^2") == 2);
  CHECK(infer_ambient_dim("x1 + x5^2") == 5);
  CHECK(infer_ambient_dim("3/4") == 0);
}

TEST_CASE("bad configurations are rejected") {
  RunConfig cfg = config_for(kCaseA);
  cfg.tol.cluster = 0;
  CHECK_THROWS_AS(run_analyze(cfg), std::invalid_argument);
  cfg = config_for(kCaseA);
  cfg.tol.residual = -1e-8;
  CHECK_THROWS_AS(run_analyze(cfg), std::invalid_argument);
  cfg = config_for(kCaseA);
  cfg.tol.max_den = 0;
  CHECK_THROWS_AS(run_analyze(cfg), std::invalid_argument);
  CHECK_THROWS_AS(run_analyze(config_for("3/4")), std::invalid_argument);
  CHECK_THROWS_AS(run_analyze(config_for("x + (")), std::invalid_argument);
  CHECK_THROWS_AS(run_analyze(config_for("x + x^2")), DegenerateInputError);
}

TEST_CASE("assumed critical values replace the sampled list") {
  RunConfig cfg = config_for("x1^2 + x1*x2*x3 + x2^2");
  cfg.assume_critical_values = std::vector<Rational>{Rational(0), Rational(3, 2)};
  const Report report = run_analyze(cfg);
  CHECK(report.kf.completeness == NumStatus::exact);
  REQUIRE(report.kf.values.size() == 2);
  CHECK(report.kf.values[1].value.to_string() == "3/2");
  CHECK(report.kf.values[1].from_affine_critical);
  const json j = json::parse(to_json(report));
  CHECK(j["config"]["assume_critical_values"][1] == "3/2");
}

TEST_CASE("text reports name the route and the jump") {
  const std::string text = to_text(run_analyze(config_for(kCaseA)));
  CHECK(text.find("B_f = K_f") != std::string::npos);
  CHECK(text.find("certified-in-B_f via plane-equality") != std::string::npos);
  CHECK(text.find("euler jump 1") != std::string::npos);
  CHECK(text.find("scope fail") != std::string::npos);
  CHECK(text.find("normalized volume: 2") != std::string::npos);
}

TEST_CASE("the command line tool reports and exits as documented") {
  const std::string quoted_a = std::string("'") + kCaseA + "'";

  const CliResult analyze = run_cli("analyze " + quoted_a + " --format json");
  CHECK(analyze.exit_code == 0);
  const json ja = json::parse(analyze.output);
  CHECK(ja["certificates"][0]["route"] == "plane-equality");
  check_float_tagging(ja);

  const CliResult again = run_cli("analyze " + quoted_a + " --format json");
  CHECK(again.output == analyze.output);

  const CliResult degenerate = run_cli("analyze 'x^2 + 2*x*y + y^2' --format json");
  CHECK(degenerate.exit_code == 2);
  const json jd = json::parse(degenerate.output);
  CHECK(jd["nondegeneracy"]["verdict"] == "fail");
  CHECK(!jd["nondegeneracy"]["witness"].is_null());

  const CliResult guard = run_cli("analyze 'x1 + x9' -n 9");
  CHECK(guard.exit_code == 3);

  const CliResult usage = run_cli("analyze '3/4'");
  CHECK(usage.exit_code == 1);

  const CliResult seeded = run_cli("kf 'x*y + x^3' --format json", "NEWTON_BIF_SEED=42");
  CHECK(json::parse(seeded.output)["config"]["seed"] == 42);

  const CliResult chi = run_cli("chi 1 'x*y' --format json");
  CHECK(chi.exit_code == 0);
  CHECK(json::parse(chi.output)["fiber"]["chi"] == 0);

  const CliResult jump = run_cli("jump 0 'x + x^2*y' --format json");
  CHECK(jump.exit_code == 0);
  CHECK(json::parse(jump.output)["jump"]["euler_jump"] == 1);

  // a JSON term list is accepted as file input
  {
    std::ofstream out("cli_terms.json");
    out << R"({"vars": 2, "terms": [
      {"coeff": 1, "exponent": [1, 0]},
      {"coeff": "1", "exponent": [1, 1]},
      {"coeff": "1/1", "exponent": [2, 2]}
    ]})";
  }
  const CliResult from_file = run_cli("kf @cli_terms.json --format json");
  CHECK(from_file.exit_code == 0);
  const json jf = json::parse(from_file.output);
  CHECK(jf["config"]["input"] == "x1 + x1*x2 + x1^2*x2^2");
  REQUIRE(jf["kf"]["values"].size() == 2);
  CHECK(jf["kf"]["values"][0]["value"]["exact"] == "-1/4");
}
