// Command-line front end: parse a polynomial, run the pipeline or one stage,
// print a JSON or text report.  Exit codes: 0 success, 1 usage/precision
// errors, 2 degenerate input, 3 desk-scale guard tripped.
#include <newtonbif/errors.hpp>
#include <newtonbif/report.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace nbif;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Scalar parse_scalar_arg(const std::string& text) {
  if (auto q = parse_rational(text)) return Scalar::make_exact(*q);
  throw std::invalid_argument("cannot parse value '" + text + "' (expected p/q or a decimal)");
}

std::vector<Rational> parse_value_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto q = parse_rational(item);
    if (!q) throw std::invalid_argument("cannot parse assumed critical value '" + item + "'");
    out.push_back(*q);
  }
  return out;
}

// A JSON input carries a term list: either a bare array of terms or an object
// {"vars": n, "terms": [...]}; each term is {"coeff": "p/q" or integer,
// "exponent": [e1, ..., en]}.  Returns the canonical polynomial text and
// resolves the variable count in dim.
std::string poly_text_from_json(const std::string& text, int& dim) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const nlohmann::json& terms = j.is_array() ? j : j.at("terms");
  if (!terms.is_array()) throw std::invalid_argument("JSON input: \"terms\" must be an array");
  if (j.is_object() && j.contains("vars")) dim = j.at("vars").get<int>();
  if (dim <= 0) {
    for (const auto& t : terms) dim = std::max<int>(dim, (int)t.at("exponent").size());
    if (dim <= 0) throw std::invalid_argument("JSON input: cannot infer the variable count");
  }
  SparsePoly f(dim);
  for (const auto& t : terms) {
    const nlohmann::json& c = t.at("coeff");
    Rational coeff;
    if (c.is_string()) {
      auto q = parse_rational(c.get<std::string>());
      if (!q)
        throw std::invalid_argument("JSON input: cannot parse coefficient '" +
                                    c.get<std::string>() + "'");
      coeff = *q;
    } else if (c.is_number_integer()) {
      coeff = Rational(c.get<std::int64_t>());
    } else {
      throw std::invalid_argument("JSON input: coefficients must be strings (p/q) or integers");
    }
    Exponent e = t.at("exponent").get<Exponent>();
    if ((int)e.size() > dim)
      throw std::invalid_argument("JSON input: an exponent is longer than the variable count");
    e.resize(dim, 0);
    f.add_term(e, coeff);
  }
  return f.to_string();
}

void validate_tolerances(const Tolerances& tol) {
  if (!(tol.cluster > 0) || !(tol.residual > 0) || !(tol.recognize > 0) ||
      !(tol.root_count > 0) || tol.max_den == 0)
    throw std::invalid_argument("tolerances must be positive");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"candidate bifurcation sets of sparse rational polynomials"};
  app.require_subcommand(0, 1);

  RunConfig cfg;
  std::string input, file, format = "text", assume, value_arg;

  app.add_option("input", input, "polynomial text, or @path to read a file");
  app.add_option("-f,--file", file, "read the polynomial from a file");
  app.add_option("-n,--vars", cfg.ambient_dim,
                 "number of variables (default: inferred from the text)");
  auto* seed_opt =
      app.add_option("--seed", cfg.seed, "random seed (default: $NEWTON_BIF_SEED, then 0)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cluster-tol", cfg.tol.cluster, "tolerance for merging candidate values");
  app.add_option("--residual-tol", cfg.tol.residual, "tolerance for accepting numeric solutions");
  app.add_option("--recognize-tol", cfg.tol.recognize, "tolerance for rational recognition");
  app.add_option("--root-tol", cfg.tol.root_count, "tolerance for merging roots when counting");
  app.add_option("--max-den", cfg.tol.max_den, "largest denominator rational recognition tries");
  app.add_flag("--full-trace", cfg.full_trace,
               "evaluate every certificate route, not just the first that passes");
  app.add_flag("--skip-nondegeneracy-check", cfg.skip_nondegeneracy,
               "record the nondegeneracy verdict as unknown instead of testing it");
  app.add_option("--assume-critical-values", assume,
                 "comma-separated trusted affine critical values (replaces the sampled list)");

  auto* cmd_analyze = app.add_subcommand("analyze", "full pipeline report (the default)");
  auto* cmd_faces = app.add_subcommand("faces", "face table of the Newton polyhedron at infinity");
  auto* cmd_fan = app.add_subcommand("fan", "dual fan cone table");
  auto* cmd_kf = app.add_subcommand("kf", "candidate value set with origins");
  auto* cmd_certify = app.add_subcommand("certify", "certificate for one candidate value");
  auto* cmd_chi =
      app.add_subcommand("chi", "Euler characteristic of one curve fiber (two variables)");
  auto* cmd_jump =
      app.add_subcommand("jump", "Euler characteristic jump at a value (two variables)");
  cmd_certify->add_option("value", value_arg, "the candidate value b")->required();
  cmd_chi->add_option("value", value_arg, "the fiber value c")->required();
  cmd_jump->add_option("value", value_arg, "the value b")->required();
  for (auto* s : {cmd_analyze, cmd_faces, cmd_fan, cmd_kf, cmd_certify, cmd_chi, cmd_jump})
    s->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!seed_opt->count()) {
      if (const char* env = std::getenv("NEWTON_BIF_SEED")) {
        char* end = nullptr;
        cfg.seed = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
          throw std::invalid_argument("NEWTON_BIF_SEED is not an unsigned integer");
      }
    }
    if (!file.empty())
      input = slurp(file);
    else if (!input.empty() && input[0] == '@')
      input = slurp(input.substr(1));
    if (input.empty()) throw std::invalid_argument("no polynomial given (text, @path, or --file)");
    const auto first = input.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (input[first] == '{' || input[first] == '['))
      input = poly_text_from_json(input, cfg.ambient_dim);
    cfg.input = input;
    if (!assume.empty()) cfg.assume_critical_values = parse_value_list(assume);
    validate_tolerances(cfg.tol);
    const bool json = format == "json";

    if (app.got_subcommand(cmd_analyze) || app.get_subcommands().empty()) {
      Report report = run_analyze(cfg);
      std::cout << (json ? to_json(report) : to_text(report));
      return report.kf.nondegeneracy.verdict == Verdict::fail ? 2 : 0;
    }

    if (cfg.ambient_dim <= 0) cfg.ambient_dim = infer_ambient_dim(cfg.input);
    if (cfg.ambient_dim <= 0)
      throw std::invalid_argument("cannot infer the number of variables; pass it explicitly");
    const SparsePoly f = SparsePoly::parse(cfg.input, cfg.ambient_dim);

    if (app.got_subcommand(cmd_faces)) {
      const NewtonData nd = analyze_newton(f);
      std::cout << (json ? report_faces_json(cfg, nd) : report_faces_text(cfg, nd));
      return 0;
    }
    if (app.got_subcommand(cmd_fan)) {
      const NewtonData nd = analyze_newton(f);
      std::cout << (json ? report_fan_json(cfg, nd) : report_fan_text(cfg, nd));
      return 0;
    }
    if (app.got_subcommand(cmd_kf)) {
      const KfData kf =
          assemble_kf(f, cfg.tol, cfg.seed, !cfg.skip_nondegeneracy, cfg.assume_critical_values);
      std::cout << (json ? report_kf_json(cfg, kf) : report_kf_text(cfg, kf));
      return kf.nondegeneracy.verdict == Verdict::fail ? 2 : 0;
    }
    if (app.got_subcommand(cmd_certify)) {
      const Scalar b = parse_scalar_arg(value_arg);
      const KfData kf =
          assemble_kf(f, cfg.tol, cfg.seed, !cfg.skip_nondegeneracy, cfg.assume_critical_values);
      const CandidateValue cv = locate_candidate(kf, b, cfg.tol);
      const Certificate cert = certify(kf, cv, cfg.tol, cfg.seed, cfg.full_trace);
      std::cout << (json ? report_certificate_json(cfg, kf, cert)
                         : report_certificate_text(cfg, kf, cert));
      return kf.nondegeneracy.verdict == Verdict::fail ? 2 : 0;
    }
    if (app.got_subcommand(cmd_chi)) {
      const Scalar c = parse_scalar_arg(value_arg);
      const FiberTopology fiber = chi_affine_curve_fiber(f, c, cfg.tol);
      std::cout << (json ? report_fiber_json(cfg, fiber) : report_fiber_text(cfg, fiber));
      return 0;
    }
    // jump: the candidate list is needed only for gap estimation, so the
    // nondegeneracy check is skipped
    const Scalar b = parse_scalar_arg(value_arg);
    const KfData kf = assemble_kf(f, cfg.tol, cfg.seed, false, cfg.assume_critical_values);
    std::vector<Scalar> candidates;
    for (const CandidateValue& cv : kf.values) candidates.push_back(cv.value);
    const int jump = euler_jump(f, b, candidates, cfg.tol);
    std::cout << (json ? report_jump_json(cfg, b, jump) : report_jump_text(cfg, b, jump));
    return 0;
  } catch (const DegenerateInputError& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return 2;
  } catch (const GuardLimitError& e) {
    std::cerr << "guard limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
