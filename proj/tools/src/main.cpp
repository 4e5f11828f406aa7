#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "projcert/checks.hpp"
#include "projcert/decide.hpp"
#include "projcert/errors.hpp"
#include "projcert/fixtures.hpp"
#include "projcert/json_util.hpp"
#include "projcert/oracle.hpp"
#include "projcert/problem.hpp"
#include "projcert/project.hpp"
#include "projcert/sampling.hpp"

namespace {

constexpr int kExitIs = 0;
constexpr int kExitNot = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInput = 64;

struct CliOptions {
  std::string input = "-";
  bool pretty = false;
  // explicit flag values override the problem file's config
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::optional<double> scale, atol, rtol, fd_step;
};

void add_common(CLI::App* sub, CliOptions& opt) {
  sub->add_option("file", opt.input,
                  "problem file (JSON); '-' reads standard input");
  sub->add_option("--seed", opt.seed, "RNG seed");
  sub->add_option("--samples", opt.samples, "number of sampled points");
  sub->add_option("--scale", opt.scale, "Gaussian sampling scale");
  sub->add_option("--atol", opt.atol, "absolute tolerance");
  sub->add_option("--rtol", opt.rtol, "relative tolerance");
  sub->add_option("--fd-step", opt.fd_step, "finite-difference step");
  auto* pretty = sub->add_flag("--pretty", opt.pretty, "indented JSON output");
  sub->add_flag("--json", "compact JSON output (default)")
      ->excludes(pretty);
}

projcert::ProblemFile load_problem(const CliOptions& opt) {
  std::string text;
  if (opt.input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(opt.input);
    if (!in) throw projcert::ParseError("cannot open file: " + opt.input);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw projcert::ParseError(std::string("malformed JSON: ") + e.what());
  }
  projcert::ProblemFile p = projcert::problem_from_json(j);
  if (opt.seed) p.config.seed = *opt.seed;
  if (opt.samples) p.config.n_samples = *opt.samples;
  if (opt.scale) p.config.scale = *opt.scale;
  if (opt.atol) p.config.atol = *opt.atol;
  if (opt.rtol) p.config.rtol = *opt.rtol;
  if (opt.fd_step) p.config.fd_step = *opt.fd_step;
  p.config.validate();
  return p;
}

void emit(const nlohmann::json& j, bool pretty) {
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

int verdict_exit(projcert::Verdict v) {
  switch (v) {
    case projcert::Verdict::IsProjector: return kExitIs;
    case projcert::Verdict::NotProjector: return kExitNot;
    default: return kExitInconclusive;
  }
}

int cmd_decide(const CliOptions& opt) {
  projcert::ProblemFile p = load_problem(opt);
  if (!p.combination) throw projcert::InvalidDescriptor("missing combination");
  projcert::Certificate cert = projcert::decide(*p.combination, p.config);
  emit(projcert::to_json(cert), opt.pretty);
  return verdict_exit(cert.verdict);
}

// decide, then independently re-check the claimed operator numerically and
// attach the check reports; an IsProjector verdict contradicted by the
// checks is downgraded to Inconclusive.
int cmd_certify(const CliOptions& opt) {
  projcert::ProblemFile p = load_problem(opt);
  if (!p.combination) throw projcert::InvalidDescriptor("missing combination");
  projcert::Certificate cert = projcert::decide(*p.combination, p.config);

  projcert::OperatorHandle t = projcert::combination_handle(*p.combination);
  projcert::CheckReport grad = projcert::gradient_criterion_check(t, p.config);
  projcert::CheckReport mono = projcert::monotonicity_check(t, p.config);
  projcert::CheckReport firm =
      projcert::firm_nonexpansiveness_check(t, p.config);

  bool checks_pass = grad.pass && mono.pass && firm.pass;
  if (cert.is_projector() && !checks_pass) {
    cert.verdict = projcert::Verdict::Inconclusive;
    cert.diagnostics += (cert.diagnostics.empty() ? "" : "; ");
    cert.diagnostics += "numerical re-check failed, verdict downgraded";
  }
  nlohmann::json out = projcert::to_json(cert);
  out["checks"] = {{"gradient_criterion", grad.to_json()},
                   {"monotonicity", mono.to_json()},
                   {"firm_nonexpansiveness", firm.to_json()}};
  emit(out, opt.pretty);
  return verdict_exit(cert.verdict);
}

// compare the closed-form projector against the grid oracle on sampled
// points; agreement threshold 2 * resolution * sqrt(n).
int cmd_oracle_compare(const CliOptions& opt) {
  projcert::ProblemFile p = load_problem(opt);
  if (!p.set) throw projcert::InvalidDescriptor("missing set");
  const double threshold =
      2.0 * p.resolution * std::sqrt(static_cast<double>(p.dimension));
  projcert::Sampler sampler(p.config, p.dimension);
  double worst = 0.0;
  int compared = 0;
  std::string status = "agree";
  try {
    for (const projcert::Vector& x : sampler.points()) {
      projcert::Vector exact = projcert::project(*p.set, x);
      projcert::Vector approx =
          projcert::oracle_project(*p.set, x, p.resolution, p.config.scale);
      worst = std::max(worst, (exact - approx).norm());
      ++compared;
    }
  } catch (const projcert::NotSupported& e) {
    status = std::string("oracle unsupported: ") + e.what();
  } catch (const projcert::UnsupportedDimension& e) {
    status = std::string("oracle unsupported: ") + e.what();
  }
  bool supported = status == "agree";
  bool agree = supported && worst <= threshold;
  if (supported && !agree) status = "disagree";
  nlohmann::json out{{"task", "oracle-compare"},
                     {"set", projcert::to_json(*p.set)},
                     {"resolution", p.resolution},
                     {"threshold", threshold},
                     {"points_compared", compared},
                     {"max_deviation", worst},
                     {"status", status},
                     {"seed", p.config.seed}};
  emit(out, opt.pretty);
  if (!supported) return kExitInconclusive;
  return agree ? kExitIs : kExitNot;
}

int cmd_reproduce(const std::string& name_arg, CliOptions opt) {
  std::string name = name_arg;
  projcert::SampleConfig cfg;
  bool known = name == "all";
  for (const std::string& n : projcert::fixture_names())
    known = known || n == name;
  if (!known) {
    // not a fixture identifier: treat the argument as a problem file
    if (!name_arg.empty()) opt.input = name_arg;
    projcert::ProblemFile p = load_problem(opt);
    if (!p.fixture) throw projcert::InvalidDescriptor("missing fixture name");
    name = *p.fixture;
    cfg = p.config;
  }
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.samples) cfg.n_samples = *opt.samples;
  if (opt.scale) cfg.scale = *opt.scale;
  if (opt.atol) cfg.atol = *opt.atol;
  if (opt.rtol) cfg.rtol = *opt.rtol;
  if (opt.fd_step) cfg.fd_step = *opt.fd_step;
  cfg.validate();

  if (name == "all") {
    bool all_match = true;
    nlohmann::json reports = nlohmann::json::array();
    for (const std::string& n : projcert::fixture_names()) {
      projcert::FixtureResult r = projcert::run_fixture(n, cfg);
      all_match = all_match && r.match;
      reports.push_back(r.to_json());
    }
    emit({{"task", "reproduce"}, {"all_match", all_match},
          {"fixtures", reports}},
         opt.pretty);
    return all_match ? kExitIs : kExitNot;
  }
  projcert::FixtureResult r = projcert::run_fixture(name, cfg);
  emit(r.to_json(), opt.pretty);
  return r.match ? kExitIs : kExitNot;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decide and certify whether combinations of convex projectors are "
      "themselves projectors"};
  app.require_subcommand(1);

  CliOptions d_opt, c_opt, o_opt, r_opt;
  CLI::App* d = app.add_subcommand("decide", "run the decision engine");
  add_common(d, d_opt);
  CLI::App* c = app.add_subcommand(
      "certify", "decide plus an independent numerical re-check");
  add_common(c, c_opt);
  CLI::App* o = app.add_subcommand(
      "oracle-compare", "compare a closed-form projector to the grid oracle");
  add_common(o, o_opt);
  CLI::App* r = app.add_subcommand(
      "reproduce", "re-run a named fixture ('all' runs every fixture)");
  std::string fixture_name;
  r->add_option("name", fixture_name,
                "fixture name, 'all', or a problem file path");
  add_common(r, r_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (d->parsed()) return cmd_decide(d_opt);
    if (c->parsed()) return cmd_certify(c_opt);
    if (o->parsed()) return cmd_oracle_compare(o_opt);
    if (r->parsed()) return cmd_reproduce(fixture_name, r_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
