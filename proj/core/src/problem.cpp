#include "projcert/problem.hpp"

#include <cmath>

#include "projcert/errors.hpp"
#include "projcert/json_util.hpp"

namespace projcert {

std::string task_name(Task t) {
  switch (t) {
    case Task::Decide: return "decide";
    case Task::Certify: return "certify";
    case Task::OracleCompare: return "oracle-compare";
    default: return "reproduce";
  }
}

Task task_from_name(const std::string& name) {
  if (name == "decide") return Task::Decide;
  if (name == "certify") return Task::Certify;
  if (name == "oracle-compare") return Task::OracleCompare;
  if (name == "reproduce") return Task::Reproduce;
  throw ParseError("unknown task: " + name);
}

void ProblemFile::validate() const {
  if (dimension <= 0) throw InvalidDescriptor("dimension must be positive");
  if (!(resolution > 0) || !std::isfinite(resolution))
    throw InvalidDescriptor("resolution must be positive and finite");
  config.validate();
  switch (task) {
    case Task::Decide:
    case Task::Certify:
      if (!combination)
        throw InvalidDescriptor(task_name(task) + " requires a combination");
      combination->validate();
      if (combination->dimension() != dimension)
        throw DimensionMismatch("combination dimension disagrees with file");
      break;
    case Task::OracleCompare:
      if (!set) throw InvalidDescriptor("oracle-compare requires a set");
      if (projcert::dimension(*set) != dimension)
        throw DimensionMismatch("set dimension disagrees with file");
      break;
    case Task::Reproduce:
      if (!fixture || fixture->empty())
        throw InvalidDescriptor("reproduce requires a fixture name");
      break;
  }
}

nlohmann::json to_json(const ProblemFile& p) {
  nlohmann::json j{{"dimension", p.dimension},
                   {"task", task_name(p.task)},
                   {"config",
                    {{"seed", p.config.seed},
                     {"samples", p.config.n_samples},
                     {"scale", p.config.scale},
                     {"atol", p.config.atol},
                     {"rtol", p.config.rtol},
                     {"fd_step", p.config.fd_step}}}};
  if (p.combination) j["combination"] = to_json(*p.combination);
  if (p.set) j["set"] = to_json(*p.set);
  if (p.fixture) j["fixture"] = *p.fixture;
  if (p.task == Task::OracleCompare) j["resolution"] = p.resolution;
  return j;
}

ProblemFile problem_from_json(const nlohmann::json& j) {
  require_keys(j, {"dimension", "task", "combination", "set", "fixture",
                   "resolution", "config"});
  ProblemFile p;
  const auto& dim = require_field(j, "dimension");
  if (!dim.is_number_integer())
    throw ParseError("problem: dimension must be an integer");
  p.dimension = dim.get<int>();
  p.task = task_from_name(
      require_field(j, "task").get<std::string>());
  if (j.contains("combination"))
    p.combination = combination_from_json(j.at("combination"));
  if (j.contains("set")) p.set = set_from_json(j.at("set"));
  if (j.contains("fixture")) p.fixture = j.at("fixture").get<std::string>();
  if (j.contains("resolution"))
    p.resolution = j.at("resolution").get<double>();
  if (j.contains("config")) {
    const auto& c = j.at("config");
    require_keys(c, {"seed", "samples", "scale", "atol", "rtol", "fd_step"});
    if (c.contains("seed")) p.config.seed = c.at("seed").get<std::uint64_t>();
    if (c.contains("samples")) p.config.n_samples = c.at("samples").get<int>();
    if (c.contains("scale")) p.config.scale = c.at("scale").get<double>();
    if (c.contains("atol")) p.config.atol = c.at("atol").get<double>();
    if (c.contains("rtol")) p.config.rtol = c.at("rtol").get<double>();
    if (c.contains("fd_step"))
      p.config.fd_step = c.at("fd_step").get<double>();
  }
  p.validate();
  return p;
}

}  // namespace projcert
