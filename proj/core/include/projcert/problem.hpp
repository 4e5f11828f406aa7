#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "projcert/combination.hpp"
#include "projcert/set.hpp"
#include "projcert/types.hpp"

namespace projcert {

enum class Task { Decide, Certify, OracleCompare, Reproduce };

std::string task_name(Task t);
Task task_from_name(const std::string& name);

// A self-contained problem description: the task, its operands, and the
// sampling configuration. Parsing is strict — unknown fields are rejected
// and every vector must match `dimension`.
struct ProblemFile {
  int dimension = 0;
  Task task = Task::Decide;
  std::optional<Combination> combination;  // decide / certify
  std::optional<SetDescriptor> set;        // oracle-compare
  std::optional<std::string> fixture;      // reproduce
  double resolution = 1e-3;                // oracle grid spacing
  SampleConfig config;

  void validate() const;
};

nlohmann::json to_json(const ProblemFile& p);
ProblemFile problem_from_json(const nlohmann::json& j);

}  // namespace projcert
