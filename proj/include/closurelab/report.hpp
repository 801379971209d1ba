#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace closurelab {

using ojson = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;

struct TaskResult {
  int id = 0;
  std::string kind;
  std::string args;
  std::string status;  // info, pass, fail, error
  bool sampled = false;
  ojson fields = ojson::object();
  std::string witness;  // first failure, empty otherwise

  bool operator==(const TaskResult&) const = default;
};

struct Report {
  int version = kReportVersion;
  std::string scenario;
  ojson ring = ojson::object();
  std::string enumeration = "exhaustive";  // "sampled ..." when any enumeration was sampled
  std::vector<TaskResult> tasks;

  // 0 all verifications passed, 1 a verification failed, 2 a task could not run
  int exit_code() const;
  bool operator==(const Report&) const = default;
};

ojson to_json(const Report& r);
Report report_from_json(const ojson& j);  // throws on a schema mismatch

std::string emit_json(const Report& r);
std::string emit_markdown(const Report& r);

}  // namespace closurelab
