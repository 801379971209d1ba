#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>

#include "closurelab/algebra.hpp"
#include "closurelab/report.hpp"

namespace closurelab {

// Malformed scenario or unusable configuration; the CLI exits with 2.
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RingSpec {
  std::string backend;  // semigroup, quotient, T
  std::vector<int> generators;
  std::vector<std::string> vars{"x", "y"};
  std::vector<std::string> relations;
  int p = 2;
  std::optional<int> D;  // empty: auto
};

struct LayerSpec {
  std::string kind;  // fill or ring
  std::string color;
  std::string expr;
  std::string minus;
  std::string label;
};

struct TaskSpec {
  int line = 0;
  std::string kind;
  std::vector<std::string> args;  // parenthesized groups kept whole
  std::vector<std::pair<std::string, std::string>> expects;
  // lattice tasks
  std::string title;
  int xmax = 9, ymax = 6;
  std::vector<LayerSpec> layers;
};

struct Declaration {
  int line = 0;
  std::string kind;  // ideal or hull
  std::string name;
  std::string expr;
};

struct Scenario {
  int version = 1;
  std::string name;
  std::filesystem::path base_dir;
  RingSpec ring;
  std::vector<std::pair<std::string, std::string>> tables;  // name, path
  std::vector<Declaration> decls;
  std::vector<TaskSpec> tasks;
  std::string format = "json";  // json or md
  int expect_exit = 0;          // nonzero for negative controls
};

Scenario parse_scenario(const std::string& text, const std::string& name,
                        const std::filesystem::path& base_dir = ".");
Scenario load_scenario(const std::filesystem::path& path);

// The truncation degree the scenario resolves to (explicit or auto).
int resolve_truncation(const Scenario& s);
AlgebraPtr build_ring(const RingSpec& spec, int D);

struct RunOptions {
  long sample = 0;
  uint64_t seed = 1;
  std::optional<int> truncation;
  int jobs = 0;  // 0: hardware concurrency
  bool only_lattices = false;
};

struct RunOutput {
  Report report;
  std::map<std::string, std::string> svgs;  // file name -> contents
  std::map<std::string, std::string> ascii;
};

// Runs every task; failures of individual tasks are recorded in the report.
// Throws ScenarioError for configuration errors found before any task runs.
RunOutput run_scenario(const Scenario& s, const RunOptions& opt = {});

// Compares the generator lists of every reported submodule; empty when equal.
std::string compare_submodule_fields(const Report& a, const Report& b);

struct BatteryEntry {
  std::string scenario;
  int D = 0;
  int exit_code = 0, expected_exit = 0;
  std::string failure;      // first failing task witness or error, for unexpected exits
  std::string certificate;  // difference found at truncation 2D; empty when identical
  bool certified = false;
  double seconds = 0;

  bool ok() const { return exit_code == expected_exit && (!certified || certificate.empty()); }
};

// Runs every *.scn in dir (sorted by name) and, with certify, reruns each at
// twice its truncation and compares the reported submodules.
std::vector<BatteryEntry> verify_all(const std::filesystem::path& dir, bool certify, const RunOptions& opt = {});

}  // namespace closurelab
