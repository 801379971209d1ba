#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "closurelab/scenario.hpp"

using namespace closurelab;
namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ScenarioError("cannot write " + p.string());
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closure-lab: closures, interiors and their reductions on finite local algebras"};
  app.require_subcommand(1);

  std::string scenario_path, format, out_dir;
  RunOptions opt;
  long sample = 0;
  int truncation = 0;

  auto* run = app.add_subcommand("run", "run a scenario and print its report");
  run->add_option("scenario", scenario_path, "scenario file")->required()->check(CLI::ExistingFile);
  run->add_option("--format", format, "json or md (default: the scenario's output line)")
      ->check(CLI::IsMember({"json", "md"}));
  run->add_option("--sample", sample, "sample this many lifts per reduction enumeration")->check(CLI::PositiveNumber);
  run->add_option("--truncation", truncation, "override the truncation degree D")->check(CLI::PositiveNumber);
  run->add_option("--seed", opt.seed, "sampling seed");
  run->add_option("--jobs", opt.jobs, "worker threads (0: all cores)");
  run->add_option("--out", out_dir, "write the report and SVG files here instead of printing");

  auto* lattice = app.add_subcommand("lattice", "render the lattice tasks of a scenario");
  lattice->add_option("scenario", scenario_path, "scenario file")->required()->check(CLI::ExistingFile);
  std::string style = "ascii";
  lattice->add_option("--style", style, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  lattice->add_option("--out", out_dir, "directory for SVG files (default: current directory)");
  lattice->add_option("--truncation", truncation, "override the truncation degree D")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify-all", "run every shipped scenario and the truncation certificate");
  std::string dir = CLOSURE_LAB_SCENARIO_DIR;
  bool no_certificate = false;
  verify->add_option("--dir", dir, "scenario directory")->check(CLI::ExistingDirectory);
  verify->add_flag("--no-certificate", no_certificate, "skip the rerun at truncation 2D");
  verify->add_option("--jobs", opt.jobs, "worker threads per scenario (0: all cores)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (truncation > 0) opt.truncation = truncation;
    opt.sample = sample;

    if (*run) {
      Scenario s = load_scenario(scenario_path);
      RunOutput r = run_scenario(s, opt);
      std::string fmt = format.empty() ? s.format : format;
      std::string text = fmt == "md" ? emit_markdown(r.report) : emit_json(r.report);
      if (out_dir.empty()) {
        std::cout << text;
      } else {
        fs::create_directories(out_dir);
        write_file(fs::path(out_dir) / (s.name + (fmt == "md" ? ".md" : ".json")), text);
        for (const auto& [name, svg] : r.svgs) write_file(fs::path(out_dir) / name, svg);
      }
      for (const auto& t : r.report.tasks)
        if (t.status == "fail" || t.status == "error")
          std::cerr << s.name << ": task " << t.id << " (" << t.kind << " " << t.args << ") " << t.status << ": "
                    << t.witness << "\n";
      return r.report.exit_code();
    }

    if (*lattice) {
      Scenario s = load_scenario(scenario_path);
      opt.only_lattices = true;
      RunOutput r = run_scenario(s, opt);
      if (style == "svg") {
        fs::path d = out_dir.empty() ? fs::current_path() : fs::path(out_dir);
        fs::create_directories(d);
        for (const auto& [name, svg] : r.svgs) {
          write_file(d / name, svg);
          std::cout << (d / name).string() << "\n";
        }
      } else {
        for (const auto& [name, text] : r.ascii) std::cout << text << "\n";
      }
      for (const auto& t : r.report.tasks)
        if (t.status == "error") std::cerr << t.witness << "\n";
      return r.report.exit_code();
    }

    if (*verify) {
      auto entries = verify_all(dir, !no_certificate, opt);
      bool ok = true;
      double total = 0;
      for (const auto& e : entries) {
        total += e.seconds;
        ok = ok && e.ok();
        std::cout << (e.ok() ? "ok   " : "FAIL ") << e.scenario << ": exit " << e.exit_code << " (expected "
                  << e.expected_exit << ")";
        if (e.certified) std::cout << ", D=" << e.D << " vs " << 2 * e.D << ": " << (e.certificate.empty() ? "identical" : e.certificate);
        std::cout << ", " << std::fixed << std::setprecision(2) << e.seconds << " s\n";
        if (e.exit_code != e.expected_exit && !e.failure.empty()) std::cout << "     " << e.failure << "\n";
      }
      std::cout << (ok ? "all " : "FAILED: ") << entries.size() << " scenarios, " << std::fixed << std::setprecision(1)
                << total << " s\n";
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "closure-lab: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
