#include "closurelab/report.hpp"

#include <sstream>
#include <stdexcept>

namespace closurelab {

int Report::exit_code() const {
  int code = 0;
  for (const auto& t : tasks) {
    if (t.status == "error") return 2;
    if (t.status == "fail") code = 1;
  }
  return code;
}

ojson to_json(const Report& r) {
  ojson j;
  j["schema"] = "closure-lab-report";
  j["version"] = r.version;
  j["scenario"] = r.scenario;
  j["ring"] = r.ring;
  j["enumeration"] = r.enumeration;
  ojson tasks = ojson::array();
  int failed = 0, verified = 0;
  for (const auto& t : r.tasks) {
    ojson o;
    o["id"] = t.id;
    o["kind"] = t.kind;
    o["args"] = t.args;
    o["status"] = t.status;
    if (t.sampled) o["sampled"] = true;
    o["fields"] = t.fields;
    if (!t.witness.empty()) o["witness"] = t.witness;
    tasks.push_back(std::move(o));
    if (t.status == "pass") ++verified;
    if (t.status == "fail" || t.status == "error") ++failed;
  }
  j["tasks"] = std::move(tasks);
  j["summary"] = {{"tasks", r.tasks.size()}, {"passed", verified}, {"failed", failed}, {"exit_code", r.exit_code()}};
  return j;
}

Report report_from_json(const ojson& j) {
  if (j.value("schema", "") != "closure-lab-report") throw std::runtime_error("not a closure-lab report");
  Report r;
  r.version = j.at("version").get<int>();
  if (r.version != kReportVersion) throw std::runtime_error("unsupported report version " + std::to_string(r.version));
  r.scenario = j.at("scenario").get<std::string>();
  r.ring = j.at("ring");
  r.enumeration = j.at("enumeration").get<std::string>();
  for (const auto& o : j.at("tasks")) {
    TaskResult t;
    t.id = o.at("id").get<int>();
    t.kind = o.at("kind").get<std::string>();
    t.args = o.at("args").get<std::string>();
    t.status = o.at("status").get<std::string>();
    t.sampled = o.value("sampled", false);
    t.fields = o.at("fields");
    t.witness = o.value("witness", "");
    r.tasks.push_back(std::move(t));
  }
  return r;
}

std::string emit_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

namespace {

std::string md_escape(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += "<br>";
    else out += c;
  }
  return out;
}

// submodules are {"generators": [...], "dim": d}
bool is_submodule(const ojson& v) { return v.is_object() && v.contains("generators") && v.contains("dim"); }

std::string md_value(const ojson& v) {
  if (is_submodule(v)) {
    std::string s = "(";
    for (size_t i = 0; i < v["generators"].size(); ++i) s += (i ? ", " : "") + v["generators"][i].get<std::string>();
    if (v["generators"].empty()) s += "0";
    return s + ") [dim " + std::to_string(v["dim"].get<int>()) + "]";
  }
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + md_value(v[i]);
    return "[" + s + "]";
  }
  if (v.is_object() && v.contains("name") && v.contains("pass")) {
    std::string s = v["name"].get<std::string>() + ": " + (v["pass"].get<bool>() ? "pass" : "FAIL");
    if (v.value("disputed", false)) s += " (disputed)";
    return s;
  }
  return v.dump();
}

}  // namespace

std::string emit_markdown(const Report& r) {
  std::ostringstream os;
  os << "# " << r.scenario << "\n\n";
  os << "- ring: " << r.ring.value("description", "") << "\n";
  os << "- enumeration: " << r.enumeration << "\n";
  os << "- report version: " << r.version << "\n\n";
  for (const auto& t : r.tasks) {
    os << "## " << t.id << ". " << t.kind << " " << t.args << ": " << t.status << (t.sampled ? " (sampled)" : "") << "\n\n";
    if (!t.witness.empty()) os << "Witness: " << md_escape(t.witness) << "\n\n";
    if (t.fields.empty()) continue;
    os << "| field | value |\n|---|---|\n";
    for (const auto& [k, v] : t.fields.items()) {
      if (k == "ascii") continue;
      if (k == "checks" && v.is_array()) {
        for (const auto& c : v) {
          std::string line = md_value(c);
          if (!c.value("pass", true) && c.contains("witness")) line += " -- " + c["witness"].get<std::string>();
          os << "| check | " << md_escape(line) << " |\n";
        }
        continue;
      }
      os << "| " << k << " | " << md_escape(md_value(v)) << " |\n";
    }
    if (t.fields.contains("ascii")) os << "\n```\n" << t.fields["ascii"].get<std::string>() << "```\n";
    os << "\n";
  }
  return os.str();
}

}  // namespace closurelab
