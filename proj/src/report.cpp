#include "cremona/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace cremona {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* verdict_word(bool pass) { return pass ? "pass" : "FAIL"; }

void append_step_lines(std::ostringstream& out,
                       const std::vector<StepRecord>& steps,
                       const std::string& indent) {
  for (const StepRecord& st : steps) {
    out << indent << "[" << (st.pass ? "pass" : "FAIL") << "] " << st.id << " "
        << st.op;
    if (!st.display.empty()) out << " (" << st.display << ")";
    if (!st.detail.empty()) out << ": " << st.detail;
    out << "\n";
  }
}

ordered_json step_json(const StepRecord& st) {
  ordered_json j;
  j["id"] = st.id;
  j["op"] = st.op;
  j["display"] = st.display;
  j["pass"] = st.pass;
  j["detail"] = st.detail;
  j["duration_ms"] = st.duration_ms;
  return j;
}

ordered_json section_json(const VerificationReport& rep) {
  ordered_json j;
  j["id"] = rep.id;
  j["pass"] = rep.pass;
  j["duration_ms"] = rep.duration_ms;
  ordered_json steps = ordered_json::array();
  for (const StepRecord& st : rep.steps) steps.push_back(step_json(st));
  j["steps"] = std::move(steps);
  return j;
}

ordered_json errata_json(const ErrataReport& rep) {
  ordered_json j;
  j["id"] = "errata";
  j["pass"] = rep.pass;
  j["duration_ms"] = rep.duration_ms;
  ordered_json steps = ordered_json::array();
  for (const StepRecord& st : rep.steps) steps.push_back(step_json(st));
  j["steps"] = std::move(steps);
  ordered_json findings = ordered_json::array();
  for (const ErrataFinding& f : rep.findings) {
    ordered_json fj;
    fj["id"] = f.id;
    fj["conclusive"] = f.conclusive;
    fj["verdict"] = f.verdict;
    fj["evidence"] = f.evidence;
    findings.push_back(std::move(fj));
  }
  j["findings"] = std::move(findings);
  return j;
}

} // namespace

std::string to_text(const VerificationReport& rep) {
  std::ostringstream out;
  out << "section " << rep.id << " " << verdict_word(rep.pass) << " ("
      << rep.duration_ms << " ms)\n";
  append_step_lines(out, rep.steps, "  ");
  return out.str();
}

std::string to_text(const ErrataReport& rep) {
  std::ostringstream out;
  out << "errata " << verdict_word(rep.pass) << " (" << rep.duration_ms
      << " ms)\n";
  append_step_lines(out, rep.steps, "  ");
  for (const ErrataFinding& f : rep.findings) {
    out << "  finding " << f.id << ": "
        << (f.conclusive ? "conclusive" : "INCONCLUSIVE") << "\n";
    out << "    verdict: " << f.verdict << "\n";
    for (const std::string& line : f.evidence)
      out << "    - " << line << "\n";
  }
  return out.str();
}

std::string to_text(const SuiteReport& rep) {
  std::ostringstream out;
  out << "suite seed=" << rep.seed << " " << verdict_word(rep.all_pass)
      << " (" << rep.duration_ms << " ms)\n";
  for (const VerificationReport& sec : rep.sections) {
    std::istringstream lines(to_text(sec));
    std::string line;
    while (std::getline(lines, line)) out << "  " << line << "\n";
  }
  {
    std::istringstream lines(to_text(rep.errata));
    std::string line;
    while (std::getline(lines, line)) out << "  " << line << "\n";
  }
  {
    std::istringstream lines(to_text(rep.properties));
    std::string line;
    while (std::getline(lines, line)) out << "  " << line << "\n";
  }
  if (rep.missing_displays.empty()) {
    out << "  displays: all covered\n";
  } else {
    out << "  displays: MISSING";
    for (const std::string& d : rep.missing_displays) out << " " << d;
    out << "\n";
  }
  return out.str();
}

std::string to_json_like(const VerificationReport& rep) {
  return section_json(rep).dump(2) + "\n";
}

std::string to_json_like(const ErrataReport& rep) {
  return errata_json(rep).dump(2) + "\n";
}

std::string to_json_like(const SuiteReport& rep) {
  ordered_json j;
  j["seed"] = rep.seed;
  j["all_pass"] = rep.all_pass;
  j["duration_ms"] = rep.duration_ms;
  ordered_json sections = ordered_json::array();
  for (const VerificationReport& sec : rep.sections)
    sections.push_back(section_json(sec));
  j["sections"] = std::move(sections);
  j["errata"] = errata_json(rep.errata);
  j["properties"] = section_json(rep.properties);
  j["missing_displays"] = rep.missing_displays;
  return j.dump(2) + "\n";
}

void zero_durations(VerificationReport& rep) {
  rep.duration_ms = 0;
  for (StepRecord& st : rep.steps) st.duration_ms = 0;
}

void zero_durations(ErrataReport& rep) {
  rep.duration_ms = 0;
  for (StepRecord& st : rep.steps) st.duration_ms = 0;
}

void zero_durations(SuiteReport& rep) {
  rep.duration_ms = 0;
  for (VerificationReport& sec : rep.sections) zero_durations(sec);
  zero_durations(rep.errata);
  zero_durations(rep.properties);
}

void save_report(const SuiteReport& rep, const std::string& path,
                 const std::string& format) {
  SuiteReport copy = rep;
  zero_durations(copy);
  std::string body;
  if (format == "text") {
    body = to_text(copy);
  } else if (format == "json-like") {
    body = to_json_like(copy);
  } else {
    throw std::invalid_argument("unknown report format: " + format);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open report file: " + path);
  out << body;
}

} // namespace cremona
