// Runs `hochlab suite --all` twice and prints one verdict line per acceptance
// criterion.  Criteria 1-12 come from the suite records of the first run;
// criterion 13 compares the two reports with timing removed.
//
// Exit status is zero when every criterion passes, except those named in
// --expect-fail, which must fail.  Any other outcome exits nonzero.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "hochlab/suites.hpp"

namespace fs = std::filesystem;
using namespace hochlab;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string run_once(const std::string& binary, const fs::path& out, int& exit_code) {
  const std::string command = "\"" + binary + "\" --format json --no-timing -o \"" + out.string() + "\" suite --all";
  const int raw = std::system(command.c_str());
  exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return read_file(out);
}

struct Verdict {
  int records = 0;
  int passed = 0;
  std::vector<std::string> problems;
};

std::string first_line(const std::string& text, std::size_t limit = 240) {
  auto line = text.substr(0, text.find('\n'));
  if (line.size() > limit) line = line.substr(0, limit) + "...";
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance verdicts for the hochlab suites"};
  std::string binary = HOCHLAB_BINARY;
  std::vector<int> expect_fail;
  bool verbose = false;
  app.add_option("--binary", binary, "hochlab executable")->capture_default_str();
  app.add_option("--expect-fail", expect_fail, "Criteria known to fail")->delimiter(',');
  app.add_flag("-v,--verbose", verbose, "Print every problem record");
  CLI11_PARSE(app, argc, argv);

  const auto dir = fs::temp_directory_path() / ("hochlab-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  int code1 = 0, code2 = 0;
  const std::string first = run_once(binary, dir / "run1.json", code1);
  const std::string second = run_once(binary, dir / "run2.json", code2);
  fs::remove_all(dir);
  if (first.empty() || code1 < 0 || code1 > 1) {
    std::cerr << "acceptance: hochlab did not produce a report (exit " << code1 << ")\n";
    return 2;
  }

  const Report report = report_from_json(nlohmann::json::parse(first));
  std::map<std::string, int> criterion_of;
  for (const auto& s : suite_registry()) criterion_of[s.name] = s.criterion;

  std::map<int, Verdict> verdicts;
  for (int c = 1; c <= 12; ++c) verdicts[c];
  for (const auto& rec : report.records) {
    auto it = criterion_of.find(rec.module);
    if (it == criterion_of.end()) continue;
    auto& v = verdicts[it->second];
    ++v.records;
    if (rec.status == Status::Pass)
      ++v.passed;
    else
      v.problems.push_back(status_name(rec.status) + " " + rec.module + ":" + rec.name + ": " +
                           first_line(rec.witness));
  }

  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  bool ok = true;
  auto report_line = [&](int c, bool pass, const std::string& detail) {
    std::cout << "criterion " << c << ": " << (pass ? "PASS" : "FAIL") << " (" << detail << ")\n";
    const bool wanted_fail = expected.count(c) > 0;
    if (pass == wanted_fail) ok = false;
  };

  for (const auto& [c, v] : verdicts) {
    const bool pass = v.records > 0 && v.problems.empty();
    std::string detail = std::to_string(v.passed) + "/" + std::to_string(v.records) + " records pass";
    report_line(c, pass, detail);
    const std::size_t shown = verbose ? v.problems.size() : std::min<std::size_t>(v.problems.size(), 3);
    for (std::size_t i = 0; i < shown; ++i) std::cout << "    " << v.problems[i] << "\n";
    if (shown < v.problems.size()) std::cout << "    ... " << v.problems.size() - shown << " more\n";
  }

  const bool identical = !second.empty() && first == second;
  report_line(13, identical,
              identical ? "two runs, " + std::to_string(first.size()) + " identical bytes without timing"
                        : "the two reports differ");
  return ok ? 0 : 1;
}
