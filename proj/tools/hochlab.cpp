#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "hochlab/suites.hpp"

namespace fs = std::filesystem;
using namespace hochlab;

namespace {

std::pair<int, int> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--window", "expected lo:hi, got " + text);
  try {
    const int lo = std::stoi(text.substr(0, colon));
    const int hi = std::stoi(text.substr(colon + 1));
    if (lo >= hi) throw CLI::ValidationError("--window", "lo must be below hi");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--window", "expected integers lo:hi, got " + text);
  }
}

std::string join_row(std::initializer_list<std::string> fields) {
  std::string out;
  for (const auto& f : fields) out += (out.empty() ? "" : "\t") + f;
  return out + "\n";
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

std::string render_validation(const ValidationReport& report, Format format) {
  if (format == Format::Json) return report.to_json().dump(2) + "\n";
  std::string out;
  for (const auto& c : report.checks) {
    if (format == Format::Tsv)
      out += join_row({c.law, c.passed ? "pass" : "fail", c.witness});
    else
      out += c.law + ": " + (c.passed ? "ok" : "FAILS at " + c.witness) + "\n";
  }
  return out;
}

std::string render_ranks(const RankTable& table, int lo, Format format) {
  if (format == Format::Json) {
    nlohmann::json doc;
    doc["complex"] = table.complex;
    doc["window_dims"] = table.dims;
    doc["window_lo"] = lo;
    doc["ranks"] = nlohmann::json::array();
    for (const auto& r : table.rows)
      doc["ranks"].push_back({{"degree", r.degree}, {"rank", r.rank}, {"near_rank", r.near_rank}, {"stable", r.stable}});
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  if (format == Format::Tsv) {
    for (const auto& r : table.rows)
      out << join_row({std::to_string(r.degree), std::to_string(r.rank), std::to_string(r.near_rank),
                       r.stable ? "stable" : "unstable"});
    return out.str();
  }
  out << table.complex << "\n";
  for (const auto& r : table.rows) {
    out << "  degree " << r.degree << ": rank " << r.rank;
    if (!r.stable) out << " (unstable, " << r.near_rank << " at the nearer level)";
    out << "\n";
  }
  return out.str();
}

// --theorem label -> suite covering it.
const std::map<std::string, std::string>& theorem_suites() {
  static const std::map<std::string, std::string> map{
      {"1", "end-to-end"}, {"2", "derivations"}, {"A", "normalization"}, {"B", "dual-comparison"},
      {"C", "cobar-comparison"}};
  return map;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hochschild cohomology comparisons for small coalgebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  std::string output;
  bool no_timing = false;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "tsv", "text"}))
      ->capture_default_str();
  app.add_option("-o,--output", output, "Write to a file instead of stdout");
  app.add_flag("--no-timing", no_timing, "Omit timing fields from reports");

  auto* validate_cmd = app.add_subcommand("validate", "Check the laws of a coalgebra file");
  std::string validate_input;
  validate_cmd->add_option("file", validate_input, "Coalgebra JSON")->required()->check(CLI::ExistingFile);

  auto* hh_cmd = app.add_subcommand("hh", "Hochschild cohomology ranks in a window");
  std::string side_name = "dual", hh_input, hh_window = "-4:4";
  int lmax = 5, ncap = 10;
  std::uint32_t prime = 0;
  hh_cmd->add_option("--side", side_name, "Complex to compute")
      ->check(CLI::IsMember({"algebra", "coalgebra", "cobar", "dual"}))
      ->capture_default_str();
  hh_cmd->add_option("--input", hh_input, "Coalgebra JSON")->required()->check(CLI::ExistingFile);
  hh_cmd->add_option("--window", hh_window, "Degree window lo:hi")
      ->capture_default_str();
  hh_cmd->add_option("--lmax", lmax, "Word length cap")->check(CLI::PositiveNumber)->capture_default_str();
  hh_cmd->add_option("--ncap", ncap, "Source degree cap")->check(CLI::PositiveNumber)->capture_default_str();
  hh_cmd->add_option("--prime", prime, "Compute over F_p instead of the rationals");

  auto* compare_cmd = app.add_subcommand("compare", "Run one comparison on a coalgebra file");
  std::string theorem, compare_input;
  compare_cmd->add_option("--theorem", theorem, "Comparison to run")
      ->required()
      ->check(CLI::IsMember({"1", "2", "A", "B", "C"}));
  compare_cmd->add_option("--input", compare_input, "Coalgebra JSON")->required()->check(CLI::ExistingFile);

  auto* suite_cmd = app.add_subcommand("suite", "Run verification suites on the catalogue");
  bool all = false;
  std::vector<std::string> suites, entries;
  RunConfig config;
  config.catalogue_dir = HOCHLAB_CATALOGUE_DIR;
  suite_cmd->add_flag("--all", all, "Run every suite");
  suite_cmd->add_option("--suite", suites, "Suite to run (repeatable)");
  suite_cmd->add_option("--entry", entries, "Restrict to these catalogue entries");
  suite_cmd->add_option("--catalogue", config.catalogue_dir, "Catalogue directory")->capture_default_str();
  suite_cmd->add_option("--cobar-level", config.cobar_level, "Quotient level of the cobar side (0: default)");
  suite_cmd->add_option("--seed", config.seed, "Sampling seed")->capture_default_str();
  suite_cmd->add_flag("--list", "List the suites and exit");

  CLI11_PARSE(app, argc, argv);
  const Format format = parse_format(format_name);

  try {
    if (*validate_cmd) {
      auto report = validate(DGCoalgebra::load(validate_input));
      write_output(render_validation(report, format), output);
      return report.ok() ? 0 : 1;
    }
    if (*hh_cmd) {
      const auto [lo, hi] = parse_window(hh_window);
      const fs::path path(hh_input);
      Instance inst(path.stem().string(), DGCoalgebra::load(hh_input));
      auto table = hh_ranks(inst, parse_side(side_name), lo, hi, lmax, ncap, prime);
      write_output(render_ranks(table, lo, format), output);
      return 0;
    }
    if (*compare_cmd) {
      const fs::path path = fs::absolute(compare_input);
      if (path.extension() != ".json") throw std::runtime_error("input must be a .json file");
      config.catalogue_dir = path.parent_path().string();
      config.catalogue = {path.stem().string()};
      config.any_entry = true;
      config.suites = {theorem_suites().at(theorem)};
      auto report = run_suites(config);
      write_output(emit(report, format, !no_timing), output);
      return report.any_failure() ? 1 : 0;
    }
    if (suite_cmd->count("--list")) {
      std::string text;
      for (const auto& s : suite_registry()) {
        std::string list;
        for (const auto& e : s.entries) list += (list.empty() ? "" : ",") + e;
        text += join_row({s.name, std::to_string(s.criterion), list, s.statement});
      }
      write_output(text, output);
      return 0;
    }
    if (all)
      for (const auto& s : suite_registry()) suites.push_back(s.name);
    for (const auto& s : suites) {
      bool known = false;
      for (const auto& info : suite_registry()) known = known || info.name == s;
      if (!known) throw std::runtime_error("unknown suite " + s);
    }
    config.suites = suites;
    config.catalogue = entries;
    auto report = run_suites(config);
    write_output(emit(report, format, !no_timing), output);
    return report.any_failure() ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "hochlab: " << e.what() << "\n";
    return 2;
  }
}
