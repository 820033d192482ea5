#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hochlab/hh.hpp"
#include "hochlab/report.hpp"

namespace hochlab {

struct RunConfig {
  std::string catalogue_dir;
  std::vector<std::string> catalogue;  // empty: each suite's default entries
  bool any_entry = false;              // run every selected suite on all of `catalogue`
  std::vector<std::string> suites;     // empty: none
  int lo = -6;
  int hi = 8;
  int lmax = 5;
  int ncap = 10;
  int cobar_level = 0;                 // 0: per-entry default of the comparison suites
  int samples = 50;
  int pair_samples = 25;
  std::uint64_t seed = 1;
};

struct SuiteInfo {
  std::string name;
  int criterion;                       // acceptance criterion covered
  std::string statement;
  std::vector<std::string> entries;    // default catalogue entries
};

const std::vector<SuiteInfo>& suite_registry();
const std::vector<std::string>& catalogue_names();

// Collects the records of one (suite, entry) task.
class Checks {
 public:
  Checks(std::string module, std::string entry) : module_(std::move(module)), entry_(std::move(entry)) {}

  // Runs a check returning an empty string on success and a witness otherwise.
  // SaturationError marks the record unstable; other exceptions mark it an error.
  void run(const std::string& name, const std::string& anchor, const std::function<std::string()>& body);
  // Records an outcome computed elsewhere.
  void record(const std::string& name, const std::string& anchor, Status status, const std::string& witness);

  std::vector<Record>& records() { return records_; }

 private:
  std::string module_;
  std::string entry_;
  std::vector<Record> records_;
};

using SuiteBody = std::function<void(const RunConfig&, const std::string& entry, Checks&)>;

// Executes the selected suites, concurrently per (suite, entry) up to the
// worker cap, and returns the sorted report.
Report run_suites(const RunConfig& config);

// Suite bodies.
void suite_signs(const RunConfig&, const std::string&, Checks&);
void suite_beta(const RunConfig&, const std::string&, Checks&);
void suite_gamma(const RunConfig&, const std::string&, Checks&);
void suite_derivation_models(const RunConfig&, const std::string&, Checks&);
void suite_normalization(const RunConfig&, const std::string&, Checks&);
void suite_dual_comparison(const RunConfig&, const std::string&, Checks&);
void suite_cobar_comparison(const RunConfig&, const std::string&, Checks&);
void suite_end_to_end(const RunConfig&, const std::string&, Checks&);
void suite_cobar_model(const RunConfig&, const std::string&, Checks&);
void suite_theta_square(const RunConfig&, const std::string&, Checks&);
void suite_naturality(const RunConfig&, const std::string&, Checks&);
void suite_gerstenhaber(const RunConfig&, const std::string&, Checks&);

}  // namespace hochlab
